#include "symext/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "symext/equivalence.hpp"
#include "symext/fixtures.hpp"
#include "symext/guard.hpp"
#include "symext/iteration.hpp"
#include "symext/quotient.hpp"
#include "symext/workbench.hpp"

namespace symext {

void SuiteResult::fail(const std::string& what) {
    ++failures;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
}

bool SuiteResult::check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
    return ok;
}

namespace {

constexpr Rel kRels[] = {Rel::In, Rel::Eq, Rel::Sub};

std::string num(std::size_t n) { return std::to_string(n); }

bool mask_has(std::uint64_t m, int p) { return (m >> p) & 1u; }

std::vector<Bits> filter_members(const SymSystem& S) {
    std::vector<Bits> out;
    for (const Bits& H : S.group().subgroups())
        if (S.filter().contains(H)) out.push_back(H);
    return out;
}

// Brute force: for all r <= p in P some pi in H makes pi(r) compatible with q in Q.
bool is_h_reduction(const SymSystem& S, const Poset& Q, const std::vector<int>& e, const Bits& H, int p, int q) {
    const Poset& P = S.poset();
    for (int r = 0; r < P.size(); ++r) {
        if (!P.leq(r, p)) continue;
        bool found = false;
        for_each_bit(H, [&](int h) {
            if (!found && Q.compatible(e[S.act_cond(h, r)], q)) found = true;
        });
        if (!found) return false;
    }
    return true;
}

std::vector<int> identity_embed(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i;
    return e;
}

std::vector<int> first_coordinate_embed(const ProductSystem& Pr, const SymSystem& S0, const SymSystem& S1) {
    std::vector<int> e;
    for (int p = 0; p < S0.poset().size(); ++p) e.push_back(Pr.cond_index(p, S1.poset().top()));
    return e;
}

// Restriction of an ambient automorphism to the embedded poset, as an element of the base group.
std::optional<int> restrict_to_base(const SymSystem& S0, const Perm& sigma, const std::vector<int>& e) {
    std::map<int, int> back;
    for (int p = 0; p < static_cast<int>(e.size()); ++p) back[e[p]] = p;
    Perm rho(e.size());
    for (int p = 0; p < static_cast<int>(e.size()); ++p) {
        auto it = back.find(sigma[e[p]]);
        if (it == back.end()) return std::nullopt;
        rho[p] = it->second;
    }
    int idx = S0.group().index_of(rho);
    if (idx < 0) return std::nullopt;
    return idx;
}

}  // namespace

SuiteResult forcing_theorem_suite(int k) {
    SuiteResult R;
    R.id = "forcing-theorem";
    R.title = "syntactic forcing agrees with generic quantification";
    for (const auto& [label, P] : std::vector<std::pair<std::string, Poset>>{{"P3", p3()}, {"seven", seven()}}) {
        auto Pp = std::make_shared<const Poset>(P);
        Forcer f(Pp);
        auto inv = fragment_inventory(P, k);
        R.notes.push_back(label + ": " + num(inv.names.size()) + " names of rank <= " + std::to_string(k) + " (" +
                          inv.note + ")");
        for (Rel r : kRels)
            for (NameId x : inv.names)
                for (NameId y : inv.names) {
                    std::uint64_t m = f.forcing_mask(r, x, y);
                    Bits sem = f.semantic_set(r, x, y);
                    for (int p = 0; p < P.size(); ++p)
                        if (mask_has(m, p) != sem.test(p))
                            R.fail(label + " " + P.label(p) + " " + name_to_string(P, x) + " " + rel_text(r) + " " +
                                   name_to_string(P, y));
                    R.count(P.size());
                }
    }
    return R;
}

SuiteResult symmetry_lemma_suite(int k) {
    SuiteResult R;
    R.id = "symmetry-lemma";
    R.title = "p forces phi(x) iff pi(p) forces phi(pi(x))";
    constexpr std::size_t kBudget = 2'000'000;
    for (const auto& id : fixture_ids()) {
        SymSystem S = fixture(id);
        const Poset& P = S.poset();
        Forcer& f = S.forcer();
        auto xs = fragment_inventory(P, k).names;
        auto ys = xs;
        const std::size_t order = S.group().order();
        if (xs.size() * ys.size() * order > kBudget) {
            ys = fragment_inventory(P, k - 1).names;
            R.notes.push_back(id + ": second argument drawn from rank <= " + std::to_string(k - 1));
        }
        R.notes.push_back(id + ": " + num(xs.size()) + " x " + num(ys.size()) + " name pairs, " + num(order) +
                          " group elements");
        for (int g = 0; g < static_cast<int>(order); ++g) {
            std::unordered_map<NameId, NameId> img;
            for (NameId x : xs) img[x] = S.act(g, x);
            for (NameId y : ys) img[y] = S.act(g, y);
            for (Rel r : kRels)
                for (NameId x : xs)
                    for (NameId y : ys) {
                        std::uint64_t a = f.forcing_mask(r, x, y);
                        std::uint64_t b = f.forcing_mask(r, img[x], img[y]);
                        for (int p = 0; p < P.size(); ++p)
                            if (mask_has(a, p) != mask_has(b, S.act_cond(g, p)))
                                R.fail(id + " element " + std::to_string(g) + " at " + P.label(p) + ": " +
                                       name_to_string(P, x) + " " + rel_text(r) + " " + name_to_string(P, y));
                        R.count(P.size());
                    }
        }
    }
    return R;
}

namespace {

std::vector<std::pair<std::string, TwoStep>> two_step_fixtures() {
    std::vector<std::pair<std::string, TwoStep>> out;
    SymSystem a = striv(), b = ssym();
    out.emplace_back("Striv*Striv", two_step(a, check_stage(a, a)));
    out.emplace_back("Ssym*Ssym", two_step(b, check_stage(b, b)));
    return out;
}

}  // namespace

SuiteResult two_step_algebra_suite() {
    SuiteResult R;
    R.id = "two-step-algebra";
    R.title = "pair composition, inverse and conjugation against pointwise action";
    for (const auto& [label, T] : two_step_fixtures()) {
        const int n = T.system.poset().size();
        R.notes.push_back(label + ": " + num(n) + " conditions, " + num(T.pairs.size()) + " pairs");
        auto rep = validate(T.system);
        R.check(rep.ok, label + " fails validation");
        R.check(is_normal_filter(T.system.filter()), label + " filter is not normal");
        for (const auto& a : T.pairs) {
            PairAut ia = invert_pair(T, a);
            for (int c = 0; c < n; ++c)
                R.check(act_pair(T, ia, act_pair(T, a, c)) == c, label + " inverse fails");
            for (const auto& b : T.pairs) {
                PairAut ab = compose_pair(T, a, b);
                PairAut conj = conjugate_pair(T, a, b);
                for (int c = 0; c < n; ++c) {
                    R.check(act_pair(T, ab, c) == act_pair(T, a, act_pair(T, b, c)), label + " composition fails");
                    R.check(act_pair(T, conj, c) == act_pair(T, a, act_pair(T, b, act_pair(T, ia, c))),
                            label + " conjugation fails");
                }
                R.check(T.pair_lookup.count(ab) && T.pair_lookup.count(conj), label + " pairs not closed");
            }
        }
    }
    return R;
}

SuiteResult factorization_suite(int k) {
    SuiteResult R;
    R.id = "factorization";
    R.title = "factor and compose generics; bracket evaluation";
    for (const auto& [label, T] : two_step_fixtures()) {
        const Poset& P = T.system.poset();
        Forcer& f = T.system.forcer();
        auto inv = fragment_inventory(P, k);
        R.notes.push_back(label + ": " + num(inv.names.size()) + " names (" + inv.note + "), " +
                          num(f.generic_count()) + " generics");
        std::vector<NameId> br;
        for (NameId x : inv.names) br.push_back(bracket(T, x));
        for (int g = 0; g < f.generic_count(); ++g) {
            auto [g0, g1] = factor_generic(T, g);
            R.check(compose_generic(T, g0, g1) == g, label + " compose(factor(G)) != G");
            const auto& base_gen = T.base.forcer().generics().at(g0).conds;
            for (int p = 0; p < T.base.poset().size(); ++p)
                R.check(base_gen.test(p) == f.generics()[g].conds.test(T.embed(p)), label + " G0 is not G restricted");
            for (std::size_t j = 0; j < inv.names.size(); ++j) {
                R.count();
                if (evaluate_bracket(T, br[j], g0, g1) != f.value(inv.names[j], g))
                    R.fail(label + " bracket value differs for " + name_to_string(P, inv.names[j]));
            }
        }
        for (int g0 = 0; g0 < T.base.forcer().generic_count(); ++g0)
            for (int g1 = 0; g1 < T.stage.per_generic[g0].forcer().generic_count(); ++g1) {
                int g = compose_generic(T, g0, g1);
                R.check(factor_generic(T, g) == std::make_pair(g0, g1), label + " factor(compose) differs");
            }
        std::size_t stride = std::max<std::size_t>(1, inv.names.size() / 200);
        for (std::size_t j = 0; j < inv.names.size(); j += stride) {
            NameId back = unbracket(T, br[j]);
            R.check(f.values(back) == f.values(inv.names[j]), label + " unbracket round trip");
        }
    }
    return R;
}

SuiteResult product_reduced_suite(int k) {
    SuiteResult R;
    R.id = "product-reduced";
    R.title = "product against two-step with check stage; reduced iteration";
    std::vector<std::pair<SymSystem, SymSystem>> pairs{{striv(), striv()}, {ssym(), ssym()}, {striv(), ssym()}};
    for (const auto& [S0, S1] : pairs) {
        std::string label = S0.name() + "," + S1.name();
        ProductSystem Pr = product(S0, S1);
        StageName stage = check_stage(S0, S1);
        TwoStep Tw = two_step(S0, stage);
        auto W = find_equivalence(Pr.system, Tw.system, NameClass::N, k);
        if (R.check(W.has_value(), label + ": no N witness for product vs two-step")) {
            auto rep = validate_witness(Pr.system, Tw.system, *W);
            R.check(rep.ok, label + ": witness fails " + (rep.problems.empty() ? "" : rep.problems[0]));
            R.notes.push_back(label + ": N witness, " + num(W->inventory_s.size()) + "/" + num(W->inventory_t.size()) +
                              " inventory names");
        }
        NameWitness cw = check_witness(S0, stage);
        R.check(validate_name_witness(S0, stage, cw).ok, label + ": check witness invalid");
        TwoStep Red = reduced_iteration(S0, stage, cw);
        Forcer& fr = Red.system.forcer();
        for (int g = 0; g < fr.generic_count(); ++g) {
            auto [g0, g1] = factor_generic(Red, g);
            int m = Pr.cond_index(S0.poset().minimal_reps()[g0], S1.poset().minimal_reps()[g1]);
            int gp = Pr.system.poset().minimal_class(m);
            R.check(model_values(Red.system, g, k) == model_values(Pr.system, gp, k), label + ": reduced model differs");
        }
        R.check(find_equivalence(Pr.system, Red.system, NameClass::N, k).has_value(),
                label + ": no N witness for product vs reduced");
        R.notes.push_back(label + ": product " + num(Pr.system.poset().size()) + ", two-step " +
                          num(Tw.system.poset().size()) + ", reduced " + num(Red.system.poset().size()) + " conditions");
    }
    return R;
}

SuiteResult quotient_suite(int k) {
    SuiteResult R;
    R.id = "quotient";
    R.title = "H-reductions, quotient names, canonical quotient generics";
    Poset p3e({"1", "a", "b", "e"}, {{1, 0}, {2, 0}, {3, 0}}, 0);
    ProductSystem SS = product(ssym(), ssym());
    struct Sub {
        std::string label;
        SymSystem S;
        Poset Q;
        std::vector<int> e;
    };
    std::vector<Sub> subs{{"Ssym in P3", ssym(), p3(), identity_embed(3)},
                          {"Striv in seven", striv(), seven(), {0, 1, 2}},
                          {"Ssym in seven", ssym(), seven(), {0, 1, 2}},
                          {"Striv in P3+e", striv(), p3e, {0, 1, 2}},
                          {"Ssym in P3+e", ssym(), p3e, {0, 1, 2}},
                          {"Ssym in Ssym x Ssym", ssym(), SS.system.poset(), first_coordinate_embed(SS, ssym(), ssym())},
                          {"Seven in seven", seven_sym(), seven(), identity_embed(7)}};
    std::size_t complete_count = 0;
    for (const auto& sub : subs) {
        R.check(is_subforcing(sub.S.poset(), sub.Q, sub.e), sub.label + " is not a subforcing");
        bool complete = is_symmetrically_complete(sub.S, sub.Q, sub.e);
        bool reductions = true;
        auto members = filter_members(sub.S);
        for (const Bits& H : members)
            for (int q = 0; q < sub.Q.size(); ++q) {
                auto p = h_reduction(sub.S, sub.Q, sub.e, H, q);
                bool brute = false;
                for (int c = 0; c < sub.S.poset().size() && !brute; ++c) brute = is_h_reduction(sub.S, sub.Q, sub.e, H, c, q);
                R.check(p.has_value() == brute, sub.label + " reduction search disagrees with brute force");
                if (p) R.check(is_h_reduction(sub.S, sub.Q, sub.e, H, *p, q), sub.label + " reported reduction is wrong");
                reductions = reductions && p.has_value();
            }
        R.check(complete == reductions, sub.label + ": completeness and reductions disagree");
        if (complete) {
            ++complete_count;
            Forcer fq(std::make_shared<const Poset>(sub.Q));
            for (const auto& G : fq.generics()) {
                std::vector<int> G0;
                for (int p = 0; p < sub.S.poset().size(); ++p)
                    if (G.conds.test(sub.e[p])) G0.push_back(p);
                for (const Bits& H : members)
                    for_each_bit(G.conds, [&](int q) {
                        bool found = false;
                        for (int p : G0) found = found || is_h_reduction(sub.S, sub.Q, sub.e, H, p, q);
                        R.check(found, sub.label + ": no reduction inside the generic");
                    });
            }
        }
    }
    R.notes.push_back(num(subs.size()) + " subforcing fixtures, " + num(complete_count) + " complete");

    struct Pair {
        std::string label;
        SymSystem S0, S1;
        std::vector<int> e;
    };
    ProductSystem TS = product(striv(), ssym());
    std::vector<Pair> pairs{{"Ssym < Striv", ssym(), striv(), identity_embed(3)},
                            {"Ssym < Ssym", ssym(), ssym(), identity_embed(3)},
                            {"Ssym < Ssym x Ssym", ssym(), SS.system, first_coordinate_embed(SS, ssym(), ssym())},
                            {"Striv < Striv x Ssym", striv(), TS.system, first_coordinate_embed(TS, striv(), ssym())}};
    for (const auto& pr : pairs) {
        const std::string& L = pr.label;
        if (!R.check(is_complete_subsystem(pr.S0, pr.S1, pr.e), L + " is not a complete subsystem")) continue;
        auto basis = default_respect_basis(pr.S0, k);
        Quotient Qn = quotient_forcing_name(pr.S0, pr.S1.poset_ptr(), pr.e, basis);
        R.notes.push_back(L + ": basis of " + num(basis.size()) + ", " + num(Qn.entries.size()) + " psi entries");
        const Poset& Q = *Qn.Q;
        // psi is invariant under the quotient action
        for (int s = 0; s < pr.S1.group().order(); ++s) {
            const Perm& sigma = pr.S1.group().element(s);
            auto rho = restrict_to_base(pr.S0, sigma, pr.e);
            if (!rho) continue;
            const Perm& rp = pr.S0.group().element(*rho);
            for (int p = 0; p < pr.S0.poset().size(); ++p)
                for (int r = 0; r < Q.size(); ++r)
                    for (const auto& frag : Qn.fragments) {
                        Fragment moved;
                        for (const auto& [x, y] : frag) moved.emplace_back(symext::apply(rp, x), y);
                        R.check(psi(pr.S0, Q, pr.e, p, r, frag) == psi(pr.S0, Q, pr.e, p, sigma[r], moved),
                                L + ": psi not invariant");
                    }
        }
        auto inv = class_inventory(pr.S1, NameClass::HS, k);
        Forcer& f1 = pr.S1.forcer();
        for (int gi = 0; gi < f1.generic_count(); ++gi) {
            const Bits& G = f1.generics()[gi].conds;
            int g0 = -1;
            const auto& bg = pr.S0.forcer().generics();
            for (int h = 0; h < static_cast<int>(bg.size()); ++h) {
                bool same = true;
                for (int p = 0; p < pr.S0.poset().size(); ++p) same = same && (bg[h].conds.test(p) == G.test(pr.e[p]));
                if (same) g0 = h;
            }
            if (!R.check(g0 >= 0, L + ": G restricted to P is not generic")) continue;
            EvaluatedQuotient E = evaluate_quotient(Qn, g0);
            const Poset& EP = *E.poset;
            Bits K = canonical_quotient_generic(Qn, E, G, g0);
            Bits dom(Q.size());
            for_each_bit(K, [&](int c) { dom.set(E.r[c]); });
            R.check(dom == G, L + ": dom K differs from G");
            bool upward = true, directed = true, minimal = false;
            for_each_bit(K, [&](int c) {
                for (int d = 0; d < EP.size(); ++d)
                    if (EP.leq(c, d) && !K.test(d)) upward = false;
                for_each_bit(K, [&](int d) {
                    bool lower = false;
                    for_each_bit(K, [&](int e) { lower = lower || (EP.leq(e, c) && EP.leq(e, d)); });
                    directed = directed && lower;
                });
                minimal = minimal || EP.minimal_class(c) >= 0;
            });
            R.check(upward && directed, L + ": K is not a filter");
            R.check(minimal, L + ": K misses the minimal conditions");
            Bits T = translated_filter(Qn, E, K, g0);
            std::set<Hf> translated;
            for (NameId x : inv) {
                Hf v = interpret(quotient_translate(Qn, x), T);
                translated.insert(v);
                R.check(v == f1.value(x, gi), L + ": translated value differs for " + name_to_string(Q, x));
            }
            auto M = model_values(pr.S1, gi, k);
            R.check(std::vector<Hf>(translated.begin(), translated.end()) == M ||
                        std::includes(translated.begin(), translated.end(), M.begin(), M.end()),
                    L + ": iterated model differs");
            auto QS = quotient_system(Qn, pr.S1, E);
            R.check(validate(QS.system).ok, L + ": evaluated quotient system invalid");
            if (Q == pr.S0.poset())
                for (int c0 = 0; c0 < EP.size(); ++c0)
                    for (int c1 = 0; c1 < EP.size(); ++c1)
                        R.check(homogeneity_witness(Qn, E, c0, c1).has_value(), L + ": no homogeneity witness");
        }
    }
    return R;
}

SuiteResult completion_suite(int k) {
    SuiteResult R;
    R.id = "completion";
    R.title = "completions are tenacious, idempotent and have mixing";
    static const char* kQueries[] = {"vr in x0", "x0 in vr", "vr = x0", "vr sub x0 and not vr = x0",
                                     "exists v in vr . v = x0", "x0 sub vr and vr sub x1", "not vr in x0 and vr in x1"};
    for (const char* id : {"Striv", "Ssym", "L2", "Seven"}) {
        SymSystem S = fixture(id);
        Completion C1 = completion(S, k);
        const SymSystem& H = C1.orbit.system;
        R.notes.push_back(std::string(id) + ": completion has " + num(H.poset().size()) + " conditions, group " +
                          num(H.group().order()) + ", fragment " + num(C1.fragment_size));
        R.check(is_tenacious(H), std::string(id) + ": completion not tenacious");
        Completion C2 = completion(H, k);
        const SymSystem& HH = C2.orbit.system;
        const auto& e = C2.base.embed;
        std::set<int> image(e.begin(), e.end());
        bool bijective = image.size() == static_cast<std::size_t>(HH.poset().size());
        R.check(bijective, std::string(id) + ": second completion adds conditions");
        if (bijective) {
            std::vector<int> back(HH.poset().size());
            for (int p = 0; p < static_cast<int>(e.size()); ++p) back[e[p]] = p;
            std::vector<int> to_first(HH.group().order(), -1);
            for (int g = 0; g < HH.group().order(); ++g) {
                const Perm& pi = HH.group().element(g);
                Perm t(e.size());
                for (int p = 0; p < static_cast<int>(e.size()); ++p) t[p] = back[pi[e[p]]];
                to_first[g] = H.group().index_of(t);
            }
            R.check(HH.group().order() == H.group().order() &&
                        std::none_of(to_first.begin(), to_first.end(), [](int v) { return v < 0; }),
                    std::string(id) + ": groups differ");
            for (const Bits& Sub : HH.group().subgroups()) {
                Bits mapped(H.group().order());
                for_each_bit(Sub, [&](int g) {
                    if (to_first[g] >= 0) mapped.set(to_first[g]);
                });
                R.check(HH.filter().contains(Sub) == H.filter().contains(mapped), std::string(id) + ": filters differ");
            }
        }
        const auto& witnesses = H.hs_vectors(k).witness;
        const auto& args_pool = H.hs_vectors(1).witness;
        std::size_t satisfiable = 0;
        for (const char* q : kQueries) {
            FormulaPtr phi = parse_formula(q);
            const int slots = max_slot(phi) + 1;
            std::vector<std::vector<NameId>> arg_lists{{}};
            for (int s = 0; s < slots; ++s) {
                std::vector<std::vector<NameId>> next;
                for (const auto& a : arg_lists)
                    for (NameId y : args_pool) {
                        auto b = a;
                        b.push_back(y);
                        next.push_back(std::move(b));
                    }
                arg_lists = std::move(next);
            }
            for (const auto& args : arg_lists)
                for (int p = 0; p < H.poset().size(); ++p) {
                    if (!exists_satisfiable(H, p, phi, args, k)) continue;
                    ++satisfiable;
                    R.check(find_mixing_witness(H, p, phi, args, witnesses).has_value(),
                            std::string(id) + ": no mixing witness for " + q);
                }
        }
        R.notes.push_back(std::string(id) + ": " + num(satisfiable) + " satisfiable queries");
    }
    return R;
}

SuiteResult lottery_suite(int k) {
    SuiteResult R;
    R.id = "lottery";
    R.title = "lottery sum of two copies against the plain poset";
    SymSystem L = lottery_system(), T = striv();
    auto parts = lottery_parts();
    EquivalenceWitness W = lottery_witness(L, parts, T, k);
    auto rep = validate_witness(L, T, W);
    R.check(rep.ok, "explicit maps fail: " + (rep.problems.empty() ? std::string() : rep.problems[0]));
    R.notes.push_back("witness inventories " + num(W.inventory_s.size()) + "/" + num(W.inventory_t.size()));
    R.check(weakly_equivalent(L, T, k).equivalent, "not weakly equivalent");
    R.check(!is_tenacious(L), "lottery system should not be tenacious");

    // every HS name of rank <= k is a union of orbit names built from lower HS names
    const Poset& P = L.poset();
    Forcer& f = L.forcer();
    std::vector<int> core = members_of(L.filter().core());
    std::vector<NameId> level{empty_name()};
    std::vector<NameId> generators;
    for (int j = 0; j < k; ++j) {
        std::set<NameId> orbits;
        for (int p = 0; p < P.size(); ++p)
            for (NameId y : level) {
                std::vector<NameEntry> e;
                for (int g : core) e.emplace_back(L.act_cond(g, p), L.act(g, y));
                orbits.insert(name_make(std::move(e)));
            }
        generators.assign(orbits.begin(), orbits.end());
        if (j + 1 == k) break;
        std::vector<NameId> next{empty_name()};
        if (orbits.size() > 20) throw GuardExceeded("orbit generators");
        std::vector<NameId> ov(orbits.begin(), orbits.end());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ov.size()); ++mask) {
            std::vector<NameEntry> e;
            for (std::size_t b = 0; b < ov.size(); ++b)
                if ((mask >> b) & 1u) {
                    const auto& en = name_entries(ov[b]);
                    e.insert(e.end(), en.begin(), en.end());
                }
            next.push_back(name_make(std::move(e)));
        }
        level = std::move(next);
    }
    R.notes.push_back(num(level.size()) + " HS names below the top level, " + num(generators.size()) +
                      " orbit generators at rank " + std::to_string(k));
    for (int p = 0; p < parts[0].size(); ++p) {
        if (parts[0].minimal_class(p) < 0) continue;
        int g0 = P.minimal_class(lottery_index(parts, 0, p));
        int g1 = P.minimal_class(lottery_index(parts, 1, p));
        for (NameId x : level) R.check(f.value(x, g0) == f.value(x, g1), "tagged copies disagree");
        for (NameId x : generators) R.check(f.value(x, g0) == f.value(x, g1), "tagged copies disagree");
        for (NameId x : W.inventory_s) R.check(f.value(x, g0) == f.value(x, g1), "tagged copies disagree");
    }
    return R;
}

SuiteResult determinism_suite(const std::string& corpus_dir) {
    SuiteResult R;
    R.id = "determinism";
    R.title = "repeated runs give identical reports";
    std::vector<std::string> files;
    if (std::filesystem::is_directory(corpus_dir))
        for (const auto& ent : std::filesystem::directory_iterator(corpus_dir))
            if (ent.path().extension() == ".wb") files.push_back(ent.path().string());
    std::sort(files.begin(), files.end());
    R.check(!files.empty(), "no corpus documents in " + corpus_dir);
    std::set<std::string> verbs;
    for (const auto& path : files)
        for (ReportFormat fmt : {ReportFormat::Text, ReportFormat::Json}) {
            RunOptions opt;
            opt.format = fmt;
            RunOutcome a = run_file(path, opt);
            RunOutcome b = run_file(path, opt);
            R.check(a.report == b.report && a.exit_code == b.exit_code,
                    std::filesystem::path(path).filename().string() + " differs between runs");
            for (const auto& v : a.verbs) verbs.insert(v);
        }
    for (const auto& v : workbench_verbs()) R.check(verbs.count(v) > 0, "corpus never runs " + v);
    R.notes.push_back(num(files.size()) + " documents");
    std::string vs;
    for (const auto& v : verbs) vs += (vs.empty() ? "" : " ") + v;
    R.notes.push_back("verbs: " + vs);
    return R;
}

std::vector<std::string> suite_ids() {
    return {"forcing-theorem", "symmetry-lemma", "two-step-algebra", "factorization", "product-reduced",
            "quotient",        "completion",     "lottery",          "determinism"};
}

SuiteResult run_suite(const std::string& id, const SuiteOptions& opt) {
    if (id == "forcing-theorem") return forcing_theorem_suite(opt.rank);
    if (id == "symmetry-lemma") return symmetry_lemma_suite(opt.rank);
    if (id == "two-step-algebra") return two_step_algebra_suite();
    if (id == "factorization") return factorization_suite(opt.rank);
    if (id == "product-reduced") return product_reduced_suite(opt.rank);
    if (id == "quotient") return quotient_suite(opt.rank);
    if (id == "completion") return completion_suite(opt.rank);
    if (id == "lottery") return lottery_suite(opt.rank);
    if (id == "determinism") return determinism_suite(opt.corpus_dir);
    throw std::out_of_range("unknown suite " + id);
}

}  // namespace symext
