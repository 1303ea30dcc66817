#include "symext/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "symext/guard.hpp"

namespace symext {

bool is_subforcing(const Poset& P, const Poset& Q, const std::vector<int>& e) {
    if (static_cast<int>(e.size()) != P.size()) return false;
    std::set<int> img(e.begin(), e.end());
    if (img.size() != e.size()) return false;
    for (int x : e)
        if (x < 0 || x >= Q.size()) return false;
    for (int p = 0; p < P.size(); ++p)
        for (int q = 0; q < P.size(); ++q) {
            if (P.leq(p, q) != Q.leq(e[p], e[q])) return false;
            if (P.compatible(p, q) != Q.compatible(e[p], e[q])) return false;
        }
    return true;
}

bool is_symmetrically_complete(const SymSystem& S, const Poset& Q, const std::vector<int>& e) {
    for (const Bits& D : symmetrically_dense_sets(S)) {
        Bits img(Q.size());
        for_each_bit(D, [&](int p) { img.set(e[p]); });
        if (!Q.is_predense(img)) return false;
    }
    return true;
}

namespace {

// Restriction of a permutation of Q to P, or empty if P is not preserved.
std::optional<Perm> restrict_perm(const Perm& sigma, const std::vector<int>& e, int qsize) {
    std::vector<int> back(qsize, -1);
    for (std::size_t p = 0; p < e.size(); ++p) back[e[p]] = static_cast<int>(p);
    Perm out(e.size());
    for (std::size_t p = 0; p < e.size(); ++p) {
        int img = back[sigma[e[p]]];
        if (img < 0) return std::nullopt;
        out[p] = img;
    }
    return out;
}

}  // namespace

SubsystemReport check_subsystem(const SymSystem& S0, const SymSystem& S1, const std::vector<int>& e) {
    SubsystemReport r;
    r.subforcing = is_subforcing(S0.poset(), S1.poset(), e);
    if (!r.subforcing) return r;
    r.restriction = true;
    for_each_bit(S1.filter().core(), [&](int s) {
        auto rho = restrict_perm(S1.group().element(s), e, S1.poset().size());
        if (!rho) {
            r.restriction = false;
            return;
        }
        int i = S0.group().index_of(*rho);
        if (i < 0 || !S0.filter().core().test(i)) r.restriction = false;
    });
    r.predense = is_symmetrically_complete(S0, S1.poset(), e);
    return r;
}

bool is_complete_subsystem(const SymSystem& S0, const SymSystem& S1, const std::vector<int>& e) {
    return check_subsystem(S0, S1, e).complete();
}

std::optional<int> h_reduction(const SymSystem& S, const Poset& Q, const std::vector<int>& e, const Bits& H, int q) {
    const Poset& P = S.poset();
    if (!is_subforcing(P, Q, e)) throw PreconditionError("not a subforcing");
    for (int p = 0; p < P.size(); ++p) {
        bool ok = true;
        for_each_bit(P.down(p), [&](int r) {
            if (!ok) return;
            bool found = false;
            for_each_bit(H, [&](int pi) {
                if (!found && Q.compatible(e[S.act_cond(pi, r)], q)) found = true;
            });
            ok = found;
        });
        if (ok) return p;
    }
    return std::nullopt;
}

std::vector<Bits> respect_diagram(const SymSystem& S, NameId x) {
    std::vector<Bits> out;
    for (int g = 0; g < S.group().order(); ++g) out.push_back(S.forcer().semantic_set(Rel::Eq, S.act(g, x), x));
    return out;
}

NameUniverse hs_inventory(const SymSystem& S, int k) {
    try {
        return enumerate_HS(S, k);
    } catch (const GuardExceeded&) {
    }
    NameUniverse U = fragment_inventory(S.poset(), k);
    std::vector<NameId> keep;
    for (NameId x : U.names)
        if (S.hs(x)) keep.push_back(x);
    U.names = std::move(keep);
    U.hs = true;
    U.note = "bounded";
    return U;
}

bool respect_basis_check(const SymSystem& S, const std::vector<NameId>& R, int k) {
    std::set<NameId> inR(R.begin(), R.end());
    for (NameId y : R) {
        if (!S.hs(y)) return false;
        for (int g = 0; g < S.group().order(); ++g)
            if (!inR.count(S.act(g, y))) return false;
    }
    auto sub = [](const std::vector<Bits>& a, const std::vector<Bits>& b) {
        for (std::size_t g = 0; g < a.size(); ++g)
            if (!a[g].is_subset_of(b[g])) return false;
        return true;
    };
    std::vector<std::vector<Bits>> rdiag;
    for (NameId y : R) rdiag.push_back(respect_diagram(S, y));
    auto hs = hs_inventory(S, k).names;
    std::vector<NameId> good;
    for (NameId x : hs) {
        auto d = respect_diagram(S, x);
        if (std::any_of(rdiag.begin(), rdiag.end(), [&](const auto& r) { return sub(r, d); })) good.push_back(x);
    }
    Forcer& f = S.forcer();
    for (NameId x : hs) {
        Bits D(S.poset().size());
        for (NameId x2 : good) {
            D |= f.semantic_set(Rel::Eq, x, x2);
            if (D.all()) break;
        }
        if (!S.poset().is_dense(D)) return false;
    }
    return true;
}

std::vector<NameId> default_respect_basis(const SymSystem& S, int k) {
    for (int alpha = 0; alpha <= k; ++alpha) {
        auto R = enumerate_HS(S, alpha).names;
        if (respect_basis_check(S, R, k)) return R;
    }
    throw PreconditionError("no HS level up to the rank bound is a respect basis");
}

bool psi(const SymSystem& S, const Poset& Q, const std::vector<int>& e, int p, int r, const Fragment& frag) {
    const Poset& P = S.poset();
    Forcer& f = S.forcer();
    std::vector<int> ok;
    for (int g = 0; g < S.group().order(); ++g) {
        bool all = true;
        for (auto [x, y] : frag)
            if (!f.semantic_forces(p, Rel::Eq, S.act(g, x), y)) {
                all = false;
                break;
            }
        if (all) ok.push_back(g);
    }
    bool holds = true;
    for_each_bit(P.down(p), [&](int p2) {
        if (!holds) return;
        holds = std::any_of(ok.begin(), ok.end(), [&](int g) {
            return Q.compatible(e[S.act_cond(S.group().inv(g), p2)], r);
        });
    });
    return holds;
}

Quotient quotient_forcing_name(const SymSystem& S, std::shared_ptr<const Poset> Q, const std::vector<int>& e,
                               const std::vector<NameId>& R, int max_fragment) {
    if (!is_subforcing(S.poset(), *Q, e)) throw PreconditionError("not a subforcing");
    if (!is_symmetrically_complete(S, *Q, e)) throw PreconditionError("base is not symmetrically complete in Q");
    Quotient out;
    out.base = S;
    out.Q = Q;
    out.embed = e;
    out.basis = R;
    out.max_fragment = max_fragment;
    std::vector<std::pair<NameId, NameId>> pool;
    for (NameId x : R)
        for (NameId y : R) pool.emplace_back(x, y);
    std::function<void(std::size_t, Fragment&)> grow = [&](std::size_t from, Fragment& cur) {
        if (static_cast<int>(cur.size()) == max_fragment) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            out.fragments.push_back(cur);
            if (out.fragments.size() > 4096) throw GuardExceeded("quotient fragment count");
            grow(i + 1, cur);
            cur.pop_back();
        }
    };
    out.fragments.push_back({});
    Fragment cur;
    grow(0, cur);
    std::stable_sort(out.fragments.begin(), out.fragments.end(),
                     [](const Fragment& a, const Fragment& b) { return a.size() < b.size(); });
    const Poset& P = S.poset();
    std::vector<NameEntry> name;
    for (std::size_t fi = 0; fi < out.fragments.size(); ++fi) {
        std::vector<NameId> pairs;
        for (auto [x, y] : out.fragments[fi]) pairs.push_back(bullet_pair(P, check_name(P, name_code(x)), y));
        NameId a = bullet_name(P, pairs);
        for (int r = 0; r < Q->size(); ++r) {
            NameId t = bullet_pair(P, check_name(P, hf_ordinal(r)), a);
            for (int p = 0; p < P.size(); ++p)
                if (psi(S, *Q, e, p, r, out.fragments[fi])) {
                    out.entries.push_back({p, r, static_cast<int>(fi)});
                    name.emplace_back(p, t);
                }
        }
    }
    out.name = name_make(std::move(name));
    return out;
}

namespace {

Hf fragment_value(const SymSystem& S, const Fragment& frag, int g0) {
    std::vector<Hf> m;
    for (auto [x, y] : frag) m.push_back(hf_kpair(name_code(x), S.forcer().value(y, g0)));
    return hf_make(std::move(m));
}

}  // namespace

EvaluatedQuotient evaluate_quotient(const Quotient& Qn, int g0) {
    const Bits& G0 = Qn.base.forcer().generics().at(g0).conds;
    std::map<std::pair<int, Hf>, int> seen;
    EvaluatedQuotient E;
    E.g0 = g0;
    for (const auto& en : Qn.entries) {
        if (!G0.test(en.p)) continue;
        Hf a = fragment_value(Qn.base, Qn.fragments[en.frag], g0);
        if (seen.count({en.r, a})) continue;
        seen[{en.r, a}] = static_cast<int>(E.r.size());
        E.r.push_back(en.r);
        E.frag.push_back(a);
        E.frag_names.push_back(Qn.fragments[en.frag]);
    }
    const int n = static_cast<int>(E.r.size());
    auto top = seen.find({Qn.Q->top(), hf_empty()});
    if (top == seen.end()) throw std::logic_error("quotient lacks its trivial condition");
    std::vector<std::string> labels;
    std::vector<Bits> below(n, Bits(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back("(" + Qn.Q->label(E.r[i]) + "," + hf_to_string(E.frag[i]) + ")");
        for (int j = 0; j < n; ++j)
            if (Qn.Q->leq(E.r[j], E.r[i]) && hf_subset(E.frag[i], E.frag[j])) below[i].set(j);
    }
    E.poset = std::make_shared<const Poset>(Poset::from_below(labels, below, top->second));
    return E;
}

Hf quotient_value(const Quotient& Qn, int g0) { return Qn.base.forcer().value(Qn.name, g0); }

Bits canonical_quotient_generic(const Quotient& Qn, const EvaluatedQuotient& E, const Bits& G, int g0) {
    std::vector<Hf> truth;
    for (NameId x : Qn.basis) truth.push_back(hf_kpair(name_code(x), Qn.base.forcer().value(x, g0)));
    Hf all = hf_make(truth);
    Bits K(E.r.size());
    for (std::size_t i = 0; i < E.r.size(); ++i)
        if (G.test(E.r[i]) && hf_subset(E.frag[i], all)) K.set(i);
    return K;
}

namespace {

int find_condition(const EvaluatedQuotient& E, int r, Hf a) {
    for (std::size_t i = 0; i < E.r.size(); ++i)
        if (E.r[i] == r && E.frag[i] == a) return static_cast<int>(i);
    return -1;
}

Hf moved_fragment(const SymSystem& S, const Perm& rho, const Fragment& frag, int g0) {
    std::vector<Hf> m;
    for (auto [x, y] : frag) m.push_back(hf_kpair(name_code(symext::apply(rho, x)), S.forcer().value(y, g0)));
    return hf_make(std::move(m));
}

}  // namespace

QuotientSystemEval quotient_system(const Quotient& Qn, const SymSystem& S1, const EvaluatedQuotient& E) {
    const int n = static_cast<int>(E.r.size());
    const int g0 = E.g0;
    std::vector<Perm> perms;
    std::vector<int> source;
    for (int s = 0; s < S1.group().order(); ++s) {
        auto rho = restrict_perm(S1.group().element(s), Qn.embed, Qn.Q->size());
        if (!rho || Qn.base.group().index_of(*rho) < 0) continue;
        Perm pi(n);
        for (int i = 0; i < n; ++i) {
            int j = find_condition(E, S1.act_cond(s, E.r[i]), moved_fragment(Qn.base, *rho, E.frag_names[i], g0));
            if (j < 0) throw std::logic_error("quotient action leaves the quotient");
            pi[i] = j;
        }
        perms.push_back(pi);
        source.push_back(s);
    }
    auto G = std::make_shared<const Group>(Group::from_elements(n, perms));
    Bits core(G->order());
    for (std::size_t k = 0; k < perms.size(); ++k)
        if (S1.filter().core().test(source[k])) core.set(G->index_of(perms[k]));
    QuotientSystemEval out;
    out.ambient.assign(G->order(), -1);
    for (std::size_t k = 0; k < perms.size(); ++k) {
        int idx = G->index_of(perms[k]);
        if (out.ambient[idx] < 0) out.ambient[idx] = source[k];
    }
    out.system = SymSystem(E.poset, G, {core}, "quotient");
    return out;
}

std::optional<int> homogeneity_witness(const Quotient& Qn, const EvaluatedQuotient& E, int c0, int c1) {
    const SymSystem& S = Qn.base;
    if (!(S.poset() == *Qn.Q)) throw PreconditionError("homogeneity witness needs the quotient of the base poset");
    const int g0 = E.g0;
    for (int t = 0; t < S.group().order(); ++t) {
        const Perm& tau = S.group().element(t);
        std::vector<int> img(E.r.size());
        bool inside = true;
        for (std::size_t i = 0; i < E.r.size() && inside; ++i) {
            img[i] = find_condition(E, tau[E.r[i]], moved_fragment(S, tau, E.frag_names[i], g0));
            inside = img[i] >= 0;
        }
        if (inside && E.poset->compatible(img[c0], c1)) return t;
    }
    return std::nullopt;
}

NameId quotient_translate(const Quotient& Qn, NameId x) {
    const int q = Qn.Q->size();
    std::set<std::pair<int, int>> psi0;
    for (const auto& en : Qn.entries)
        if (Qn.fragments[en.frag].empty()) psi0.insert({en.p, en.r});
    std::map<NameId, NameId> memo;
    std::function<NameId(NameId)> rec = [&](NameId y) -> NameId {
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        std::vector<NameEntry> e;
        for (auto [r, z] : name_entries(y)) {
            NameId iz = rec(z);
            for (int p = 0; p < Qn.base.poset().size(); ++p)
                if (psi0.count({p, r})) e.emplace_back(p * q + r, iz);
        }
        NameId out = name_make(std::move(e));
        memo.emplace(y, out);
        return out;
    };
    return rec(x);
}

Bits translated_filter(const Quotient& Qn, const EvaluatedQuotient& E, const Bits& K, int g0) {
    const int q = Qn.Q->size();
    const Bits& G0 = Qn.base.forcer().generics().at(g0).conds;
    Bits out(static_cast<std::size_t>(Qn.base.poset().size()) * q);
    for (int p = 0; p < Qn.base.poset().size(); ++p) {
        if (!G0.test(p)) continue;
        for (int r = 0; r < q; ++r) {
            int c = find_condition(E, r, hf_empty());
            if (c >= 0 && K.test(c)) out.set(p * q + r);
        }
    }
    return out;
}

}  // namespace symext
