#include "symext/iteration.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "symext/guard.hpp"

namespace symext {

namespace {

bool same_system(const SymSystem& a, const SymSystem& b) {
    return a.poset() == b.poset() && a.group() == b.group() && a.filter().core() == b.filter().core();
}

// Orbits of the filter core of S on its generics, as a representative per generic.
std::vector<int> core_orbit_rep(const SymSystem& S) {
    const int n = static_cast<int>(S.poset().minimal_reps().size());
    std::vector<int> rep(n);
    for (int c = 0; c < n; ++c) rep[c] = c;
    for_each_bit(S.filter().core(), [&](int g) {
        auto perm = generic_permutation(S, g);
        for (int c = 0; c < n; ++c) rep[perm[c]] = std::min(rep[perm[c]], rep[c]);
    });
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < n; ++c)
            if (rep[rep[c]] != rep[c]) {
                rep[c] = rep[rep[c]];
                changed = true;
            }
    }
    return rep;
}

template <class T>
std::vector<std::vector<T>> orbit_vectors(const std::vector<int>& rep, const std::vector<std::vector<T>>& choices) {
    const int n = static_cast<int>(rep.size());
    std::vector<int> reps;
    for (int c = 0; c < n; ++c)
        if (rep[c] == c) reps.push_back(c);
    std::uint64_t total = 1;
    for (int c : reps) {
        total *= choices[c].size();
        if (total > default_guards().max_names) throw GuardExceeded("second-stage name count");
    }
    std::vector<std::vector<T>> out;
    std::vector<std::size_t> idx(reps.size(), 0);
    if (total == 0) return out;
    for (;;) {
        std::vector<T> v(n);
        for (int c = 0; c < n; ++c) {
            auto k = std::find(reps.begin(), reps.end(), rep[c]) - reps.begin();
            v[c] = choices[rep[c]][idx[k]];
        }
        out.push_back(std::move(v));
        std::size_t k = 0;
        while (k < reps.size() && ++idx[k] == choices[reps[k]].size()) idx[k++] = 0;
        if (k == reps.size()) break;
    }
    return out;
}

template <class T>
std::vector<T> permute_vector(const std::vector<T>& v, const std::vector<int>& perm) {
    // (pi v)(pi c) = v(c)
    std::vector<T> out(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) out[perm[c]] = v[c];
    return out;
}

// Base name evaluating to the ordinal f(c) at generic c.
NameId mixture_name(const Poset& P, const std::vector<int>& f) {
    std::vector<NameEntry> e;
    for (int m : P.minimal()) {
        int c = P.minimal_class(m);
        for (int o = 0; o < f[c]; ++o) e.emplace_back(m, check_name(P, hf_ordinal(o)));
    }
    return name_make(std::move(e));
}

std::string vector_label(const StageName& T, const std::vector<int>& f) {
    std::string s = "[";
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (c) s += ",";
        s += T.per_generic[c].poset().label(f[c]);
    }
    return s + "]";
}

}  // namespace

StageName check_stage(const SymSystem& S0, const SymSystem& T) {
    StageName out;
    out.per_generic.assign(S0.poset().minimal_reps().size(), T);
    return out;
}

Report validate_stage(const SymSystem& S0, const StageName& T) {
    Report r;
    const int n = static_cast<int>(S0.poset().minimal_reps().size());
    if (static_cast<int>(T.per_generic.size()) != n) {
        r.fail("stage has " + std::to_string(T.per_generic.size()) + " values for " + std::to_string(n) + " generics");
        return r;
    }
    for (int c = 0; c < n; ++c) {
        Report v = validate(T.per_generic[c]);
        for (auto& p : v.problems) r.fail("stage at generic " + std::to_string(c) + ": " + p);
    }
    for (int g = 0; g < S0.group().order(); ++g) {
        auto perm = generic_permutation(S0, g);
        for (int c = 0; c < n; ++c)
            if (!same_system(T.per_generic[c], T.per_generic[perm[c]])) {
                r.fail("stage is not invariant under the base group");
                return r;
            }
    }
    return r;
}

NameWitness full_witness(const SymSystem& S0, const StageName& T) {
    auto rep = core_orbit_rep(S0);
    const int n = static_cast<int>(rep.size());
    std::vector<std::vector<int>> conds(n), elems(n);
    std::vector<std::vector<Bits>> cores(n);
    for (int c = 0; c < n; ++c) {
        for (int q = 0; q < T.per_generic[c].poset().size(); ++q) conds[c].push_back(q);
        for (int g = 0; g < T.per_generic[c].group().order(); ++g) elems[c].push_back(g);
        cores[c].push_back(T.per_generic[c].filter().core());
    }
    NameWitness W;
    W.conds = orbit_vectors(rep, conds);
    W.group = orbit_vectors(rep, elems);
    W.filter = orbit_vectors(rep, cores);
    return W;
}

NameWitness check_witness(const SymSystem& S0, const StageName& T) {
    const int n = static_cast<int>(S0.poset().minimal_reps().size());
    for (int c = 1; c < n; ++c)
        if (!same_system(T.per_generic[0], T.per_generic[c]))
            throw PreconditionError("check witness needs a ground stage");
    NameWitness W;
    if (n == 0) return W;
    const SymSystem& S = T.per_generic[0];
    for (int q = 0; q < S.poset().size(); ++q) W.conds.push_back(std::vector<int>(n, q));
    for (int g = 0; g < S.group().order(); ++g) W.group.push_back(std::vector<int>(n, g));
    for (const Bits& H : S.group().subgroups())
        if (S.filter().contains(H)) W.filter.push_back(std::vector<Bits>(n, H));
    return W;
}

Report validate_name_witness(const SymSystem& S0, const StageName& T, const NameWitness& W) {
    Report r = validate_stage(S0, T);
    if (!r.ok) return r;
    const int n = static_cast<int>(T.per_generic.size());
    auto core_rep = core_orbit_rep(S0);
    std::set<std::vector<int>> conds(W.conds.begin(), W.conds.end()), group(W.group.begin(), W.group.end());
    std::set<std::vector<std::vector<int>>> filter;
    auto key = [](const std::vector<Bits>& h) {
        std::vector<std::vector<int>> k;
        for (const Bits& b : h) k.push_back(members_of(b));
        return k;
    };
    for (const auto& h : W.filter) filter.insert(key(h));
    auto symmetric = [&](const auto& v) {
        for (int c = 0; c < n; ++c)
            if (!(v[c] == v[core_rep[c]])) return false;
        return true;
    };
    // closure under the base group
    for (int g = 0; g < S0.group().order(); ++g) {
        auto perm = generic_permutation(S0, g);
        for (const auto& f : W.conds)
            if (!conds.count(permute_vector(f, perm))) {
                r.fail("condition names are not closed under the base group");
                break;
            }
        for (const auto& f : W.group)
            if (!group.count(permute_vector(f, perm))) {
                r.fail("group names are not closed under the base group");
                break;
            }
        for (const auto& h : W.filter)
            if (!filter.count(key(permute_vector(h, perm)))) {
                r.fail("filter names are not closed under the base group");
                break;
            }
    }
    for (const auto& f : W.conds)
        if (!symmetric(f)) r.fail("condition name " + vector_label(T, f) + " is not symmetric");
    for (const auto& f : W.group)
        if (!symmetric(f)) r.fail("group name is not symmetric");
    // the named sets are forced to be the stage's conditions, group and filter
    for (int c = 0; c < n; ++c) {
        const SymSystem& S = T.per_generic[c];
        std::set<int> qs, gs;
        for (const auto& f : W.conds) qs.insert(f[c]);
        for (const auto& f : W.group) gs.insert(f[c]);
        if (static_cast<int>(qs.size()) != S.poset().size()) r.fail("condition names miss a condition");
        if (static_cast<int>(gs.size()) != S.group().order()) r.fail("group names miss an element");
        Bits meet = S.group().all();
        for (const auto& h : W.filter) {
            if (!S.group().is_subgroup(h[c]) || !S.filter().contains(h[c])) r.fail("filter name outside the filter");
            meet &= h[c];
        }
        if (W.filter.empty() || meet != S.filter().core()) r.fail("filter names do not generate the filter");
    }
    // images of conditions under group names
    for (const auto& g : W.group)
        for (const auto& f : W.conds) {
            std::vector<int> img(n);
            for (int c = 0; c < n; ++c) img[c] = T.per_generic[c].act_cond(g[c], f[c]);
            if (!conds.count(img)) {
                r.fail("image of a condition name is not named");
                goto images_done;
            }
        }
images_done:
    // identity, composition, inverse, intersection, conjugation
    if (!group.count(std::vector<int>(n, 0))) r.fail("group names lack the identity");
    for (const auto& a : W.group) {
        std::vector<int> inv(n);
        for (int c = 0; c < n; ++c) inv[c] = T.per_generic[c].group().inv(a[c]);
        if (!group.count(inv)) {
            r.fail("group names are not closed under inverse");
            break;
        }
    }
    for (const auto& a : W.group)
        for (const auto& b : W.group) {
            std::vector<int> ab(n);
            for (int c = 0; c < n; ++c) ab[c] = T.per_generic[c].group().mul(a[c], b[c]);
            if (!group.count(ab)) {
                r.fail("group names are not closed under composition");
                goto comp_done;
            }
        }
comp_done:
    for (const auto& h : W.filter) {
        for (const auto& k : W.filter) {
            std::vector<Bits> hk(n);
            for (int c = 0; c < n; ++c) hk[c] = h[c] & k[c];
            if (!filter.count(key(hk))) {
                r.fail("filter names are not closed under intersection");
                goto meet_done;
            }
        }
    }
meet_done:
    for (const auto& h : W.filter)
        for (const auto& a : W.group) {
            std::vector<Bits> ch(n);
            for (int c = 0; c < n; ++c) ch[c] = T.per_generic[c].group().conjugate(a[c], h[c]);
            if (!filter.count(key(ch))) {
                r.fail("filter names are not closed under conjugation");
                return r;
            }
        }
    return r;
}

int TwoStep::cond_index(int p, int v) const {
    auto it = cond_lookup.find({p, v});
    return it == cond_lookup.end() ? -1 : it->second;
}

int TwoStep::vector_index(const std::vector<int>& f) const {
    auto it = vector_lookup.find(f);
    return it == vector_lookup.end() ? -1 : it->second;
}

int TwoStep::pair_index(const PairAut& a) const {
    auto it = pair_lookup.find(a);
    return it == pair_lookup.end() ? -1 : it->second;
}

TwoStep two_step(const SymSystem& S0, const StageName& T) { return reduced_iteration(S0, T, full_witness(S0, T)); }

TwoStep reduced_iteration(const SymSystem& S0, const StageName& T, const NameWitness& W) {
    Report r = validate_name_witness(S0, T, W);
    if (!r.ok) throw PreconditionError("invalid second stage: " + r.problems.front());
    TwoStep out;
    out.base = S0;
    out.stage = T;
    out.witness = W;
    const Poset& P = S0.poset();
    const int n = static_cast<int>(T.per_generic.size());
    for (std::size_t v = 0; v < W.conds.size(); ++v) out.vector_lookup[W.conds[v]] = static_cast<int>(v);
    std::vector<int> tops(n);
    for (int c = 0; c < n; ++c) tops[c] = T.per_generic[c].poset().top();
    out.top_vector = out.vector_index(tops);
    if (out.top_vector < 0) throw PreconditionError("condition names lack the trivial condition");
    const std::uint64_t total = static_cast<std::uint64_t>(P.size()) * W.conds.size();
    if (total > static_cast<std::uint64_t>(default_guards().max_names)) throw GuardExceeded("two-step poset size");
    std::vector<std::string> labels;
    for (int p = 0; p < P.size(); ++p)
        for (std::size_t v = 0; v < W.conds.size(); ++v) {
            out.cond_lookup[{p, static_cast<int>(v)}] = static_cast<int>(out.conds.size());
            out.conds.emplace_back(p, static_cast<int>(v));
            labels.push_back("(" + P.label(p) + "," + vector_label(T, W.conds[v]) + ")");
        }
    const int N = static_cast<int>(out.conds.size());
    Forcer& f0 = S0.forcer();
    std::vector<Bits> below(N, Bits(N));
    for (int i = 0; i < N; ++i) {
        auto [p, v] = out.conds[i];
        for (int j = 0; j < N; ++j) {
            auto [p2, v2] = out.conds[j];
            if (!P.leq(p2, p)) continue;
            bool ok = true;
            for (int c : f0.generics_through(p2))
                if (!T.per_generic[c].poset().leq(W.conds[v2][c], W.conds[v][c])) {
                    ok = false;
                    break;
                }
            if (ok) below[i].set(j);
        }
    }
    auto Q = std::make_shared<const Poset>(Poset::from_below(labels, below, out.cond_index(P.top(), out.top_vector)));
    // all pairs
    std::vector<Perm> perms;
    for (int g0 = 0; g0 < S0.group().order(); ++g0)
        for (const auto& g : W.group) {
            PairAut a{g0, g};
            out.pair_lookup[a] = static_cast<int>(out.pairs.size());
            out.pairs.push_back(a);
        }
    // pointwise action, computed before the group exists
    auto act_raw = [&](const PairAut& a, int cond) {
        auto [p, v] = out.conds[cond];
        auto perm = generic_permutation(S0, S0.group().inv(a.base));
        std::vector<int> img(n);
        for (int c = 0; c < n; ++c) img[c] = T.per_generic[c].act_cond(a.stage[c], W.conds[v][perm[c]]);
        int w = out.vector_index(img);
        if (w < 0) throw PreconditionError("second-stage image is not named");
        return out.cond_index(S0.act_cond(a.base, p), w);
    };
    for (const auto& a : out.pairs) {
        Perm pi(N);
        for (int i = 0; i < N; ++i) pi[i] = act_raw(a, i);
        perms.push_back(pi);
    }
    auto G = std::make_shared<const Group>(Group::from_elements(N, perms));
    for (const auto& pi : perms) out.pair_element.push_back(G->index_of(pi));
    // filter generators (H0, h) with H0 = core0 restricted to sym(h)
    std::vector<Bits> gens;
    const Bits& core0 = S0.filter().core();
    for (const auto& h : W.filter) {
        Bits H(G->order());
        for (std::size_t i = 0; i < out.pairs.size(); ++i) {
            const PairAut& a = out.pairs[i];
            if (!core0.test(a.base)) continue;
            auto perm = generic_permutation(S0, a.base);
            bool fixes = true;
            for (int c = 0; c < n && fixes; ++c) fixes = h[perm[c]] == h[c];
            if (!fixes) continue;
            bool inside = true;
            for (int c = 0; c < n && inside; ++c) inside = h[c].test(a.stage[c]);
            if (inside) H.set(out.pair_element[i]);
        }
        gens.push_back(H);
    }
    std::string name = S0.name().empty() ? "" : S0.name() + "*T";
    out.system = SymSystem(Q, G, gens, name);
    return out;
}

int act_pair(const TwoStep& T, const PairAut& a, int cond) {
    int i = T.pair_index(a);
    if (i < 0) throw PreconditionError("not an automorphism of this iteration");
    return T.system.act_cond(T.pair_element[i], cond);
}

PairAut compose_pair(const TwoStep& T, const PairAut& a, const PairAut& b) {
    const Group& G0 = T.base.group();
    auto inv = generic_permutation(T.base, G0.inv(a.base));
    PairAut out{G0.mul(a.base, b.base), std::vector<int>(a.stage.size())};
    for (std::size_t c = 0; c < a.stage.size(); ++c)
        out.stage[c] = T.stage.per_generic[c].group().mul(a.stage[c], b.stage[inv[c]]);
    return out;
}

PairAut invert_pair(const TwoStep& T, const PairAut& a) {
    const Group& G0 = T.base.group();
    auto perm = generic_permutation(T.base, a.base);
    PairAut out{G0.inv(a.base), std::vector<int>(a.stage.size())};
    for (std::size_t c = 0; c < a.stage.size(); ++c)
        out.stage[c] = T.stage.per_generic[c].group().inv(a.stage[perm[c]]);
    return out;
}

PairAut conjugate_pair(const TwoStep& T, const PairAut& s, const PairAut& p) {
    const Group& G0 = T.base.group();
    int s_inv = G0.inv(s.base);
    auto back = generic_permutation(T.base, s_inv);
    // sigma0 pi0^-1 sigma0^-1
    auto twisted = generic_permutation(T.base, G0.mul(G0.mul(s.base, G0.inv(p.base)), s_inv));
    PairAut out{G0.mul(G0.mul(s.base, p.base), s_inv), std::vector<int>(s.stage.size())};
    for (std::size_t c = 0; c < s.stage.size(); ++c) {
        const Group& H = T.stage.per_generic[c].group();
        out.stage[c] = H.mul(H.mul(s.stage[c], p.stage[back[c]]), H.inv(s.stage[twisted[c]]));
    }
    return out;
}

namespace {

int generic_with(const Forcer& F, const Bits& conds) {
    for (int g = 0; g < F.generic_count(); ++g)
        if (F.generics()[g].conds == conds) return g;
    return -1;
}

}  // namespace

std::pair<int, int> factor_generic(const TwoStep& T, int g) {
    const Bits& G = T.system.forcer().generics().at(g).conds;
    const Poset& P = T.base.poset();
    Bits G0(P.size());
    for (int p = 0; p < P.size(); ++p)
        if (G.test(T.embed(p))) G0.set(p);
    int g0 = generic_with(T.base.forcer(), G0);
    if (g0 < 0) throw PreconditionError("first coordinate is not generic");
    const SymSystem& S1 = T.stage.per_generic[g0];
    Bits G1(S1.poset().size());
    for_each_bit(G, [&](int i) { G1.set(T.witness.conds[T.conds[i].second][g0]); });
    int g1 = generic_with(S1.forcer(), G1);
    if (g1 < 0) throw PreconditionError("second coordinate is not generic");
    return {g0, g1};
}

int compose_generic(const TwoStep& T, int g0, int g1) {
    const Bits& G0 = T.base.forcer().generics().at(g0).conds;
    const Bits& G1 = T.stage.per_generic.at(g0).forcer().generics().at(g1).conds;
    Bits G(T.conds.size());
    for (std::size_t i = 0; i < T.conds.size(); ++i) {
        auto [p, v] = T.conds[i];
        if (G0.test(p) && G1.test(T.witness.conds[v][g0])) G.set(i);
    }
    int g = generic_with(T.system.forcer(), G);
    if (g < 0) throw PreconditionError("composed filter is not generic");
    return g;
}

NameId bracket(const TwoStep& T, NameId x) {
    std::map<NameId, NameId> memo;
    const Poset& P = T.base.poset();
    std::function<NameId(NameId)> rec = [&](NameId y) -> NameId {
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        std::vector<NameEntry> e;
        for (auto [i, z] : name_entries(y)) {
            auto [p, v] = T.conds.at(i);
            e.emplace_back(p, bullet_pair(P, mixture_name(P, T.witness.conds[v]), rec(z)));
        }
        NameId out = name_make(std::move(e));
        memo.emplace(y, out);
        return out;
    };
    return rec(x);
}

NameId unbracket(const TwoStep& T, NameId y) {
    const Poset& P = T.base.poset();
    Forcer& F = T.base.forcer();
    std::vector<NameEntry> e;
    for (auto [p, w] : name_entries(y)) {
        auto pr = decode_bullet_pair(P, w);
        if (!pr) throw PreconditionError("entry is not a pair name");
        std::vector<int> f;
        for (int c = 0; c < F.generic_count(); ++c) {
            auto o = hf_decode_ordinal(F.value(pr->first, c));
            if (!o) throw PreconditionError("first component does not name a condition");
            f.push_back(*o);
        }
        int v = T.vector_index(f);
        if (v < 0) throw PreconditionError("first component does not name a condition");
        e.emplace_back(T.cond_index(p, v), unbracket(T, pr->second));
    }
    return name_make(std::move(e));
}

Hf evaluate_bracket(const TwoStep& T, NameId y, int g0, int g1) {
    const Bits& G1 = T.stage.per_generic.at(g0).forcer().generics().at(g1).conds;
    std::map<Hf, Hf> memo;
    std::function<Hf(Hf)> rec = [&](Hf v) -> Hf {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        std::vector<Hf> out;
        for (Hf m : hf_members(v)) {
            auto kp = hf_decode_kpair(m);
            if (!kp) continue;
            auto q = hf_decode_ordinal(kp->first);
            if (q && *q < static_cast<int>(G1.size()) && G1.test(*q)) out.push_back(rec(kp->second));
        }
        Hf r = hf_make(std::move(out));
        memo.emplace(v, r);
        return r;
    };
    return rec(T.base.forcer().value(y, g0));
}

NameId symmetrize(const SymSystem& S, const Bits& H, NameId x) {
    std::vector<NameEntry> e;
    for_each_bit(H, [&](int g) {
        for (auto entry : name_entries(S.act(g, x))) e.push_back(entry);
    });
    return name_make(std::move(e));
}

NameId embed_reduced(const TwoStep& reduced, const TwoStep& full, NameId x) {
    std::vector<NameEntry> e;
    for (auto [i, y] : name_entries(x)) {
        auto [p, v] = reduced.conds.at(i);
        int w = full.vector_index(reduced.witness.conds[v]);
        if (w < 0) throw PreconditionError("reduced condition missing from the full iteration");
        e.emplace_back(full.cond_index(p, w), embed_reduced(reduced, full, y));
    }
    return name_make(std::move(e));
}

ProductSystem product(const SymSystem& S0, const SymSystem& S1) {
    const Poset& P0 = S0.poset();
    const Poset& P1 = S1.poset();
    ProductSystem out;
    out.width = P1.size();
    std::vector<std::string> labels;
    for (int p = 0; p < P0.size(); ++p)
        for (int q = 0; q < P1.size(); ++q) {
            out.conds.emplace_back(p, q);
            labels.push_back("(" + P0.label(p) + "," + P1.label(q) + ")");
        }
    const int N = static_cast<int>(out.conds.size());
    std::vector<Bits> below(N, Bits(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (P0.leq(out.conds[j].first, out.conds[i].first) && P1.leq(out.conds[j].second, out.conds[i].second))
                below[i].set(j);
    auto Q = std::make_shared<const Poset>(Poset::from_below(labels, below, out.cond_index(P0.top(), P1.top())));
    std::vector<Perm> perms;
    for (int a = 0; a < S0.group().order(); ++a)
        for (int b = 0; b < S1.group().order(); ++b) {
            Perm pi(N);
            for (int i = 0; i < N; ++i)
                pi[i] = out.cond_index(S0.act_cond(a, out.conds[i].first), S1.act_cond(b, out.conds[i].second));
            perms.push_back(pi);
        }
    auto G = std::make_shared<const Group>(Group::from_elements(N, perms));
    auto gens0 = S0.filter().generators(), gens1 = S1.filter().generators();
    if (gens0.empty()) gens0.push_back(S0.group().all());
    if (gens1.empty()) gens1.push_back(S1.group().all());
    std::vector<Bits> gens;
    for (const Bits& H0 : gens0)
        for (const Bits& H1 : gens1) {
            Bits H(G->order());
            for (int a = 0; a < S0.group().order(); ++a)
                for (int b = 0; b < S1.group().order(); ++b)
                    if (H0.test(a) && H1.test(b)) H.set(G->index_of(perms[a * S1.group().order() + b]));
            gens.push_back(H);
        }
    std::string name = S0.name().empty() || S1.name().empty() ? "" : S0.name() + "x" + S1.name();
    out.system = SymSystem(Q, G, gens, name);
    return out;
}

std::vector<std::uint64_t> full_ideal(int length) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << length); ++m) out.push_back(m);
    return out;
}

namespace {

int seq_element(const FiniteIteration& I, int stage, const std::vector<int>& seq) {
    if (stage == 0) return seq.at(0);
    const TwoStep& T = I.steps.at(stage - 1);
    std::vector<int> prefix(seq.begin(), seq.end() - 1);
    PairAut a{seq_element(I, stage - 1, prefix), T.witness.group.at(seq.back())};
    return T.pair_element.at(T.pair_index(a));
}

int group_vector_index(const TwoStep& T, const std::vector<int>& g) {
    auto it = std::find(T.witness.group.begin(), T.witness.group.end(), g);
    if (it == T.witness.group.end()) throw std::logic_error("group vector not named");
    return static_cast<int>(it - T.witness.group.begin());
}

}  // namespace

FiniteIteration finite_iteration(const std::vector<SymSystem>& ground, const std::vector<std::uint64_t>& ideal) {
    if (ground.empty()) throw PreconditionError("iteration needs at least one stage");
    const int len = static_cast<int>(ground.size());
    if (len > 16) throw GuardExceeded("iteration length");
    std::set<std::uint64_t> want(ideal.begin(), ideal.end());
    for (int a = 0; a < len; ++a)
        if (!want.count(std::uint64_t{1} << a)) throw PreconditionError("ideal must contain every singleton");
    auto full = full_ideal(len);
    if (want != std::set<std::uint64_t>(full.begin(), full.end()))
        throw PreconditionError("finite iterations require the full power set as ideal");
    FiniteIteration I;
    I.ideal = full;
    IterationStage s0;
    s0.system = ground[0];
    for (int p = 0; p < ground[0].poset().size(); ++p) s0.cond_seq.push_back({p});
    for (int g = 0; g < ground[0].group().order(); ++g) {
        s0.aut_seq.push_back({g});
        s0.aut_element.push_back(g);
    }
    I.stages.push_back(std::move(s0));
    for (int a = 1; a < len; ++a) {
        const IterationStage& prev = I.stages.back();
        TwoStep T = two_step(prev.system, check_stage(prev.system, ground[a]));
        IterationStage s;
        s.system = T.system;
        s.system.set_name("S" + std::to_string(a + 1));
        for (auto [p, v] : T.conds) {
            auto seq = prev.cond_seq[p];
            seq.push_back(v);
            s.cond_seq.push_back(seq);
        }
        for (std::size_t i = 0; i < prev.aut_seq.size(); ++i)
            for (std::size_t k = 0; k < T.witness.group.size(); ++k) {
                auto seq = prev.aut_seq[i];
                seq.push_back(static_cast<int>(k));
                PairAut pa{prev.aut_element[i], T.witness.group[k]};
                s.aut_seq.push_back(seq);
                s.aut_element.push_back(T.pair_element.at(T.pair_index(pa)));
            }
        for (int p = 0; p < prev.system.poset().size(); ++p) s.embed_prev.push_back(T.embed(p));
        I.steps.push_back(std::move(T));
        I.stages.push_back(std::move(s));
    }
    return I;
}

std::uint64_t cond_support(const FiniteIteration& I, int stage, int cond) {
    const auto& seq = I.stages.at(stage).cond_seq.at(cond);
    std::uint64_t out = 0;
    const Poset& P0 = I.stages[0].system.poset();
    if (!P0.equivalent(seq[0], P0.top())) out |= 1;
    for (int b = 1; b <= stage; ++b) {
        const TwoStep& T = I.steps[b - 1];
        const auto& f = T.witness.conds[seq[b]];
        for (std::size_t c = 0; c < f.size(); ++c) {
            const Poset& Q = T.stage.per_generic[c].poset();
            if (!Q.equivalent(f[c], Q.top())) {
                out |= std::uint64_t{1} << b;
                break;
            }
        }
    }
    return out;
}

std::uint64_t aut_support(const FiniteIteration& I, int stage, const std::vector<int>& seq) {
    std::uint64_t out = seq.at(0) != 0 ? 1 : 0;
    for (int b = 1; b <= stage; ++b) {
        const auto& g = I.steps[b - 1].witness.group[seq[b]];
        if (std::any_of(g.begin(), g.end(), [](int e) { return e != 0; })) out |= std::uint64_t{1} << b;
    }
    return out;
}

std::vector<int> compose_seq(const FiniteIteration& I, int stage, const std::vector<int>& a, const std::vector<int>& b) {
    if (stage == 0) return {I.stages[0].system.group().mul(a.at(0), b.at(0))};
    const TwoStep& T = I.steps.at(stage - 1);
    std::vector<int> pa(a.begin(), a.end() - 1), pb(b.begin(), b.end() - 1);
    auto out = compose_seq(I, stage - 1, pa, pb);
    PairAut x{seq_element(I, stage - 1, pa), T.witness.group[a.back()]};
    PairAut y{seq_element(I, stage - 1, pb), T.witness.group[b.back()]};
    out.push_back(group_vector_index(T, compose_pair(T, x, y).stage));
    return out;
}

std::vector<int> invert_seq(const FiniteIteration& I, int stage, const std::vector<int>& a) {
    if (stage == 0) return {I.stages[0].system.group().inv(a.at(0))};
    const TwoStep& T = I.steps.at(stage - 1);
    std::vector<int> pa(a.begin(), a.end() - 1);
    auto out = invert_seq(I, stage - 1, pa);
    PairAut x{seq_element(I, stage - 1, pa), T.witness.group[a.back()]};
    out.push_back(group_vector_index(T, invert_pair(T, x).stage));
    return out;
}

int act_seq(const FiniteIteration& I, int stage, const std::vector<int>& a, int cond) {
    return I.stages.at(stage).system.act_cond(seq_element(I, stage, a), cond);
}

int embed_stage(const FiniteIteration& I, int a, int b, int cond) {
    for (int s = a + 1; s <= b; ++s) cond = I.stages.at(s).embed_prev.at(cond);
    return cond;
}

}  // namespace symext
