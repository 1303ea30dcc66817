#include "symext/system.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "symext/guard.hpp"

namespace symext {

struct SymSystem::Cache {
    std::unique_ptr<Forcer> forcer;
    std::mutex mu;
    std::vector<std::unique_ptr<NameAction>> actions;
    std::unordered_map<NameId, Bits> sym;
    std::unordered_map<NameId, bool> hs;
    std::map<int, std::unique_ptr<ClassVectors>> vectors;
    std::map<int, std::vector<std::vector<Hf>>> models;
    std::recursive_mutex vec_mu;
};

SymSystem::SymSystem(std::shared_ptr<const Poset> P, GroupPtr G, std::vector<Bits> filter_gens, std::string name)
    : P_(std::move(P)), G_(std::move(G)), name_(std::move(name)) {
    if (G_->degree() != P_->size()) throw std::invalid_argument("group degree does not match the poset");
    F_ = NormalFilter(G_, std::move(filter_gens));
    cache_ = std::make_shared<Cache>();
    cache_->forcer = std::make_unique<Forcer>(P_);
    for (const Perm& p : G_->elements()) cache_->actions.push_back(std::make_unique<NameAction>(p));
}

SymSystem::SymSystem(Poset P, Group G, std::vector<Bits> filter_gens, std::string name)
    : SymSystem(std::make_shared<const Poset>(std::move(P)), std::make_shared<const Group>(std::move(G)),
                std::move(filter_gens), std::move(name)) {}

Forcer& SymSystem::forcer() const { return *cache_->forcer; }

NameId SymSystem::act(int g, NameId x) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return (*cache_->actions.at(g))(x);
}

Bits SymSystem::sym(NameId x) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->sym.find(x);
        if (it != cache_->sym.end()) return it->second;
    }
    Bits out(G_->order());
    for (int g = 0; g < G_->order(); ++g)
        if (act(g, x) == x) out.set(g);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->sym.emplace(x, out);
    return out;
}

bool SymSystem::hs(NameId x) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->hs.find(x);
        if (it != cache_->hs.end()) return it->second;
    }
    bool ok = F_.core().is_subset_of(sym(x));
    if (ok) {
        for (auto [p, y] : name_entries(x))
            if (!hs(y)) {
                ok = false;
                break;
            }
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->hs.emplace(x, ok);
    return ok;
}

std::vector<int> generic_permutation(const SymSystem& S, int g) {
    const Poset& P = S.poset();
    std::vector<int> out;
    for (int m : P.minimal_reps()) out.push_back(P.minimal_class(S.act_cond(g, m)));
    return out;
}

namespace {

// One orbit name per (condition, vector of the previous level), keyed by its value vector.
std::map<std::vector<Hf>, NameId> orbit_contributions(const SymSystem& S, const ClassVectors& prev,
                                                      const std::vector<int>& core) {
    Forcer& f = S.forcer();
    const int n = f.generic_count();
    std::map<std::vector<Hf>, NameId> contrib;
    for (int p = 0; p < S.poset().size(); ++p)
        for (NameId y : prev.witness) {
            std::vector<NameEntry> e;
            for (int g : core) e.emplace_back(S.act_cond(g, p), S.act(g, y));
            NameId orbit = name_make(std::move(e));
            std::vector<Hf> val(n);
            for (int g = 0; g < n; ++g) val[g] = f.value(orbit, g);
            contrib.emplace(std::move(val), orbit);
        }
    return contrib;
}

}  // namespace

const ClassVectors& SymSystem::hs_vectors(int k) const {
    std::lock_guard<std::recursive_mutex> lock(cache_->vec_mu);
    auto it = cache_->vectors.find(k);
    if (it != cache_->vectors.end()) return *it->second;
    if (k > default_guards().max_rank) throw GuardExceeded("rank bound");
    const int n = forcer().generic_count();
    auto out = std::make_unique<ClassVectors>();
    if (k == 0) {
        out->vectors.push_back(std::vector<Hf>(n, hf_empty()));
        out->witness.push_back(empty_name());
    } else {
        const ClassVectors& prev = hs_vectors(k - 1);
        auto contrib = orbit_contributions(*this, prev, members_of(F_.core()));
        std::map<std::vector<Hf>, NameId> next{{std::vector<Hf>(n, hf_empty()), empty_name()}};
        for (const auto& [cv, cn] : contrib) {
            std::vector<std::pair<std::vector<Hf>, NameId>> add;
            for (const auto& [w, wn] : next) {
                std::vector<Hf> u(n);
                for (int g = 0; g < n; ++g) u[g] = hf_union(w[g], cv[g]);
                if (next.count(u)) continue;
                std::vector<NameEntry> e = name_entries(wn);
                const auto& ce = name_entries(cn);
                e.insert(e.end(), ce.begin(), ce.end());
                add.emplace_back(std::move(u), name_make(std::move(e)));
            }
            for (auto& [u, nm] : add) next.emplace(std::move(u), nm);
            if (next.size() > default_guards().max_names) throw GuardExceeded("HS value vectors");
        }
        for (const auto& [v, nm] : next) {
            out->vectors.push_back(v);
            out->witness.push_back(nm);
        }
    }
    auto& slot = cache_->vectors[k];
    slot = std::move(out);
    return *slot;
}

const std::vector<std::vector<Hf>>& SymSystem::model_sets(int k) const {
    std::lock_guard<std::recursive_mutex> lock(cache_->vec_mu);
    auto it = cache_->models.find(k);
    if (it != cache_->models.end()) return it->second;
    const int n = forcer().generic_count();
    std::vector<std::set<Hf>> sets(n, std::set<Hf>{hf_empty()});
    if (k > 0) {
        auto contrib = orbit_contributions(*this, hs_vectors(k - 1), members_of(F_.core()));
        for (int g = 0; g < n; ++g) {
            std::set<Hf> parts;
            for (const auto& [cv, cn] : contrib) parts.insert(cv[g]);
            for (Hf c : parts) {
                std::vector<Hf> add;
                for (Hf w : sets[g]) add.push_back(hf_union(w, c));
                sets[g].insert(add.begin(), add.end());
            }
        }
    }
    std::vector<std::vector<Hf>> out;
    for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
    return cache_->models.emplace(k, std::move(out)).first->second;
}

Report validate(const SymSystem& S) {
    Report r;
    const Poset& P = S.poset();
    for (int g = 0; g < S.group().order(); ++g) {
        const Perm& pi = S.group().element(g);
        if (pi[P.top()] != P.top()) r.fail("group element " + perm_to_string(P, pi) + " moves the top");
        if (!is_automorphism(P, pi)) r.fail("group element " + perm_to_string(P, pi) + " is not an automorphism");
    }
    if (!is_normal_filter(S.filter())) r.fail("filter generators are not closed under conjugation");
    return r;
}

Bits fix_group(const SymSystem& S, int p) {
    S.poset().check_condition(p);
    Bits out(S.group().order());
    for (int g = 0; g < S.group().order(); ++g)
        if (S.act_cond(g, p) == p) out.set(g);
    return out;
}

Bits sym_group(const SymSystem& S, NameId x) { return S.sym(x); }

Bits res_group(const SymSystem& S, NameId x) {
    Bits out(S.group().order());
    Forcer& f = S.forcer();
    const int top = S.poset().top();
    for (int g = 0; g < S.group().order(); ++g) {
        NameId y = S.act(g, x);
        bool fixed = S.poset().size() <= 64 ? f.forces(top, Rel::Eq, y, x) : f.semantic_forces(top, Rel::Eq, y, x);
        if (fixed) out.set(g);
    }
    return out;
}

bool is_HS(const SymSystem& S, NameId x) { return S.hs(x); }

bool is_HR(const SymSystem& S, NameId x) {
    if (!S.filter().core().is_subset_of(res_group(S, x))) return false;
    for (auto [p, y] : name_entries(x))
        if (!is_HR(S, y)) return false;
    return true;
}

namespace {

// Orbits of the filter core on a finite set of (condition, name) pairs.
std::vector<std::vector<NameEntry>> core_orbits(const SymSystem& S, const std::vector<NameEntry>& pool) {
    std::set<NameEntry> left(pool.begin(), pool.end());
    std::vector<int> core = members_of(S.filter().core());
    std::vector<std::vector<NameEntry>> out;
    for (const NameEntry& e : pool) {
        if (!left.count(e)) continue;
        std::set<NameEntry> orbit;
        for (int g : core) orbit.insert({S.act_cond(g, e.first), S.act(g, e.second)});
        for (const auto& o : orbit) left.erase(o);
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

Bits forced_set(const SymSystem& S, Rel r, NameId x, NameId y) { return S.forcer().semantic_set(r, x, y); }

bool forced_everywhere(const SymSystem& S, Rel r, NameId x, NameId y) {
    return S.forcer().semantic_forces(S.poset().top(), r, x, y);
}

}  // namespace

NameUniverse enumerate_HS(const SymSystem& S, int k) {
    const Guards& g = default_guards();
    if (k > g.max_rank) throw GuardExceeded("rank bound");
    std::vector<NameId> level{empty_name()};
    for (int j = 0; j < k; ++j) {
        std::vector<NameEntry> pool;
        for (int p = 0; p < S.poset().size(); ++p)
            for (NameId y : level) pool.emplace_back(p, y);
        auto orbits = core_orbits(S, pool);
        if (orbits.size() >= 63 || (std::uint64_t{1} << orbits.size()) > g.max_names)
            throw GuardExceeded("HS universe size");
        std::vector<NameId> next;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
            std::vector<NameEntry> e;
            for (std::size_t b = 0; b < orbits.size(); ++b)
                if (mask >> b & 1) e.insert(e.end(), orbits[b].begin(), orbits[b].end());
            next.push_back(name_make(std::move(e)));
        }
        level = std::move(next);
    }
    sort_names(S.poset(), level);
    NameUniverse U;
    U.names = std::move(level);
    U.rank = k;
    U.hs = true;
    U.note = "complete";
    return U;
}

bool sym_forces(const SymSystem& S, int p, const FormulaPtr& f, const std::vector<NameId>& args) {
    for (NameId a : args)
        if (!S.hs(a)) throw PreconditionError("argument " + name_to_string(S.poset(), a) + " is not HS");
    return S.forcer().forces_formula(p, f, args);
}

std::vector<Bits> symmetrically_dense_sets(const SymSystem& S) {
    const Poset& P = S.poset();
    std::vector<int> core = members_of(S.filter().core());
    std::vector<Bits> orbits;
    Bits seen(P.size());
    for (int p = 0; p < P.size(); ++p) {
        if (seen.test(p)) continue;
        Bits o(P.size());
        for (int g : core) o.set(S.act_cond(g, p));
        seen |= o;
        orbits.push_back(o);
    }
    if (orbits.size() >= 63 || (std::uint64_t{1} << orbits.size()) > default_guards().max_names)
        throw GuardExceeded("symmetrically dense family");
    std::vector<Bits> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
        Bits D(P.size());
        for (std::size_t b = 0; b < orbits.size(); ++b)
            if (mask >> b & 1) D |= orbits[b];
        if (P.is_dense(D)) out.push_back(D);
    }
    std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) { return members_of(a) < members_of(b); });
    return out;
}

std::vector<GenericFilter> enumerate_symmetric_generics(const SymSystem& S) {
    const Poset& P = S.poset();
    auto dense = symmetrically_dense_sets(S);
    std::vector<GenericFilter> out;
    std::set<std::vector<int>> seen;
    for (int p = 0; p < P.size(); ++p) {
        const Bits& cone = P.up(p);
        if (!seen.insert(members_of(cone)).second) continue;
        bool generic = std::all_of(dense.begin(), dense.end(), [&](const Bits& D) { return cone.intersects(D); });
        if (generic) out.push_back({cone, p, true});
    }
    return out;
}

NameId closure_at(const SymSystem& S, NameId x, int alpha) {
    auto hs = enumerate_HS(S, alpha);
    std::vector<NameEntry> e;
    for (NameId y : hs.names) for_each_bit(forced_set(S, Rel::In, y, x), [&](int p) { e.emplace_back(p, y); });
    return name_make(std::move(e));
}

int closure_level(const SymSystem& S, NameId x, int k) {
    if (!S.hs(x)) throw PreconditionError("closure needs an HS name");
    for (int alpha = 0; alpha <= k; ++alpha)
        if (forced_everywhere(S, Rel::Eq, x, closure_at(S, x, alpha))) return alpha;
    throw PreconditionError("no adequate rank up to " + std::to_string(k));
}

NameId closure(const SymSystem& S, NameId x, int k) { return closure_at(S, x, closure_level(S, x, k)); }

std::string result_variable(const FormulaPtr& phi) {
    auto fv = free_vars(phi);
    if (fv.size() != 1) throw PreconditionError("formula must have exactly one free variable");
    return *fv.begin();
}

std::vector<Hf> model_values(const SymSystem& S, int g, int k) { return S.model_sets(k).at(g); }

NameId definable_name(const SymSystem& S, const FormulaPtr& phi, const std::vector<NameId>& args, int k) {
    std::string r = result_variable(phi);
    for (NameId a : args)
        if (!S.hs(a)) throw PreconditionError("argument " + name_to_string(S.poset(), a) + " is not HS");
    Forcer& f = S.forcer();
    std::vector<Hf> target;
    for (int g = 0; g < f.generic_count(); ++g) {
        std::vector<Hf> vals;
        for (NameId a : args) vals.push_back(f.value(a, g));
        std::vector<Hf> sols;
        for (Hf v : model_values(S, g, k))
            if (eval(phi, vals, {{r, v}})) sols.push_back(v);
        if (sols.size() != 1)
            throw PreconditionError(sols.empty() ? "no solution within the rank bound" : "solution is not unique");
        target.push_back(sols[0]);
    }
    for (int alpha = 0; alpha <= k; ++alpha) {
        auto hs = enumerate_HS(S, alpha);
        std::vector<NameEntry> e;
        for (NameId z : hs.names) {
            for (int p = 0; p < S.poset().size(); ++p) {
                bool all = true;
                for (int g : f.generics_through(p)) all = all && hf_contains(target[g], f.value(z, g));
                if (all) e.emplace_back(p, z);
            }
        }
        NameId y = name_make(std::move(e));
        bool ok = true;
        for (int g = 0; g < f.generic_count() && ok; ++g) ok = f.value(y, g) == target[g];
        if (ok) return y;
    }
    throw PreconditionError("rank bound insufficient for the defined object");
}

NameId mix_names(const SymSystem& S, int p, NameId x, NameId z, const FormulaPtr& chi,
                 const std::vector<NameId>& args, int k) {
    std::string r = result_variable(chi);
    const int n = static_cast<int>(args.size());
    Term X = Term::make_slot(n), Z = Term::make_slot(n + 1);
    FormulaPtr chiX = substitute(chi, r, X);
    std::vector<NameId> ax = args, az = args;
    ax.push_back(x);
    az.push_back(z);
    if (!sym_forces(S, p, substitute(chi, r, Term::make_slot(n)), ax))
        throw PreconditionError("p does not force chi(x)");
    if (!sym_forces(S, S.poset().top(), substitute(chi, r, Term::make_slot(n)), az))
        throw PreconditionError("1 does not force chi(z)");
    Term R = Term::make_var(r);
    FormulaPtr phi = f_bin(Formula::Or, f_bin(Formula::And, chiX, f_atom(Formula::Eq, R, X)),
                           f_bin(Formula::And, f_not(chiX), f_atom(Formula::Eq, R, Z)));
    std::vector<NameId> all = args;
    all.push_back(x);
    all.push_back(z);
    return definable_name(S, phi, all, k);
}

NameId hr_to_hs(const SymSystem& S, NameId x) {
    if (!is_HR(S, x)) throw PreconditionError("name is not hereditarily respected");
    std::map<NameId, NameId> memo;
    std::function<NameId(NameId)> rec = [&](NameId y) -> NameId {
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        std::vector<NameEntry> inner;
        for (auto [p, z] : name_entries(y)) inner.emplace_back(p, rec(z));
        NameId base = name_make(inner);
        std::vector<NameEntry> e;
        for_each_bit(res_group(S, y), [&](int g) {
            for (auto entry : name_entries(S.act(g, base))) e.push_back(entry);
        });
        NameId out = name_make(std::move(e));
        memo.emplace(y, out);
        return out;
    };
    return rec(x);
}

bool is_tenacious(const SymSystem& S) {
    Bits D(S.poset().size());
    for (int p = 0; p < S.poset().size(); ++p)
        if (S.filter().contains(fix_group(S, p))) D.set(p);
    return S.poset().is_dense(D);
}

CompletedSystem boolean_completion_system(const SymSystem& S) {
    const Poset& P = S.poset();
    CompletedSystem C;
    C.algebra = boolean_completion(P);
    const BooleanAlgebra& B = C.algebra;
    C.element_of = B.nonzero_elements();
    std::vector<int> cond_of(B.size(), -1);
    for (int i = 0; i < static_cast<int>(C.element_of.size()); ++i) cond_of[C.element_of[i]] = i;
    auto Bp = std::make_shared<const Poset>(B.nonzero_poset(P));
    std::vector<Perm> lifted;
    for (const Perm& pi : S.group().elements()) {
        Perm q(Bp->size());
        for (int i = 0; i < Bp->size(); ++i) {
            Bits img(P.size());
            for_each_bit(B.elements[C.element_of[i]], [&](int p) { img.set(pi[p]); });
            int e = B.index_of(img);
            if (e < 0) throw std::logic_error("automorphism does not preserve regular open sets");
            q[i] = cond_of[e];
        }
        lifted.push_back(q);
    }
    auto G = std::make_shared<const Group>(Group::from_elements(Bp->size(), lifted));
    std::vector<Bits> gens;
    for (const Bits& H : S.filter().generators()) {
        Bits img(G->order());
        for_each_bit(H, [&](int g) { img.set(G->index_of(lifted[g])); });
        gens.push_back(img);
    }
    C.system = SymSystem(Bp, G, gens, S.name().empty() ? "" : "B(" + S.name() + ")");
    for (int p = 0; p < P.size(); ++p) C.embed.push_back(cond_of[B.embedding[p]]);
    return C;
}

NameId lift_name(const CompletedSystem& C, NameId x) {
    std::vector<NameEntry> e;
    for (auto [p, y] : name_entries(x)) e.emplace_back(C.embed.at(p), lift_name(C, y));
    return name_make(std::move(e));
}

NameId lower_name(const CompletedSystem& C, const Poset& P, NameId x) {
    std::vector<NameEntry> e;
    const Poset& Bp = C.system.poset();
    for (auto [q, y] : name_entries(x)) {
        NameId ly = lower_name(C, P, y);
        for (int p = 0; p < P.size(); ++p)
            if (Bp.leq(C.embed[p], q)) e.emplace_back(p, ly);
    }
    return name_make(std::move(e));
}

TenaciousEquivalent tenacious_equivalent(const CompletedSystem& C) {
    const SymSystem& S = C.system;
    const Poset& P = S.poset();
    TenaciousEquivalent T;
    for (int p = 0; p < P.size(); ++p)
        if (S.filter().contains(fix_group(S, p))) T.included.push_back(p);
    std::vector<int> pos(P.size(), -1);
    for (int i = 0; i < static_cast<int>(T.included.size()); ++i) pos[T.included[i]] = i;
    const int n = static_cast<int>(T.included.size());
    std::vector<std::string> labels;
    std::vector<Bits> below(n, Bits(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back(P.label(T.included[i]));
        for (int j = 0; j < n; ++j)
            if (P.leq(T.included[j], T.included[i])) below[i].set(j);
    }
    auto Q = std::make_shared<const Poset>(Poset::from_below(labels, below, pos[P.top()]));
    std::vector<Perm> restricted;
    for (const Perm& pi : S.group().elements()) {
        Perm r(n);
        for (int i = 0; i < n; ++i) {
            int img = pos[pi[T.included[i]]];
            if (img < 0) throw std::logic_error("tenacious part is not closed under the group");
            r[i] = img;
        }
        restricted.push_back(r);
    }
    auto G = std::make_shared<const Group>(Group::from_elements(n, restricted));
    std::vector<Bits> gens;
    for (const Bits& H : S.filter().generators()) {
        Bits img(G->order());
        for_each_bit(H, [&](int g) { img.set(G->index_of(restricted[g])); });
        gens.push_back(img);
    }
    T.system = SymSystem(Q, G, gens, S.name().empty() ? "" : "ten(" + S.name() + ")");
    return T;
}

OrbitSystem orbit_system(std::shared_ptr<const Poset> P, ClassName X) {
    const Guards& guard = default_guards();
    auto auts = poset_automorphisms(*P, static_cast<std::size_t>(guard.max_group) + 1);
    if (static_cast<int>(auts.size()) > guard.max_group) throw GuardExceeded("automorphism group order");
    Forcer f(P);
    const int ng = f.generic_count();
    std::vector<Perm> keep;
    OrbitSystem O;
    for (std::size_t a = 0; a < auts.size(); ++a) {
        NameId y = symext::apply(auts[a], X);
        bool same = true;
        for (int g = 0; g < ng && same; ++g) same = f.value(y, g) == f.value(X, g);
        if (same) {
            keep.push_back(auts[a]);
            O.aut_index.push_back(static_cast<int>(a));
        }
    }
    auto G = std::make_shared<const Group>(Group::from_elements(P->size(), keep));
    // Names forced into X: one mixture over the minimal elements per selector g -> X^g.
    std::vector<std::vector<Hf>> choices;
    std::uint64_t total = 1;
    for (int g = 0; g < ng; ++g) {
        choices.push_back(hf_members(f.value(X, g)));
        total *= choices.back().size();
        if (total > guard.max_names) throw GuardExceeded("selector count");
    }
    std::set<std::vector<int>> gens_seen;
    std::vector<Bits> gens;
    std::vector<std::size_t> idx(ng, 0);
    O.selectors = 0;
    if (total > 0) {
        for (;;) {
            std::vector<NameEntry> e;
            for (int m : P->minimal()) {
                int g = P->minimal_class(m);
                for (Hf y : hf_members(choices[g][idx[g]])) e.emplace_back(m, check_name(*P, y));
            }
            NameId x = name_make(std::move(e));
            Bits res(G->order());
            for (int h = 0; h < G->order(); ++h) {
                NameId y = symext::apply(G->element(h), x);
                bool same = true;
                for (int g = 0; g < ng && same; ++g) same = f.value(y, g) == f.value(x, g);
                if (same) res.set(h);
            }
            if (gens_seen.insert(members_of(res)).second) gens.push_back(res);
            ++O.selectors;
            int k = 0;
            while (k < ng && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == ng) break;
        }
    }
    std::sort(gens.begin(), gens.end(), [](const Bits& a, const Bits& b) { return members_of(a) < members_of(b); });
    O.system = SymSystem(P, G, gens, "O");
    return O;
}

namespace {

std::vector<Perm> stabilizing(const Poset& P, NameId x) {
    auto Pp = std::make_shared<const Poset>(P);
    Forcer f(Pp);
    std::vector<Perm> out;
    for (const Perm& pi : poset_automorphisms(P, static_cast<std::size_t>(default_guards().max_group) + 1)) {
        NameId y = symext::apply(pi, x);
        bool same = true;
        for (int g = 0; g < f.generic_count() && same; ++g) same = f.value(y, g) == f.value(x, g);
        if (same) out.push_back(pi);
    }
    return out;
}

}  // namespace

bool reflects(const Poset& P, ClassName X, NameId x) { return stabilizing(P, X) == stabilizing(P, x); }

bool self_reflects(const Poset& P, ClassName X, NameId x) {
    if (!reflects(P, X, x)) return false;
    Forcer f(std::make_shared<const Poset>(P));
    return f.semantic_forces(P.top(), Rel::In, x, X);
}

NameUniverse fragment_inventory(const Poset& P, int k) {
    try {
        return all_names(P, k);
    } catch (const GuardExceeded&) {
    }
    std::vector<int> widths;
    std::uint64_t count = 1;
    for (int j = 0; j < k; ++j) {
        std::uint64_t pool = static_cast<std::uint64_t>(P.size()) * count;
        if (j + 1 < k && pool < 20) {
            widths.push_back(static_cast<int>(pool));
            count = std::uint64_t{1} << pool;
        } else {
            int w = pool <= 64 ? 2 : 1;
            widths.push_back(w);
            count = 1 + pool + (w == 2 ? pool * (pool - 1) / 2 : 0);
        }
    }
    return bounded_names(P, widths);
}

Completion completion(const SymSystem& S, int k) {
    Completion out;
    out.rank = k;
    out.base = boolean_completion_system(S);
    Forcer& f = S.forcer();
    std::vector<std::vector<Hf>> models;
    for (int g = 0; g < f.generic_count(); ++g) models.push_back(model_values(S, g, k));
    std::vector<NameId> members;
    for (NameId x : fragment_inventory(S.poset(), k).names) {
        bool in = true;
        for (int g = 0; g < f.generic_count() && in; ++g)
            in = std::binary_search(models[g].begin(), models[g].end(), f.value(x, g));
        if (in) members.push_back(lift_name(out.base, x));
    }
    for (Hf v : hf_level(k + 1)) members.push_back(lift_name(out.base, check_name(S.poset(), v)));
    out.fragment_size = members.size();
    NameId X = bullet_name(out.base.system.poset(), members);
    out.orbit = orbit_system(out.base.system.poset_ptr(), X);
    out.orbit.system.set_name(S.name().empty() ? "" : "hat(" + S.name() + ")");
    return out;
}

std::optional<NameId> find_mixing_witness(const SymSystem& S, int p, const FormulaPtr& phi,
                                          const std::vector<NameId>& args, const std::vector<NameId>& candidates) {
    std::string r = result_variable(phi);
    FormulaPtr slotted = substitute(phi, r, Term::make_slot(static_cast<int>(args.size())));
    for (NameId c : candidates) {
        if (!S.hs(c)) continue;
        std::vector<NameId> a = args;
        a.push_back(c);
        if (S.forcer().forces_formula(p, slotted, a)) return c;
    }
    return std::nullopt;
}

bool exists_satisfiable(const SymSystem& S, int p, const FormulaPtr& phi, const std::vector<NameId>& args, int k) {
    std::string r = result_variable(phi);
    Forcer& f = S.forcer();
    for (int g : f.generics_through(p)) {
        std::vector<Hf> vals;
        for (NameId a : args) vals.push_back(f.value(a, g));
        bool found = false;
        for (Hf v : model_values(S, g, k))
            if (eval(phi, vals, {{r, v}})) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace symext
