#include "symext/equivalence.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>

#include "symext/guard.hpp"

namespace symext {

namespace {

constexpr std::size_t kInventoryCap = 300;

std::vector<Hf> values_of(const SymSystem& S, NameId x) { return S.forcer().values(x); }

bool member(const SymSystem& S, NameId x, NameClass cls, int k) {
    if (cls == NameClass::HS) return S.hs(x);
    return in_n_class(S, x, k);
}

// generic -> class, classes numbered by first generic
std::vector<int> reduce_generics(const SymSystem& S, NameClass cls, int k) {
    const int n = S.forcer().generic_count();
    std::vector<int> cls_of(n, -1);
    if (cls == NameClass::HS) {
        const auto& V = S.hs_vectors(k).vectors;
        std::map<std::vector<Hf>, int> seen;
        for (int g = 0; g < n; ++g) {
            std::vector<Hf> col;
            col.reserve(V.size());
            for (const auto& v : V) col.push_back(v[g]);
            auto [it, fresh] = seen.emplace(std::move(col), static_cast<int>(seen.size()));
            cls_of[g] = it->second;
        }
        return cls_of;
    }
    // N: generics agree on every vector only when their models are the same single value
    std::map<Hf, int> single;
    int next = 0;
    for (int g = 0; g < n; ++g) {
        auto M = model_values(S, g, k);
        if (M.size() == 1) {
            auto [it, fresh] = single.emplace(M[0], next);
            if (fresh) ++next;
            cls_of[g] = it->second;
        } else {
            cls_of[g] = next++;
        }
    }
    return cls_of;
}

std::vector<int> first_of_class(const std::vector<int>& cls_of) {
    int m = 0;
    for (int c : cls_of) m = std::max(m, c + 1);
    std::vector<int> rep(m, -1);
    for (int g = 0; g < static_cast<int>(cls_of.size()); ++g)
        if (rep[cls_of[g]] < 0) rep[cls_of[g]] = g;
    return rep;
}

std::set<std::vector<Hf>> reduced_vectors(const std::vector<std::vector<Hf>>& V, const std::vector<int>& rep) {
    std::set<std::vector<Hf>> out;
    for (const auto& v : V) {
        std::vector<Hf> r;
        for (int g : rep) r.push_back(v[g]);
        out.insert(std::move(r));
    }
    return out;
}

bool forced_equal(const SymSystem& S, NameId x, NameId y) {
    if (x == y) return true;
    auto a = values_of(S, x), b = values_of(S, y);
    return a == b;
}

// Transports names of one side to the other along a class bijection.
struct Transport {
    SymSystem from, to;
    NameClass cls;
    int k;
    std::vector<int> from_class, target_class;
    std::vector<int> map;  // class of from -> class of to
    std::map<std::vector<Hf>, NameId> to_witness;
    std::unordered_map<NameId, NameId> memo;

    NameId operator()(NameId x) {
        auto hit = memo.find(x);
        if (hit != memo.end()) return hit->second;
        auto vals = values_of(from, x);
        const int nt = to.forcer().generic_count();
        std::vector<std::optional<Hf>> per_class(map.size());
        for (std::size_t g = 0; g < vals.size(); ++g) {
            auto& slot = per_class[from_class[g]];
            if (slot && *slot != vals[g]) throw PreconditionError("name separates generics the class identifies");
            slot = vals[g];
        }
        std::vector<int> inv(map.size());
        for (std::size_t c = 0; c < map.size(); ++c) inv[map[c]] = static_cast<int>(c);
        std::vector<Hf> image(nt);
        for (int g = 0; g < nt; ++g) image[g] = *per_class[inv[target_class[g]]];
        NameId out;
        if (cls == NameClass::HS) {
            auto it = to_witness.find(image);
            if (it == to_witness.end()) throw PreconditionError("name outside the class fragment");
            out = it->second;
        } else {
            out = mixture_of_values(to.poset(), image);
        }
        memo.emplace(x, out);
        return out;
    }
};

}  // namespace

const char* class_text(NameClass c) { return c == NameClass::HS ? "HS" : "N"; }

WeakEquivalence weakly_equivalent(const SymSystem& S, const SymSystem& T, int k) {
    WeakEquivalence out;
    out.rank = k;
    const int ns = S.forcer().generic_count(), nt = T.forcer().generic_count();
    std::vector<std::vector<Hf>> ms, mt;
    for (int g = 0; g < ns; ++g) ms.push_back(model_values(S, g, k));
    for (int g = 0; g < nt; ++g) mt.push_back(model_values(T, g, k));
    out.s_to_t.assign(ns, -1);
    out.t_to_s.assign(nt, -1);
    for (int g = 0; g < ns; ++g)
        for (int h = 0; h < nt; ++h)
            if (ms[g] == mt[h]) {
                if (out.s_to_t[g] < 0) out.s_to_t[g] = h;
                if (out.t_to_s[h] < 0) out.t_to_s[h] = g;
            }
    out.equivalent = std::all_of(out.s_to_t.begin(), out.s_to_t.end(), [](int v) { return v >= 0; }) &&
                     std::all_of(out.t_to_s.begin(), out.t_to_s.end(), [](int v) { return v >= 0; });
    return out;
}

bool in_n_class(const SymSystem& S, NameId x, int k) {
    Forcer& f = S.forcer();
    for (int g = 0; g < f.generic_count(); ++g) {
        auto M = model_values(S, g, k);
        if (!std::binary_search(M.begin(), M.end(), f.value(x, g))) return false;
    }
    return true;
}

NameUniverse hr_class(const SymSystem& S, int k) {
    NameUniverse inv = fragment_inventory(S.poset(), k);
    NameUniverse out;
    out.rank = k;
    out.note = inv.note;
    for (NameId x : inv.names)
        if (is_HR(S, x)) out.names.push_back(x);
    return out;
}

NameUniverse n_class(const SymSystem& S, int k) {
    NameUniverse inv = fragment_inventory(S.poset(), k);
    NameUniverse out;
    out.rank = k;
    out.note = inv.note;
    for (NameId x : inv.names)
        if (in_n_class(S, x, k)) out.names.push_back(x);
    return out;
}

NameId mixture_of_values(const Poset& P, const std::vector<Hf>& values) {
    const auto& reps = P.minimal_reps();
    if (reps.size() != values.size()) throw PreconditionError("one value per generic expected");
    std::vector<NameEntry> e;
    for (std::size_t g = 0; g < reps.size(); ++g)
        for (Hf y : hf_members(values[g])) e.emplace_back(reps[g], check_name(P, y));
    return name_make(std::move(e));
}

ClassVectors class_vectors(const SymSystem& S, NameClass cls, int k) {
    if (cls == NameClass::HS) return S.hs_vectors(k);
    const int n = S.forcer().generic_count();
    std::vector<std::vector<Hf>> M;
    std::uint64_t total = 1;
    for (int g = 0; g < n; ++g) {
        M.push_back(model_values(S, g, k));
        total *= M.back().size();
        if (total > default_guards().max_names) throw GuardExceeded("N value vectors");
    }
    ClassVectors out;
    std::vector<std::size_t> idx(n, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<Hf> v(n);
        for (int g = 0; g < n; ++g) v[g] = M[g][idx[g]];
        out.witness.push_back(mixture_of_values(S.poset(), v));
        out.vectors.push_back(std::move(v));
        for (int g = n - 1; g >= 0; --g) {
            if (++idx[g] < M[g].size()) break;
            idx[g] = 0;
        }
    }
    return out;
}

std::uint64_t hs_vector_bound(const SymSystem& S, int k) {
    const int n = S.forcer().generic_count();
    std::vector<int> orbit_of(n, -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (orbit_of[g] >= 0) continue;
        for (int e = 0; e < S.group().order(); ++e)
            if (S.filter().core().test(e)) orbit_of[generic_permutation(S, e)[g]] = static_cast<int>(reps.size());
        reps.push_back(g);
    }
    std::uint64_t total = 1;
    for (int g : reps) {
        total *= S.model_sets(k).at(g).size();
        if (total > (std::uint64_t{1} << 40)) break;
    }
    return total;
}

std::vector<NameId> class_inventory(const SymSystem& S, NameClass cls, int k) {
    std::set<NameId> out;
    for (Hf v : hf_level(k)) out.insert(check_name(S.poset(), v));
    int j = k;
    while (j > 0 && hs_vector_bound(S, j) > kInventoryCap) --j;
    for (NameId x : S.hs_vectors(j).witness) out.insert(x);
    if (cls == NameClass::N) {
        int m = k;
        for (; m > 0; --m) {
            std::uint64_t total = 1;
            for (int g = 0; g < S.forcer().generic_count(); ++g) total *= model_values(S, g, m).size();
            if (total <= kInventoryCap) break;
        }
        for (NameId x : class_vectors(S, cls, m).witness) out.insert(x);
    }
    std::vector<NameId> v(out.begin(), out.end());
    sort_names(S.poset(), v);
    return v;
}

const std::vector<FormulaPtr>& transfer_shapes() {
    static const std::vector<FormulaPtr> shapes = [] {
        std::vector<FormulaPtr> s;
        for (const char* t : {"x0 in x1", "x0 = x1", "x0 sub x1", "exists v in x0 . v in x1",
                              "exists v in x0 . v = x1", "forall va in x0 . exists vb in x1 . va in vb",
                              "exists va in x0 . exists vb in va . vb = x1", "not x0 = x1 and x1 sub x0"})
            s.push_back(parse_formula(t));
        return s;
    }();
    return shapes;
}

Report validate_witness(const SymSystem& S, const SymSystem& T, const EquivalenceWitness& W) {
    Report r;
    const int k = W.rank;
    auto side = [&](const SymSystem& A, const SymSystem& B, const std::vector<NameId>& inv,
                    const std::function<NameId(NameId)>& fwd, const std::function<NameId(NameId)>& back,
                    const std::string& tag) {
        std::vector<NameId> image;
        for (NameId x : inv) {
            NameId y;
            try {
                y = fwd(x);
            } catch (const std::exception& e) {
                r.fail(tag + " undefined on " + name_to_string(A.poset(), x) + ": " + e.what());
                return;
            }
            image.push_back(y);
            if (!member(B, y, W.cls, k)) r.fail(tag + " leaves the class at " + name_to_string(A.poset(), x));
            NameId z;
            try {
                z = back(y);
            } catch (const std::exception& e) {
                r.fail(tag + " inverse undefined: " + e.what());
                return;
            }
            if (!forced_equal(A, z, x)) r.fail(tag + " round trip differs at " + name_to_string(A.poset(), x));
        }
        for (Hf v : hf_level(k)) {
            NameId c = check_name(A.poset(), v);
            if (!forced_equal(B, fwd(c), check_name(B.poset(), v)))
                r.fail(tag + " moves the check name of " + hf_to_string(v));
        }
        std::vector<std::vector<Hf>> va, vb;
        for (std::size_t j = 0; j < inv.size(); ++j) {
            va.push_back(values_of(A, inv[j]));
            vb.push_back(values_of(B, image[j]));
        }
        auto holds = [](const FormulaPtr& f, const std::vector<Hf>& a, const std::vector<Hf>& b) {
            for (std::size_t g = 0; g < a.size(); ++g)
                if (!eval(f, {a[g], b[g]})) return false;
            return true;
        };
        std::size_t bad = 0;
        for (const auto& f : transfer_shapes())
            for (std::size_t a = 0; a < inv.size(); ++a)
                for (std::size_t b = 0; b < inv.size(); ++b)
                    if (holds(f, va[a], va[b]) != holds(f, vb[a], vb[b]) && bad++ < 3)
                        r.fail(tag + " breaks transfer of " + to_string(f) + " at " +
                               name_to_string(A.poset(), inv[a]) + ", " + name_to_string(A.poset(), inv[b]));
    };
    side(S, T, W.inventory_s, W.i, W.istar, "i");
    side(T, S, W.inventory_t, W.istar, W.i, "i*");
    return r;
}

std::optional<EquivalenceWitness> find_equivalence(const SymSystem& S, const SymSystem& T, NameClass cls, int k) {
    auto cs = reduce_generics(S, cls, k), ct = reduce_generics(T, cls, k);
    auto rs = first_of_class(cs), rt = first_of_class(ct);
    if (rs.size() != rt.size()) return std::nullopt;
    const std::size_t m = rs.size();
    if (m > 9) throw GuardExceeded("generic classes");
    std::vector<std::vector<Hf>> ms, mt;
    for (int g : rs) ms.push_back(model_values(S, g, k));
    for (int g : rt) mt.push_back(model_values(T, g, k));
    std::set<std::vector<Hf>> VS, VT;
    if (cls == NameClass::HS) {
        VS = reduced_vectors(S.hs_vectors(k).vectors, rs);
        VT = reduced_vectors(T.hs_vectors(k).vectors, rt);
        if (VS.size() != VT.size()) return std::nullopt;
    }
    std::map<std::vector<Hf>, NameId> ws, wt;
    if (cls == NameClass::HS) {
        const auto& A = S.hs_vectors(k);
        for (std::size_t j = 0; j < A.vectors.size(); ++j) ws.emplace(A.vectors[j], A.witness[j]);
        const auto& B = T.hs_vectors(k);
        for (std::size_t j = 0; j < B.vectors.size(); ++j) wt.emplace(B.vectors[j], B.witness[j]);
    }
    auto inv_s = class_inventory(S, cls, k);
    auto inv_t = class_inventory(T, cls, k);

    std::vector<int> beta(m);
    for (std::size_t c = 0; c < m; ++c) beta[c] = static_cast<int>(c);
    do {
        bool ok = true;
        for (std::size_t c = 0; c < m && ok; ++c) ok = ms[c] == mt[beta[c]];
        if (!ok) continue;
        if (cls == NameClass::HS) {
            for (const auto& v : VS) {
                std::vector<Hf> u(m);
                for (std::size_t c = 0; c < m; ++c) u[beta[c]] = v[c];
                if (!VT.count(u)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        std::vector<int> back(m);
        for (std::size_t c = 0; c < m; ++c) back[beta[c]] = static_cast<int>(c);
        auto fwd = std::make_shared<Transport>();
        fwd->from = S;
        fwd->to = T;
        fwd->cls = cls;
        fwd->k = k;
        fwd->from_class = cs;
        fwd->map = beta;
        fwd->target_class = ct;
        fwd->to_witness = wt;
        auto bwd = std::make_shared<Transport>();
        bwd->from = T;
        bwd->to = S;
        bwd->cls = cls;
        bwd->k = k;
        bwd->from_class = ct;
        bwd->map = back;
        bwd->target_class = cs;
        bwd->to_witness = ws;

        EquivalenceWitness W;
        W.cls = cls;
        W.rank = k;
        W.i = [fwd](NameId x) { return (*fwd)(x); };
        W.istar = [bwd](NameId x) { return (*bwd)(x); };
        W.inventory_s = inv_s;
        W.inventory_t = inv_t;
        W.class_s = cs;
        W.class_t = ct;
        W.atom_map = beta;
        W.note = std::to_string(m) + " generic classes";
        if (validate_witness(S, T, W).ok) return W;
    } while (std::next_permutation(beta.begin(), beta.end()));
    return std::nullopt;
}

EquivalenceWitness lottery_witness(const SymSystem& L, const std::vector<Poset>& parts, const SymSystem& T, int k) {
    const Poset& P = T.poset();
    for (const auto& Q : parts)
        if (Q.size() != P.size()) throw PreconditionError("lottery parts must be copies of the target poset");
    const Poset& LP = L.poset();
    // condition of L -> condition of P (top -> top)
    auto down = std::make_shared<std::vector<int>>(LP.size(), P.top());
    for (std::size_t t = 0; t < parts.size(); ++t)
        for (int p = 0; p < P.size(); ++p) (*down)[lottery_index(parts, static_cast<int>(t), p)] = p;
    const int tags = static_cast<int>(parts.size());

    auto i_memo = std::make_shared<std::unordered_map<NameId, NameId>>();
    auto is_memo = std::make_shared<std::unordered_map<NameId, NameId>>();
    auto i_fn = std::make_shared<std::function<NameId(NameId)>>();
    auto is_fn = std::make_shared<std::function<NameId(NameId)>>();
    std::weak_ptr<std::function<NameId(NameId)>> i_self = i_fn, is_self = is_fn;
    *i_fn = [down, i_memo, i_self](NameId x) -> NameId {
        auto hit = i_memo->find(x);
        if (hit != i_memo->end()) return hit->second;
        auto self = i_self.lock();
        std::vector<NameEntry> e;
        for (const auto& [p, y] : name_entries(x)) e.emplace_back((*down)[p], (*self)(y));
        NameId out = name_make(std::move(e));
        i_memo->emplace(x, out);
        return out;
    };
    std::vector<Poset> parts_copy = parts;
    *is_fn = [parts_copy, tags, is_memo, is_self](NameId x) -> NameId {
        auto hit = is_memo->find(x);
        if (hit != is_memo->end()) return hit->second;
        auto self = is_self.lock();
        std::vector<NameEntry> e;
        for (const auto& [p, y] : name_entries(x)) {
            NameId z = (*self)(y);
            for (int t = 0; t < tags; ++t) e.emplace_back(lottery_index(parts_copy, t, p), z);
        }
        NameId out = name_make(std::move(e));
        is_memo->emplace(x, out);
        return out;
    };
    EquivalenceWitness W;
    W.cls = NameClass::HS;
    W.rank = k;
    W.i = [i_fn](NameId x) { return (*i_fn)(x); };
    W.istar = [is_fn](NameId x) { return (*is_fn)(x); };
    W.inventory_s = class_inventory(L, NameClass::HS, k);
    W.inventory_t = class_inventory(T, NameClass::HS, k);
    W.note = "lottery maps";
    return W;
}

EquivalenceWitness completion_witness(const SymSystem& S, const CompletedSystem& C, int k) {
    auto Cp = std::make_shared<CompletedSystem>(C);
    auto P = S.poset_ptr();
    EquivalenceWitness W;
    W.cls = NameClass::HS;
    W.rank = k;
    W.i = [Cp](NameId x) { return lift_name(*Cp, x); };
    W.istar = [Cp, P](NameId x) { return lower_name(*Cp, *P, x); };
    W.inventory_s = class_inventory(S, NameClass::HS, k);
    W.inventory_t = class_inventory(C.system, NameClass::HS, k);
    W.note = "completion maps";
    return W;
}

}  // namespace symext
