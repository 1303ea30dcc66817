#pragma once
// Brute-force reference implementations used by the tests. Nothing here calls
// into the library's forcing or set machinery; posets are read through leq only.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symext/name.hpp"
#include "symext/order.hpp"

namespace oracle {

// Hereditarily finite set as a plain recursive value.
struct Set {
    std::set<Set> m;
    bool operator<(const Set& o) const { return m < o.m; }
    bool operator==(const Set& o) const { return m == o.m; }
};

inline Set empty() { return {}; }
inline Set single(const Set& a) { return Set{{a}}; }
inline bool member(const Set& x, const Set& s) { return s.m.count(x) > 0; }
inline bool subset(const Set& a, const Set& b) {
    for (const auto& x : a.m)
        if (!member(x, b)) return false;
    return true;
}

inline std::string text(const Set& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s.m) {
        if (!first) out += ",";
        first = false;
        out += text(x);
    }
    return out + "}";
}

inline Set ordinal(int n) {
    Set s;
    for (int i = 0; i < n; ++i) s.m.insert(ordinal(i));
    return s;
}

// x^G by recursion on the raw entries.
inline Set interpret(symext::NameId x, const std::vector<bool>& G) {
    Set out;
    for (const auto& [p, y] : symext::name_entries(x))
        if (G[p]) out.m.insert(interpret(y, G));
    return out;
}

inline bool dense(const symext::Poset& P, const std::vector<bool>& D) {
    for (int p = 0; p < P.size(); ++p) {
        bool hit = false;
        for (int d = 0; d < P.size() && !hit; ++d) hit = D[d] && P.leq(d, p);
        if (!hit) return false;
    }
    return true;
}

// Every filter meeting every dense set, found by scanning all subsets.
inline std::vector<std::vector<bool>> generics(const symext::Poset& P) {
    const int n = P.size();
    std::vector<std::vector<bool>> dense_sets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<bool> D(n);
        for (int i = 0; i < n; ++i) D[i] = mask >> i & 1;
        if (dense(P, D)) dense_sets.push_back(D);
    }
    std::vector<std::vector<bool>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<bool> G(n);
        for (int i = 0; i < n; ++i) G[i] = mask >> i & 1;
        bool ok = true;
        for (int p = 0; p < n && ok; ++p)
            for (int q = 0; q < n && ok; ++q) {
                if (G[p] && P.leq(p, q) && !G[q]) ok = false;
                if (G[p] && G[q]) {
                    bool lower = false;
                    for (int r = 0; r < n && !lower; ++r) lower = G[r] && P.leq(r, p) && P.leq(r, q);
                    if (!lower) ok = false;
                }
            }
        for (const auto& D : dense_sets) {
            if (!ok) break;
            bool meets = false;
            for (int i = 0; i < n && !meets; ++i) meets = D[i] && G[i];
            ok = meets;
        }
        if (ok) out.push_back(G);
    }
    return out;
}

enum class Rel { In, Eq, Sub };

inline bool holds(Rel r, const Set& a, const Set& b) {
    switch (r) {
        case Rel::In: return member(a, b);
        case Rel::Eq: return a == b;
        case Rel::Sub: return subset(a, b);
    }
    return false;
}

// p forces x r y iff every generic through p satisfies it.
inline bool forces(const symext::Poset& P, int p, Rel r, symext::NameId x, symext::NameId y) {
    for (const auto& G : generics(P))
        if (G[p] && !holds(r, interpret(x, G), interpret(y, G))) return false;
    return true;
}

// Permutation action on names, entry by entry.
inline symext::NameId act(const std::vector<int>& pi, symext::NameId x) {
    std::vector<symext::NameEntry> e;
    for (const auto& [p, y] : symext::name_entries(x)) e.emplace_back(pi[p], act(pi, y));
    return symext::name_make(std::move(e));
}

// All names of rank <= k over P (k small).
inline std::vector<symext::NameId> names(const symext::Poset& P, int k) {
    std::vector<symext::NameId> level{symext::empty_name()};
    for (int j = 0; j < k; ++j) {
        std::vector<std::pair<int, symext::NameId>> atoms;
        for (int p = 0; p < P.size(); ++p)
            for (auto y : level) atoms.emplace_back(p, y);
        std::vector<symext::NameId> next;
        for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
            std::vector<symext::NameEntry> e;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (mask >> i & 1) e.push_back(atoms[i]);
            next.push_back(symext::name_make(std::move(e)));
        }
        std::set<symext::NameId> uniq(next.begin(), next.end());
        level.assign(uniq.begin(), uniq.end());
    }
    return level;
}

}  // namespace oracle

#include "symext/hf.hpp"

namespace oracle {

inline Set from_hf(symext::Hf x) {
    Set s;
    for (auto y : symext::hf_members(x)) s.m.insert(from_hf(y));
    return s;
}

}  // namespace oracle
