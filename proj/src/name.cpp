#include "symext/name.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <unordered_set>

#include "symext/guard.hpp"
#include "symext/intern.hpp"

namespace symext {

namespace {

struct NameRecord {
    std::vector<NameEntry> entries;
    int rank = 0;
    int max_cond = -1;
};

using NameTable = InternTable<std::vector<NameEntry>, NameRecord, VecHash>;

NameTable& table() {
    static NameTable* t = [] {
        auto* tt = new NameTable;
        tt->intern({}, [](const std::vector<NameEntry>&) { return NameRecord{}; });
        return tt;
    }();
    return *t;
}

}  // namespace

NameId name_make(std::vector<NameEntry> entries) {
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    return table().intern(entries, [](const std::vector<NameEntry>& e) {
        NameRecord r;
        r.entries = e;
        for (auto [p, y] : e) {
            r.rank = std::max(r.rank, name_rank(y) + 1);
            r.max_cond = std::max({r.max_cond, p, name_max_condition(y)});
        }
        return r;
    });
}

const std::vector<NameEntry>& name_entries(NameId x) { return table().get(x).entries; }
int name_rank(NameId x) { return table().get(x).rank; }
int name_max_condition(NameId x) { return table().get(x).max_cond; }

std::vector<NameId> subnames(NameId x) {
    std::set<NameId> seen{x};
    std::vector<NameId> work{x};
    while (!work.empty()) {
        NameId y = work.back();
        work.pop_back();
        for (auto [p, z] : name_entries(y))
            if (seen.insert(z).second) work.push_back(z);
    }
    return {seen.begin(), seen.end()};
}

NameId NameAction::operator()(NameId x) {
    if (x == empty_name()) return x;
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    std::vector<NameEntry> out;
    for (auto [p, y] : name_entries(x)) out.emplace_back(pi_.at(p), (*this)(y));
    NameId r = name_make(std::move(out));
    memo_.emplace(x, r);
    return r;
}

NameId apply(const Perm& pi, NameId x) {
    NameAction a(pi);
    return a(x);
}

NameId check_name(const Poset& P, Hf v) {
    std::vector<NameEntry> out;
    for (Hf y : hf_members(v)) out.emplace_back(P.top(), check_name(P, y));
    return name_make(std::move(out));
}

NameId bullet_name(const Poset& P, std::vector<NameId> xs) {
    std::vector<NameEntry> out;
    for (NameId x : xs) out.emplace_back(P.top(), x);
    return name_make(std::move(out));
}

NameId bullet_pair(const Poset& P, NameId x, NameId y) {
    return bullet_name(P, {bullet_name(P, {x}), bullet_name(P, {x, y})});
}

std::optional<std::pair<NameId, NameId>> decode_bullet_pair(const Poset& P, NameId x) {
    const auto& e = name_entries(x);
    for (auto [p, y] : e)
        if (p != P.top()) return std::nullopt;
    auto children = [&](NameId z) -> std::optional<std::vector<NameId>> {
        std::vector<NameId> out;
        for (auto [p, w] : name_entries(z)) {
            if (p != P.top()) return std::nullopt;
            out.push_back(w);
        }
        return out;
    };
    if (e.size() == 1) {
        auto c = children(e[0].second);
        if (!c || c->size() != 1) return std::nullopt;
        return std::make_pair((*c)[0], (*c)[0]);
    }
    if (e.size() != 2) return std::nullopt;
    for (int i = 0; i < 2; ++i) {
        auto single = children(e[i].second);
        auto both = children(e[1 - i].second);
        if (!single || !both || single->size() != 1 || both->size() != 2) continue;
        NameId a = (*single)[0];
        if ((*both)[0] == a) return std::make_pair(a, (*both)[1]);
        if ((*both)[1] == a) return std::make_pair(a, (*both)[0]);
    }
    return std::nullopt;
}

Hf name_code(NameId x) {
    std::vector<Hf> m;
    for (auto [p, y] : name_entries(x)) m.push_back(hf_kpair(hf_ordinal(p), name_code(y)));
    return hf_make(std::move(m));
}

std::string name_to_string(const Poset& P, NameId x) {
    if (x == empty_name()) return "{}";
    std::vector<std::string> parts;
    for (auto [p, y] : name_entries(x)) parts.push_back("(" + P.label(p) + "," + name_to_string(P, y) + ")");
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i];
    }
    return s + "}";
}

void sort_names(const Poset& P, std::vector<NameId>& xs) {
    std::vector<std::pair<std::pair<int, std::string>, NameId>> keyed;
    for (NameId x : xs) keyed.push_back({{name_rank(x), name_to_string(P, x)}, x});
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
    xs.clear();
    for (auto& k : keyed) xs.push_back(k.second);
}

namespace {

// All subsets of pool with at most width elements.
void subsets_upto(const std::vector<NameEntry>& pool, std::size_t width, std::vector<NameId>& out,
                  std::uint64_t guard) {
    std::vector<NameEntry> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        out.push_back(name_make(cur));
        if (out.size() > guard) throw GuardExceeded("name universe size");
        if (cur.size() == width) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

NameUniverse bounded_names(const Poset& P, const std::vector<int>& widths) {
    const Guards& g = default_guards();
    if (static_cast<int>(widths.size()) > g.max_rank) throw GuardExceeded("rank bound");
    std::vector<NameId> level{empty_name()};
    for (int w : widths) {
        std::vector<NameEntry> pool;
        for (int p = 0; p < P.size(); ++p)
            for (NameId y : level) pool.emplace_back(p, y);
        std::vector<NameId> next;
        subsets_upto(pool, static_cast<std::size_t>(w), next, g.max_names);
        for (NameId y : level) next.push_back(y);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    sort_names(P, level);
    NameUniverse U;
    U.names = std::move(level);
    U.rank = static_cast<int>(widths.size());
    U.note = "width-bounded";
    return U;
}

NameUniverse all_names(const Poset& P, int k) {
    const Guards& g = default_guards();
    if (k > g.max_rank) throw GuardExceeded("rank bound");
    std::uint64_t count = 1;
    std::vector<int> widths;
    for (int j = 0; j < k; ++j) {
        std::uint64_t pool = static_cast<std::uint64_t>(P.size()) * count;
        if (pool >= 63 || (std::uint64_t{1} << pool) > g.max_names) throw GuardExceeded("name universe size");
        count = std::uint64_t{1} << pool;
        widths.push_back(static_cast<int>(pool));
    }
    NameUniverse U = bounded_names(P, widths);
    U.note = "complete";
    return U;
}

}  // namespace symext
