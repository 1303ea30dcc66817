#include "symext/hf.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "symext/intern.hpp"

namespace symext {

namespace {

struct HfRecord {
    std::vector<Hf> members;
    int rank = 0;
};

using HfTable = InternTable<std::vector<Hf>, HfRecord, VecHash>;

HfTable& table() {
    static HfTable* t = [] {
        auto* tt = new HfTable;
        tt->intern({}, [](const std::vector<Hf>&) { return HfRecord{}; });
        return tt;
    }();
    return *t;
}

std::mutex text_mu;
std::unordered_map<Hf, std::string>& text_cache() {
    static std::unordered_map<Hf, std::string> c;
    return c;
}

}  // namespace

Hf hf_make(std::vector<Hf> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return table().intern(members, [](const std::vector<Hf>& m) {
        HfRecord r;
        r.members = m;
        for (Hf y : m) r.rank = std::max(r.rank, hf_rank(y) + 1);
        return r;
    });
}

const std::vector<Hf>& hf_members(Hf x) { return table().get(x).members; }

int hf_rank(Hf x) { return table().get(x).rank; }

bool hf_contains(Hf set, Hf x) {
    const auto& m = hf_members(set);
    return std::binary_search(m.begin(), m.end(), x);
}

bool hf_subset(Hf a, Hf b) {
    const auto& ma = hf_members(a);
    const auto& mb = hf_members(b);
    return std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
}

Hf hf_union(Hf a, Hf b) {
    std::vector<Hf> m = hf_members(a);
    const auto& mb = hf_members(b);
    m.insert(m.end(), mb.begin(), mb.end());
    return hf_make(std::move(m));
}

Hf hf_singleton(Hf a) { return hf_make({a}); }

Hf hf_kpair(Hf a, Hf b) { return hf_make({hf_make({a}), hf_make({a, b})}); }

std::optional<std::pair<Hf, Hf>> hf_decode_kpair(Hf x) {
    const auto& m = hf_members(x);
    if (m.size() == 1) {
        const auto& s = hf_members(m[0]);
        if (s.size() != 1) return std::nullopt;
        return std::make_pair(s[0], s[0]);
    }
    if (m.size() != 2) return std::nullopt;
    for (int i = 0; i < 2; ++i) {
        const auto& single = hf_members(m[i]);
        const auto& both = hf_members(m[1 - i]);
        if (single.size() != 1 || both.size() != 2) continue;
        Hf a = single[0];
        if (both[0] == a) return std::make_pair(a, both[1]);
        if (both[1] == a) return std::make_pair(a, both[0]);
    }
    return std::nullopt;
}

Hf hf_ordinal(int n) {
    std::vector<Hf> m;
    Hf cur = hf_empty();
    for (int i = 0; i < n; ++i) {
        m.push_back(cur);
        cur = hf_make(m);
    }
    return cur;
}

std::optional<int> hf_decode_ordinal(Hf x) {
    int n = static_cast<int>(hf_members(x).size());
    if (hf_ordinal(n) == x) return n;
    return std::nullopt;
}

std::string hf_to_string(Hf x) {
    {
        std::lock_guard<std::mutex> lock(text_mu);
        auto it = text_cache().find(x);
        if (it != text_cache().end()) return it->second;
    }
    std::vector<std::pair<int, std::string>> parts;
    for (Hf y : hf_members(x)) parts.emplace_back(hf_rank(y), hf_to_string(y));
    std::sort(parts.begin(), parts.end());
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i].second;
    }
    s += "}";
    std::lock_guard<std::mutex> lock(text_mu);
    text_cache().emplace(x, s);
    return s;
}

namespace {

struct HfParser {
    const std::string& t;
    std::size_t i = 0;

    void ws() {
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("set literal: " + what + " at position " + std::to_string(i));
    }
    Hf parse() {
        ws();
        if (i >= t.size()) fail("unexpected end");
        if (std::isdigit(static_cast<unsigned char>(t[i]))) {
            int n = 0;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) n = n * 10 + (t[i++] - '0');
            return hf_ordinal(n);
        }
        if (t[i] != '{') fail("expected '{'");
        ++i;
        std::vector<Hf> m;
        ws();
        if (i < t.size() && t[i] == '}') {
            ++i;
            return hf_empty();
        }
        for (;;) {
            m.push_back(parse());
            ws();
            if (i < t.size() && t[i] == ',') {
                ++i;
                continue;
            }
            if (i < t.size() && t[i] == '}') {
                ++i;
                break;
            }
            fail("expected ',' or '}'");
        }
        return hf_make(std::move(m));
    }
};

}  // namespace

Hf hf_parse(const std::string& text) {
    HfParser p{text};
    Hf x = p.parse();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return x;
}

std::vector<Hf> hf_level(int k) {
    std::vector<Hf> level;
    for (int j = 0; j < k; ++j) {
        if (level.size() > 20) throw std::length_error("hereditary level too large");
        std::vector<Hf> next;
        std::size_t n = level.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Hf> m;
            for (std::size_t b = 0; b < n; ++b)
                if (mask >> b & 1) m.push_back(level[b]);
            next.push_back(hf_make(std::move(m)));
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](Hf a, Hf b) {
        if (hf_rank(a) != hf_rank(b)) return hf_rank(a) < hf_rank(b);
        return hf_to_string(a) < hf_to_string(b);
    });
    return level;
}

}  // namespace symext
