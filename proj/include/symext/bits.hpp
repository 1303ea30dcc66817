#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <functional>
#include <vector>

namespace symext {

using Bits = boost::dynamic_bitset<std::uint64_t>;

inline Bits make_bits(std::size_t n) { return Bits(n); }

inline Bits bits_of(std::size_t n, const std::vector<int>& members) {
    Bits b(n);
    for (int m : members) b.set(static_cast<std::size_t>(m));
    return b;
}

inline std::vector<int> members_of(const Bits& b) {
    std::vector<int> out;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

template <class F>
void for_each_bit(const Bits& b, F&& f) {
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(static_cast<int>(i));
}

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::vector<std::uint64_t> blocks;
        boost::to_block_range(b, std::back_inserter(blocks));
        std::size_t h = b.size();
        for (auto w : blocks) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace symext
