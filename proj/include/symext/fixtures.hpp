#pragma once

#include <string>
#include <vector>

#include "symext/system.hpp"

namespace symext {

// {1, a, b} with a, b below 1.
Poset p3();
// 1 > c, d; c > c0, c1; d > d0, d1.
Poset seven();
// Copies of P3 joined under a fresh top.
std::vector<Poset> lottery_parts();

SymSystem striv();   // P3, trivial group
SymSystem ssym();    // P3, swap of a and b, filter generated by the whole group
SymSystem lottery_system();  // P3 + P3, tag swap, filter generated by the whole group
SymSystem seven_sym();       // all automorphisms of seven, filter generated by the leaf swaps
SymSystem one_point_system();

// Lookup by id: Striv, Ssym, L2, Seven, One. Throws std::out_of_range.
SymSystem fixture(const std::string& id);
std::vector<std::string> fixture_ids();

}  // namespace symext
