#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symext {

// Hereditarily finite sets, interned. Id 0 is the empty set.
using Hf = int;

Hf hf_make(std::vector<Hf> members);
const std::vector<Hf>& hf_members(Hf x);
int hf_rank(Hf x);
inline Hf hf_empty() { return 0; }
bool hf_contains(Hf set, Hf x);
bool hf_subset(Hf a, Hf b);
Hf hf_union(Hf a, Hf b);
Hf hf_singleton(Hf a);
Hf hf_kpair(Hf a, Hf b);
std::optional<std::pair<Hf, Hf>> hf_decode_kpair(Hf x);
Hf hf_ordinal(int n);
std::optional<int> hf_decode_ordinal(Hf x);

// Canonical text: "{}" style, members ordered by (rank, text).
std::string hf_to_string(Hf x);
// Accepts the canonical text, plus decimal numerals for von Neumann ordinals.
Hf hf_parse(const std::string& text);

// All sets of rank < k (the finite level V_k).
std::vector<Hf> hf_level(int k);

}  // namespace symext
