#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symext/hf.hpp"
#include "symext/order.hpp"
#include "symext/perm.hpp"

namespace symext {

// P-names, interned. Id 0 is the empty name. Entries are (condition, child) sorted.
using NameId = int;
using NameEntry = std::pair<int, NameId>;

NameId name_make(std::vector<NameEntry> entries);
const std::vector<NameEntry>& name_entries(NameId x);
int name_rank(NameId x);
inline NameId empty_name() { return 0; }
// Largest condition id used anywhere inside x, or -1.
int name_max_condition(NameId x);
// x together with all names occurring inside it.
std::vector<NameId> subnames(NameId x);

// pi(x) = {(pi(p), pi(y)) : (p, y) in x}; memoized per instance.
class NameAction {
   public:
    explicit NameAction(Perm pi) : pi_(std::move(pi)) {}
    NameId operator()(NameId x);
    const Perm& perm() const { return pi_; }

   private:
    Perm pi_;
    std::unordered_map<NameId, NameId> memo_;
};

NameId apply(const Perm& pi, NameId x);

NameId check_name(const Poset& P, Hf v);
NameId bullet_name(const Poset& P, std::vector<NameId> xs);
// (x, y)^bullet = {{x}^bullet, {x, y}^bullet}^bullet
NameId bullet_pair(const Poset& P, NameId x, NameId y);
// If x has the shape of bullet_pair(P, a, b), returns (a, b).
std::optional<std::pair<NameId, NameId>> decode_bullet_pair(const Poset& P, NameId x);

// Hereditary-set code of the name as an object: {(code(p), code(y))}.
Hf name_code(NameId x);

std::string name_to_string(const Poset& P, NameId x);

// A finite inventory of names.
struct NameUniverse {
    std::vector<NameId> names;
    int rank = 0;
    bool hs = false;
    std::string note;
};

// Every name of rank <= k over P. Throws GuardExceeded past the name guard.
NameUniverse all_names(const Poset& P, int k);
// Names of rank <= widths.size(); a name built at level j+1 has at most widths[j] entries.
NameUniverse bounded_names(const Poset& P, const std::vector<int>& widths);
// Sorted by (rank, text) for reproducible iteration.
void sort_names(const Poset& P, std::vector<NameId>& xs);

}  // namespace symext
