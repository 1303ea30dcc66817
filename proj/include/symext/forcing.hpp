#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "symext/bits.hpp"
#include "symext/formula.hpp"
#include "symext/hf.hpp"
#include "symext/name.hpp"
#include "symext/order.hpp"

namespace symext {

struct GenericFilter {
    Bits conds;
    int minimal = 0;  // least-index minimal element generating the cone
    bool symmetric = false;
};

// One cone per equivalence class of minimal elements, ordered by minimal_reps().
std::vector<GenericFilter> enumerate_generics(const Poset& P);

Hf interpret(NameId x, const Bits& G);

enum class Rel { In, Eq, Sub };
const char* rel_text(Rel r);

// Forcing over a fixed poset. Both the syntactic recursion (posets of at most 64
// conditions) and the semantic oracle over generic cones are available.
class Forcer {
   public:
    explicit Forcer(std::shared_ptr<const Poset> P);

    const Poset& poset() const { return *P_; }
    const std::vector<GenericFilter>& generics() const { return gens_; }
    int generic_count() const { return static_cast<int>(gens_.size()); }
    // Index of the generic containing p's minimal classes below p.
    const std::vector<int>& generics_through(int p) const { return through_[p]; }

    Hf value(NameId x, int g);
    std::vector<Hf> values(NameId x);

    // Syntactic forcing: the set of conditions forcing x rel y.
    std::uint64_t forcing_mask(Rel r, NameId x, NameId y);
    bool forces(int p, Rel r, NameId x, NameId y);
    // Semantic oracle: p forces iff every generic cone through p satisfies the relation.
    bool semantic_forces(int p, Rel r, NameId x, NameId y);
    Bits semantic_set(Rel r, NameId x, NameId y);
    // Semantic forcing of a formula with name arguments in the slots.
    bool forces_formula(int p, const FormulaPtr& f, const std::vector<NameId>& args);
    // A generic through p refuting f, or -1.
    int counter_generic(int p, const FormulaPtr& f, const std::vector<NameId>& args);

    void clear_memo();

   private:
    std::uint64_t sub_mask(NameId x, NameId y);
    std::uint64_t eq_mask(NameId x, NameId y);
    std::uint64_t in_mask(NameId x, NameId y);
    std::uint64_t dense_below(std::uint64_t D) const;
    bool holds(Rel r, Hf a, Hf b) const;

    std::shared_ptr<const Poset> P_;
    std::vector<GenericFilter> gens_;
    std::vector<std::vector<int>> through_;
    std::vector<std::uint64_t> down_;
    std::mutex mu_;
    std::unordered_map<std::uint64_t, std::uint64_t> sub_memo_, in_memo_;
    std::vector<std::unordered_map<NameId, Hf>> value_memo_;
};

bool forces_atomic(const Poset& P, int p, Rel r, NameId x, NameId y);

}  // namespace symext
