#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symext/bits.hpp"

namespace symext {

// Finite preorder with a maximum. Conditions are indices 0..size()-1.
class Poset {
   public:
    Poset() = default;
    // leq holds pairs (p, q) meaning p <= q; reflexive-transitive closure is taken.
    Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& leq, int top);
    // below[q] = {p : p <= q}; must already be reflexive and transitive.
    static Poset from_below(std::vector<std::string> labels, std::vector<Bits> below, int top);

    int size() const { return static_cast<int>(labels_.size()); }
    int top() const { return top_; }
    bool leq(int p, int q) const { return below_[q].test(p); }
    bool equivalent(int p, int q) const { return leq(p, q) && leq(q, p); }
    const Bits& down(int p) const { return below_[p]; }
    const Bits& up(int p) const { return above_[p]; }
    bool compatible(int p, int q) const { return below_[p].intersects(below_[q]); }
    Bits incompatible_with(int p) const;

    // Minimal elements, and one representative (least index) per equivalence class of them.
    const std::vector<int>& minimal() const { return minimal_; }
    const std::vector<int>& minimal_reps() const { return reps_; }
    // Index into minimal_reps() of the class of a minimal element, or -1.
    int minimal_class(int m) const { return min_class_[m]; }

    Bits empty_set() const { return Bits(labels_.size()); }
    Bits full_set() const { return Bits(labels_.size()).set(); }
    Bits up_closure(const Bits& s) const;
    Bits down_closure(const Bits& s) const;

    // {p : D is dense below p}
    Bits dense_below(const Bits& D) const;
    bool is_dense(const Bits& D) const;
    bool is_predense(const Bits& D) const;

    const std::string& label(int p) const { return labels_.at(p); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index(const std::string& label) const;
    void check_condition(int p) const;

    bool operator==(const Poset& o) const { return labels_ == o.labels_ && below_ == o.below_ && top_ == o.top_; }

   private:
    void finish();
    std::vector<std::string> labels_;
    std::vector<Bits> below_, above_;
    std::vector<int> minimal_, reps_, min_class_;
    int top_ = 0;
};

bool compatible(const Poset& P, int p, int q);
bool is_dense(const Poset& P, const Bits& D);
bool is_predense(const Poset& P, const Bits& D);

// {p : every q <= p lies above some member of U}; the regular-open hull under the downward topology.
Bits regular_open_hull(const Poset& P, const Bits& U);
bool is_regular_open(const Poset& P, const Bits& U);

struct BooleanAlgebra {
    int source_size = 0;
    std::vector<Bits> elements;  // regular-open subsets, sorted by size then members
    std::vector<int> embedding;  // condition -> element
    std::vector<std::vector<int>> join, meet;
    std::vector<int> complement;
    int zero = 0, one = 0;

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(const Bits& U) const;
    bool leq(int a, int b) const { return elements[a].is_subset_of(elements[b]); }
    std::vector<int> atoms() const;
    // The nonzero part as a poset; nonzero_elements()[i] is the element behind condition i.
    Poset nonzero_poset(const Poset& source) const;
    std::vector<int> nonzero_elements() const;
};

BooleanAlgebra boolean_completion(const Poset& P);

// Disjoint tagged union with a fresh top (index 0, label "1"); tag i, element p gets label "i:p".
Poset lottery_sum(const std::vector<Poset>& parts);
// Index of (tag, p) in lottery_sum(parts).
int lottery_index(const std::vector<Poset>& parts, int tag, int p);

Poset one_point_poset();

}  // namespace symext
