#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symext/bits.hpp"
#include "symext/order.hpp"

namespace symext {

using Perm = std::vector<int>;

Perm identity_perm(int n);
// (a * b)(x) = a(b(x))
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_permutation(const Perm& a, int n);
bool is_automorphism(const Poset& P, const Perm& a);
Perm swap_perm(int n, int i, int j);

// Finite permutation group, stored by full enumeration. Element 0 is the identity.
class Group {
   public:
    Group() = default;
    static Group closure(int degree, const std::vector<Perm>& gens);
    static Group from_elements(int degree, std::vector<Perm> elems, std::vector<Perm> gens = {});

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const Perm& element(int i) const { return elems_.at(i); }
    const std::vector<Perm>& elements() const { return elems_; }
    const std::vector<Perm>& generators() const { return gens_; }
    int index_of(const Perm& p) const;
    int mul(int i, int j) const { return table_[i * order() + j]; }
    int inv(int i) const { return inv_[i]; }
    int conj(int pi, int h) const { return mul(mul(pi, h), inv_[pi]); }

    Bits all() const { return Bits(elems_.size()).set(); }
    Bits trivial() const { return bits_of(elems_.size(), {0}); }
    Bits generated(const std::vector<int>& elems) const;
    bool is_subgroup(const Bits& H) const;
    Bits conjugate(int pi, const Bits& H) const;
    // All subgroups, sorted by size then members. Memoized.
    const std::vector<Bits>& subgroups() const;

    bool operator==(const Group& o) const { return degree_ == o.degree_ && elems_ == o.elems_; }

   private:
    int degree_ = 0;
    std::vector<Perm> elems_, gens_;
    std::map<Perm, int> index_;
    std::vector<int> table_, inv_;
    struct SubgroupCache {
        std::once_flag once;
        std::vector<Bits> subs;
    };
    std::shared_ptr<SubgroupCache> subs_;
    void build();
};

using GroupPtr = std::shared_ptr<const Group>;

// Validates each generator as an automorphism of P.
Group generate_group(const Poset& P, const std::vector<Perm>& gens);

Bits conjugate(const Group& G, int pi, const Bits& H);

class NormalFilter {
   public:
    NormalFilter() = default;
    NormalFilter(GroupPtr G, std::vector<Bits> gens);

    const Group& group() const { return *G_; }
    const GroupPtr& group_ptr() const { return G_; }
    const std::vector<Bits>& generators() const { return gens_; }
    // Intersection of all conjugates of all generators: the least member.
    const Bits& core() const { return core_; }
    bool contains(const Bits& H) const;
    // Whether the family generated without conjugation is already conjugation-closed.
    bool generators_normal() const { return normal_; }

   private:
    GroupPtr G_;
    std::vector<Bits> gens_;
    Bits core_;
    bool normal_ = true;
};

bool filter_contains(const NormalFilter& F, const Bits& H);
bool is_normal_filter(const NormalFilter& F);

// Order isomorphisms P -> Q fixing top, in lexicographic order; stops after limit.
std::vector<Perm> poset_isomorphisms(const Poset& P, const Poset& Q, std::size_t limit);
std::vector<Perm> poset_automorphisms(const Poset& P, std::size_t limit);

std::string perm_to_string(const Poset& P, const Perm& a);

}  // namespace symext
