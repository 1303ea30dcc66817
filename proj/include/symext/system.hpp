#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symext/forcing.hpp"
#include "symext/formula.hpp"
#include "symext/name.hpp"
#include "symext/order.hpp"
#include "symext/perm.hpp"

namespace symext {

// Value vectors (one value per generic) realized by a class of names, with a witness name for each.
struct ClassVectors {
    std::vector<std::vector<Hf>> vectors;
    std::vector<NameId> witness;
};

class SymSystem {
   public:
    SymSystem() = default;
    SymSystem(std::shared_ptr<const Poset> P, GroupPtr G, std::vector<Bits> filter_gens, std::string name = "");
    SymSystem(Poset P, Group G, std::vector<Bits> filter_gens, std::string name = "");

    const Poset& poset() const { return *P_; }
    const std::shared_ptr<const Poset>& poset_ptr() const { return P_; }
    const Group& group() const { return *G_; }
    const GroupPtr& group_ptr() const { return G_; }
    const NormalFilter& filter() const { return F_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    Forcer& forcer() const;
    // Action of group element g on names, memoized for the lifetime of the system.
    NameId act(int g, NameId x) const;
    Bits sym(NameId x) const;
    bool hs(NameId x) const;
    // Group element acting on conditions.
    int act_cond(int g, int p) const { return G_->element(g)[p]; }
    // Value vectors of all HS names of rank <= k, memoized.
    const ClassVectors& hs_vectors(int k) const;
    // Rank <= k symmetric model at each generic.
    const std::vector<std::vector<Hf>>& model_sets(int k) const;

   private:
    struct Cache;
    std::shared_ptr<const Poset> P_;
    GroupPtr G_;
    NormalFilter F_;
    std::string name_;
    std::shared_ptr<Cache> cache_;
};

struct Report {
    bool ok = true;
    std::vector<std::string> problems;
    void fail(std::string what) {
        ok = false;
        problems.push_back(std::move(what));
    }
};

Report validate(const SymSystem& S);

// Permutation of the generics induced by group element g.
std::vector<int> generic_permutation(const SymSystem& S, int g);

Bits fix_group(const SymSystem& S, int p);
Bits sym_group(const SymSystem& S, NameId x);
// {pi : 1 forces pi(x) = x}
Bits res_group(const SymSystem& S, NameId x);
bool is_HS(const SymSystem& S, NameId x);
bool is_HR(const SymSystem& S, NameId x);
// Every HS name of rank <= k, as unions of orbits of the filter core. Guarded.
NameUniverse enumerate_HS(const SymSystem& S, int k);

// Semantic forcing; arguments must be HS.
bool sym_forces(const SymSystem& S, int p, const FormulaPtr& f, const std::vector<NameId>& args);

// Dense sets invariant under the filter core (equivalently under some filter member). Guarded.
std::vector<Bits> symmetrically_dense_sets(const SymSystem& S);
// Filters meeting every symmetrically dense set. Over a finite poset every filter is a cone.
std::vector<GenericFilter> enumerate_symmetric_generics(const SymSystem& S);

// cl_alpha(x) = {(p, y) : y in HS_alpha, p forces y in x}
NameId closure_at(const SymSystem& S, NameId x, int alpha);
NameId closure(const SymSystem& S, NameId x, int k);
int closure_level(const SymSystem& S, NameId x, int k);

// phi has one free variable (the defined object) and slots x0.. for args.
NameId definable_name(const SymSystem& S, const FormulaPtr& phi, const std::vector<NameId>& args, int k);
// chi has one free variable; p forces chi(x), 1 forces chi(z).
NameId mix_names(const SymSystem& S, int p, NameId x, NameId z, const FormulaPtr& chi,
                 const std::vector<NameId>& args, int k);
NameId hr_to_hs(const SymSystem& S, NameId x);

bool is_tenacious(const SymSystem& S);

// The system over the nonzero part of B(P) with the lifted group and the same filter.
struct CompletedSystem {
    SymSystem system;
    BooleanAlgebra algebra;
    std::vector<int> embed;  // condition of P -> condition of system
    std::vector<int> element_of;  // condition of system -> algebra element
};
CompletedSystem boolean_completion_system(const SymSystem& S);
// P-name viewed as a name over the completion system.
NameId lift_name(const CompletedSystem& C, NameId x);
// i*(x) = {(p, i*(y)) : exists q >= e(p), (q, y) in x}
NameId lower_name(const CompletedSystem& C, const Poset& P, NameId x);

// Subalgebra of conditions whose stabilizer lies in the filter. S must be a completion system.
struct TenaciousEquivalent {
    SymSystem system;
    std::vector<int> included;  // condition of result -> condition of source
};
TenaciousEquivalent tenacious_equivalent(const CompletedSystem& C);

using ClassName = NameId;

struct OrbitSystem {
    SymSystem system;
    std::vector<int> aut_index;  // group element -> index among Aut(P)
    std::size_t selectors = 0;
};
// O(P, X): automorphisms forcing pi(X) = X; filter generated by res groups of names forced into X.
OrbitSystem orbit_system(std::shared_ptr<const Poset> P, ClassName X);
bool reflects(const Poset& P, ClassName X, NameId x);
bool self_reflects(const Poset& P, ClassName X, NameId x);

// Rank <= k symmetric model at generic g.
std::vector<Hf> model_values(const SymSystem& S, int g, int k);

struct Completion {
    OrbitSystem orbit;
    CompletedSystem base;
    int rank = 0;
    std::size_t fragment_size = 0;
};
Completion completion(const SymSystem& S, int k);

// Inventory used for rank-k fragments: complete when within the guard, width-bounded otherwise.
NameUniverse fragment_inventory(const Poset& P, int k);

// Mixing witness search: a name from the candidate list with p forcing phi(y, args).
std::optional<NameId> find_mixing_witness(const SymSystem& S, int p, const FormulaPtr& phi,
                                          const std::vector<NameId>& args, const std::vector<NameId>& candidates);
// Whether p forces the existence of some y of rank <= k with phi(y, args).
bool exists_satisfiable(const SymSystem& S, int p, const FormulaPtr& phi, const std::vector<NameId>& args, int k);

// The unique free variable of phi; throws otherwise.
std::string result_variable(const FormulaPtr& phi);

}  // namespace symext
