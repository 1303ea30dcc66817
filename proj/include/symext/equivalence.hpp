#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symext/formula.hpp"
#include "symext/system.hpp"

namespace symext {

enum class NameClass { HS, N };
const char* class_text(NameClass c);

struct WeakEquivalence {
    bool equivalent = false;
    int rank = 0;
    // for each generic of one side, a generic of the other with the same model (or -1)
    std::vector<int> s_to_t, t_to_s;
};
// Rank <= k models agree generic by generic, both directions.
WeakEquivalence weakly_equivalent(const SymSystem& S, const SymSystem& T, int k);

// Rank <= k fragments of HR and N over the model fragment inventory.
NameUniverse hr_class(const SymSystem& S, int k);
NameUniverse n_class(const SymSystem& S, int k);
bool in_n_class(const SymSystem& S, NameId x, int k);

// Value vectors of the class fragment, with realizing names.
ClassVectors class_vectors(const SymSystem& S, NameClass cls, int k);
// {(m_g, check(y)) : y in values[g]} over minimal representatives; evaluates to values[g] at g.
NameId mixture_of_values(const Poset& P, const std::vector<Hf>& values);

struct EquivalenceWitness {
    NameClass cls = NameClass::HS;
    int rank = 0;
    std::function<NameId(NameId)> i, istar;
    std::vector<NameId> inventory_s, inventory_t;
    // Classes of generics indistinguishable by the class; the isomorphism of the
    // completions of the reduced systems is the bijection of their atoms.
    std::vector<int> class_s, class_t;  // generic -> class
    std::vector<int> atom_map;          // class of S -> class of T
    std::string note;
};

// Delta_0 shapes checked for forcing transfer (two slots each).
const std::vector<FormulaPtr>& transfer_shapes();

// Clauses of C-equivalence on the witness inventories.
Report validate_witness(const SymSystem& S, const SymSystem& T, const EquivalenceWitness& W);

// First witness in canonical order, or none at these bounds.
std::optional<EquivalenceWitness> find_equivalence(const SymSystem& S, const SymSystem& T, NameClass cls, int k);

// i(x) = {(p, i(y)) : some tag t, ((t,p), y) in x} and its two-tag inverse, for a lottery sum
// of copies of P (tagged copies at lottery_index) against P itself.
EquivalenceWitness lottery_witness(const SymSystem& L, const std::vector<Poset>& parts, const SymSystem& T, int k);

// S against the system over its Boolean completion: i lifts, i* lowers.
EquivalenceWitness completion_witness(const SymSystem& S, const CompletedSystem& C, int k);

// Upper bound on the number of HS value vectors: product of model sizes over core orbits of generics.
std::uint64_t hs_vector_bound(const SymSystem& S, int k);
// Inventory used for a system: checks plus the class witnesses.
std::vector<NameId> class_inventory(const SymSystem& S, NameClass cls, int k);

}  // namespace symext
