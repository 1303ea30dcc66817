#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symext/system.hpp"

namespace symext {

// P sits inside Q via embed (condition of P -> condition of Q).
bool is_subforcing(const Poset& P, const Poset& Q, const std::vector<int>& embed);
// Every S-symmetrically dense subset of P is predense in Q.
bool is_symmetrically_complete(const SymSystem& S, const Poset& Q, const std::vector<int>& embed);

struct SubsystemReport {
    bool subforcing = false;
    bool restriction = false;  // some member of the larger filter restricts into every member of the smaller
    bool predense = false;
    bool complete() const { return subforcing && restriction && predense; }
};
SubsystemReport check_subsystem(const SymSystem& S0, const SymSystem& S1, const std::vector<int>& embed);
bool is_complete_subsystem(const SymSystem& S0, const SymSystem& S1, const std::vector<int>& embed);

// Some H-reduction of q in P (least index), H given as elements of the group of S.
std::optional<int> h_reduction(const SymSystem& S, const Poset& Q, const std::vector<int>& embed, const Bits& H, int q);

// Conditions forcing pi(x) = x, one set per group element.
std::vector<Bits> respect_diagram(const SymSystem& S, NameId x);
bool respect_basis_check(const SymSystem& S, const std::vector<NameId>& R, int k);
// Least alpha for which HS_alpha passes the check against rank-k names.
std::vector<NameId> default_respect_basis(const SymSystem& S, int k);

// HS names of rank <= k: complete when the guard allows, else the HS part of the bounded inventory.
NameUniverse hs_inventory(const SymSystem& S, int k);

using Fragment = std::vector<std::pair<NameId, NameId>>;

struct QuotientEntry {
    int p = 0;
    int r = 0;
    int frag = 0;
};

struct Quotient {
    SymSystem base;
    std::shared_ptr<const Poset> Q;
    std::vector<int> embed;
    std::vector<NameId> basis;
    std::vector<Fragment> fragments;
    std::vector<QuotientEntry> entries;  // every (p, r, fragment) satisfying psi
    NameId name = 0;                     // the base name of the quotient forcing
    int max_fragment = 1;
};

bool psi(const SymSystem& S, const Poset& Q, const std::vector<int>& embed, int p, int r, const Fragment& frag);
Quotient quotient_forcing_name(const SymSystem& S, std::shared_ptr<const Poset> Q, const std::vector<int>& embed,
                               const std::vector<NameId>& R, int max_fragment = 1);

// The quotient evaluated at a base generic.
struct EvaluatedQuotient {
    std::shared_ptr<const Poset> poset;
    int g0 = 0;
    std::vector<int> r;     // condition -> r
    std::vector<Hf> frag;   // condition -> evaluated fragment
    std::vector<Fragment> frag_names;  // condition -> fragment names (first found)
};
EvaluatedQuotient evaluate_quotient(const Quotient& Qn, int g0);
// The hereditary set the quotient name denotes at g0.
Hf quotient_value(const Quotient& Qn, int g0);

// Conditions (r, a) with r in G and a listing true values of basis names; G a filter of Q.
Bits canonical_quotient_generic(const Quotient& Qn, const EvaluatedQuotient& E, const Bits& G, int g0);

// Members of the ambient group preserving P and restricting into the base group.
struct QuotientSystemEval {
    SymSystem system;
    std::vector<int> ambient;  // element of system.group() -> an ambient element inducing it
};
QuotientSystemEval quotient_system(const Quotient& Qn, const SymSystem& S1, const EvaluatedQuotient& E);

// tau in the base group whose action sends c0 to a condition compatible with c1 (Q = P only).
std::optional<int> homogeneity_witness(const Quotient& Qn, const EvaluatedQuotient& E, int c0, int c1);

// i(x) = {((p, (r, 0)), i(y)) : psi(p, r, 0), (r, y) in x}, with (p, r) coded as p * |Q| + r.
NameId quotient_translate(const Quotient& Qn, NameId x);
// Conditions (p, (r, 0)) lying in G0 * K.
Bits translated_filter(const Quotient& Qn, const EvaluatedQuotient& E, const Bits& K, int g0);

}  // namespace symext
