#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "symext/system.hpp"

namespace symext {

// A second-stage system name over S0, given by its value at each generic of S0.
// Values must agree along orbits of the base group.
struct StageName {
    std::vector<SymSystem> per_generic;
};
StageName check_stage(const SymSystem& S0, const SymSystem& T);
Report validate_stage(const SymSystem& S0, const StageName& T);

// Names for the second stage, each recorded by its value at every base generic.
struct NameWitness {
    std::vector<std::vector<int>> conds;   // condition of stage c
    std::vector<std::vector<int>> group;   // group element of stage c
    std::vector<std::vector<Bits>> filter; // subgroup of stage c
};
// Every symmetric value vector; the filter family is the vector of cores.
NameWitness full_witness(const SymSystem& S0, const StageName& T);
// Check names of the stage's own conditions, elements and filter members.
NameWitness check_witness(const SymSystem& S0, const StageName& T);
Report validate_name_witness(const SymSystem& S0, const StageName& T, const NameWitness& W);

struct PairAut {
    int base = 0;
    std::vector<int> stage;  // element of stage c's group
    bool operator==(const PairAut& o) const { return base == o.base && stage == o.stage; }
    bool operator<(const PairAut& o) const { return std::tie(base, stage) < std::tie(o.base, o.stage); }
};

struct TwoStep {
    SymSystem system;
    SymSystem base;
    StageName stage;
    NameWitness witness;
    std::vector<std::pair<int, int>> conds;  // (base condition, witness condition vector)
    std::vector<PairAut> pairs;
    std::vector<int> pair_element;  // pair -> element of system.group()
    int top_vector = 0;

    int cond_index(int p, int v) const;
    int vector_index(const std::vector<int>& f) const;
    int embed(int p) const { return cond_index(p, top_vector); }
    int pair_index(const PairAut& a) const;

    std::map<std::pair<int, int>, int> cond_lookup;
    std::map<std::vector<int>, int> vector_lookup;
    std::map<PairAut, int> pair_lookup;
};

TwoStep two_step(const SymSystem& S0, const StageName& T);
TwoStep reduced_iteration(const SymSystem& S0, const StageName& T, const NameWitness& W);

int act_pair(const TwoStep& T, const PairAut& a, int cond);
PairAut compose_pair(const TwoStep& T, const PairAut& a, const PairAut& b);
PairAut invert_pair(const TwoStep& T, const PairAut& a);
// sigma pi sigma^-1 by the closed formula.
PairAut conjugate_pair(const TwoStep& T, const PairAut& sigma, const PairAut& pi);

// Generic of the two-step -> (base generic, generic of that stage).
std::pair<int, int> factor_generic(const TwoStep& T, int g);
int compose_generic(const TwoStep& T, int g0, int g1);

// [x]: a base name for the second-stage name of x.
NameId bracket(const TwoStep& T, NameId x);
// ]y[: inverse translation; throws PreconditionError on malformed input.
NameId unbracket(const TwoStep& T, NameId y);
// ([x]^{G0})^{G1}
Hf evaluate_bracket(const TwoStep& T, NameId y, int g0, int g1);

// Union of the H-images of x.
NameId symmetrize(const SymSystem& S, const Bits& H, NameId x);
// Names of a reduced iteration read in the full iteration.
NameId embed_reduced(const TwoStep& reduced, const TwoStep& full, NameId x);

struct ProductSystem {
    SymSystem system;
    std::vector<std::pair<int, int>> conds;
    int cond_index(int p0, int p1) const { return p0 * width + p1; }
    int width = 0;
};
ProductSystem product(const SymSystem& S0, const SymSystem& S1);

// Finite iteration of ground systems with supports in the ideal.
struct IterationStage {
    SymSystem system;
    std::vector<std::vector<int>> cond_seq;  // condition -> sequence of components
    std::vector<std::vector<int>> aut_seq;   // automorphism sequences
    std::vector<int> aut_element;            // sequence -> element of system.group()
    std::vector<int> embed_prev;             // condition of previous stage -> condition here
};
struct FiniteIteration {
    std::vector<IterationStage> stages;  // stages[a] has length a + 1
    std::vector<TwoStep> steps;          // steps[a] builds stages[a + 1]
    std::vector<std::uint64_t> ideal;
};
FiniteIteration finite_iteration(const std::vector<SymSystem>& ground, const std::vector<std::uint64_t>& ideal);

std::uint64_t cond_support(const FiniteIteration& I, int stage, int cond);
std::uint64_t aut_support(const FiniteIteration& I, int stage, const std::vector<int>& seq);
std::vector<int> compose_seq(const FiniteIteration& I, int stage, const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> invert_seq(const FiniteIteration& I, int stage, const std::vector<int>& a);
int act_seq(const FiniteIteration& I, int stage, const std::vector<int>& a, int cond);
// Condition of stage a padded with trivial entries up to stage b.
int embed_stage(const FiniteIteration& I, int a, int b, int cond);
std::vector<std::uint64_t> full_ideal(int length);

}  // namespace symext
