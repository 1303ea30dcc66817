#include <doctest.h>

#include "oracle.hpp"
#include "symext/equivalence.hpp"
#include "symext/fixtures.hpp"

using namespace symext;

namespace {
// rank <= 1 HS models by brute force, as sets of generic models
std::set<std::set<oracle::Set>> models(const SymSystem& S) {
    std::set<std::set<oracle::Set>> out;
    for (const auto& G : oracle::generics(S.poset())) {
        std::set<oracle::Set> m;
        for (NameId x : oracle::names(S.poset(), 1))
            if (S.hs(x)) m.insert(oracle::interpret(x, G));
        out.insert(m);
    }
    return out;
}
}  // namespace

TEST_CASE("weak equivalence at rank 1 matches brute-force models") {
    std::vector<SymSystem> fx = {striv(), ssym(), lottery_system(), one_point_system()};
    for (const auto& S : fx)
        for (const auto& T : fx) CHECK(weakly_equivalent(S, T, 1).equivalent == (models(S) == models(T)));
    CHECK(weakly_equivalent(ssym(), ssym(), 2).equivalent);
}

TEST_CASE("mixtures evaluate to the requested values") {
    Poset P = p3();
    std::vector<Hf> vals = {hf_ordinal(2), hf_make({hf_ordinal(1)})};
    NameId m = mixture_of_values(P, vals);
    for (const auto& G : oracle::generics(P)) {
        int g = G[P.index("a")] ? 0 : 1;
        CHECK(oracle::interpret(m, G) == oracle::from_hf(vals[g]));
    }
}

TEST_CASE("identity witnesses") {
    for (const SymSystem& S : {striv(), ssym()}) {
        auto W = find_equivalence(S, S, NameClass::HS, 1);
        REQUIRE(W.has_value());
        CHECK(validate_witness(S, S, *W).ok);
        for (NameId x : W->inventory_s) CHECK(S.forcer().values(W->i(x)) == S.forcer().values(x));
    }
}

TEST_CASE("lottery and product witnesses") {
    SymSystem L = lottery_system(), T = striv();
    EquivalenceWitness W = lottery_witness(L, lottery_parts(), T, 2);
    CHECK(validate_witness(L, T, W).ok);
    EquivalenceWitness broken = W;
    broken.i = [](NameId) { return empty_name(); };
    CHECK_FALSE(validate_witness(L, T, broken).ok);
    CHECK(transfer_shapes().size() == 8);
}

TEST_CASE("class membership") {
    SymSystem S = ssym();
    auto hr = hr_class(S, 1);
    for (NameId x : hr.names) CHECK(is_HR(S, x));
    CHECK(in_n_class(S, check_name(S.poset(), hf_ordinal(2)), 2));
}

TEST_CASE("tenacious equivalent of Ssym") {
    SymSystem S = ssym();
    auto TE = tenacious_equivalent(boolean_completion_system(S));
    auto hs = find_equivalence(S, TE.system, NameClass::HS, 1);
    REQUIRE(hs.has_value());
    CHECK(validate_witness(S, TE.system, *hs).ok);
    CHECK_FALSE(find_equivalence(S, TE.system, NameClass::N, 1).has_value());
}
