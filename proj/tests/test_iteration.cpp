#include <doctest.h>

#include "oracle.hpp"
#include "symext/fixtures.hpp"
#include "symext/iteration.hpp"

using namespace symext;

TEST_CASE("products are coordinatewise") {
    ProductSystem Pr = product(striv(), ssym());
    const Poset& Q = Pr.system.poset();
    CHECK(Q.size() == 9);
    Poset P = p3();
    for (int p0 = 0; p0 < 3; ++p0)
        for (int p1 = 0; p1 < 3; ++p1)
            for (int q0 = 0; q0 < 3; ++q0)
                for (int q1 = 0; q1 < 3; ++q1)
                    CHECK(Q.leq(Pr.cond_index(p0, p1), Pr.cond_index(q0, q1)) == (P.leq(p0, q0) && P.leq(p1, q1)));
    CHECK(oracle::generics(Q).size() == 4);
    CHECK(validate(Pr.system).ok);
    CHECK(Pr.system.group().order() == 2);
}

TEST_CASE("two-step over check stages") {
    SymSystem S = striv();
    StageName T = check_stage(S, striv());
    CHECK(validate_stage(S, T).ok);
    TwoStep two = two_step(S, T);
    CHECK(two.system.poset().size() == 27);
    CHECK(validate(two.system).ok);
    TwoStep sym = two_step(ssym(), check_stage(ssym(), ssym()));
    CHECK(validate(sym.system).ok);
    CHECK(is_normal_filter(sym.system.filter()));
    // second coordinate the one point system: same size as the base
    TwoStep triv = two_step(ssym(), check_stage(ssym(), one_point_system()));
    CHECK(triv.system.poset().size() == 3);
}

TEST_CASE("distinct pairs act differently on the fixtures") {
    for (auto [s0, s1] : {std::pair{striv(), striv()}, std::pair{ssym(), ssym()}, std::pair{ssym(), striv()}}) {
        TwoStep T = two_step(s0, check_stage(s0, s1));
        std::set<int> elems(T.pair_element.begin(), T.pair_element.end());
        CHECK(elems.size() == T.pairs.size());
        CHECK(T.system.group().order() == static_cast<int>(T.pairs.size()));
    }
}

TEST_CASE("pair automorphisms act as composed maps") {
    TwoStep T = two_step(ssym(), check_stage(ssym(), ssym()));
    for (const auto& a : T.pairs)
        for (const auto& b : T.pairs) {
            PairAut c = compose_pair(T, a, b);
            PairAut ai = invert_pair(T, a);
            PairAut cj = conjugate_pair(T, a, b);
            for (int p = 0; p < T.system.poset().size(); ++p) {
                CHECK(act_pair(T, c, p) == act_pair(T, a, act_pair(T, b, p)));
                CHECK(act_pair(T, ai, act_pair(T, a, p)) == p);
                CHECK(act_pair(T, cj, p) == act_pair(T, a, act_pair(T, b, act_pair(T, ai, p))));
            }
        }
}

TEST_CASE("generic factorization round trips") {
    for (auto [s0, s1] : {std::pair{striv(), striv()}, std::pair{ssym(), ssym()}}) {
        TwoStep T = two_step(s0, check_stage(s0, s1));
        std::set<int> seen;
        for (int g = 0; g < T.system.forcer().generic_count(); ++g) {
            auto [g0, g1] = factor_generic(T, g);
            CHECK(compose_generic(T, g0, g1) == g);
            seen.insert(g);
        }
        CHECK(seen.size() == 4);
    }
}

TEST_CASE("name witnesses") {
    SymSystem S = ssym();
    StageName T = check_stage(S, ssym());
    NameWitness W = check_witness(S, T);
    CHECK(validate_name_witness(S, T, W).ok);
    NameWitness broken = W;
    // drop the identity of every stage
    for (auto& g : broken.group) g.erase(g.begin());
    CHECK_FALSE(validate_name_witness(S, T, broken).ok);
    TwoStep R = reduced_iteration(S, T, W);
    CHECK(validate(R.system).ok);
}

TEST_CASE("bracket translation") {
    TwoStep T = two_step(striv(), check_stage(striv(), striv()));
    const Poset& P = T.system.poset();
    int c = 0;
    for (int p = 0; p < P.size() && c < 6; ++p, ++c) {
        NameId x = name_make({{p, empty_name()}, {P.top(), name_make({{p, empty_name()}})}});
        NameId y = bracket(T, x);
        CHECK(unbracket(T, y) == x);
        for (int g = 0; g < T.system.forcer().generic_count(); ++g) {
            auto [g0, g1] = factor_generic(T, g);
            CHECK(evaluate_bracket(T, y, g0, g1) == T.system.forcer().value(x, g));
        }
    }
}

TEST_CASE("finite iterations and supports") {
    FiniteIteration I = finite_iteration({ssym(), ssym(), ssym()}, full_ideal(3));
    REQUIRE(I.stages.size() == 3);
    const int last = 2;
    const auto& st = I.stages[last];
    for (const auto& a : st.aut_seq)
        for (const auto& b : st.aut_seq) {
            auto c = compose_seq(I, last, a, b);
            CHECK((aut_support(I, last, c) & ~(aut_support(I, last, a) | aut_support(I, last, b))) == 0);
            for (int p = 0; p < st.system.poset().size(); ++p)
                CHECK(act_seq(I, last, c, p) == act_seq(I, last, a, act_seq(I, last, b, p)));
            auto ai = invert_seq(I, last, a);
            CHECK(aut_support(I, last, ai) == aut_support(I, last, a));
        }
    for (int p = 0; p < I.stages[0].system.poset().size(); ++p) {
        int q = embed_stage(I, 0, last, p);
        CHECK(cond_support(I, last, q) == cond_support(I, 0, p));
    }
    // length two matches the two-step construction in size
    FiniteIteration J = finite_iteration({striv(), striv()}, full_ideal(2));
    TwoStep T = two_step(striv(), check_stage(striv(), striv()));
    CHECK(J.stages[1].system.poset().size() == T.system.poset().size());
}
