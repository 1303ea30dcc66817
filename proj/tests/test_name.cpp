#include <doctest.h>

#include "oracle.hpp"
#include "symext/fixtures.hpp"
#include "symext/guard.hpp"
#include "symext/name.hpp"

using namespace symext;

namespace {
struct P3Names {
    Poset P = p3();
    int one = P.index("1"), a = P.index("a"), b = P.index("b");
    NameId zero = empty_name();
    NameId adot = name_make({{a, zero}});
    NameId u = name_make({{a, zero}, {b, zero}});
    Perm tau = swap_perm(3, 1, 2);
};
}  // namespace

TEST_CASE("apply") {
    P3Names n;
    CHECK(symext::apply(n.tau, n.adot) == name_make({{n.b, n.zero}}));
    CHECK(symext::apply(identity_perm(3), n.u) == n.u);
    CHECK(symext::apply(n.tau, n.u) == n.u);
    auto level1 = oracle::names(n.P, 1);
    for (NameId x : level1) CHECK(symext::apply(n.tau, x) == oracle::act(n.tau, x));
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (NameId y : level1)
                for (NameId z : level1) {
                    NameId x = name_make({{p, y}, {q, z}});
                    CHECK(symext::apply(n.tau, x) == oracle::act(n.tau, x));
                }
}

TEST_CASE("check and bullet names") {
    P3Names n;
    CHECK(check_name(n.P, hf_empty()) == n.zero);
    CHECK(check_name(n.P, hf_ordinal(1)) == name_make({{n.one, n.zero}}));
    NameId tad = symext::apply(n.tau, n.adot);
    CHECK(bullet_name(n.P, {n.adot, tad}) == name_make({{n.one, n.adot}, {n.one, tad}}));
    NameId pr = bullet_pair(n.P, n.adot, n.u);
    auto d = decode_bullet_pair(n.P, pr);
    REQUIRE(d.has_value());
    CHECK(d->first == n.adot);
    CHECK(d->second == n.u);
}

TEST_CASE("checks evaluate to themselves everywhere") {
    P3Names n;
    for (Hf v : hf_level(4)) {
        NameId c = check_name(n.P, v);
        for (const auto& G : oracle::generics(n.P)) CHECK(oracle::interpret(c, G) == oracle::from_hf(v));
    }
}

TEST_CASE("name universes") {
    P3Names n;
    auto all1 = all_names(n.P, 1);
    CHECK(all1.names.size() == 8);
    auto ref = oracle::names(n.P, 1);
    std::set<NameId> a(all1.names.begin(), all1.names.end()), b(ref.begin(), ref.end());
    CHECK(a == b);
    // 2^24 names at rank 2 exceeds the default guard
    CHECK_THROWS_AS(all_names(n.P, 2), GuardExceeded);
    CHECK(name_rank(n.u) == 1);
    CHECK(name_rank(n.zero) == 0);
}

TEST_CASE("text form") {
    P3Names n;
    CHECK(name_to_string(n.P, n.u) == "{(a,{}),(b,{})}");
    CHECK(name_to_string(n.P, n.zero) == "{}");
}
