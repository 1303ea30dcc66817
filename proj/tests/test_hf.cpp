#include <doctest.h>

#include "oracle.hpp"
#include "symext/hf.hpp"

using namespace symext;

TEST_CASE("levels") {
    CHECK(hf_level(0).size() == 0);
    CHECK(hf_level(1).size() == 1);
    CHECK(hf_level(2).size() == 2);
    CHECK(hf_level(3).size() == 4);
    CHECK(hf_level(4).size() == 16);
    for (Hf x : hf_level(4)) CHECK(hf_rank(x) < 4);
}

TEST_CASE("interning is extensional") {
    Hf e = hf_empty();
    Hf one = hf_make({e});
    CHECK(hf_make({e, e}) == one);
    Hf two = hf_make({one, e});
    CHECK(hf_make({e, one}) == two);
    CHECK(hf_ordinal(2) == two);
    CHECK(hf_decode_ordinal(two) == 2);
    CHECK_FALSE(hf_decode_ordinal(hf_make({one})).has_value());
}

TEST_CASE("operations agree with the set oracle") {
    auto lv = hf_level(4);
    for (Hf a : lv)
        for (Hf b : lv) {
            auto A = oracle::from_hf(a), B = oracle::from_hf(b);
            CHECK(hf_contains(b, a) == oracle::member(A, B));
            CHECK(hf_subset(a, b) == oracle::subset(A, B));
            oracle::Set U = A;
            U.m.insert(B.m.begin(), B.m.end());
            CHECK(oracle::from_hf(hf_union(a, b)) == U);
            auto kp = hf_kpair(a, b);
            auto d = hf_decode_kpair(kp);
            REQUIRE(d.has_value());
            CHECK(d->first == a);
            CHECK(d->second == b);
        }
}

TEST_CASE("text round trip") {
    for (Hf x : hf_level(4)) CHECK(hf_parse(hf_to_string(x)) == x);
    CHECK(hf_parse("{{}}") == hf_ordinal(1));
    CHECK_THROWS(hf_parse("{"));
    CHECK_THROWS(hf_parse("{}}"));
}
