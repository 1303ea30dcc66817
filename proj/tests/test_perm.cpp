#include <doctest.h>

#include <algorithm>
#include <set>

#include "symext/fixtures.hpp"
#include "symext/perm.hpp"

using namespace symext;

TEST_CASE("permutation basics") {
    Perm t = swap_perm(3, 1, 2);
    CHECK(compose(t, t) == identity_perm(3));
    CHECK(inverse(t) == t);
    CHECK(is_permutation(t, 3));
    CHECK_FALSE(is_permutation({0, 0, 1}, 3));
    CHECK(is_automorphism(p3(), t));
    CHECK_FALSE(is_automorphism(p3(), swap_perm(3, 0, 1)));
}

TEST_CASE("generated groups") {
    Poset P = p3();
    CHECK(generate_group(P, {swap_perm(3, 1, 2)}).order() == 2);
    CHECK(generate_group(P, {}).order() == 1);
    SymSystem L = lottery_system();
    CHECK(L.group().order() == 2);
    CHECK(seven_sym().group().order() == 8);
}

TEST_CASE("multiplication table matches composition") {
    SymSystem S = seven_sym();
    const Group& G = S.group();
    for (int i = 0; i < G.order(); ++i) {
        CHECK(G.mul(i, G.inv(i)) == G.index_of(identity_perm(G.degree())));
        for (int j = 0; j < G.order(); ++j) {
            // (pi sigma)(p) = pi(sigma(p))
            Perm c(G.degree());
            for (int p = 0; p < G.degree(); ++p) c[p] = G.element(i)[G.element(j)[p]];
            CHECK(G.element(G.mul(i, j)) == c);
        }
    }
}

TEST_CASE("subgroups of the order 8 group") {
    SymSystem S = seven_sym();
    const Group& G = S.group();
    // brute force: subsets closed under multiplication
    std::set<std::vector<bool>> found;
    for (unsigned mask = 1; mask < (1u << G.order()); ++mask) {
        if (!(mask & 1u << G.index_of(identity_perm(G.degree())))) continue;
        bool closed = true;
        for (int i = 0; i < G.order() && closed; ++i)
            for (int j = 0; j < G.order() && closed; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !(mask >> G.mul(i, j) & 1)) closed = false;
        if (closed) {
            std::vector<bool> v(G.order());
            for (int i = 0; i < G.order(); ++i) v[i] = mask >> i & 1;
            found.insert(v);
        }
    }
    CHECK(G.subgroups().size() == found.size());
    for (const Bits& H : G.subgroups()) {
        CHECK(G.is_subgroup(H));
        std::vector<bool> v(G.order());
        for (int i = 0; i < G.order(); ++i) v[i] = H[i];
        CHECK(found.count(v) == 1);
    }
}

TEST_CASE("filters on G2") {
    SymSystem S = ssym();
    const Group& G = S.group();
    CHECK(S.filter().contains(G.all()));
    CHECK_FALSE(S.filter().contains(G.trivial()));
    CHECK(striv().filter().contains(striv().group().trivial()));
    CHECK(is_normal_filter(S.filter()));
    auto Gp = std::make_shared<const Group>(G);
    NormalFilter principal(Gp, {G.trivial()});
    CHECK(principal.contains(G.trivial()));
    CHECK(is_normal_filter(principal));
    int tau = G.index_of(swap_perm(3, 1, 2));
    CHECK(G.conjugate(tau, G.trivial()) == G.trivial());
    CHECK(G.conjugate(tau, G.all()) == G.all());
}

TEST_CASE("filter membership is upward closure of generator intersections") {
    SymSystem S = seven_sym();
    const Group& G = S.group();
    const auto& gens = S.filter().generators();
    for (const Bits& H : G.subgroups()) {
        bool expect = false;
        for (const Bits& K : gens) expect = expect || K.is_subset_of(H);
        // generators are closed under finite intersection for this fixture
        CHECK(S.filter().contains(H) == expect);
    }
}

TEST_CASE("poset automorphisms") {
    CHECK(poset_automorphisms(p3(), 100).size() == 2);
    CHECK(poset_automorphisms(seven(), 100).size() == 8);
    CHECK(poset_automorphisms(lottery_sum(lottery_parts()), 100).size() == 8);
}
