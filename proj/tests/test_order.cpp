#include <doctest.h>

#include "oracle.hpp"
#include "symext/fixtures.hpp"
#include "symext/order.hpp"

using namespace symext;

namespace {
Bits bits_from(const Poset& P, std::initializer_list<const char*> labels) {
    Bits b = P.empty_set();
    for (auto l : labels) b.set(P.index(l));
    return b;
}
}  // namespace

TEST_CASE("P3 order") {
    Poset P = p3();
    int one = P.index("1"), a = P.index("a"), b = P.index("b");
    CHECK(P.size() == 3);
    CHECK(P.top() == one);
    CHECK_FALSE(P.compatible(a, b));
    CHECK(P.compatible(a, one));
    CHECK(P.compatible(a, a));
    CHECK(P.leq(a, one));
    CHECK_FALSE(P.leq(one, a));
    CHECK(P.minimal_reps().size() == 2);
}

TEST_CASE("closure of leq pairs is transitive") {
    Poset P = seven();
    for (int p = 0; p < P.size(); ++p)
        for (int q = 0; q < P.size(); ++q)
            for (int r = 0; r < P.size(); ++r)
                if (P.leq(p, q) && P.leq(q, r)) CHECK(P.leq(p, r));
    CHECK(P.leq(P.index("c0"), P.index("1")));
    CHECK_FALSE(P.leq(P.index("c0"), P.index("d")));
    CHECK(P.minimal().size() == 4);
}

TEST_CASE("dense and predense on P3") {
    Poset P = p3();
    CHECK(P.is_dense(bits_from(P, {"a", "b"})));
    CHECK_FALSE(P.is_dense(bits_from(P, {"1"})));
    CHECK(P.is_predense(bits_from(P, {"1"})));
    CHECK_FALSE(P.is_predense(bits_from(P, {"a"})));
}

TEST_CASE("density agrees with the brute-force definition") {
    for (const Poset& P : {p3(), seven(), lottery_sum(lottery_parts())}) {
        const int n = P.size();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<bool> D(n);
            Bits b = P.empty_set();
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) D[i] = true, b.set(i);
            CHECK(P.is_dense(b) == oracle::dense(P, D));
        }
    }
}

TEST_CASE("boolean completions") {
    CHECK(boolean_completion(p3()).size() == 4);
    CHECK(boolean_completion(one_point_poset()).size() == 2);
    // regular open sets of a poset whose minimal cones are the only atoms: 2^(atoms)
    BooleanAlgebra L = boolean_completion(lottery_sum(lottery_parts()));
    CHECK(L.size() == 16);
    CHECK(L.atoms().size() == 4);
    BooleanAlgebra S = boolean_completion(seven());
    CHECK(S.size() == 16);
    for (int i = 0; i < S.size(); ++i) CHECK(is_regular_open(seven(), S.elements[i]));
}

TEST_CASE("regular open sets counted by brute force") {
    for (const Poset& P : {p3(), seven(), lottery_sum(lottery_parts())}) {
        int count = 0;
        for (unsigned mask = 0; mask < (1u << P.size()); ++mask) {
            Bits U = P.empty_set();
            for (int i = 0; i < P.size(); ++i)
                if (mask >> i & 1) U.set(i);
            // U regular open: p in U iff every q <= p has some r <= q in U
            bool open = true, regular = true;
            for (int p = 0; p < P.size(); ++p) {
                for (int q = 0; q < P.size(); ++q)
                    if (U[p] && P.leq(q, p) && !U[q]) open = false;
                bool all = true;
                for (int q = 0; q < P.size() && all; ++q) {
                    if (!P.leq(q, p)) continue;
                    bool some = false;
                    for (int r = 0; r < P.size() && !some; ++r) some = P.leq(r, q) && U[r];
                    all = some;
                }
                if (all != static_cast<bool>(U[p])) regular = false;
            }
            if (open && regular) ++count;
            CHECK(is_regular_open(P, U) == (open && regular));
        }
        CHECK(count == boolean_completion(P).size());
    }
}

TEST_CASE("lottery sums") {
    Poset L = lottery_sum(lottery_parts());
    CHECK(L.size() == 7);
    Poset chain = lottery_sum({one_point_poset()});
    CHECK(chain.size() == 2);
    CHECK(lottery_sum({p3()}).size() == 4);
    int t0a = lottery_index(lottery_parts(), 0, 1), t1a = lottery_index(lottery_parts(), 1, 1);
    CHECK_FALSE(L.compatible(t0a, t1a));
    CHECK(L.leq(t0a, L.top()));
}

TEST_CASE("unknown labels throw") { CHECK_THROWS_AS(p3().index("zz"), std::out_of_range); }
