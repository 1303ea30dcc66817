#include <doctest.h>

#include "oracle.hpp"
#include "symext/fixtures.hpp"
#include "symext/forcing.hpp"
#include "symext/formula.hpp"

using namespace symext;

namespace {
Rel lib(oracle::Rel r) { return r == oracle::Rel::In ? Rel::In : r == oracle::Rel::Eq ? Rel::Eq : Rel::Sub; }

std::vector<bool> as_vector(const Bits& b) {
    std::vector<bool> v(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) v[i] = b[i];
    return v;
}

// rank 1 names plus two-entry rank 2 names
std::vector<NameId> sample(const Poset& P) {
    auto out = oracle::names(P, 1);
    auto lv = out;
    for (int p = 0; p < P.size(); ++p)
        for (NameId y : lv) out.push_back(name_make({{p, y}}));
    for (NameId y : lv)
        for (NameId z : lv) out.push_back(name_make({{1, y}, {2, z}}));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}
}  // namespace

TEST_CASE("generic filters match the brute-force enumeration") {
    for (const Poset& P : {p3(), seven(), lottery_sum(lottery_parts()), one_point_poset()}) {
        auto gens = enumerate_generics(P);
        auto ref = oracle::generics(P);
        REQUIRE(gens.size() == ref.size());
        std::set<std::vector<bool>> a, b(ref.begin(), ref.end());
        for (const auto& g : gens) a.insert(as_vector(g.conds));
        CHECK(a == b);
    }
    CHECK(oracle::generics(lottery_sum(lottery_parts())).size() == 4);
}

TEST_CASE("interpretation") {
    Poset P = p3();
    int a = P.index("a"), b = P.index("b");
    NameId adot = name_make({{a, empty_name()}});
    NameId u = name_make({{a, empty_name()}, {b, empty_name()}});
    Bits Ga = P.up(a), Gb = P.up(b);
    CHECK(interpret(u, Ga) == hf_ordinal(1));
    CHECK(interpret(adot, Gb) == hf_empty());
    for (NameId x : sample(P))
        for (const auto& G : oracle::generics(P)) {
            Bits g = P.empty_set();
            for (int i = 0; i < P.size(); ++i)
                if (G[i]) g.set(i);
            CHECK(oracle::from_hf(interpret(x, g)) == oracle::interpret(x, G));
        }
}

TEST_CASE("P3 examples") {
    Poset P = p3();
    int one = P.index("1"), a = P.index("a"), b = P.index("b");
    NameId adot = name_make({{a, empty_name()}});
    NameId u = name_make({{a, empty_name()}, {b, empty_name()}});
    CHECK(forces_atomic(P, a, Rel::In, empty_name(), adot));
    CHECK(forces_atomic(P, one, Rel::Eq, u, check_name(P, hf_ordinal(1))));
    CHECK(forces_atomic(P, one, Rel::Eq, adot, adot));
    CHECK_FALSE(forces_atomic(P, one, Rel::In, empty_name(), adot));
}

TEST_CASE("syntactic forcing agrees with brute force") {
    for (const Poset& P : {p3(), lottery_sum(lottery_parts())}) {
        auto Pp = std::make_shared<const Poset>(P);
        Forcer f(Pp);
        auto xs = P.size() == 3 ? sample(P) : oracle::names(P, 1);
        auto gens = oracle::generics(P);
        for (NameId x : xs)
            for (NameId y : xs)
                for (auto r : {oracle::Rel::In, oracle::Rel::Eq, oracle::Rel::Sub}) {
                    // oracle forcing set over the cached generics
                    for (int p = 0; p < P.size(); ++p) {
                        bool expect = true;
                        for (const auto& G : gens)
                            if (G[p] && !oracle::holds(r, oracle::interpret(x, G), oracle::interpret(y, G))) expect = false;
                        CHECK(f.forces(p, lib(r), x, y) == expect);
                    }
                }
    }
}

TEST_CASE("formula forcing and counter generics") {
    Poset P = p3();
    auto Pp = std::make_shared<const Poset>(P);
    Forcer f(Pp);
    int one = P.index("1"), a = P.index("a"), b = P.index("b");
    NameId adot = name_make({{a, empty_name()}});
    auto phi = parse_formula("x0 in x1");
    CHECK(f.forces_formula(a, phi, {empty_name(), adot}));
    CHECK_FALSE(f.forces_formula(one, phi, {empty_name(), adot}));
    int g = f.counter_generic(one, phi, {empty_name(), adot});
    CHECK(P.minimal_reps().at(g) == b);
    auto both = parse_formula("x0 in x1 or not x0 in x1");
    CHECK(f.forces_formula(one, both, {empty_name(), adot}));
}
