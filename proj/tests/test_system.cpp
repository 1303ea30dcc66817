#include <doctest.h>

#include "oracle.hpp"
#include "symext/fixtures.hpp"
#include "symext/formula.hpp"
#include "symext/system.hpp"

using namespace symext;

namespace {
struct Fx {
    SymSystem S = ssym();
    const Poset& P = S.poset();
    int one = P.index("1"), a = P.index("a"), b = P.index("b");
    NameId zero = empty_name();
    NameId adot = name_make({{a, zero}});
    NameId u = name_make({{a, zero}, {b, zero}});
    int tau = S.group().index_of(swap_perm(3, 1, 2));
    Bits G2 = S.group().all(), triv = S.group().trivial();
};

// sym by the entry-wise action, HS by recursion
bool oracle_hs(const SymSystem& S, NameId x) {
    Bits st(S.group().order());
    for (int g = 0; g < S.group().order(); ++g)
        if (oracle::act(S.group().element(g), x) == x) st.set(g);
    if (!S.filter().contains(st)) return false;
    for (const auto& [p, y] : name_entries(x))
        if (!oracle_hs(S, y)) return false;
    return true;
}

std::vector<Bits> as_bits(const Poset& P, const std::vector<std::vector<bool>>& gs) {
    std::vector<Bits> out;
    for (const auto& G : gs) {
        Bits b = P.empty_set();
        for (int i = 0; i < P.size(); ++i)
            if (G[i]) b.set(i);
        out.push_back(b);
    }
    return out;
}
}  // namespace

TEST_CASE("fix, sym and res groups") {
    Fx f;
    CHECK(fix_group(f.S, f.one) == f.G2);
    CHECK(fix_group(f.S, f.a) == f.triv);
    CHECK(fix_group(striv(), f.a) == striv().group().trivial());
    CHECK(sym_group(f.S, f.u) == f.G2);
    CHECK(sym_group(f.S, f.adot) == f.triv);
    CHECK(sym_group(f.S, check_name(f.P, hf_ordinal(2))) == f.G2);
    CHECK(res_group(f.S, f.adot) == f.triv);
    NameId x = name_make({{f.one, f.adot}, {f.one, symext::apply(swap_perm(3, 1, 2), f.adot)}});
    CHECK(res_group(f.S, x) == f.G2);
}

TEST_CASE("hereditarily symmetric names") {
    Fx f;
    CHECK(is_HS(f.S, f.u));
    CHECK_FALSE(is_HS(f.S, f.adot));
    CHECK(enumerate_HS(striv(), 1).names.size() == 8);
    for (const SymSystem& S : {ssym(), striv(), lottery_system()}) {
        for (NameId x : oracle::names(S.poset(), 1)) CHECK(is_HS(S, x) == oracle_hs(S, x));
    }
    // rank 2 over P3: every name built from two rank 1 names
    auto lv = oracle::names(f.P, 1);
    for (int p = 0; p < 3; ++p)
        for (NameId y : lv)
            for (NameId z : lv) {
                NameId x = name_make({{p, y}, {f.P.size() - 1 - p, z}});
                CHECK(is_HS(f.S, x) == oracle_hs(f.S, x));
            }
}

TEST_CASE("validation") {
    CHECK(validate(ssym()).ok);
    Poset P = p3();
    Group G = Group::from_elements(3, {identity_perm(3), swap_perm(3, 1, 2)});
    CHECK(validate(SymSystem(P, G, {G.trivial()})).ok);
    Group bad = Group::from_elements(3, {identity_perm(3), swap_perm(3, 0, 1)});
    Report r = validate(SymSystem(P, bad, {bad.all()}));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.problems.empty());
}

TEST_CASE("symmetrically dense sets and symmetric generics") {
    Fx f;
    auto ds = symmetrically_dense_sets(f.S);
    auto has = [&](std::initializer_list<int> xs) {
        Bits b = f.P.empty_set();
        for (int x : xs) b.set(x);
        return std::find(ds.begin(), ds.end(), b) != ds.end();
    };
    CHECK(has({f.a, f.b}));
    CHECK_FALSE(has({f.a}));
    CHECK_FALSE(has({f.a, f.one}));
    // Striv: every dense set
    auto all = symmetrically_dense_sets(striv());
    std::size_t dense = 0;
    for (unsigned m = 1; m < 8; ++m) {
        std::vector<bool> D{bool(m & 1), bool(m & 2), bool(m & 4)};
        dense += oracle::dense(f.P, D);
    }
    CHECK(all.size() == dense);
    CHECK(enumerate_symmetric_generics(f.S).size() == 2);
    CHECK(enumerate_symmetric_generics(one_point_system()).size() == 1);
}

TEST_CASE("symmetric forcing") {
    Fx f;
    NameId c1 = check_name(f.P, hf_ordinal(1));
    CHECK(sym_forces(f.S, f.one, parse_formula("x0 = x1"), {f.u, c1}));
    CHECK(sym_forces(f.S, f.a, parse_formula("x0 in x1"), {f.zero, f.u}));
    for (NameId x : enumerate_HS(f.S, 1).names) CHECK(sym_forces(f.S, f.a, parse_formula("x0 = x0"), {x}));
}

TEST_CASE("closures and definable names") {
    Fx f;
    CHECK(closure(f.S, f.zero, 1) == f.zero);
    NameId cu = closure(f.S, f.u, 1);
    bool has_top = false;
    for (const auto& [p, y] : name_entries(cu)) has_top = has_top || (p == f.one && y == f.zero);
    CHECK(has_top);
    auto gens = oracle::generics(f.P);
    auto same_values = [&](NameId x, NameId y) {
        for (const auto& G : gens)
            if (!(oracle::interpret(x, G) == oracle::interpret(y, G))) return false;
        return true;
    };
    CHECK(same_values(cu, f.u));
    NameId d = definable_name(f.S, parse_formula("vy = x0"), {f.u}, 1);
    CHECK(same_values(d, f.u));
    NameId c2 = check_name(f.P, hf_ordinal(2)), c1 = check_name(f.P, hf_ordinal(1));
    NameId un = definable_name(f.S, parse_formula("(forall va in vy . (va in x0 or va in x1)) and (forall vb in x0 . vb in vy) and "
                                                     "(forall vc in x1 . vc in vy)"), {c1, check_name(f.P, hf_make({hf_ordinal(1)}))}, 2);
    CHECK(same_values(un, c2));
}

TEST_CASE("mixing names") {
    SymSystem S = striv();
    const Poset& P = S.poset();
    int a = P.index("a");
    NameId x = name_make({{a, empty_name()}});
    NameId z = empty_name();
    NameId y = mix_names(S, a, x, z, parse_formula("vy sub x0"), {x}, 1);
    for (const auto& G : oracle::generics(P)) {
        auto v = oracle::interpret(y, G);
        if (G[a]) CHECK(v == oracle::interpret(x, G));
        else CHECK(v == oracle::empty());
    }
}

TEST_CASE("HR to HS") {
    Fx f;
    // respected but not symmetric: tau moves it to a name forced equal to it
    NameId x = name_make({{f.one, f.zero}, {f.a, f.zero}});
    CHECK(is_HR(f.S, x));
    CHECK_FALSE(is_HS(f.S, x));
    NameId bad = name_make({{f.one, f.adot}, {f.one, symext::apply(swap_perm(3, 1, 2), f.adot)}});
    CHECK_FALSE(is_HR(f.S, bad));
    NameId h = hr_to_hs(f.S, x);
    CHECK(is_HS(f.S, h));
    CHECK(f.S.forcer().forces(f.one, Rel::Eq, h, x));
    NameId c = check_name(f.P, hf_ordinal(2));
    CHECK(hr_to_hs(f.S, c) == c);
}

TEST_CASE("tenacity") {
    CHECK(is_tenacious(striv()));
    CHECK_FALSE(is_tenacious(ssym()));
    CHECK(is_tenacious(one_point_system()));
    CompletedSystem C = boolean_completion_system(ssym());
    CHECK(C.algebra.size() == 4);
    auto TE = tenacious_equivalent(C);
    CHECK(is_tenacious(TE.system));
}

TEST_CASE("HS value vectors at rank 1 against brute force") {
    for (const SymSystem& S : {striv(), ssym(), lottery_system(), seven_sym(), one_point_system()}) {
        auto gens = oracle::generics(S.poset());
        // order generics as the library does: by minimal representative
        std::vector<std::vector<bool>> ordered;
        for (int m : S.poset().minimal_reps())
            for (const auto& G : gens)
                if (G[m]) ordered.push_back(G);
        REQUIRE(ordered.size() == gens.size());
        std::set<std::vector<oracle::Set>> expect;
        for (NameId x : oracle::names(S.poset(), 1)) {
            if (!oracle_hs(S, x)) continue;
            std::vector<oracle::Set> v;
            for (const auto& G : ordered) v.push_back(oracle::interpret(x, G));
            expect.insert(v);
        }
        std::set<std::vector<oracle::Set>> got;
        const auto& V = S.hs_vectors(1);
        CHECK(V.witness.size() == V.vectors.size());
        for (std::size_t i = 0; i < V.vectors.size(); ++i) {
            std::vector<oracle::Set> v;
            for (Hf h : V.vectors[i]) v.push_back(oracle::from_hf(h));
            got.insert(v);
            CHECK(is_HS(S, V.witness[i]));
            CHECK(name_rank(V.witness[i]) <= 1);
        }
        CHECK(got == expect);
        // models per generic
        for (std::size_t g = 0; g < ordered.size(); ++g) {
            std::set<oracle::Set> m;
            for (const auto& v : expect) m.insert(v[g]);
            std::set<oracle::Set> lib;
            for (Hf h : model_values(S, static_cast<int>(g), 1)) lib.insert(oracle::from_hf(h));
            CHECK(lib == m);
        }
    }
}

TEST_CASE("completion of the one point system is trivial") {
    Completion C = completion(one_point_system(), 1);
    CHECK(C.orbit.system.poset().size() == 1);
    CHECK(is_tenacious(C.orbit.system));
    CHECK(is_tenacious(completion(ssym(), 2).orbit.system));
}

TEST_CASE("orbit systems") {
    auto P = std::make_shared<const Poset>(p3());
    int a = P->index("a");
    NameId adot = name_make({{a, empty_name()}});
    OrbitSystem O = orbit_system(P, empty_name());
    CHECK(O.system.group().order() == 2);
    CHECK(O.system.filter().contains(O.system.group().all()));
    NameId X = name_make({{P->top(), adot}});
    OrbitSystem Oa = orbit_system(P, X);
    CHECK(Oa.system.group().order() == 1);
    CHECK(reflects(*P, X, adot));
    NameId Xs = name_make({{P->top(), adot}, {P->top(), symext::apply(swap_perm(3, 1, 2), adot)}});
    CHECK_FALSE(reflects(*P, Xs, adot));
}
