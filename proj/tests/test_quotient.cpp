#include <doctest.h>

#include "symext/fixtures.hpp"
#include "symext/iteration.hpp"
#include "symext/quotient.hpp"

using namespace symext;

namespace {
std::vector<int> identity_embed(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i;
    return e;
}
SymSystem trivial_over(const Poset& P) {
    Group G = Group::from_elements(P.size(), {identity_perm(P.size())});
    return SymSystem(P, G, {G.trivial()});
}
}  // namespace

TEST_CASE("complete subsystems") {
    for (const SymSystem& S : {ssym(), striv(), seven_sym()})
        CHECK(is_complete_subsystem(S, trivial_over(S.poset()), identity_embed(S.poset().size())));
    TwoStep T = two_step(ssym(), check_stage(ssym(), ssym()));
    std::vector<int> e;
    for (int p = 0; p < 3; ++p) e.push_back(T.embed(p));
    CHECK(is_complete_subsystem(ssym(), T.system, e));
    CHECK(is_subforcing(p3(), p3(), identity_embed(3)));
}

TEST_CASE("H-reductions") {
    SymSystem S = ssym();
    const Poset& P = S.poset();
    int one = P.index("1"), a = P.index("a");
    auto r = h_reduction(S, P, identity_embed(3), S.group().all(), a);
    REQUIRE(r.has_value());
    CHECK(*r == one);
    auto s = h_reduction(S, P, identity_embed(3), S.group().trivial(), a);
    REQUIRE(s.has_value());
    CHECK(*s == a);
}

TEST_CASE("respect diagrams") {
    SymSystem S = ssym();
    const Poset& P = S.poset();
    NameId adot = name_make({{P.index("a"), empty_name()}});
    auto d = respect_diagram(S, adot);
    int tau = S.group().index_of(swap_perm(3, 1, 2));
    CHECK(d.at(0) == P.full_set());
    CHECK(d.at(tau).none());
    auto c = respect_diagram(S, check_name(P, hf_ordinal(2)));
    for (const Bits& b : c) CHECK(b == P.full_set());
    CHECK(respect_basis_check(S, hs_inventory(S, 1).names, 2));
}

TEST_CASE("quotient of a system by itself") {
    // rigid: directed
    SymSystem R = striv();
    Quotient Qr = quotient_forcing_name(R, R.poset_ptr(), identity_embed(3), default_respect_basis(R, 2));
    for (int g0 = 0; g0 < R.forcer().generic_count(); ++g0)
        CHECK(evaluate_quotient(Qr, g0).poset->minimal_reps().size() == 1);
    // with the swap the quotient keeps both atoms, and they are swapped by the group
    SymSystem S = ssym();
    Quotient Qn = quotient_forcing_name(S, S.poset_ptr(), identity_embed(3), default_respect_basis(S, 2));
    const int top = S.poset().top();
    bool top_entry = false;
    for (const auto& e : Qn.entries) top_entry = top_entry || (e.p == top && e.r == top);
    CHECK(top_entry);
    for (int g0 = 0; g0 < S.forcer().generic_count(); ++g0) {
        EvaluatedQuotient E = evaluate_quotient(Qn, g0);
        for (int c0 = 0; c0 < E.poset->size(); ++c0)
            for (int c1 = 0; c1 < E.poset->size(); ++c1) CHECK(homogeneity_witness(Qn, E, c0, c1).has_value());
    }
}

TEST_CASE("quotient over the trivial system stays directed at the rigid base") {
    SymSystem S = striv();
    SymSystem T = trivial_over(S.poset());
    auto basis = default_respect_basis(S, 2);
    Quotient Qn = quotient_forcing_name(S, T.poset_ptr(), identity_embed(3), basis);
    for (int g0 = 0; g0 < S.forcer().generic_count(); ++g0) {
        EvaluatedQuotient E = evaluate_quotient(Qn, g0);
        CHECK(E.poset->minimal_reps().size() == 1);
        QuotientSystemEval Q = quotient_system(Qn, T, E);
        CHECK(validate(Q.system).ok);
        CHECK(homogeneity_witness(Qn, E, 0, 0).has_value());
    }
}
