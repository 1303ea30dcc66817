#include <doctest.h>

#include "oracle.hpp"
#include "symext/formula.hpp"
#include "symext/hf.hpp"

using namespace symext;

TEST_CASE("parse shapes") {
    auto f = parse_formula("x0 in x1");
    CHECK(f->kind == Formula::In);
    CHECK(f->a == Term::make_slot(0));
    CHECK(f->b == Term::make_slot(1));
    auto g = parse_formula("forall v in x0 . v in x1");
    CHECK(g->kind == Formula::Forall);
    CHECK(g->l->kind == Formula::In);
    auto h = parse_formula("not (x0 = x1)");
    CHECK(h->kind == Formula::Not);
    CHECK(h->l->kind == Formula::Eq);
}

TEST_CASE("precedence") {
    // not > and > or > ->
    auto f = parse_formula("not x0 in x1 and x1 in x0 or x0 = x1 -> x0 sub x1");
    REQUIRE(f->kind == Formula::Imp);
    REQUIRE(f->l->kind == Formula::Or);
    REQUIRE(f->l->l->kind == Formula::And);
    CHECK(f->l->l->l->kind == Formula::Not);
    // quantifier bodies extend to the right
    auto q = parse_formula("exists va in x0 . va in x1 and x1 in va");
    REQUIRE(q->kind == Formula::Exists);
    CHECK(q->l->kind == Formula::And);
}

TEST_CASE("print and reparse") {
    for (const char* t : {"x0 in x1", "forall va in x0 . exists vb in x1 . va in vb", "not x0 = x1 or x1 sub x0",
                          "x0 in x1 -> x1 in x0 -> x0 = x1", "exists v in x0 . (v = x1 and not v in v)"}) {
        auto f = parse_formula(t);
        CHECK(same_formula(parse_formula(to_string(f)), f));
    }
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_formula("x0 in"), ParseError);
    CHECK_THROWS_AS(parse_formula("w in x0"), ParseError);
    CHECK_THROWS_AS(parse_formula("forall x0 in x1 . x0 = x0"), ParseError);
    try {
        parse_formula("x0 in in");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("free variables and slots") {
    auto f = parse_formula("exists v in vr . v = x2");
    CHECK(free_vars(f) == std::set<std::string>{"r"});
    CHECK(max_slot(f) == 2);
    auto s = shift_slots(f, 1);
    CHECK(max_slot(s) == 3);
}

TEST_CASE("evaluation against direct set computations") {
    CHECK(eval(parse_formula("x0 in x1"), {hf_empty(), hf_ordinal(1)}));
    CHECK(eval(parse_formula("x0 sub x1"), {hf_ordinal(1), hf_ordinal(2)}));
    CHECK_FALSE(eval(parse_formula("exists v in x0 . v = v"), {hf_empty()}));
    auto lv = hf_level(4);
    auto inter = parse_formula("exists v in x0 . v in x1");
    auto trans = parse_formula("forall va in x0 . forall vb in va . vb in x0");
    auto ext = parse_formula("x0 = x1 -> x0 sub x1 and x1 sub x0");
    for (Hf a : lv) {
        auto A = oracle::from_hf(a);
        bool transitive = true;
        for (const auto& y : A.m)
            for (const auto& z : y.m) transitive = transitive && oracle::member(z, A);
        CHECK(eval(trans, {a}) == transitive);
        for (Hf b : lv) {
            auto B = oracle::from_hf(b);
            bool meet = false;
            for (const auto& y : A.m) meet = meet || oracle::member(y, B);
            CHECK(eval(inter, {a, b}) == meet);
            CHECK(eval(ext, {a, b}));
        }
    }
}
