#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrr/expr.hpp"
#include "qrr/registry.hpp"
#include "qrr/rogers_ramanujan.hpp"

using namespace qrr;

namespace {
bool same(const Series& a, const Series& b) {
    return is_zero(sub(a, b)).status == VerifyStatus::ZERO;
}
}  // namespace

TEST_CASE("parse shapes") {
    ExprPtr e = parse("R(q)*R(q^4)");
    REQUIRE(e->kind == ExprNode::Kind::Mul);
    CHECK(e->a->kind == ExprNode::Kind::Atom);
    CHECK(e->a->atom == "R");
    CHECK(e->a->args[0].k == 1);
    CHECK(e->b->args[0].k == 4);

    ExprPtr f = parse("f(-q^7,-q^8)+q*f(-q^2,-q^13)");
    REQUIRE(f->kind == ExprNode::Kind::Add);
    CHECK(f->a->atom == "f");
    CHECK(f->a->args[0].sign == -1);
    CHECK(f->a->args[1].k == 8);

    ExprPtr g = parse("(R(q^5)+R(q^20)-R(q^5)*R(q^20))/(1+R(q^5)+R(q^20))");
    CHECK(g->kind == ExprNode::Kind::Div);
    CHECK(g->a->kind == ExprNode::Kind::Sub);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("G(q) +"), ParseError);
    CHECK_THROWS_AS(parse("Q(q)"), UnknownAtom);
    CHECK_THROWS_AS(parse("G(q^0)"), ParseError);
    CHECK_THROWS_AS(parse("1 @ 2"), ParseError);
    CHECK_THROWS_AS(parse("q^(1/3)"), ParseError);
    CHECK_THROWS_AS(parse("f(q)"), ParseError);
    try {
        parse("G(q) + %");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("print round-trips") {
    for (const char* text : {
             "R(q)*R(q^4)",
             "(R(q^5) + R(q^20) - R(q^5)*R(q^20))/(1 + R(q^5) + R(q^20))",
             "f(-q^7,-q^8) + q*f(-q^2,-q^13)",
             "q^(3/5)*G(q)^2/(1 - H(q^2))^3",
             "negq(T(q)) - -T(q^4)",
             "poch(-q,q^2)*chi(q^3)",
             "2 - q^(-1/5)",
         }) {
        ExprPtr e = parse(text);
        ExprPtr back = parse(print_canonical(e));
        CHECK(structurally_equal(e, back));
    }
}

TEST_CASE("print round-trips on the whole registry") {
    Registry reg = Registry::load_default();
    for (const auto& entry : reg.entries()) {
        CHECK(structurally_equal(entry.lhs, parse(print_canonical(entry.lhs))));
        CHECK(structurally_equal(entry.rhs, parse(print_canonical(entry.rhs))));
    }
}

TEST_CASE("integrality analysis picks the lattice") {
    CHECK(is_integral(parse("G(q)*H(q^2) - fm(q)")));
    CHECK(is_integral(parse("T(q)*negq(T(q))")));
    CHECK(!is_integral(parse("R(q)")));
    CHECK(!is_integral(parse("q^(2/5) + 1")));
    CHECK(evaluate(parse("G(q)"), 100).denom == 1);
    CHECK(evaluate(parse("R(q)"), 100).denom == 5);
}

TEST_CASE("evaluate basics") {
    Series q = evaluate(parse("q"), 50);
    Rational o = q_order(q);
    CHECK(o.num == 1);
    CHECK(o.den == 1);

    Series r = evaluate(parse("R(q)"), 100);
    Rational ro = q_order(r);
    CHECK(ro.num == 1);
    CHECK(ro.den == 5);

    // evaluate is a homomorphism over the kernel ops
    Series prod = evaluate(parse("G(q)*H(q)"), 150);
    Series parts = mul(evaluate(parse("G(q)"), 200), evaluate(parse("H(q)"), 200));
    CHECK(same(prod, crop(parts, prod.order_bound)));

    Series quot = evaluate(parse("fm(q^5)/fm(q)"), 150);
    CHECK(same(prod, crop(quot, prod.order_bound)));
}

TEST_CASE("signed atom arguments") {
    CHECK(same(evaluate(parse("G(-q)"), 100), negate_q(evaluate(parse("G(q)"), 100))));
    CHECK(same(evaluate(parse("G(-q^4)"), 100),
               crop(substitute_power(negate_q(G(1, 25, 1)), 4), 20)));
    CHECK_THROWS_AS(evaluate(parse("R(-q)"), 50), FractionalExponent);
    CHECK_THROWS_AS(evaluate(parse("negq(R(q))"), 50), FractionalExponent);
}

TEST_CASE("margin rule keeps requested orders exact") {
    // 1/fm(q) shifts nothing; heavy quotients still come back exact to N
    for (const char* text : {
             "1/(G(q)*H(q))^3",
             "T(q)^5/(1 - q*T(q^5))",
             "R(q)^2*R(q^2)/R(q^4)",
             "q^(-3/5)*R(q)^3",
         }) {
        Series lo_s = evaluate(parse(text), 60);
        Series hi_s = evaluate(parse(text), 240);
        CHECK(lo_s.order_bound * 5 / lo_s.denom >= 60);
        CHECK(same(lo_s, crop(hi_s, lo_s.order_bound * hi_s.denom / lo_s.denom)));
    }
}

TEST_CASE("verify_pair") {
    VerifyOutcome ok = verify_pair(parse("G(q)*H(q)"), parse("fm(q^5)/fm(q)"), 250);
    CHECK(ok.status == VerifyStatus::ZERO);

    VerifyOutcome bad = verify_pair(parse("G(q)"), parse("H(q)"), 100);
    REQUIRE(bad.status == VerifyStatus::NONZERO);
    CHECK(bad.first_nonzero_exponent.num == 1);
    CHECK(bad.first_nonzero_exponent.den == 1);
    CHECK(bad.first_nonzero_coefficient == 1);

    // prefix imbalance surfaces as a fractional first exponent
    VerifyOutcome imb = verify_pair(parse("R(q)"), parse("q*T(q)"), 100);
    REQUIRE(imb.status == VerifyStatus::NONZERO);
    CHECK(imb.first_nonzero_exponent.den == 5);
}

TEST_CASE("division by a non-unit-leading denominator is loud") {
    CHECK_THROWS_AS(evaluate(parse("1/(2 + q)"), 50), NonUnitLeading);
    CHECK_THROWS_AS(evaluate(parse("G(q)/(R(q^2) + R(q)^2)"), 50), NonUnitLeading);
}
