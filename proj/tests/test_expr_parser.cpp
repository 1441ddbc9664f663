#include <doctest.h>

#include "condsym/normal.hpp"
#include "condsym/parser.hpp"
#include "support.hpp"

using namespace condsym;

TEST_CASE("grammar basics") {
    Expr q = parse("x1/x0");
    // quotient comes out as x1 * x0^(-1)
    CHECK(q.kind() == Kind::Prod);
    CHECK(format(q) == "x1*x0^(-1)");

    Expr d = parse("D[phi,1,1]");
    CHECK(d.kind() == Kind::App);
    CHECK(d.symbol() == sym::phi());
    CHECK(d.derivs() == std::vector<std::uint8_t>{1, 1});
    CHECK(d.kids().empty());

    CHECK(parse("1/2").rat() == Rational(1, 2));
    CHECK(parse("alpha*(alpha+1)").kind() == Kind::Prod);
    CHECK(parse("phi(w1,w2)").kids().size() == 2);
    CHECK(parse("-3").rat() == Rational(-3));
    CHECK(parse("x0^-2").kind() == Kind::Pow);
    CHECK(parse("sqrt(w^2-1)").kind() == Kind::Sqrt);
}

TEST_CASE("derivative marker indices are sorted canonically") {
    CHECK(struct_eq(parse("D[phi,2,1]"), parse("D[phi,1,2]")));
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse("ln(x0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6); // 1-based, just past the unbalanced paren
    }
    try {
        parse("x1 + zz");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6); // points at the unknown identifier
    }
    CHECK_THROWS_AS(parse("x1 +"), ParseError);
    CHECK_THROWS_AS(parse("D[phi]"), ParseError);
    CHECK_THROWS_AS(parse("D[w1,1]"), ParseError); // w1 is not a function symbol
    CHECK_THROWS_AS(parse("x1 x2"), ParseError);   // trailing input
}

TEST_CASE("round trip: parse(format(e)) is normalize-equal to e") {
    testsupport::ExprGen gen(20260811, true);
    int good = 0;
    for (int i = 0; i < 200; ++i) {
        Expr e = gen.gen(3);
        Expr back = parse(format(e));
        CHECK(equal_modulo_normal(e, back));
        ++good;
    }
    CHECK(good == 200);
}

TEST_CASE("round trip on canonical forms is structural") {
    testsupport::ExprGen gen(99, true);
    for (int i = 0; i < 100; ++i) {
        Expr canonical = simplified(gen.gen(3));
        Expr back = parse(format(canonical));
        CHECK(struct_eq(simplified(back), canonical));
    }
}

TEST_CASE("symbol queries") {
    Expr e = parse("x0^alpha*phi(x1/x0)");
    CHECK(mentions_symbol(e, sym::alpha()));
    CHECK(mentions_symbol(e, sym::phi()));
    CHECK(!mentions_symbol(e, sym::psi()));
    CHECK(jet_order(parse("D[u,0,0] + D[u,1]"), sym::u()) == 2);
    CHECK(jet_order(parse("u"), sym::u()) == 0);
}

TEST_CASE("parser never crashes on arbitrary input") {
    // byte soup assembled from grammar fragments and junk; every input must
    // either parse or raise ParseError
    testsupport::ExprGen gen(13579);
    const char* frags[] = {"x0", "w1", "phi", "D[", "]", "(", ")", "+", "-", "*", "/",
                           "^",  "1/2", "ln", "sqrt(", ",", "alpha", "9", "u", " ", "abs"};
    int parsed = 0, rejected = 0;
    for (int i = 0; i < 600; ++i) {
        std::string s;
        int len = 1 + static_cast<int>(gen.next() % 10);
        for (int j = 0; j < len; ++j) s += frags[gen.next() % (sizeof(frags) / sizeof(*frags))];
        try {
            (void)parse(s);
            ++parsed;
        } catch (const ParseError&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 600);
    CHECK(rejected > 0);
    CHECK(parsed > 0);
}
