#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pl/errors.hpp"
#include "pl/gen.hpp"
#include "pl/geometry.hpp"

using namespace pl;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-2").str() == "-2");
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("0").sign() == 0);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("evaluate") {
    CHECK(evaluate(PseudoLine::line("a", 1, 0), Rational(0)) == Rational(0));
    CHECK(evaluate(PseudoLine::parabola("p", 0, 0), Rational(2)) == Rational(4));
    CHECK(evaluate(PseudoLine::line("a", -2, 2), Rational(1, 2)) == Rational(1));
}

TEST_CASE("cross") {
    CHECK(cross(PseudoLine::line("a", 1, 0), PseudoLine::line("b", -1, 0)) ==
          Point::finite(0, 0));
    CHECK(cross(PseudoLine::parabola("p", 0, 0), PseudoLine::parabola("q", 1, 0)) ==
          Point::finite(Rational(1, 2), Rational(1, 4)));
    CHECK(cross(PseudoLine::line("a", 2, 0), PseudoLine::line("b", -2, 2)) ==
          Point::finite(Rational(1, 2), Rational(1)));
}

TEST_CASE("cross rejects bad pairs") {
    CHECK_THROWS_AS(cross(PseudoLine::line("a", 2, 0), PseudoLine::line("b", 2, 5)),
                    InadmissiblePair);
    CHECK_THROWS_AS(cross(PseudoLine::parabola("p", 1, 0), PseudoLine::parabola("q", 1, 3)),
                    InadmissiblePair);
    CHECK_THROWS_AS(cross(PseudoLine::line("a", 1, 0), PseudoLine::parabola("p", 0, 0)),
                    FamilyMismatch);
    CHECK_THROWS_AS(below_at_neg_inf(PseudoLine::line("a", 1, 0), PseudoLine::line("b", 1, 2)),
                    InadmissiblePair);
}

TEST_CASE("below_at_neg_inf") {
    CHECK(below_at_neg_inf(PseudoLine::line("a", 1, 0), PseudoLine::line("b", -1, 0)));
    CHECK(below_at_neg_inf(PseudoLine::parabola("p", 0, 0), PseudoLine::parabola("q", 1, 0)));
    CHECK_FALSE(below_at_neg_inf(PseudoLine::line("a", -1, 0), PseudoLine::line("b", 1, 100)));
}

TEST_CASE("min2_at") {
    PseudoLine a = PseudoLine::line("a", 1, 0), b = PseudoLine::line("b", -1, 0);
    CHECK(min2_at(a, b, Rational(1)) == Rational(-1));
    CHECK(min2_at(a, b, Rational(0)) == Rational(0));
    CHECK(min2_at(PseudoLine::parabola("p", 0, 0), PseudoLine::parabola("q", 1, 0), Rational(0)) ==
          Rational(0));
}

TEST_CASE("point x comparisons with sentinels") {
    CHECK(cmp_x(Point::neg_inf(), Rational(-1000000)) < 0);
    CHECK(cmp_x(Point::pos_inf(), Rational(1000000)) > 0);
    CHECK(cmp_x(Point::finite(1, 2), Rational(1)) == 0);
    CHECK(x_less(Point::neg_inf(), Point::finite(0, 0)));
    CHECK(x_less(Point::finite(0, 0), Point::pos_inf()));
    CHECK_FALSE(x_less(Point::neg_inf(), Point::neg_inf()));
    CHECK(x_less_eq(Point::finite(1, 5), Point::finite(1, 7)));
}

TEST_CASE("order totality and transitivity on random triples") {
    gen::Rng rng(11);
    for (Family fam : {Family::Line, Family::Parabola}) {
        for (int it = 0; it < 500; ++it) {
            auto set = gen::random_admissible_set(rng, fam, 3);
            const PseudoLine &a = set[0], &b = set[1], &c = set[2];
            CHECK(below_at_neg_inf(a, b) != below_at_neg_inf(b, a));
            if (below_at_neg_inf(a, b) && below_at_neg_inf(b, c))
                CHECK(below_at_neg_inf(a, c));
        }
    }
}

TEST_CASE("single crossing: constant sign per side, reversed beyond it") {
    gen::Rng rng(12);
    for (Family fam : {Family::Line, Family::Parabola}) {
        for (int it = 0; it < 500; ++it) {
            auto set = gen::random_admissible_set(rng, fam, 2);
            const PseudoLine &a = set[0], &b = set[1];
            Point q = cross(a, b);
            CHECK(evaluate(a, q.x) == q.y);
            CHECK(evaluate(b, q.x) == q.y);
            bool a_below = below_at_neg_inf(a, b);
            for (int s = 0; s < 20; ++s) {
                Rational d(rng.range(1, 400), rng.range(1, 4));
                Rational xl = q.x - d, xr = q.x + d;
                CHECK((evaluate(a, xl) < evaluate(b, xl)) == a_below);
                CHECK((evaluate(a, xr) > evaluate(b, xr)) == a_below);
            }
        }
    }
}
