#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pl/errors.hpp"
#include "pl/gen.hpp"
#include "pl/oracle.hpp"

using namespace pl;

TEST_CASE("brute_envelope of a singleton") {
    auto env = oracle::brute_envelope({PseudoLine::line("a", 1, 0)});
    REQUIRE(env.size() == 1);
    CHECK(env[0].left == Point::neg_inf());
    CHECK(env[0].right == Point::pos_inf());
}

TEST_CASE("brute_envelope of two lines") {
    auto env = oracle::brute_envelope({PseudoLine::line("a", 2, 0), PseudoLine::line("b", 1, 1)});
    REQUIRE(env.size() == 2);
    CHECK(env[0].line.id == "a");
    CHECK(env[1].line.id == "b");
    CHECK(env[0].right == Point::finite(1, 2));
    CHECK(env[1].left == Point::finite(1, 2));
}

TEST_CASE("brute_envelope of two congruent parabolas") {
    auto env =
        oracle::brute_envelope({PseudoLine::parabola("p", 0, 0), PseudoLine::parabola("q", 1, 0)});
    REQUIRE(env.size() == 2);
    CHECK(env[0].line.id == "p");
    CHECK(env[0].right == Point::finite(Rational(1, 2), Rational(1, 4)));
}

TEST_CASE("brute_envelope drops dominated curves") {
    auto env = oracle::brute_envelope({PseudoLine::line("a", 1, 0), PseudoLine::line("b", -1, 0),
                                       PseudoLine::line("c", 0, 100)});
    REQUIRE(env.size() == 2);
    CHECK(env[0].line.id == "a");
    CHECK(env[1].line.id == "b");
}

TEST_CASE("brute_envelope rejects inadmissible input") {
    CHECK_THROWS_AS(
        oracle::brute_envelope({PseudoLine::line("a", 1, 0), PseudoLine::line("b", 1, 5)}),
        InadmissiblePair);
    CHECK_THROWS_AS(oracle::brute_envelope({}), PreconditionViolation);
}

TEST_CASE("brute_envelope matches the pointwise minimum on random sets") {
    gen::Rng rng(31);
    for (Family fam : {Family::Line, Family::Parabola}) {
        for (int it = 0; it < 40; ++it) {
            auto set = gen::random_admissible_set(rng, fam, 1 + rng.below(20));
            auto env = oracle::brute_envelope(set);
            // contiguity and coverage
            CHECK(env.front().left == Point::neg_inf());
            CHECK(env.back().right == Point::pos_inf());
            for (std::size_t i = 0; i + 1 < env.size(); ++i) CHECK(env[i].right == env[i + 1].left);
            for (int k = 0; k < 50; ++k) {
                Rational x(rng.range(-500, 500), rng.range(1, 4));
                Rational min = evaluate(set[0], x);
                for (const auto& c : set) {
                    Rational y = evaluate(c, x);
                    if (y < min) min = y;
                }
                const PseudoLine& at = oracle::brute_ray_shoot(set, x);
                CHECK(evaluate(at, x) == min);
            }
        }
    }
}

TEST_CASE("brute_ray_shoot on the four-line set") {
    std::vector<PseudoLine> set = {PseudoLine::line("a", 2, 0), PseudoLine::line("b", 1, 1),
                                   PseudoLine::line("c", -1, 4), PseudoLine::line("d", -2, 2)};
    CHECK(oracle::brute_ray_shoot(set, Rational(0)).id == "a");
    CHECK(oracle::brute_ray_shoot(set, Rational(10)).id == "d");
    CHECK(oracle::brute_ray_shoot({PseudoLine::line("only", 3, 7)}, Rational(-9)).id == "only");
}

TEST_CASE("brute_intersection of two singletons") {
    auto li = oracle::brute_intersection(oracle::brute_envelope({PseudoLine::line("a", 1, 0)}),
                                         oracle::brute_envelope({PseudoLine::line("b", -1, 0)}));
    CHECK(li.q == Point::finite(0, 0));
    CHECK(li.left_line.id == "a");
    CHECK(li.right_line.id == "b");
}

TEST_CASE("brute_intersection on the four-line pair") {
    auto le = oracle::brute_envelope({PseudoLine::line("a", 2, 0), PseudoLine::line("b", 1, 1)});
    auto re = oracle::brute_envelope({PseudoLine::line("c", -1, 4), PseudoLine::line("d", -2, 2)});
    auto li = oracle::brute_intersection(le, re);
    CHECK(li.q == Point::finite(Rational(1, 2), Rational(1)));
    CHECK(li.left_line.id == "a");
    CHECK(li.right_line.id == "d");
}

TEST_CASE("brute_intersection point lies on both envelopes") {
    gen::Rng rng(32);
    for (Family fam : {Family::Line, Family::Parabola}) {
        for (int it = 0; it < 60; ++it) {
            auto [le, re] =
                gen::separated_envelope_pair(rng, fam, 1 + rng.below(20), 1 + rng.below(20));
            auto li = oracle::brute_intersection(le, re);
            CHECK(evaluate(li.left_line, li.q.x) == li.q.y);
            CHECK(evaluate(li.right_line, li.q.x) == li.q.y);
            // q.y is the pointwise minimum of the union at q.x
            for (const auto* env : {&le, &re})
                for (const EnvelopeSegment& s : *env) CHECK(evaluate(s.line, li.q.x) >= li.q.y);
        }
    }
}

TEST_CASE("true_paths on singletons") {
    EnvelopeTree l = EnvelopeTree::singleton(PseudoLine::line("a", 1, 0));
    EnvelopeTree r = EnvelopeTree::singleton(PseudoLine::line("b", -1, 0));
    auto [pl_path, pr_path] = oracle::true_paths(l, r);
    REQUIRE(pl_path.size() == 1);
    REQUIRE(pr_path.size() == 1);
    CHECK(pl_path[0] == l.root());
    CHECK(pr_path[0] == r.root());
}

TEST_CASE("true_paths end at the oracle's leaf pair") {
    gen::Rng rng(33);
    for (int it = 0; it < 40; ++it) {
        Family fam = it % 2 ? Family::Parabola : Family::Line;
        auto [le, re] =
            gen::separated_envelope_pair(rng, fam, 1 + rng.below(30), 1 + rng.below(30));
        auto li = oracle::brute_intersection(le, re);
        EnvelopeTree lt = gen::tree_from_description(le);
        EnvelopeTree rt = gen::tree_from_description(re);
        auto [pl_path, pr_path] = oracle::true_paths(lt, rt);
        REQUIRE(pl_path.back()->is_leaf());
        REQUIRE(pr_path.back()->is_leaf());
        CHECK(pl_path.back()->seg.line.id == li.left_line.id);
        CHECK(pr_path.back()->seg.line.id == li.right_line.id);
        CHECK(pl_path.front() == lt.root());
        CHECK(pr_path.front() == rt.root());
    }
}
