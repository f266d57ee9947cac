#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pl/errors.hpp"
#include "pl/gen.hpp"
#include "pl/oracle.hpp"
#include "pl/tentative_search.hpp"

using namespace pl;

namespace {

LambdaNode leaf_node(PseudoLine l, Point left, Point right) {
    LambdaNode n;
    n.seg = EnvelopeSegment{std::move(l), std::move(left), std::move(right)};
    return n;
}

}  // namespace

TEST_CASE("classify: sentinels are below everything") {
    LambdaNode u = leaf_node(PseudoLine::line("a", 1, 0), Point::neg_inf(), Point::finite(9, 9));
    LambdaNode v = leaf_node(PseudoLine::line("b", -1, 0), Point::finite(-9, 9), Point::pos_inf());
    CHECK(classify(&u, &v) == CaseLabel::Case3);
}

TEST_CASE("classify: u.p on or above L(v)") {
    LambdaNode u = leaf_node(PseudoLine::line("a", 2, 0), Point::finite(1, 2), Point::pos_inf());
    LambdaNode v = leaf_node(PseudoLine::line("b", -2, 2), Point::finite(-9, 20), Point::pos_inf());
    CHECK(classify(&u, &v) == CaseLabel::Case1);
}

TEST_CASE("classify: v.p on or above L(u)") {
    LambdaNode u = leaf_node(PseudoLine::line("a", 2, 0), Point::neg_inf(), Point::pos_inf());
    LambdaNode v = leaf_node(PseudoLine::line("b", -2, 2), Point::neg_inf(), Point::finite(-1, 4));
    CHECK(classify(&u, &v) == CaseLabel::Case2);
}

TEST_CASE("two singletons meet in one iteration") {
    EnvelopeTree l = EnvelopeTree::singleton(PseudoLine::line("a", 1, 0));
    EnvelopeTree r = EnvelopeTree::singleton(PseudoLine::line("b", -1, 0));
    SearchStats st;
    Intersection q = find_intersection(l, r, &st);
    CHECK(q.q == Point::finite(0, 0));
    CHECK(q.left_line.id == "a");
    CHECK(q.right_line.id == "b");
    CHECK(st.iterations == 1);
}

TEST_CASE("four-line golden case") {
    EnvelopeTree l = gen::tree_from_description(
        oracle::brute_envelope({PseudoLine::line("a", 2, 0), PseudoLine::line("b", 1, 1)}));
    EnvelopeTree r = gen::tree_from_description(
        oracle::brute_envelope({PseudoLine::line("c", -1, 4), PseudoLine::line("d", -2, 2)}));
    Intersection q = find_intersection(l, r);
    CHECK(q.q == Point::finite(Rational(1, 2), Rational(1)));
    CHECK(q.left_line.id == "a");
    CHECK(q.right_line.id == "d");
}

TEST_CASE("parabola golden case") {
    EnvelopeTree l = gen::tree_from_description(
        oracle::brute_envelope({PseudoLine::parabola("p0", 0, 0), PseudoLine::parabola("p1", 1, -1)}));
    EnvelopeTree r = gen::tree_from_description(
        oracle::brute_envelope({PseudoLine::parabola("p2", 2, -1), PseudoLine::parabola("p3", 3, 0)}));
    Intersection q = find_intersection(l, r);
    CHECK(q.q == Point::finite(Rational(3, 2), Rational(-3, 4)));
    CHECK(q.left_line.id == "p1");
    CHECK(q.right_line.id == "p2");
}

TEST_CASE("q at a breakpoint of the left envelope") {
    // 2x, x+1 and -x+3 are concurrent at (1,2); the right-closed convention
    // makes the first line the owner on the left side.
    EnvelopeTree l = gen::tree_from_description(
        oracle::brute_envelope({PseudoLine::line("a", 2, 0), PseudoLine::line("b", 1, 1)}));
    EnvelopeTree r = gen::tree_from_description(oracle::brute_envelope({PseudoLine::line("c", -1, 3)}));
    Intersection q = find_intersection(l, r);
    CHECK(q.q == Point::finite(1, 2));
    CHECK(q.left_line.id == "a");
    CHECK(q.right_line.id == "c");
}

TEST_CASE("empty input is rejected") {
    EnvelopeTree l = EnvelopeTree::singleton(PseudoLine::line("a", 1, 0));
    EnvelopeTree empty;
    CHECK_THROWS_AS(find_intersection(l, empty), PreconditionViolation);
}

TEST_CASE("matches the oracle with bounded steps on random pairs") {
    gen::Rng rng(41);
    for (int it = 0; it < 400; ++it) {
        Family fam = it % 2 ? Family::Parabola : Family::Line;
        auto [le, re] =
            gen::separated_envelope_pair(rng, fam, 1 + rng.below(64), 1 + rng.below(64));
        auto want = oracle::brute_intersection(le, re);
        EnvelopeTree lt = gen::tree_from_description(le);
        EnvelopeTree rt = gen::tree_from_description(re);
        SearchStats st;
        Intersection got = find_intersection(lt, rt, &st);
        CHECK(got.q == want.q);
        CHECK(got.left_line.id == want.left_line.id);
        CHECK(got.right_line.id == want.right_line.id);
        CHECK(st.iterations <= 2u * static_cast<unsigned>(lt.height() + rt.height() + 2));
        CHECK(st.classify_calls <= 2 * st.iterations);
    }
}

TEST_CASE("trace checks hold on random runs") {
    gen::Rng rng(42);
    for (int it = 0; it < 200; ++it) {
        Family fam = it % 2 ? Family::Parabola : Family::Line;
        auto [le, re] =
            gen::separated_envelope_pair(rng, fam, 1 + rng.below(48), 1 + rng.below(48));
        EnvelopeTree lt = gen::tree_from_description(le);
        EnvelopeTree rt = gen::tree_from_description(re);
        SearchTrace trace;
        find_intersection(lt, rt, nullptr, &trace);
        auto [pl_path, pr_path] = oracle::true_paths(lt, rt);
        TraceChecks c = check_trace(trace, lt, rt, pl_path, pr_path);
        CHECK(c.invariant1);
        CHECK(c.progress);
        CHECK(c.push_discipline);
        CHECK(check_invariant1(trace, lt, rt, pl_path, pr_path));
    }
}

TEST_CASE("corrupted traces are detected") {
    gen::Rng rng(43);
    auto [le, re] = gen::separated_envelope_pair(rng, Family::Line, 32, 32);
    EnvelopeTree lt = gen::tree_from_description(le);
    EnvelopeTree rt = gen::tree_from_description(re);
    SearchTrace trace;
    find_intersection(lt, rt, nullptr, &trace);
    auto [pl_path, pr_path] = oracle::true_paths(lt, rt);
    REQUIRE(check_invariant1(trace, lt, rt, pl_path, pr_path));

    SearchTrace wrong_star = trace;
    wrong_star.u_star = rt.root();  // not the correct left leaf
    CHECK_FALSE(check_invariant1(wrong_star, lt, rt, pl_path, pr_path));

    SearchTrace bogus_push = trace;
    bogus_push.steps[0].u_stack.push_back(lt.root());  // overlapping coverage
    CHECK_FALSE(check_invariant1(bogus_push, lt, rt, pl_path, pr_path));

    SearchTrace empty;
    CHECK_FALSE(check_invariant1(empty, lt, rt, pl_path, pr_path));
}
