#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pl/cli.hpp"
#include "pl/dynamic_envelope.hpp"
#include "pl/errors.hpp"
#include "pl/gen.hpp"
#include "pl/oracle.hpp"

using namespace pl;

namespace {

void check_against_oracle(const DynamicEnvelope& s, const std::vector<PseudoLine>& set) {
    auto got = s.envelope().segments();
    auto want = oracle::brute_envelope(set);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].line.id == want[i].line.id);
        CHECK(got[i].left == want[i].left);
        CHECK(got[i].right == want[i].right);
    }
}

}  // namespace

TEST_CASE("insert into empty makes a one-leaf envelope") {
    DynamicEnvelope s(Family::Line);
    CHECK(s.empty());
    s.insert(PseudoLine::line("a", 1, 2));
    CHECK(s.size() == 1);
    CHECK(s.ray_shoot(Rational(-100)).id == "a");
    CHECK(s.ray_shoot(Rational(100)).id == "a");
    CHECK(s.total_lambda_leaves() == 1);
    s.validate();
}

TEST_CASE("two crossing lines") {
    DynamicEnvelope s(Family::Line);
    s.insert(PseudoLine::line("a", 2, 0));
    s.insert(PseudoLine::line("b", -2, 2));
    CHECK(s.envelope().dump() == "a@[-inf,1/2] b@[1/2,+inf]");
    s.validate();
}

TEST_CASE("insert error cases") {
    DynamicEnvelope s(Family::Line);
    s.insert(PseudoLine::line("a", 2, 0));
    CHECK_THROWS_AS(s.insert(PseudoLine::line("b", 2, 5)), InadmissiblePair);
    CHECK_THROWS_AS(s.insert(PseudoLine::line("a", 3, 0)), DuplicateId);
    CHECK_THROWS_AS(s.insert(PseudoLine::parabola("p", 0, 0)), FamilyMismatch);
    CHECK(s.size() == 1);
    s.validate();
}

TEST_CASE("delete to empty") {
    DynamicEnvelope s(Family::Parabola);
    s.insert(PseudoLine::parabola("p", 0, 0));
    s.erase("p");
    CHECK(s.empty());
    CHECK(s.total_lambda_leaves() == 0);
    CHECK_THROWS_AS(s.ray_shoot(Rational(0)), EmptyStructure);
    CHECK_THROWS_AS(s.erase("p"), UnknownId);
    s.validate();
}

TEST_CASE("delete from the four-line set") {
    DynamicEnvelope s(Family::Line);
    std::vector<PseudoLine> set = {PseudoLine::line("a", 2, 0), PseudoLine::line("b", 1, 1),
                                   PseudoLine::line("c", -1, 4), PseudoLine::line("d", -2, 2)};
    for (const auto& c : set) s.insert(c);
    check_against_oracle(s, set);
    s.erase("d");
    set.pop_back();
    check_against_oracle(s, set);
    CHECK(s.total_lambda_leaves() == 3);
    s.validate();
}

TEST_CASE("ray shooting on the four-line set") {
    DynamicEnvelope s(Family::Line);
    s.insert(PseudoLine::line("a", 2, 0));
    s.insert(PseudoLine::line("b", 1, 1));
    s.insert(PseudoLine::line("c", -1, 4));
    s.insert(PseudoLine::line("d", -2, 2));
    CHECK(s.ray_shoot(Rational(0)).id == "a");
    CHECK(s.ray_shoot(Rational(10)).id == "d");
}

TEST_CASE("members round trip") {
    DynamicEnvelope s(Family::Line);
    s.insert(PseudoLine::line("a", 1, 0));
    s.insert(PseudoLine::line("b", 2, 0));
    auto m = s.members();
    REQUIRE(m.size() == 2);
    CHECK((m[0].id == "a" || m[1].id == "a"));
    CHECK((m[0].id == "b" || m[1].id == "b"));
}

TEST_CASE("validate passes on empty and populated structures") {
    DynamicEnvelope s(Family::Line);
    s.validate();
    gen::Rng rng(51);
    auto set = gen::random_admissible_set(rng, Family::Line, 40);
    for (const auto& c : set) {
        s.insert(c);
        s.validate();
    }
    CHECK(s.total_lambda_leaves() == 40);
}

TEST_CASE("validate detects a corrupted max pointer") {
    DynamicEnvelope s(Family::Line);
    s.insert(PseudoLine::line("a", 2, 0));
    s.insert(PseudoLine::line("b", 1, 1));
    s.insert(PseudoLine::line("c", -1, 4));
    PseudoLine* max = DynamicEnvelopeTestAccess::root_max(s);
    REQUIRE(max != nullptr);
    *max = PseudoLine::line("zz", 99, 99);
    CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("interleaved fuzzing against the oracle") {
    gen::Rng rng(52);
    for (Family fam : {Family::Line, Family::Parabola}) {
        DynamicEnvelope s(fam);
        std::vector<PseudoLine> set;
        std::set<std::string> ids;
        for (int step = 0; step < 120; ++step) {
            bool ins = set.empty() || (set.size() < 24 && rng.chance(60));
            if (ins) {
                Rational key;
                bool fresh = false;
                while (!fresh) {
                    key = Rational(rng.range(-60, 60), rng.chance(50) ? 1 : 2);
                    fresh = true;
                    for (const auto& c : set) fresh = fresh && !(c.a == key);
                }
                std::string id = "c" + std::to_string(step);
                PseudoLine c = fam == Family::Line
                                   ? PseudoLine::line(id, key, Rational(rng.range(-40, 40)))
                                   : PseudoLine::parabola(id, key, Rational(rng.range(-40, 40)));
                s.insert(c);
                set.push_back(c);
            } else {
                std::size_t victim = rng.below(set.size());
                s.erase(set[victim].id);
                set.erase(set.begin() + static_cast<long>(victim));
            }
            CHECK(s.total_lambda_leaves() == set.size());
            s.validate();
            if (!set.empty()) {
                check_against_oracle(s, set);
                for (int k = 0; k < 20; ++k) {
                    Rational x(rng.range(-200, 200), rng.range(1, 3));
                    CHECK(s.ray_shoot(x).id == oracle::brute_ray_shoot(set, x).id);
                }
            }
        }
    }
}

TEST_CASE("the cli fuzz driver agrees") {
    cli::FuzzOptions opt;
    opt.seed = 99;
    opt.cases = 24;
    opt.max_n = 32;
    CHECK_FALSE(cli::fuzz(opt).has_value());
}
