#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "fuzzrp/reductive.hpp"

using namespace fuzzrp;

namespace {

constexpr double kTight = 1e-12;
constexpr double kSqrt03 = 0.5477225575051661;

const FuzzyRule kRule{DiscreteFuzzySet{1.0, 0.3, 0.0, 0.0, 0.0},
                      DiscreteFuzzySet{0.0, 0.0, 0.0, 0.3, 1.0}};
const DiscreteFuzzySet kTiltA{1.0, 0.2, 0.0, 0.0, 0.0};
const DiscreteFuzzySet kTiltB{0.0, 0.0, 0.0, 0.2, 1.0};

CaseSpec simple_case(int case_id, int class_id) {
    CaseSpec spec;
    spec.case_id = case_id;
    spec.class_id = class_id;
    return spec;
}

void check_close(const DiscreteFuzzySet& got, const std::vector<double>& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
        CAPTURE(k);
        CHECK(std::abs(got[k] - want[k]) <= kTight);
    }
}

DiscreteFuzzySet random_set(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> degrees(n);
    for (double& d : degrees) d = unit(rng);
    return DiscreteFuzzySet{degrees};
}

}  // namespace

TEST_CASE("cases 1-5 run forward, 6-10 backward") {
    for (int id = 1; id <= 5; ++id) CHECK(case_direction(id) == Direction::Fmp);
    for (int id = 6; id <= 10; ++id) CHECK(case_direction(id) == Direction::Fmt);
    CHECK_THROWS_AS(case_direction(0), std::invalid_argument);
    CHECK_THROWS_AS(case_direction(11), std::invalid_argument);
}

TEST_CASE("class membership swaps the complement cases for the tilted ones") {
    for (int id : {1, 2, 3, 6, 7, 8}) {
        CHECK(case_in_class(id, 1));
        CHECK(case_in_class(id, 2));
    }
    for (int id : {4, 9}) {
        CHECK(case_in_class(id, 1));
        CHECK_FALSE(case_in_class(id, 2));
    }
    for (int id : {5, 10}) {
        CHECK_FALSE(case_in_class(id, 1));
        CHECK(case_in_class(id, 2));
    }
    CHECK_THROWS_AS(case_in_class(1, 3), std::invalid_argument);
}

TEST_CASE("validation rejects misfiled or incomplete cases") {
    CHECK_THROWS_AS(validate_case(kRule, simple_case(4, 2)), std::invalid_argument);
    CHECK_THROWS_AS(validate_case(kRule, simple_case(10, 1)), std::invalid_argument);
    // tilted cases must carry their material
    CHECK_THROWS_AS(validate_case(kRule, simple_case(5, 2)), std::invalid_argument);
    CaseSpec five = simple_case(5, 2);
    five.tilted_premise = kTiltA;
    CHECK_THROWS_AS(validate_case(kRule, five), std::invalid_argument);
    five.tilted_target = DiscreteFuzzySet{0.0, 0.2};  // wrong size
    CHECK_THROWS_AS(validate_case(kRule, five), std::invalid_argument);
    five.tilted_target = kTiltB;
    CHECK_NOTHROW(validate_case(kRule, five));
    CHECK_THROWS_AS(validate_case(FuzzyRule{}, simple_case(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("premises follow the perturbation ladder") {
    check_close(generate_premise(kRule, simple_case(1, 1)), {1.0, 0.3, 0.0, 0.0, 0.0});
    check_close(generate_premise(kRule, simple_case(2, 1)), {1.0, 0.09, 0.0, 0.0, 0.0});
    check_close(generate_premise(kRule, simple_case(3, 1)), {1.0, kSqrt03, 0.0, 0.0, 0.0});
    check_close(generate_premise(kRule, simple_case(4, 1)), {0.0, 0.7, 1.0, 1.0, 1.0});
    check_close(generate_premise(kRule, simple_case(6, 1)), {1.0, 1.0, 1.0, 0.7, 0.0});
    check_close(generate_premise(kRule, simple_case(7, 1)), {1.0, 1.0, 1.0, 0.91, 0.0});
    check_close(generate_premise(kRule, simple_case(8, 1)),
                {1.0, 1.0, 1.0, 1.0 - kSqrt03, 0.0});
    check_close(generate_premise(kRule, simple_case(9, 1)), {0.0, 0.0, 0.0, 0.3, 1.0});
}

TEST_CASE("targets pair each premise with the matching perturbation") {
    check_close(expected_target(kRule, simple_case(1, 1), TargetMode::Hedged),
                {0.0, 0.0, 0.0, 0.3, 1.0});
    check_close(expected_target(kRule, simple_case(2, 1), TargetMode::Hedged),
                {0.0, 0.0, 0.0, 0.09, 1.0});
    check_close(expected_target(kRule, simple_case(3, 1), TargetMode::Hedged),
                {0.0, 0.0, 0.0, kSqrt03, 1.0});
    check_close(expected_target(kRule, simple_case(4, 1), TargetMode::Hedged),
                {1.0, 1.0, 1.0, 0.7, 0.0});
    check_close(expected_target(kRule, simple_case(6, 1), TargetMode::Hedged),
                {0.0, 0.7, 1.0, 1.0, 1.0});
    check_close(expected_target(kRule, simple_case(7, 1), TargetMode::Hedged),
                {0.0, 0.91, 1.0, 1.0, 1.0});
    check_close(expected_target(kRule, simple_case(8, 1), TargetMode::Hedged),
                {0.0, 1.0 - kSqrt03, 1.0, 1.0, 1.0});
    check_close(expected_target(kRule, simple_case(9, 1), TargetMode::Hedged),
                {1.0, 0.3, 0.0, 0.0, 0.0});
}

TEST_CASE("plain targets ignore the hedge") {
    for (int id : {1, 2, 3, 4}) {
        check_close(expected_target(kRule, simple_case(id, 1), TargetMode::Plain),
                    {0.0, 0.0, 0.0, 0.3, 1.0});
    }
    for (int id : {6, 7, 8, 9}) {
        check_close(expected_target(kRule, simple_case(id, 1), TargetMode::Plain),
                    {0.0, 0.7, 1.0, 1.0, 1.0});
    }
    const TargetPair pair = expected_targets(kRule, simple_case(2, 1));
    check_close(pair.hedged, {0.0, 0.0, 0.0, 0.09, 1.0});
    check_close(pair.plain, {0.0, 0.0, 0.0, 0.3, 1.0});
    CHECK_THROWS_AS(expected_target(kRule, simple_case(2, 1), TargetMode::Best),
                    std::invalid_argument);
}

TEST_CASE("error vector is the signed elementwise miss") {
    const auto err = error_vector(DiscreteFuzzySet{0.5, 0.0, 1.0},
                                  DiscreteFuzzySet{0.3, 0.2, 1.0});
    REQUIRE(err.size() == 3);
    CHECK(err[0] == doctest::Approx(0.2).epsilon(kTight));
    CHECK(err[1] == doctest::Approx(-0.2).epsilon(kTight));
    CHECK(err[2] == 0.0);
    CHECK_THROWS_AS(error_vector(DiscreteFuzzySet{0.5}, DiscreteFuzzySet{0.5, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("score at hand-checked points") {
    CHECK(rpcf_single(kRule.consequent, kRule.consequent) == 100.0);
    CHECK(rpcf_single(DiscreteFuzzySet{1.0, 0.0}, DiscreteFuzzySet{0.0, 1.0}) ==
          doctest::Approx(0.0).epsilon(kTight));
    CHECK(rpcf_single(DiscreteFuzzySet{1.0, 0.0, 0.0},
                      DiscreteFuzzySet{0.0, 1.0, 0.0}) ==
          doctest::Approx(100.0 / 3.0).epsilon(kTight));
    // the saturated backward conclusion against the negated antecedent
    CHECK(rpcf_single(DiscreteFuzzySet{1.0, 1.0, 1.0, 1.0, 1.0},
                      DiscreteFuzzySet{0.0, 0.7, 1.0, 1.0, 1.0}) ==
          doctest::Approx(74.0).epsilon(kTight));
    CHECK_THROWS_AS(rpcf_single(DiscreteFuzzySet{}, DiscreteFuzzySet{}),
                    std::invalid_argument);
}

TEST_CASE("score is bounded and maximal exactly on equality") {
    std::mt19937 rng(909);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = random_set(rng, 5);
        const auto t = random_set(rng, 5);
        const double score = rpcf_single(c, t);
        CHECK(score >= 0.0);
        CHECK(score <= 100.0);
        if (c == t) {
            CHECK(score == 100.0);
        } else {
            CHECK(score < 100.0);
        }
        CHECK(rpcf_single(c, c) == 100.0);
    }
}

TEST_CASE("aggregates are plain means") {
    const std::vector<double> scores{100.0, 95.8, 95.0, 26.0};
    CHECK(rpcf_aggregate(scores) == doctest::Approx(79.2).epsilon(kTight));
    CHECK(rpcf_overall(80.0, 60.0) == 70.0);
    CHECK_THROWS_AS(rpcf_aggregate(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("class rosters carry the tilted material where needed") {
    const auto class1 = make_class_cases(1, kRule, std::nullopt, std::nullopt);
    REQUIRE(class1.size() == 8);
    const std::vector<int> want1{1, 2, 3, 4, 6, 7, 8, 9};
    for (std::size_t k = 0; k < class1.size(); ++k) {
        CHECK(class1[k].case_id == want1[k]);
        CHECK(class1[k].class_id == 1);
        CHECK_FALSE(class1[k].tilted_premise.has_value());
    }

    const auto class2 = make_class_cases(2, kRule, kTiltA, kTiltB);
    REQUIRE(class2.size() == 8);
    const std::vector<int> want2{1, 2, 3, 5, 6, 7, 8, 10};
    for (std::size_t k = 0; k < class2.size(); ++k) {
        CHECK(class2[k].case_id == want2[k]);
    }
    // case 5 reasons from tilt(A) toward tilt(B)
    const CaseSpec& five = class2[3];
    REQUIRE(five.tilted_premise.has_value());
    CHECK(*five.tilted_premise == kTiltA);
    CHECK(*five.tilted_target == kTiltB);
    check_close(generate_premise(kRule, five), {1.0, 0.2, 0.0, 0.0, 0.0});
    check_close(expected_target(kRule, five, TargetMode::Hedged),
                {0.0, 0.0, 0.0, 0.2, 1.0});

    // case 10 lives on the complement rung: 1 - tilt(B) toward 1 - tilt(A)
    const CaseSpec& ten = class2[7];
    check_close(generate_premise(kRule, ten), {1.0, 1.0, 1.0, 0.8, 0.0});
    check_close(expected_target(kRule, ten, TargetMode::Hedged),
                {0.0, 0.8, 1.0, 1.0, 1.0});
}

TEST_CASE("class 2 without tilted vectors is rejected by name") {
    CHECK_THROWS_WITH_AS(
        make_class_cases(2, kRule, std::nullopt, kTiltB),
        "make_class_cases(tilted_antecedent): tilted vector required for this case",
        std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        make_class_cases(2, kRule, kTiltA, std::nullopt),
        "make_class_cases(tilted_consequent): tilted vector required for this case",
        std::invalid_argument);
    CHECK_NOTHROW(make_class_cases(1, kRule, std::nullopt, std::nullopt));
    CHECK_THROWS_AS(make_class_cases(3, kRule, kTiltA, kTiltB),
                    std::invalid_argument);
}
