#include <doctest.h>

#include "radial_yamabe/census.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace radial_yamabe;
using std::numbers::pi;

namespace {

void check_invariants(const Census& c) {
    CHECK(std::count_if(c.records.begin(), c.records.end(),
                        [](const SolutionRecord& r) { return r.kind == SolutionKind::constant; }) == 1);
    CHECK(std::count_if(c.records.begin(), c.records.end(), [](const SolutionRecord& r) {
              return r.kind == SolutionKind::monotone_increasing || r.kind == SolutionKind::asymmetric;
          }) == 0);
    std::vector<double> a;
    for (const auto& r : c.records) {
        a.push_back(r.alpha_star);
        CHECK(r.u_min > 0.0);
        CHECK(r.yamabe_value > 0.0);
    }
    std::sort(a.begin(), a.end());
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    if (c.status == CensusStatus::ok) CHECK(c.found() >= c.predicted_min);
    if (c.status == CensusStatus::shortfall) CHECK_FALSE(c.near_band_boundary);
}

}  // namespace

TEST_CASE("predicted minimum") {
    CHECK(predicted_minimum(1.0, 2) == 1);
    CHECK(predicted_minimum(2.0, 2) == 1);
    CHECK(predicted_minimum(4.0, 2) == 2);
    CHECK(predicted_minimum(8.0, 2) == 4);
    CHECK(predicted_minimum(20.0, 2) == 4);
    CHECK(predicted_minimum(20.5, 2) == 6);
    CHECK(predicted_minimum(25.0, 2) == 6);
    CHECK(predicted_minimum(0.0, 2) == 0);
}

TEST_CASE("S^2 x S^2 at delta = 0.1 has at least four solutions") {
    const Census c = run_census(product_config(2, 2, 0.1));
    CHECK(c.A == doctest::Approx(22.0 / 3.0));
    CHECK(c.band == 1);
    CHECK(c.predicted_min == 4);
    CHECK(c.found() >= 4);
    CHECK(c.status == CensusStatus::ok);
    CHECK(c.monotone() != nullptr);
    CHECK(c.symmetric_count() >= 2);
    check_invariants(c);
}

TEST_CASE("S^2 x S^2 at delta = 0.4: constant and monotone") {
    const Census c = run_census(product_config(2, 2, 0.4));
    CHECK(c.problem.lambda == doctest::Approx(7.0 / 6.0));
    CHECK(c.A == doctest::Approx(7.0 / 3.0));
    CHECK(c.band == 0);
    CHECK(c.predicted_min == 2);
    CHECK(c.constant().alpha_star == 1.0);
    REQUIRE(c.monotone() != nullptr);
    CHECK(c.found() >= 2);
    CHECK(c.status == CensusStatus::ok);
    REQUIRE_FALSE(c.extras.empty());
    CHECK(c.extras.front().kind == SolutionKind::monotone_increasing);
    check_invariants(c);
}

TEST_CASE("non-positive total curvature is rejected") {
    CHECK_THROWS_AS(run_census(GeometryConfig(2, 2, -2.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(run_census(GeometryConfig(2, 2, -10.0, 1.0)), std::domain_error);
}

TEST_CASE("s2xs2 table rows") {
    const auto rows = s2xs2_table({1.0, 0.5, 0.125});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].delta == 0.125);  // sorted
    CHECK(rows[0].near_threshold);
    CHECK(rows[0].A == doctest::Approx(6.0));

    const S2xS2Row& half = rows[1];
    CHECK(half.instability_coefficient == doctest::Approx(0.0));
    CHECK(half.yamabe_constant == doctest::Approx(12.0 * std::sqrt(2.0) * pi).epsilon(1e-12));
    CHECK(half.near_threshold);
    CHECK_FALSE(half.threshold_n.has_value());

    const S2xS2Row& one = rows[2];
    CHECK(one.lambda == doctest::Approx(2.0 / 3.0));
    CHECK(one.band == 0);
    CHECK(one.predicted_min == 1);
    CHECK(one.yamabe_constant == doctest::Approx(16 * pi).epsilon(1e-12));
    CHECK(one.instability_coefficient > 0.0);
    CHECK(one.census.found() == 1);
    CHECK_FALSE(one.threshold_n.has_value());
    CHECK_FALSE(one.near_threshold);
}

TEST_CASE("thresholds delta_j put A on j(j+1)") {
    for (int j = 1; j <= 8; ++j) {
        const double A = product_config(2, 2, s2xs2_threshold(j)).A();
        CHECK(A == doctest::Approx(j * (j + 1.0)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(s2xs2_threshold(0), std::invalid_argument);
    // threshold_n = n on [delta_{2n+2}, delta_{2n})
    const auto rows = s2xs2_table({0.1, 0.05, 0.035});
    CHECK(rows[2].threshold_n == 1);  // 0.1 in [2/58, 2/16)
    CHECK(rows[1].threshold_n == 1);
    CHECK(rows[0].threshold_n == 1);
    const auto deeper = s2xs2_table({0.02});
    CHECK(deeper[0].threshold_n == 2);  // 0.02 in [2/124, 2/58)
    CHECK(deeper[0].band == 2);
}

TEST_CASE("instability coefficient sign is the sign of m - A") {
    for (double delta : {0.05, 0.3, 0.5, 0.9, 3.0}) {
        const Census c = run_census(product_config(2, 2, delta));
        const int expected = (c.A < 2.0) - (c.A > 2.0);
        if (std::abs(c.A - 2.0) > 1e-12) CHECK(c.instability_sign == expected);
        CHECK(c.instability_coefficient == doctest::Approx(second_variation_coefficient(product_config(2, 2, delta))));
    }
}

TEST_CASE("census depends only on (lambda, p, m); values scale with vol_M^{2/N}") {
    const double s_M = 10.0;
    const Census a = run_census(GeometryConfig(2, 2, s_M, 1.0));
    const Census b = run_census(GeometryConfig(2, 2, s_M, 8.0));
    REQUIRE(a.found() == b.found());
    for (int i = 0; i < a.found(); ++i) {
        CHECK(a.records[i].alpha_star == b.records[i].alpha_star);
        CHECK(b.records[i].yamabe_value ==
              doctest::Approx(a.records[i].yamabe_value * std::pow(8.0, 0.5)).epsilon(1e-9));
    }
    const Census direct = run_census(a.problem, FunctionalWeights::from_problem(2, 4.0, a.problem.lambda));
    CHECK(direct.found() == a.found());
}

TEST_CASE("sweep predictions and staircase") {
    CHECK(sweep_lambda(2, 4.0, 2.0, 2.0, 1).rows.at(0).predicted_min == 2);
    CHECK(sweep_lambda(2, 4.0, 4.0, 4.0, 1).rows.at(0).predicted_min == 4);
    CHECK(sweep_lambda(2, 4.0, 12.5, 12.5, 1).rows.at(0).predicted_min == 6);
    CHECK(sweep_lambda(2, 4.0, 5.0, 1.0, 3).rows.empty());
    CHECK(sweep_lambda(2, 4.0, 1.0, 2.0, 0).rows.empty());

    const SweepReport rep = sweep_lambda(2, 4.0, 1.5, 13.5, 9);
    REQUIRE(rep.rows.size() == 9);
    CHECK(rep.failures == 0);
    CHECK(rep.staircase_monotone);
    for (const auto& r : rep.rows) {
        CHECK(r.error.empty());
        CHECK(r.found >= r.predicted_min);
    }
}
