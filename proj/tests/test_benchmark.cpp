#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/benchmark.hpp"
#include "support/invariants.hpp"

using namespace sqz;

TEST_CASE("cut sizes") {
  CHECK(cut_size(0, 9) == 0);
  CHECK(cut_size(6, 12) == 36);
  CHECK(cut_size(1, 4) == 3);
  CHECK_THROWS_AS(cut_size(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(cut_size(-1, 4), std::invalid_argument);
}

TEST_CASE("window bounds") {
  const MWindow window = m_bounds(4, 0.999);
  CHECK(window.m_minus == doctest::Approx(1.93675).epsilon(1e-5));
  CHECK(window.m_plus == doctest::Approx(2.06325).epsilon(1e-5));
  CHECK(window.lo == 2);
  CHECK(window.hi == 2);
  CHECK_FALSE(window.boundary_exact);

  const MWindow closed = m_bounds(6, 1.0);
  CHECK(closed.m_minus == doctest::Approx(3.0));
  CHECK(closed.m_plus == doctest::Approx(3.0));
  CHECK(closed.boundary_exact);

  const MWindow tiny = m_bounds(8, 1e-12);
  CHECK(tiny.m_minus == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(tiny.m_plus == doctest::Approx(8.0).epsilon(1e-6));

  // alpha = 0.75 on n=4: bounds land exactly on integers 1 and 3
  const MWindow exact = m_bounds(4, 0.75);
  CHECK(exact.lo == 1);
  CHECK(exact.hi == 3);
  CHECK(exact.boundary_exact);

  CHECK_THROWS_AS(m_bounds(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(m_bounds(4, 1.5), std::invalid_argument);
}

TEST_CASE("empirical P_alpha") {
  SUBCASE("delta at n/2 always wins") {
    std::vector<double> pm(13, 0.0);
    pm[6] = 1.0;
    CHECK(p_alpha_empirical(pm, 12, 0.42) == doctest::Approx(1.0));
    CHECK(p_alpha_empirical(pm, 12, 0.9999) == doctest::Approx(1.0));
  }
  SUBCASE("uniform over five levels at alpha = 0.999 keeps only m=2") {
    CHECK(p_alpha_empirical(std::vector<double>(5, 0.2), 4, 0.999) == doctest::Approx(0.2));
  }
  SUBCASE("coherent n=4 keeps the central binomial weight") {
    const std::vector<double> pm{1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
    CHECK(p_alpha_empirical(pm, 4, 0.999) == doctest::Approx(0.375));
  }
  SUBCASE("rejects non-normalized input") {
    CHECK_THROWS_AS(p_alpha_empirical(std::vector<double>(5, 0.21), 4, 0.9),
                    std::invalid_argument);
    CHECK_THROWS_AS(p_alpha_empirical(std::vector<double>(4, 0.25), 4, 0.9),
                    std::invalid_argument);
  }
}

TEST_CASE("Gaussian-model P_alpha reproduces the reference percentages") {
  CHECK(p_alpha_gaussian(4, -4.80, 0.999) == doctest::Approx(0.615).epsilon(0.002 / 0.615));
  CHECK(p_alpha_gaussian(6, -4.18, 0.999) == doctest::Approx(0.491).epsilon(0.002 / 0.491));
  CHECK(p_alpha_gaussian(8, -4.02, 0.999) == doctest::Approx(0.426).epsilon(0.002 / 0.426));
  CHECK(p_alpha_gaussian(4, -5.96, 0.999) == doctest::Approx(0.682).epsilon(0.004 / 0.682));
}

TEST_CASE("benchmark grid") {
  const std::vector<int> ns{4, 6, 8, 62, 64, 66};
  const std::vector<double> sdbs{-6.0, -4.0, -2.0};
  const auto grid = benchmark_grid(ns, sdbs, 0.999);
  REQUIRE(grid.size() == ns.size() * sdbs.size());

  SUBCASE("more squeezing raises P_alpha at fixed n") {
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = 0; j + 1 < sdbs.size(); ++j)
        CHECK(grid[i * 3 + j].p_alpha >= grid[i * 3 + j + 1].p_alpha);
  }
  SUBCASE("P_alpha shrinks with n between discontinuities") {
    // 4 -> 6 -> 8 stay inside the first window plateau
    for (std::size_t j = 0; j < sdbs.size(); ++j) {
      CHECK(grid[0 * 3 + j].p_alpha >= grid[1 * 3 + j].p_alpha);
      CHECK(grid[1 * 3 + j].p_alpha >= grid[2 * 3 + j].p_alpha);
    }
  }
  SUBCASE("the n=64 jump is flagged and raises P_alpha") {
    CHECK_FALSE(grid[3 * 3].is_discontinuity);  // n=62
    CHECK(grid[4 * 3].is_discontinuity);        // n=64
    CHECK_FALSE(grid[5 * 3].is_discontinuity);  // n=66
    for (std::size_t j = 0; j < sdbs.size(); ++j)
      CHECK(grid[4 * 3 + j].p_alpha > grid[3 * 3 + j].p_alpha);
  }
}

TEST_CASE("discontinuity scan") {
  const DiscontinuityRecord record = discontinuities(0.999, 256);
  CHECK(record.n_values == std::vector<int>{64, 128, 190, 254});
  CHECK(discontinuities(0.999, 60).n_values.empty());

  // sqrt(1 - 0.75) = 1/2: jumps whenever n/4 crosses an integer
  const DiscontinuityRecord quarter = discontinuities(0.75, 20);
  CHECK(quarter.n_values == std::vector<int>{4, 8, 12, 16, 20});

  CHECK_THROWS_AS(discontinuities(0.999, 3), std::invalid_argument);
}

TEST_CASE("CNOT counting") {
  CHECK(qaoa_line_cnot(6) == 40);
  CHECK(qaoa_line_cnot(8) == 77);
  CHECK(qaoa_line_cnot(4) == 15);
  CHECK(qv_cnot_bound(6) == 99);
  CHECK(qv_cnot_bound(2) == 9);

  // asymptotics: 3n^2/2 and 3n^2
  CHECK(double(qaoa_line_cnot(4000)) / (1.5 * 4000.0 * 4000.0) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(double(qv_cnot_bound(4000)) / (3.0 * 4000.0 * 4000.0) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(qaoa_line_cnot(1), std::invalid_argument);
}

TEST_CASE("improvement delta") {
  CHECK(improvement_delta(-33.0, -35.47, -36.0).value ==
        doctest::Approx(2.47 / 3.0).epsilon(1e-12));
  CHECK(improvement_delta(-33.0, -35.68, -36.0).value ==
        doctest::Approx(2.68 / 3.0).epsilon(1e-12));
  CHECK(improvement_delta(-33.0, -36.0, -36.0).value == doctest::Approx(1.0));

  const DeltaResult overshoot = improvement_delta(-33.0, -36.5, -36.0);
  CHECK(overshoot.value > 1.0);
  CHECK_FALSE(overshoot.in_range);
  const DeltaResult regression = improvement_delta(-33.0, -32.0, -36.0);
  CHECK(regression.value < 0.0);
  CHECK_FALSE(regression.in_range);

  CHECK_THROWS_AS(improvement_delta(-36.0, -35.0, -33.0), std::invalid_argument);
}

TEST_CASE("deeper circuits improve the n=12 delta at the exact optima") {
  // refined optima of the exact energy: -35.46750896 at depth one,
  // -35.99482396 at depth three
  const double depth_one = improvement_delta(-33.0, -35.46750896, -36.0).value;
  const double depth_three = improvement_delta(-33.0, -35.99482396, -36.0).value;
  CHECK(depth_three >= depth_one);
  CHECK(depth_one == doctest::Approx(0.822503).epsilon(1e-5));
  CHECK(depth_three == doctest::Approx(0.998275).epsilon(1e-5));
}

TEST_CASE("benchmark invariant suites") {
  for (const auto& suite : {invariants::gaussian_empirical_agreement(250, 99),
                            invariants::window_correctness(250, 99),
                            invariants::gaussian_monotonicity(250, 99)}) {
    INFO(suite.name, ": ", suite.first_failure);
    CHECK(suite.failures == 0);
  }
}
