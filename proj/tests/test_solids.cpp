#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "omega/errors.hpp"
#include "omega/rng.hpp"
#include "omega/solids.hpp"

using omega::CoupledSolids;
using omega::DistributionMode;
using omega::EinsteinSolid;
using omega::ExactNat;

TEST_CASE("multiplicity of small solids") {
  CHECK(omega::multiplicity({3, 1}) == 3);
  CHECK(omega::multiplicity({3, 6}) == 28);
  CHECK(omega::multiplicity({3, 5}) == 21);
  for (std::int64_t n : {1, 2, 7, 50}) {
    CHECK(omega::multiplicity({n, 0}) == 1);
  }
  CHECK_THROWS_AS(omega::multiplicity({0, 4}), std::domain_error);
  CHECK_THROWS_AS(omega::multiplicity({3, -1}), std::domain_error);
}

TEST_CASE("three oscillators sharing six units with three more") {
  const auto dist =
      omega::macrostate_distribution({3, 3, 6}, DistributionMode::Exact);
  REQUIRE(dist.rows.size() == 7);

  const std::vector<std::int64_t> omega_a = {1, 3, 6, 10, 15, 21, 28};
  const std::vector<std::int64_t> omega_b = {28, 21, 15, 10, 6, 3, 1};
  const std::vector<std::int64_t> omega_tot = {28, 63, 90, 100, 90, 63, 28};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(dist.rows[i].q_a == static_cast<std::int64_t>(i));
    CHECK(dist.rows[i].omega_a == omega_a[i]);
    CHECK(dist.rows[i].omega_b == omega_b[i]);
    CHECK(dist.rows[i].omega_tot == omega_tot[i]);
  }
  CHECK(dist.total_multiplicity == 462);

  // The row sum collapses to the multiplicity of the merged solid.
  CHECK(dist.total_multiplicity == omega::multiplicity({6, 6}));

  double prob_sum = 0;
  for (const auto& row : dist.rows) {
    prob_sum += row.probability;
  }
  CHECK(std::abs(prob_sum - 1.0) <= 1e-12);
}

TEST_CASE("zero energy gives a single certain macrostate") {
  for (const auto mode : {DistributionMode::Exact, DistributionMode::LogSpace}) {
    const auto dist = omega::macrostate_distribution({4, 7, 0}, mode);
    REQUIRE(dist.rows.size() == 1);
    CHECK(dist.rows[0].probability == 1.0);
  }
}

TEST_CASE("Vandermonde conservation over random systems") {
  omega::SplitMix64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n_a = static_cast<std::int64_t>(1 + rng.below(8));
    const auto n_b = static_cast<std::int64_t>(1 + rng.below(8));
    const auto q = static_cast<std::int64_t>(rng.below(13));
    const auto dist =
        omega::macrostate_distribution({n_a, n_b, q}, DistributionMode::Exact);
    ExactNat sum = 0;
    for (const auto& row : dist.rows) {
      sum += row.omega_tot;
    }
    CHECK(sum == omega::multiplicity({n_a + n_b, q}));
    CHECK(sum == dist.total_multiplicity);
  }
}

TEST_CASE("equal solids give a symmetric, unimodal distribution") {
  for (std::int64_t q : {5, 6, 11, 20}) {
    const auto dist =
        omega::macrostate_distribution({4, 4, q}, DistributionMode::Exact);
    const std::size_t n = dist.rows.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(dist.rows[i].omega_tot == dist.rows[n - 1 - i].omega_tot);
    }
    for (std::size_t i = 0; i + 1 <= n / 2; ++i) {
      CHECK(dist.rows[i].probability <= dist.rows[i + 1].probability);
      CHECK(dist.rows[n - 1 - i].probability <= dist.rows[n - 2 - i].probability);
    }
  }
}

TEST_CASE("exact and log-space probabilities agree") {
  for (const CoupledSolids sys :
       {CoupledSolids{3, 3, 6}, CoupledSolids{5, 2, 9}, CoupledSolids{150, 150, 300}}) {
    const auto exact = omega::macrostate_distribution(sys, DistributionMode::Exact);
    const auto logd = omega::macrostate_distribution(sys, DistributionMode::LogSpace);
    REQUIRE(exact.rows.size() == logd.rows.size());
    for (std::size_t i = 0; i < exact.rows.size(); ++i) {
      CHECK(std::abs(exact.rows[i].probability - logd.rows[i].probability) <= 1e-9);
      CHECK(std::abs(exact.rows[i].ln_omega_tot - logd.rows[i].ln_omega_tot) <=
            1e-9 * std::max(1.0, std::abs(exact.rows[i].ln_omega_tot)));
    }
    CHECK(std::abs(exact.ln_total_multiplicity - logd.ln_total_multiplicity) <=
          1e-9 * std::max(1.0, exact.ln_total_multiplicity));

    double log_prob_sum = 0;
    for (const auto& row : logd.rows) {
      log_prob_sum += row.probability;
    }
    CHECK(std::abs(log_prob_sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("exact mode refuses oversized systems") {
  CHECK_THROWS_AS(
      omega::macrostate_distribution({60'000, 60'000, 90'000}, DistributionMode::Exact),
      omega::ResourceError);
}

TEST_CASE("peak statistics of the six-unit table") {
  const auto dist =
      omega::macrostate_distribution({3, 3, 6}, DistributionMode::Exact);
  const auto stats = omega::peak_stats(dist);

  CHECK(stats.mean == 3.0);  // exact by symmetry

  // Oracle: direct moments of (28,63,90,100,90,63,28)/462.
  const std::vector<double> omegas = {28, 63, 90, 100, 90, 63, 28};
  double m1 = 0;
  double m2 = 0;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    m1 += omegas[i] / 462.0 * static_cast<double>(i);
    m2 += omegas[i] / 462.0 * static_cast<double>(i * i);
  }
  const double expected_std = std::sqrt(m2 - m1 * m1);
  CHECK(stats.stddev == doctest::Approx(expected_std).epsilon(1e-12));
  CHECK(stats.relative_width == doctest::Approx(expected_std / 6.0).epsilon(1e-12));
  CHECK(stats.fwhm > 0);
  CHECK(stats.fwhm < 6.0);
}

TEST_CASE("symmetric systems center exactly at half the energy") {
  for (std::int64_t q : {4, 7, 30}) {
    const auto stats = omega::peak_stats(
        omega::macrostate_distribution({5, 5, q}, DistributionMode::Exact));
    CHECK(stats.mean == static_cast<double>(q) / 2.0);
  }
}

TEST_CASE("point distribution has zero spread") {
  const auto stats = omega::peak_stats(
      omega::macrostate_distribution({2, 3, 0}, DistributionMode::Exact));
  CHECK(stats.mean == 0.0);
  CHECK(stats.stddev == 0.0);
  CHECK(stats.relative_width == 0.0);
  CHECK(stats.fwhm == 0.0);
}

TEST_CASE("scaling sweep narrows the peak") {
  const auto sweep = omega::scaling_sweep({3, 3, 6}, {1, 100, 1000});
  REQUIRE(sweep.size() == 3);
  CHECK(sweep[0].first == 1);
  CHECK(sweep[1].first == 100);
  CHECK(sweep[2].first == 1000);
  CHECK(sweep[0].second.relative_width > sweep[1].second.relative_width);
  CHECK(sweep[1].second.relative_width > sweep[2].second.relative_width);

  // Identity factor reproduces the direct statistics.
  const auto direct = omega::peak_stats(
      omega::macrostate_distribution({3, 3, 6}, DistributionMode::LogSpace));
  CHECK(sweep[0].second.mean == direct.mean);
  CHECK(sweep[0].second.stddev == direct.stddev);
  CHECK(sweep[0].second.fwhm == direct.fwhm);
}

TEST_CASE("relative width follows the inverse-root law") {
  const auto sweep = omega::scaling_sweep({3, 3, 6}, {100, 10000});
  const double ratio =
      sweep[0].second.relative_width / sweep[1].second.relative_width;
  CHECK(ratio == doctest::Approx(10.0).epsilon(0.2));
}

TEST_CASE("scaling sweep validates factors") {
  CHECK_THROWS_AS(omega::scaling_sweep({3, 3, 6}, {}), std::domain_error);
  CHECK_THROWS_AS(omega::scaling_sweep({3, 3, 6}, {0}), std::domain_error);
  CHECK_THROWS_AS(omega::scaling_sweep({3, 3, 6}, {1'000'000'000}),
                  omega::ResourceError);
}

TEST_CASE("thermodynamic limit predicate") {
  omega::PeakStats wide;
  wide.relative_width = 0.5;
  CHECK_FALSE(omega::thermodynamic_limit_reached(wide, 1e-3));

  omega::PeakStats point;
  point.relative_width = 0.0;
  CHECK(omega::thermodynamic_limit_reached(point, 1e-9));

  const auto stats = omega::peak_stats(
      omega::macrostate_distribution({300, 300, 600}, DistributionMode::LogSpace));
  CHECK(omega::thermodynamic_limit_reached(stats, 0.05) ==
        (stats.relative_width < 0.05));
  CHECK_THROWS_AS(omega::thermodynamic_limit_reached(stats, 0.0), std::domain_error);
}
