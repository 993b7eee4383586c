#include "omega/solids.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "omega/errors.hpp"

namespace omega {

namespace {

void require_solid(const EinsteinSolid& s) {
  if (s.oscillators < 1) {
    throw std::domain_error("solid: oscillator count must be >= 1");
  }
  if (s.energy_units < 0) {
    throw std::domain_error("solid: energy units must be >= 0");
  }
}

void require_system(const CoupledSolids& sys) {
  if (sys.oscillators_a < 1 || sys.oscillators_b < 1) {
    throw std::domain_error("coupled solids: oscillator counts must be >= 1");
  }
  if (sys.total_energy < 0) {
    throw std::domain_error("coupled solids: total energy must be >= 0");
  }
}

// Omega(N, q) for q = 0..q_max by the exact ratio recurrence
// Omega(N, q+1) = Omega(N, q) * (q + N) / (q + 1); both steps stay
// integral, so the whole table costs O(q_max) big-int operations.
std::vector<ExactNat> multiplicity_column(std::int64_t oscillators,
                                          std::int64_t q_max) {
  std::vector<ExactNat> col(static_cast<std::size_t>(q_max) + 1);
  col[0] = 1;
  for (std::int64_t q = 0; q < q_max; ++q) {
    ExactNat next = col[static_cast<std::size_t>(q)] * (q + oscillators);
    next /= q + 1;
    col[static_cast<std::size_t>(q + 1)] = std::move(next);
  }
  return col;
}

double checked_relative_width(double stddev, std::int64_t q_total) {
  return q_total == 0 ? 0.0 : stddev / static_cast<double>(q_total);
}

// Interpolated crossing of the half-max level on each side of the peak;
// clamped to the domain edge when the distribution never drops below it.
double interpolated_fwhm(const std::vector<DistributionRow>& rows) {
  const std::size_t n = rows.size();
  std::size_t first_max = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (rows[i].probability > rows[first_max].probability) {
      first_max = i;
    }
  }
  std::size_t last_max = first_max;
  while (last_max + 1 < n &&
         rows[last_max + 1].probability == rows[first_max].probability) {
    ++last_max;
  }
  const double half = rows[first_max].probability / 2.0;

  double left = 0.0;
  for (std::size_t i = first_max; i > 0; --i) {
    if (rows[i - 1].probability < half) {
      const double p_lo = rows[i - 1].probability;
      const double p_hi = rows[i].probability;
      left = static_cast<double>(rows[i - 1].q_a) + (half - p_lo) / (p_hi - p_lo);
      break;
    }
  }

  double right = static_cast<double>(rows[n - 1].q_a);
  for (std::size_t i = last_max; i + 1 < n; ++i) {
    if (rows[i + 1].probability < half) {
      const double p_hi = rows[i].probability;
      const double p_lo = rows[i + 1].probability;
      right = static_cast<double>(rows[i].q_a) + (p_hi - half) / (p_hi - p_lo);
      break;
    }
  }
  return right - left;
}

}  // namespace

ExactNat multiplicity(const EinsteinSolid& solid) {
  require_solid(solid);
  return binomial(solid.energy_units + solid.oscillators - 1, solid.energy_units);
}

double ln_multiplicity(const EinsteinSolid& solid) {
  require_solid(solid);
  return ln_binomial(solid.energy_units + solid.oscillators - 1, solid.energy_units);
}

MacrostateDistribution macrostate_distribution(const CoupledSolids& sys,
                                               DistributionMode mode) {
  require_system(sys);
  const std::int64_t q = sys.total_energy;
  const std::int64_t max_n = std::max(sys.oscillators_a, sys.oscillators_b);

  MacrostateDistribution dist;
  dist.system = sys;
  dist.mode = mode;
  dist.rows.resize(static_cast<std::size_t>(q) + 1);

  if (mode == DistributionMode::Exact) {
    if (q + max_n > kExactModeCap) {
      throw ResourceError(
          "coupled solids: q_total + max(N_A, N_B) = " + std::to_string(q + max_n) +
          " exceeds the exact-mode cap of " + std::to_string(kExactModeCap) +
          "; use log-space mode");
    }
    const auto omega_a = multiplicity_column(sys.oscillators_a, q);
    const auto omega_b = multiplicity_column(sys.oscillators_b, q);

    ExactNat total = 0;
    for (std::int64_t q_a = 0; q_a <= q; ++q_a) {
      DistributionRow& row = dist.rows[static_cast<std::size_t>(q_a)];
      row.q_a = q_a;
      row.omega_a = omega_a[static_cast<std::size_t>(q_a)];
      row.omega_b = omega_b[static_cast<std::size_t>(q - q_a)];
      row.omega_tot = row.omega_a * row.omega_b;
      total += row.omega_tot;
    }
    dist.total_multiplicity = total;
    dist.ln_total_multiplicity = ln_nat(total);

    double sum = 0;
    for (DistributionRow& row : dist.rows) {
      row.ln_omega_a = ln_nat(row.omega_a);
      row.ln_omega_b = ln_nat(row.omega_b);
      row.ln_omega_tot = ln_nat(row.omega_tot);
      row.probability = to_double(Rational(row.omega_tot, total));
      sum += row.probability;
    }
    // One float-space renormalization squeezes out per-row conversion
    // rounding so the stored probabilities sum to 1.
    for (DistributionRow& row : dist.rows) {
      row.probability /= sum;
    }
    return dist;
  }

  if (q + max_n > kLogModeCap) {
    throw ResourceError("coupled solids: q_total + max(N_A, N_B) = " +
                        std::to_string(q + max_n) +
                        " exceeds the log-space cap of " + std::to_string(kLogModeCap));
  }
  double ln_max = 0;
  for (std::int64_t q_a = 0; q_a <= q; ++q_a) {
    DistributionRow& row = dist.rows[static_cast<std::size_t>(q_a)];
    row.q_a = q_a;
    row.ln_omega_a = ln_multiplicity({sys.oscillators_a, q_a});
    row.ln_omega_b = ln_multiplicity({sys.oscillators_b, q - q_a});
    row.ln_omega_tot = row.ln_omega_a + row.ln_omega_b;
    ln_max = q_a == 0 ? row.ln_omega_tot : std::max(ln_max, row.ln_omega_tot);
  }
  double weight_sum = 0;
  for (DistributionRow& row : dist.rows) {
    row.probability = std::exp(row.ln_omega_tot - ln_max);
    weight_sum += row.probability;
  }
  for (DistributionRow& row : dist.rows) {
    row.probability /= weight_sum;
  }
  dist.ln_total_multiplicity = ln_max + std::log(weight_sum);
  return dist;
}

PeakStats peak_stats(const MacrostateDistribution& dist) {
  if (dist.rows.empty()) {
    throw std::domain_error("peak_stats: empty distribution");
  }
  PeakStats stats;
  const std::int64_t q_total = dist.system.total_energy;

  if (dist.mode == DistributionMode::Exact) {
    ExactNat first = 0;
    ExactNat second = 0;
    for (const DistributionRow& row : dist.rows) {
      first += row.omega_tot * row.q_a;
      second += row.omega_tot * row.q_a * row.q_a;
    }
    const Rational mean(first, dist.total_multiplicity);
    const Rational var =
        Rational(second, dist.total_multiplicity) - mean * mean;
    stats.mean = to_double(mean);
    stats.stddev = std::sqrt(std::max(0.0, to_double(var)));
  } else {
    long double mean = 0;
    for (const DistributionRow& row : dist.rows) {
      mean += static_cast<long double>(row.probability) * row.q_a;
    }
    long double var = 0;
    for (const DistributionRow& row : dist.rows) {
      const long double d = row.q_a - mean;
      var += static_cast<long double>(row.probability) * d * d;
    }
    stats.mean = static_cast<double>(mean);
    stats.stddev = std::sqrt(std::max(0.0, static_cast<double>(var)));
  }

  stats.relative_width = checked_relative_width(stats.stddev, q_total);
  stats.fwhm = interpolated_fwhm(dist.rows);
  return stats;
}

std::vector<std::pair<std::int64_t, PeakStats>> scaling_sweep(
    const CoupledSolids& base, std::vector<std::int64_t> factors) {
  require_system(base);
  if (factors.empty()) {
    throw std::domain_error("scaling_sweep: at least one factor required");
  }
  for (std::int64_t f : factors) {
    if (f < 1) {
      throw std::domain_error("scaling_sweep: factors must be >= 1");
    }
    const std::int64_t largest =
        std::max({base.oscillators_a, base.oscillators_b, base.total_energy});
    if (largest != 0 && f > kLogModeCap / largest) {
      throw ResourceError("scaling_sweep: factor " + std::to_string(f) +
                          " scales the system past the log-space cap");
    }
  }
  std::sort(factors.begin(), factors.end());

  std::vector<std::pair<std::int64_t, PeakStats>> out;
  out.reserve(factors.size());
  for (std::int64_t f : factors) {
    const CoupledSolids scaled{base.oscillators_a * f, base.oscillators_b * f,
                               base.total_energy * f};
    out.emplace_back(
        f, peak_stats(macrostate_distribution(scaled, DistributionMode::LogSpace)));
  }
  return out;
}

bool thermodynamic_limit_reached(const PeakStats& stats, double threshold) {
  if (!(threshold > 0)) {
    throw std::domain_error("thermodynamic_limit_reached: threshold must be > 0");
  }
  return stats.relative_width < threshold;
}

}  // namespace omega
