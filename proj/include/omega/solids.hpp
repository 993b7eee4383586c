#ifndef OMEGA_SOLIDS_HPP
#define OMEGA_SOLIDS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "omega/exactmath.hpp"

namespace omega {

// N independent quantum oscillators holding q indivisible energy units.
struct EinsteinSolid {
  std::int64_t oscillators = 1;   // N >= 1
  std::int64_t energy_units = 0;  // q >= 0
};

// Two solids in weak thermal contact sharing a fixed total energy, so each
// solid's energy is momentarily well-defined and the pair's macrostate is
// the split (q_A, q_total - q_A).
struct CoupledSolids {
  std::int64_t oscillators_a = 1;
  std::int64_t oscillators_b = 1;
  std::int64_t total_energy = 0;
};

enum class DistributionMode { Exact, LogSpace };

// One macrostate of the coupled pair. Exact multiplicities are populated
// in Exact mode only; the log fields are always filled.
struct DistributionRow {
  std::int64_t q_a = 0;
  ExactNat omega_a;
  ExactNat omega_b;
  ExactNat omega_tot;
  double ln_omega_a = 0;
  double ln_omega_b = 0;
  double ln_omega_tot = 0;
  double probability = 0;
};

struct MacrostateDistribution {
  CoupledSolids system;
  DistributionMode mode = DistributionMode::Exact;
  std::vector<DistributionRow> rows;      // q_a = 0 .. total_energy, in order
  ExactNat total_multiplicity;            // Exact mode only
  double ln_total_multiplicity = 0;       // both modes
};

struct PeakStats {
  double mean = 0;
  double stddev = 0;
  double relative_width = 0;  // stddev / q_total; 0 when q_total == 0
  double fwhm = 0;            // linear interpolation at half maximum
};

// Exact mode keeps every multiplicity as a big integer; the cap bounds the
// largest binomial argument (q_total + max oscillators).
inline constexpr std::int64_t kExactModeCap = 100'000;
// Log-space mode only evaluates log-gamma; good to arguments of 1e9.
inline constexpr std::int64_t kLogModeCap = 1'000'000'000;

// Number of ways to distribute the solid's energy over its oscillators:
// C(q + N - 1, q).
ExactNat multiplicity(const EinsteinSolid& solid);
double ln_multiplicity(const EinsteinSolid& solid);

// One row per q_A with Omega_A * Omega_B and the normalized probability.
// Exact mode throws ResourceError above kExactModeCap and suggests
// log-space; log-space normalizes with max-shifted exponentials.
MacrostateDistribution macrostate_distribution(const CoupledSolids& sys,
                                               DistributionMode mode);

// Probability-weighted moments of q_A plus the interpolated full width at
// half maximum. In Exact mode the moments are computed in rational
// arithmetic, so symmetric systems report mean = q_total/2 exactly.
PeakStats peak_stats(const MacrostateDistribution& dist);

// Peak statistics of (f*N_A, f*N_B, f*q_total) for each factor f, in
// log-space mode, sorted by factor.
std::vector<std::pair<std::int64_t, PeakStats>> scaling_sweep(
    const CoupledSolids& base, std::vector<std::int64_t> factors);

// True once fluctuations are unmeasurably small at the given threshold on
// the relative width.
bool thermodynamic_limit_reached(const PeakStats& stats, double threshold);

}  // namespace omega

#endif  // OMEGA_SOLIDS_HPP
