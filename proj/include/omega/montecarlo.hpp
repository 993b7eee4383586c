#ifndef OMEGA_MONTECARLO_HPP
#define OMEGA_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "omega/rng.hpp"
#include "omega/solids.hpp"

namespace omega {

// Per-oscillator energies for a coupled pair, solid A's oscillators first.
// The microstate the chain walks on; the total energy is invariant.
struct MicrostateComposition {
  std::vector<std::uint64_t> energies;
  std::int64_t oscillators_a = 0;

  std::int64_t q_a() const;       // units currently in solid A
  std::uint64_t q_total() const;  // conserved over any run
};

enum class InitialPreset { AllInB, AllInA, Balanced };

const char* to_string(InitialPreset p);

// Composition realizing the preset: every unit in one solid, or the energy
// split as evenly as possible between and within the solids.
MicrostateComposition make_initial(const CoupledSolids& sys, InitialPreset preset);

struct ChainConfig {
  std::int64_t steps = 0;         // total steps, > burn_in
  std::int64_t burn_in = 0;       // steps discarded before sampling
  std::uint64_t seed = 0;
  std::int64_t sample_stride = 1; // sample every this many post-burn-in steps
};

struct ChainResult {
  std::vector<std::uint64_t> histogram;  // sample counts indexed by q_A
  std::vector<std::int64_t> trace;       // sampled q_A series, in order
  std::int64_t steps_executed = 0;
  std::uint64_t samples = 0;
};

// One random microprocess: a uniformly chosen oscillator donates one unit
// to a uniformly chosen recipient (which may be the donor). An empty donor
// leaves the state unchanged, a self-loop that keeps the transition kernel
// symmetric; every composition is then equally probable in the stationary
// distribution. Returns the resulting change in solid A's energy
// (-1, 0 or +1).
int mc_step(MicrostateComposition& state, SplitMix64& rng);

// Runs the chain as a deterministic function of (initial, config): same
// inputs, same ChainResult, bit for bit. Samples are taken every stride
// steps after burn-in. Throws std::domain_error when the initial state is
// inconsistent with the system.
ChainResult run_chain(const CoupledSolids& sys, const MicrostateComposition& initial,
                      const ChainConfig& config);
ChainResult run_chain(const CoupledSolids& sys, InitialPreset preset,
                      const ChainConfig& config);

// Total variation distance between the empirical histogram and the exact
// macrostate distribution: half the L1 gap, in [0, 1]. The histogram must
// cover the same q_A domain as the distribution.
double tv_distance(const std::vector<std::uint64_t>& histogram,
                   const MacrostateDistribution& exact);

}  // namespace omega

#endif  // OMEGA_MONTECARLO_HPP
