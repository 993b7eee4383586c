#include "omega/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace omega {

namespace {

void require_config(const ChainConfig& config) {
  if (config.steps < 1) {
    throw std::domain_error("chain: steps must be >= 1");
  }
  if (config.burn_in < 0 || config.burn_in >= config.steps) {
    throw std::domain_error("chain: burn_in must satisfy 0 <= burn_in < steps");
  }
  if (config.sample_stride < 1) {
    throw std::domain_error("chain: sample_stride must be >= 1");
  }
}

void require_consistent(const CoupledSolids& sys, const MicrostateComposition& initial) {
  if (sys.oscillators_a < 1 || sys.oscillators_b < 1 || sys.total_energy < 0) {
    throw std::domain_error("chain: invalid coupled-solids system");
  }
  const auto oscillators =
      static_cast<std::uint64_t>(sys.oscillators_a + sys.oscillators_b);
  if (initial.energies.size() != oscillators ||
      initial.oscillators_a != sys.oscillators_a) {
    throw std::domain_error("chain: initial state oscillator layout does not match system");
  }
  if (initial.q_total() != static_cast<std::uint64_t>(sys.total_energy)) {
    throw std::domain_error("chain: initial state energy " +
                            std::to_string(initial.q_total()) +
                            " does not match q_total " +
                            std::to_string(sys.total_energy));
  }
}

}  // namespace

std::int64_t MicrostateComposition::q_a() const {
  return std::accumulate(energies.begin(),
                         energies.begin() + oscillators_a,
                         std::int64_t{0});
}

std::uint64_t MicrostateComposition::q_total() const {
  return std::accumulate(energies.begin(), energies.end(), std::uint64_t{0});
}

const char* to_string(InitialPreset p) {
  switch (p) {
    case InitialPreset::AllInB: return "all-in-B";
    case InitialPreset::AllInA: return "all-in-A";
    case InitialPreset::Balanced: return "balanced";
  }
  return "unknown";
}

MicrostateComposition make_initial(const CoupledSolids& sys, InitialPreset preset) {
  if (sys.oscillators_a < 1 || sys.oscillators_b < 1 || sys.total_energy < 0) {
    throw std::domain_error("chain: invalid coupled-solids system");
  }
  MicrostateComposition state;
  state.oscillators_a = sys.oscillators_a;
  state.energies.assign(
      static_cast<std::size_t>(sys.oscillators_a + sys.oscillators_b), 0);

  const auto q = static_cast<std::uint64_t>(sys.total_energy);
  const std::size_t n_a = static_cast<std::size_t>(sys.oscillators_a);
  const std::size_t n_b = static_cast<std::size_t>(sys.oscillators_b);

  switch (preset) {
    case InitialPreset::AllInB:
      state.energies.back() = q;
      break;
    case InitialPreset::AllInA:
      state.energies.front() = q;
      break;
    case InitialPreset::Balanced: {
      // Half the units to each solid (A gets the odd one), spread
      // round-robin over that solid's oscillators.
      const std::uint64_t q_b = q / 2;
      const std::uint64_t q_a = q - q_b;
      for (std::uint64_t u = 0; u < q_a; ++u) {
        ++state.energies[static_cast<std::size_t>(u % n_a)];
      }
      for (std::uint64_t u = 0; u < q_b; ++u) {
        ++state.energies[n_a + static_cast<std::size_t>(u % n_b)];
      }
      break;
    }
  }
  return state;
}

int mc_step(MicrostateComposition& state, SplitMix64& rng) {
  const std::uint64_t n = state.energies.size();
  const std::uint64_t donor = rng.below(n);
  if (state.energies[donor] == 0) {
    return 0;
  }
  const std::uint64_t recipient = rng.below(n);
  --state.energies[donor];
  ++state.energies[recipient];

  const auto n_a = static_cast<std::uint64_t>(state.oscillators_a);
  const bool from_a = donor < n_a;
  const bool to_a = recipient < n_a;
  return static_cast<int>(to_a) - static_cast<int>(from_a);
}

ChainResult run_chain(const CoupledSolids& sys, const MicrostateComposition& initial,
                      const ChainConfig& config) {
  require_config(config);
  require_consistent(sys, initial);

  MicrostateComposition state = initial;
  SplitMix64 rng(config.seed);

  ChainResult result;
  result.histogram.assign(static_cast<std::size_t>(sys.total_energy) + 1, 0);
  const std::int64_t post = config.steps - config.burn_in;
  result.trace.reserve(static_cast<std::size_t>(post / config.sample_stride));

  std::int64_t q_a = state.q_a();
  for (std::int64_t step = 1; step <= config.steps; ++step) {
    q_a += mc_step(state, rng);
    if (step > config.burn_in &&
        (step - config.burn_in) % config.sample_stride == 0) {
      ++result.histogram[static_cast<std::size_t>(q_a)];
      result.trace.push_back(q_a);
      ++result.samples;
    }
  }
  result.steps_executed = config.steps;
  return result;
}

ChainResult run_chain(const CoupledSolids& sys, InitialPreset preset,
                      const ChainConfig& config) {
  return run_chain(sys, make_initial(sys, preset), config);
}

double tv_distance(const std::vector<std::uint64_t>& histogram,
                   const MacrostateDistribution& exact) {
  if (histogram.size() != exact.rows.size()) {
    throw std::domain_error("tv_distance: histogram covers " +
                            std::to_string(histogram.size()) +
                            " macrostates, distribution has " +
                            std::to_string(exact.rows.size()));
  }
  const std::uint64_t samples =
      std::accumulate(histogram.begin(), histogram.end(), std::uint64_t{0});
  if (samples == 0) {
    throw std::domain_error("tv_distance: empty histogram");
  }
  double l1 = 0;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    const double empirical =
        static_cast<double>(histogram[i]) / static_cast<double>(samples);
    l1 += std::abs(empirical - exact.rows[i].probability);
  }
  // Rounding can push the half-sum a ulp past 1; the distance is [0, 1].
  return std::min(1.0, l1 / 2.0);
}

}  // namespace omega
