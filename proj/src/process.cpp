#include "omega/process.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace omega {

namespace {

// |sum - 1| <= 1e-12, compared exactly.
const Rational kSumTolerance(1, ExactNat("1000000000000"));

Rational payoff_for(const WagerStructure& wager, const std::string& label) {
  for (const auto& [l, payoff] : wager.payoffs) {
    if (l == label) {
      return payoff;
    }
  }
  throw std::domain_error("wager: no payoff for outcome '" + label + "'");
}

void require_wager(const WagerStructure& wager) {
  if (wager.plays_per_period < 1) {
    throw std::domain_error("wager: plays_per_period must be >= 1");
  }
}

}  // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<Outcome> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) {
    throw std::domain_error("distribution: no outcomes");
  }
  std::unordered_set<std::string> seen;
  Rational sum = 0;
  for (const auto& [label, p] : outcomes_) {
    if (!seen.insert(label).second) {
      throw std::domain_error("distribution: duplicate label '" + label + "'");
    }
    if (p < 0) {
      throw std::domain_error("distribution: negative probability for '" + label + "'");
    }
    sum += p;
  }
  if (boost::multiprecision::abs(sum - 1) > kSumTolerance) {
    throw std::domain_error("distribution: probabilities do not sum to 1");
  }
}

OutcomeDistribution OutcomeDistribution::from_reals(
    const std::vector<std::pair<std::string, double>>& outcomes) {
  std::vector<Outcome> exact;
  exact.reserve(outcomes.size());
  for (const auto& [label, p] : outcomes) {
    exact.emplace_back(label, Rational(p));
  }
  return OutcomeDistribution(std::move(exact));
}

const char* to_string(ProcessClass c) {
  switch (c) {
    case ProcessClass::Deterministic: return "deterministic";
    case ProcessClass::Random: return "random";
    case ProcessClass::PartiallyDeterministic: return "partially-deterministic";
  }
  return "unknown";
}

ProcessClass classify(const OutcomeDistribution& dist, double eps) {
  const auto n = static_cast<std::int64_t>(dist.size());
  const Rational tol(eps);
  if (tol <= 0 || tol >= Rational(1, 2 * n)) {
    throw std::domain_error("classify: eps must lie in (0, 1/(2*#outcomes))");
  }
  for (const auto& [label, p] : dist.outcomes()) {
    if (p >= 1 - tol) {
      return ProcessClass::Deterministic;
    }
  }
  if (n > 1) {
    const Rational uniform(1, n);
    const bool all_uniform = std::all_of(
        dist.outcomes().begin(), dist.outcomes().end(), [&](const auto& o) {
          return boost::multiprecision::abs(o.second - uniform) <= tol;
        });
    if (all_uniform) {
      return ProcessClass::Random;
    }
  }
  return ProcessClass::PartiallyDeterministic;
}

Rational expected_house_profit_exact(const OutcomeDistribution& dist,
                                     const WagerStructure& wager) {
  require_wager(wager);
  Rational per_play = 0;
  for (const auto& [label, p] : dist.outcomes()) {
    per_play += p * payoff_for(wager, label);
  }
  return per_play * wager.plays_per_period;
}

double expected_house_profit(const OutcomeDistribution& dist,
                             const WagerStructure& wager) {
  return to_double(expected_house_profit_exact(dist, wager));
}

Rational profit_variance_exact(const OutcomeDistribution& dist,
                               const WagerStructure& wager) {
  require_wager(wager);
  Rational mean = 0;
  Rational second = 0;
  for (const auto& [label, p] : dist.outcomes()) {
    const Rational payoff = payoff_for(wager, label);
    mean += p * payoff;
    second += p * payoff * payoff;
  }
  return (second - mean * mean) * wager.plays_per_period;
}

double profit_variance(const OutcomeDistribution& dist,
                       const WagerStructure& wager) {
  return to_double(profit_variance_exact(dist, wager));
}

std::pair<std::string, double> max_outcome_probability(
    const OutcomeDistribution& dist) {
  const auto* best = &dist.outcomes().front();
  for (const auto& outcome : dist.outcomes()) {
    if (outcome.second > best->second) {
      best = &outcome;
    }
  }
  return {best->first, to_double(best->second)};
}

}  // namespace omega
