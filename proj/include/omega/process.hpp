#ifndef OMEGA_PROCESS_HPP
#define OMEGA_PROCESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "omega/exactmath.hpp"

namespace omega {

// A finite set of labeled outcomes with probabilities. Probabilities are
// held as exact rationals so that distributions coming out of
// combinatorial tables classify without floating-point drift; doubles
// convert exactly on entry (every finite double is rational).
class OutcomeDistribution {
 public:
  using Outcome = std::pair<std::string, Rational>;

  // Throws std::domain_error unless the list is nonempty, labels are
  // distinct, every probability is >= 0 and the total is 1 within 1e-12.
  explicit OutcomeDistribution(std::vector<Outcome> outcomes);

  static OutcomeDistribution from_reals(
      const std::vector<std::pair<std::string, double>>& outcomes);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::size_t size() const { return outcomes_.size(); }

 private:
  std::vector<Outcome> outcomes_;
};

// Single possible outcome / all outcomes equally likely / predictable only
// in the aggregate.
enum class ProcessClass { Deterministic, Random, PartiallyDeterministic };

const char* to_string(ProcessClass c);

// Net payoff to the house per outcome label, plus how many plays make up
// one accounting period.
struct WagerStructure {
  std::vector<std::pair<std::string, Rational>> payoffs;
  std::int64_t plays_per_period = 1;
};

inline constexpr double kDefaultClassifyEps = 1e-9;

// Deterministic if some outcome has probability >= 1 - eps; Random if
// there is more than one outcome and every probability is within eps of
// the uniform value; PartiallyDeterministic otherwise. Requires
// 0 < eps < 1/(2 * #outcomes), which makes the first two cases disjoint.
ProcessClass classify(const OutcomeDistribution& dist,
                      double eps = kDefaultClassifyEps);

// Expected house profit over one period: plays * sum_o p(o) * payoff(o),
// computed in exact rational arithmetic. Every outcome label must carry a
// payoff.
Rational expected_house_profit_exact(const OutcomeDistribution& dist,
                                     const WagerStructure& wager);
double expected_house_profit(const OutcomeDistribution& dist,
                             const WagerStructure& wager);

// Variance of the house profit over one period: plays * Var[per-play
// payoff], exact.
Rational profit_variance_exact(const OutcomeDistribution& dist,
                               const WagerStructure& wager);
double profit_variance(const OutcomeDistribution& dist,
                       const WagerStructure& wager);

// An outcome of maximal probability; ties go to the earliest listed. This
// is the likelihood of the best possible prediction being right, which is
// not the same thing as anyone's confidence in making it; no operation
// here models confidence.
std::pair<std::string, double> max_outcome_probability(
    const OutcomeDistribution& dist);

}  // namespace omega

#endif  // OMEGA_PROCESS_HPP
