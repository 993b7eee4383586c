#ifndef OMEGA_DICE_HPP
#define OMEGA_DICE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "omega/exactmath.hpp"

namespace omega {

// One distinguishable die: a face count and a label per face. Labels
// default to "1".."faces".
struct DieSpec {
  explicit DieSpec(std::int64_t face_count);
  DieSpec(std::int64_t face_count, std::vector<std::string> face_labels);

  std::int64_t faces;
  std::vector<std::string> labels;
};

// A complete roll of every die: the 0-based face index showing on each,
// ordered by die index (dice are distinguishable).
struct DiceMicrostate {
  std::vector<std::uint32_t> faces;
};

// The shown labels of a microstate, one per die.
std::vector<std::string> microstate_labels(const std::vector<DieSpec>& dice,
                                           const DiceMicrostate& state);

struct MacrostateRow {
  std::string label;
  ExactNat multiplicity;
  Rational probability;  // multiplicity / total, exact
};

// Macrostate rows plus the total multiplicity (the product of face
// counts). Row probabilities sum to exactly 1 in rational arithmetic.
struct MacrostateTable {
  std::vector<MacrostateRow> rows;
  ExactNat total_multiplicity;
};

// Assigns each microstate to a macrostate label.
using MacrostateMapping = std::function<std::string(
    const std::vector<DieSpec>&, const DiceMicrostate&)>;

// Sum of the numeric face labels. Throws std::domain_error when a shown
// label is not an integer.
std::string sum_mapping(const std::vector<DieSpec>& dice,
                        const DiceMicrostate& state);

// The ordered tuple of face labels, joined with '+'. Distinguishes every
// microstate whose label tuples differ.
std::string labels_mapping(const std::vector<DieSpec>& dice,
                           const DiceMicrostate& state);

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

// Product of the face counts, exact.
ExactNat microstate_count(const std::vector<DieSpec>& dice);

// Complete lexicographic enumeration (first die most significant). Throws
// ResourceError when the count exceeds the cap; use macrostate_table or
// microstate_count for larger ensembles.
std::vector<DiceMicrostate> enumerate_microstates(
    const std::vector<DieSpec>& dice,
    std::int64_t cap = kDefaultEnumerationCap);

// Tallies every microstate under the mapping. Rows are sorted numerically
// when every macrostate label is an integer, lexicographically otherwise.
MacrostateTable macrostate_table(const std::vector<DieSpec>& dice,
                                 const MacrostateMapping& mapping = sum_mapping,
                                 std::int64_t cap = kDefaultEnumerationCap);

}  // namespace omega

#endif  // OMEGA_DICE_HPP
