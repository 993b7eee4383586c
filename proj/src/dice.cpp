#include "omega/dice.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <string>

#include "omega/errors.hpp"

namespace omega {

namespace {

void require_dice(const std::vector<DieSpec>& dice) {
  if (dice.empty()) {
    throw std::domain_error("dice: at least one die required");
  }
}

// Checked count against the enumeration cap; exact product first so huge
// ensembles cannot overflow their way past the cap.
std::int64_t counted_or_throw(const std::vector<DieSpec>& dice, std::int64_t cap) {
  const ExactNat count = microstate_count(dice);
  if (count > cap) {
    throw ResourceError("dice: " + count.str() + " microstates exceeds the cap of " +
                        std::to_string(cap) + "; use counting operations instead");
  }
  return count.convert_to<std::int64_t>();
}

bool parse_int(const std::string& s, std::int64_t& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !s.empty();
}

// Visit all microstates in lexicographic order without materializing them.
template <typename Fn>
void for_each_microstate(const std::vector<DieSpec>& dice, Fn&& fn) {
  DiceMicrostate state;
  state.faces.assign(dice.size(), 0);
  for (;;) {
    fn(state);
    // Odometer increment, last die fastest.
    std::size_t i = dice.size();
    while (i > 0) {
      --i;
      if (++state.faces[i] < dice[i].faces) {
        break;
      }
      state.faces[i] = 0;
      if (i == 0) {
        return;
      }
    }
  }
}

}  // namespace

DieSpec::DieSpec(std::int64_t face_count) : faces(face_count) {
  if (faces < 1) {
    throw std::domain_error("die: face count must be >= 1");
  }
  labels.reserve(static_cast<std::size_t>(faces));
  for (std::int64_t f = 1; f <= faces; ++f) {
    labels.push_back(std::to_string(f));
  }
}

DieSpec::DieSpec(std::int64_t face_count, std::vector<std::string> face_labels)
    : faces(face_count), labels(std::move(face_labels)) {
  if (faces < 1) {
    throw std::domain_error("die: face count must be >= 1");
  }
  if (static_cast<std::int64_t>(labels.size()) != faces) {
    throw std::domain_error("die: label count must equal face count");
  }
}

std::vector<std::string> microstate_labels(const std::vector<DieSpec>& dice,
                                           const DiceMicrostate& state) {
  if (state.faces.size() != dice.size()) {
    throw std::domain_error("microstate: die count mismatch");
  }
  std::vector<std::string> out;
  out.reserve(dice.size());
  for (std::size_t i = 0; i < dice.size(); ++i) {
    if (state.faces[i] >= dice[i].labels.size()) {
      throw std::domain_error("microstate: face index out of range for die " +
                              std::to_string(i));
    }
    out.push_back(dice[i].labels[state.faces[i]]);
  }
  return out;
}

std::string sum_mapping(const std::vector<DieSpec>& dice,
                        const DiceMicrostate& state) {
  std::int64_t sum = 0;
  for (const std::string& label : microstate_labels(dice, state)) {
    std::int64_t value = 0;
    if (!parse_int(label, value)) {
      throw std::domain_error("sum mapping: face label '" + label +
                              "' is not numeric");
    }
    sum += value;
  }
  return std::to_string(sum);
}

std::string labels_mapping(const std::vector<DieSpec>& dice,
                           const DiceMicrostate& state) {
  std::string out;
  for (const std::string& label : microstate_labels(dice, state)) {
    if (!out.empty()) {
      out += '+';
    }
    out += label;
  }
  return out;
}

ExactNat microstate_count(const std::vector<DieSpec>& dice) {
  require_dice(dice);
  ExactNat count = 1;
  for (const DieSpec& die : dice) {
    count *= die.faces;
  }
  return count;
}

std::vector<DiceMicrostate> enumerate_microstates(
    const std::vector<DieSpec>& dice, std::int64_t cap) {
  require_dice(dice);
  const std::int64_t count = counted_or_throw(dice, cap);
  std::vector<DiceMicrostate> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_microstate(dice, [&](const DiceMicrostate& s) { out.push_back(s); });
  return out;
}

MacrostateTable macrostate_table(const std::vector<DieSpec>& dice,
                                 const MacrostateMapping& mapping,
                                 std::int64_t cap) {
  require_dice(dice);
  if (!mapping) {
    throw std::domain_error("macrostate_table: mapping not defined");
  }
  counted_or_throw(dice, cap);

  std::map<std::string, std::uint64_t> counts;
  for_each_microstate(dice, [&](const DiceMicrostate& s) { ++counts[mapping(dice, s)]; });

  MacrostateTable table;
  table.total_multiplicity = microstate_count(dice);
  table.rows.reserve(counts.size());
  for (const auto& [label, count] : counts) {
    MacrostateRow row;
    row.label = label;
    row.multiplicity = count;
    row.probability = Rational(ExactNat(count), table.total_multiplicity);
    table.rows.push_back(std::move(row));
  }

  // Numeric order when the labels allow it (e.g. dice sums 2..12), else
  // plain lexicographic.
  std::int64_t parsed = 0;
  const bool all_numeric = std::all_of(
      table.rows.begin(), table.rows.end(),
      [&](const MacrostateRow& r) { return parse_int(r.label, parsed); });
  if (all_numeric) {
    std::sort(table.rows.begin(), table.rows.end(),
              [&](const MacrostateRow& a, const MacrostateRow& b) {
                std::int64_t va = 0;
                std::int64_t vb = 0;
                parse_int(a.label, va);
                parse_int(b.label, vb);
                return va < vb;
              });
  } else {
    std::sort(table.rows.begin(), table.rows.end(),
              [](const MacrostateRow& a, const MacrostateRow& b) {
                return a.label < b.label;
              });
  }
  return table;
}

}  // namespace omega
