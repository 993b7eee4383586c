#ifndef OMEGA_ENVELOPE_HPP
#define OMEGA_ENVELOPE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "omega/exactmath.hpp"

namespace omega {

inline constexpr const char* kToolName = "omega";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);

// One table cell. Exact integers and rationals are carried losslessly;
// JSON renders integers above 2^53 as strings so nothing gets rounded by
// a consumer.
class Cell {
 public:
  static Cell integer(std::int64_t v) { return Cell(v); }
  static Cell exact(ExactNat v) { return Cell(std::move(v)); }
  static Cell rational(Rational v) { return Cell(std::move(v)); }
  static Cell real(double v) { return Cell(v); }
  static Cell text(std::string v) { return Cell(std::move(v)); }

  using Value = std::variant<std::int64_t, ExactNat, Rational, double, std::string>;
  const Value& value() const { return value_; }

 private:
  explicit Cell(Value v) : value_(std::move(v)) {}
  Value value_;
};

// Everything a run reports about itself. The timestamp is left empty
// whenever a seed participates so that seeded runs are byte-reproducible.
struct Metadata {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::string timestamp;
  std::vector<std::pair<std::string, Cell>> extra;  // command-specific summary
};

struct OutputEnvelope {
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Doubles are rendered with 12 significant digits by both formats, so the
// two payloads of one command carry identical numeric values.
std::string format_double(double v);

// Comma-separated table preceded by one '#' metadata comment line naming
// the tool, command and seed.
std::string render_csv(const OutputEnvelope& env);

// Single object {"metadata": {...}, "rows": [...]} with one object per row.
std::string render_json(const OutputEnvelope& env);

std::string render(const OutputEnvelope& env, OutputFormat format);

// RFC 3339 UTC wall-clock time; the CLI stamps unseeded runs with it.
std::string current_timestamp();

}  // namespace omega

#endif  // OMEGA_ENVELOPE_HPP
