#include "omega/envelope.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <stdexcept>

#include <json.hpp>

namespace omega {

namespace {

constexpr std::int64_t kJsonIntLimit = 1ll << 53;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string to_text(const Cell& cell) {
  const auto& v = cell.value();
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    return std::to_string(*i);
  }
  if (const auto* n = std::get_if<ExactNat>(&v)) {
    return n->str();
  }
  if (const auto* r = std::get_if<Rational>(&v)) {
    const ExactNat den = boost::multiprecision::denominator(*r);
    if (den == 1) {
      return boost::multiprecision::numerator(*r).str();
    }
    return boost::multiprecision::numerator(*r).str() + "/" + den.str();
  }
  if (const auto* d = std::get_if<double>(&v)) {
    return format_double(*d);
  }
  return std::get<std::string>(v);
}

nlohmann::ordered_json to_json(const Cell& cell) {
  const auto& v = cell.value();
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    return *i;
  }
  if (const auto* n = std::get_if<ExactNat>(&v)) {
    if (*n < kJsonIntLimit && *n > -kJsonIntLimit) {
      return n->convert_to<std::int64_t>();
    }
    return n->str();
  }
  if (std::holds_alternative<Rational>(v)) {
    return to_text(cell);
  }
  if (const auto* d = std::get_if<double>(&v)) {
    // Round-trip through the shared 12-digit rendering so JSON and CSV
    // consumers see the same value.
    return std::strtod(format_double(*d).c_str(), nullptr);
  }
  return std::get<std::string>(v);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  if (name == "json") {
    return OutputFormat::Json;
  }
  throw std::domain_error("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string render_csv(const OutputEnvelope& env) {
  std::string out = "# tool=";
  out += kToolName;
  out += " version=";
  out += kToolVersion;
  out += " command=\"" + env.metadata.command + "\"";
  out += " seed=";
  out += env.metadata.seed ? std::to_string(*env.metadata.seed) : "none";
  if (!env.metadata.timestamp.empty()) {
    out += " timestamp=" + env.metadata.timestamp;
  }
  for (const auto& [key, cell] : env.metadata.extra) {
    out += " " + key + "=" + to_text(cell);
  }
  out += '\n';

  for (std::size_t c = 0; c < env.columns.size(); ++c) {
    if (c > 0) {
      out += ',';
    }
    out += csv_escape(env.columns[c]);
  }
  out += '\n';
  for (const auto& row : env.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += csv_escape(to_text(row[c]));
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const OutputEnvelope& env) {
  nlohmann::ordered_json meta;
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  meta["command"] = env.metadata.command;
  if (env.metadata.seed) {
    meta["seed"] = *env.metadata.seed;
  } else {
    meta["seed"] = nullptr;
  }
  meta["timestamp"] = env.metadata.timestamp;
  for (const auto& [key, cell] : env.metadata.extra) {
    meta[key] = to_json(cell);
  }

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : env.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size() && c < env.columns.size(); ++c) {
      obj[env.columns[c]] = to_json(row[c]);
    }
    rows.push_back(std::move(obj));
  }

  nlohmann::ordered_json doc;
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string render(const OutputEnvelope& env, OutputFormat format) {
  return format == OutputFormat::Csv ? render_csv(env) : render_json(env);
}

std::string current_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace omega
