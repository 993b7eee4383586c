#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "omega/envelope.hpp"

using omega::Cell;
using omega::ExactNat;
using omega::OutputEnvelope;
using omega::Rational;

namespace {

OutputEnvelope sample_envelope() {
  OutputEnvelope env;
  env.metadata.command = "solids --Na 3 --Nb 3 -q 6";
  env.metadata.seed = 42;
  env.metadata.extra.emplace_back("total", Cell::exact(ExactNat(462)));
  env.columns = {"q_A", "omega_tot", "probability", "note"};
  env.rows.push_back({Cell::integer(3), Cell::exact(ExactNat(100)),
                      Cell::real(100.0 / 462.0), Cell::text("peak, max")});
  env.rows.push_back({Cell::integer(0), Cell::exact(omega::factorial(30)),
                      Cell::rational(Rational(28, 462)), Cell::text("edge")});
  return env;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(omega::parse_format("csv") == omega::OutputFormat::Csv);
  CHECK(omega::parse_format("json") == omega::OutputFormat::Json);
  CHECK_THROWS_AS(omega::parse_format("xml"), std::domain_error);
}

TEST_CASE("csv carries a metadata comment, header, and escaped cells") {
  const std::string csv = omega::render_csv(sample_envelope());
  CHECK(csv.rfind("# tool=omega", 0) == 0);
  CHECK(csv.find("seed=42") != std::string::npos);
  CHECK(csv.find("command=\"solids --Na 3 --Nb 3 -q 6\"") != std::string::npos);
  CHECK(csv.find("total=462") != std::string::npos);
  CHECK(csv.find("q_A,omega_tot,probability,note") != std::string::npos);
  CHECK(csv.find("\"peak, max\"") != std::string::npos);  // comma forces quoting
  CHECK(csv.find("28/462") == std::string::npos);          // rationals in lowest terms
  CHECK(csv.find("2/33") != std::string::npos);
}

TEST_CASE("json mirrors the csv numerically") {
  const auto env = sample_envelope();
  const auto doc = nlohmann::json::parse(omega::render_json(env));

  CHECK(doc["metadata"]["tool"] == "omega");
  CHECK(doc["metadata"]["seed"] == 42);
  CHECK(doc["metadata"]["total"] == 462);
  CHECK(doc["rows"].size() == 2);

  // Small exact integers stay numbers; 30! overflows 2^53 and becomes a
  // full decimal string.
  CHECK(doc["rows"][0]["omega_tot"] == 100);
  CHECK(doc["rows"][1]["omega_tot"] == omega::factorial(30).str());

  // The double value matches the csv rendering exactly.
  const std::string csv = omega::render_csv(env);
  const std::string rendered = omega::format_double(100.0 / 462.0);
  CHECK(csv.find(rendered) != std::string::npos);
  CHECK(doc["rows"][0]["probability"].get<double>() ==
        std::strtod(rendered.c_str(), nullptr));
}

TEST_CASE("unseeded envelopes report no seed") {
  OutputEnvelope env;
  env.metadata.command = "dice --dice 6,6";
  env.columns = {"x"};
  env.rows.push_back({Cell::integer(1)});
  const std::string csv = omega::render_csv(env);
  CHECK(csv.find("seed=none") != std::string::npos);
  const auto doc = nlohmann::json::parse(omega::render_json(env));
  CHECK(doc["metadata"]["seed"].is_null());
}

TEST_CASE("double formatting is stable at 12 significant digits") {
  CHECK(omega::format_double(0.5) == "0.5");
  CHECK(omega::format_double(1.0 / 36.0) == "0.0277777777778");
  CHECK(omega::format_double(100.0) == "100");
}
