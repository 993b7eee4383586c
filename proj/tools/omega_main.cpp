// omega: exact multiplicity tables, macrostate distributions, and seeded
// Monte Carlo runs for dice ensembles and coupled Einstein solids.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omega/dice.hpp"
#include "omega/envelope.hpp"
#include "omega/errors.hpp"
#include "omega/exactmath.hpp"
#include "omega/montecarlo.hpp"
#include "omega/process.hpp"
#include "omega/rng.hpp"
#include "omega/solids.hpp"

namespace {

using omega::Cell;
using omega::ExactNat;
using omega::OutputEnvelope;
using omega::Rational;

struct GlobalOptions {
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string command_line;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      std::size_t used = 0;
      const std::int64_t value = std::stoll(token, &used);
      if (used != token.size() || token.empty()) {
        throw std::invalid_argument(token);
      }
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::domain_error(std::string(what) + ": '" + token +
                              "' is not an integer");
    }
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

// Digit-by-digit base-10 parse; ExactNat's own string constructor would
// read a leading zero as an octal prefix.
bool parse_digits(const std::string& digits, ExactNat& out) {
  if (digits.empty()) {
    return false;
  }
  out = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      return false;
    }
    out *= 10;
    out += c - '0';
  }
  return true;
}

bool parse_signed_digits(std::string text, ExactNat& out) {
  bool negative = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  if (!parse_digits(text, out)) {
    return false;
  }
  if (negative) {
    out = -out;
  }
  return true;
}

// Decimal ("0.505", "-102", "3.25") or fraction ("101/200") to an exact
// rational.
Rational parse_rational(const std::string& text, const char* what) {
  const auto fail = [&]() -> Rational {
    throw std::domain_error(std::string(what) + ": '" + text + "' is not a number");
  };
  if (text.empty()) {
    return fail();
  }
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    ExactNat num;
    ExactNat den;
    if (!parse_signed_digits(text.substr(0, slash), num) ||
        !parse_digits(text.substr(slash + 1), den) || den == 0) {
      return fail();
    }
    return Rational(num, den);
  }
  std::string digits = text;
  bool negative = false;
  if (digits[0] == '+' || digits[0] == '-') {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  ExactNat scale = 1;
  const std::size_t dot = digits.find('.');
  if (dot != std::string::npos) {
    const std::size_t places = digits.size() - dot - 1;
    digits.erase(dot, 1);
    for (std::size_t i = 0; i < places; ++i) {
      scale *= 10;
    }
  }
  ExactNat mantissa;
  if (!parse_digits(digits, mantissa)) {
    return fail();
  }
  Rational value(mantissa, scale);
  return negative ? -value : value;
}

std::string quote_token(const std::string& token) {
  if (token.find_first_of(" \t\"") == std::string::npos) {
    return token;
  }
  std::string out = "\"";
  for (char c : token) {
    if (c == '"') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

omega::Metadata make_metadata(const GlobalOptions& global, bool uses_rng) {
  omega::Metadata meta;
  meta.command = global.command_line;
  if (uses_rng || global.seed_given) {
    // Seeded runs must be byte-reproducible, so no wall-clock timestamp.
    meta.seed = global.seed;
  } else {
    meta.timestamp = omega::current_timestamp();
  }
  return meta;
}

// ---------------------------------------------------------------------------
// dice

struct DiceArgs {
  std::string dice;
  std::string mapping = "sum";
};

OutputEnvelope run_dice(const DiceArgs& args, const GlobalOptions& global) {
  std::vector<omega::DieSpec> dice;
  for (const std::int64_t faces : parse_int_list(args.dice, "dice")) {
    dice.emplace_back(faces);
  }
  omega::MacrostateMapping mapping;
  if (args.mapping == "sum") {
    mapping = omega::sum_mapping;
  } else if (args.mapping == "labels") {
    mapping = omega::labels_mapping;
  } else {
    throw std::domain_error("dice: unknown mapping '" + args.mapping +
                            "' (expected sum or labels)");
  }
  const auto table = omega::macrostate_table(dice, mapping);

  OutputEnvelope env;
  env.metadata = make_metadata(global, false);
  env.metadata.extra.emplace_back("total_multiplicity",
                                  Cell::exact(table.total_multiplicity));
  env.columns = {"macrostate", "multiplicity", "probability", "probability_decimal"};
  for (const auto& row : table.rows) {
    env.rows.push_back({Cell::text(row.label), Cell::exact(row.multiplicity),
                        Cell::rational(row.probability),
                        Cell::real(omega::to_double(row.probability))});
  }
  return env;
}

// ---------------------------------------------------------------------------
// solids

struct SolidsArgs {
  std::int64_t oscillators_a = 0;
  std::int64_t oscillators_b = 0;
  std::int64_t total_energy = 0;
  bool log_space = false;
};

OutputEnvelope run_solids(const SolidsArgs& args, const GlobalOptions& global) {
  const omega::CoupledSolids sys{args.oscillators_a, args.oscillators_b,
                                 args.total_energy};
  const auto mode = args.log_space ? omega::DistributionMode::LogSpace
                                   : omega::DistributionMode::Exact;
  const auto dist = omega::macrostate_distribution(sys, mode);

  OutputEnvelope env;
  env.metadata = make_metadata(global, false);
  env.metadata.extra.emplace_back(
      "mode", Cell::text(args.log_space ? "log" : "exact"));
  if (mode == omega::DistributionMode::Exact) {
    env.metadata.extra.emplace_back("total_multiplicity",
                                    Cell::exact(dist.total_multiplicity));
    env.columns = {"q_A", "omega_A", "omega_B", "omega_tot", "probability"};
    for (const auto& row : dist.rows) {
      env.rows.push_back({Cell::integer(row.q_a), Cell::exact(row.omega_a),
                          Cell::exact(row.omega_b), Cell::exact(row.omega_tot),
                          Cell::real(row.probability)});
    }
  } else {
    env.metadata.extra.emplace_back("ln_total_multiplicity",
                                    Cell::real(dist.ln_total_multiplicity));
    env.columns = {"q_A", "ln_omega_A", "ln_omega_B", "ln_omega_tot", "probability"};
    for (const auto& row : dist.rows) {
      env.rows.push_back({Cell::integer(row.q_a), Cell::real(row.ln_omega_a),
                          Cell::real(row.ln_omega_b), Cell::real(row.ln_omega_tot),
                          Cell::real(row.probability)});
    }
  }
  return env;
}

// ---------------------------------------------------------------------------
// mc

struct McArgs {
  std::int64_t oscillators_a = 0;
  std::int64_t oscillators_b = 0;
  std::int64_t total_energy = 0;
  std::int64_t steps = 0;
  std::int64_t burn_in = 10'000;
  std::int64_t stride = 10;
  std::string init = "all-in-B";
  std::string trace_path;
};

omega::InitialPreset parse_preset(const std::string& name) {
  if (name == "all-in-B") {
    return omega::InitialPreset::AllInB;
  }
  if (name == "all-in-A") {
    return omega::InitialPreset::AllInA;
  }
  if (name == "balanced") {
    return omega::InitialPreset::Balanced;
  }
  throw std::domain_error("mc: unknown init '" + name +
                          "' (expected all-in-B, all-in-A, or balanced)");
}

OutputEnvelope run_mc(const McArgs& args, const GlobalOptions& global) {
  const omega::CoupledSolids sys{args.oscillators_a, args.oscillators_b,
                                 args.total_energy};
  omega::ChainConfig config;
  config.steps = args.steps;
  config.burn_in = args.burn_in;
  config.sample_stride = args.stride;
  config.seed = global.seed;

  const auto preset = parse_preset(args.init);
  const auto result = omega::run_chain(sys, preset, config);

  // Compare against the exact distribution; fall back to log-space when the
  // system is too large for big-integer mode.
  const auto mode = sys.total_energy +
                            std::max(sys.oscillators_a, sys.oscillators_b) <=
                        omega::kExactModeCap
                    ? omega::DistributionMode::Exact
                    : omega::DistributionMode::LogSpace;
  const auto exact = omega::macrostate_distribution(sys, mode);
  const double tv = omega::tv_distance(result.histogram, exact);

  if (!args.trace_path.empty()) {
    std::ofstream trace(args.trace_path);
    if (!trace) {
      throw std::runtime_error("mc: cannot open trace file '" + args.trace_path + "'");
    }
    for (const std::int64_t q_a : result.trace) {
      trace << q_a << '\n';
    }
  }

  OutputEnvelope env;
  env.metadata = make_metadata(global, true);
  env.metadata.extra.emplace_back("rng", Cell::text(omega::SplitMix64::algorithm()));
  env.metadata.extra.emplace_back("init", Cell::text(args.init));
  env.metadata.extra.emplace_back("steps", Cell::integer(result.steps_executed));
  env.metadata.extra.emplace_back("burn_in", Cell::integer(args.burn_in));
  env.metadata.extra.emplace_back("stride", Cell::integer(args.stride));
  env.metadata.extra.emplace_back(
      "samples", Cell::integer(static_cast<std::int64_t>(result.samples)));
  env.metadata.extra.emplace_back("tv_distance", Cell::real(tv));

  env.columns = {"q_A", "count", "empirical_probability", "exact_probability"};
  for (std::size_t q_a = 0; q_a < result.histogram.size(); ++q_a) {
    const double empirical =
        static_cast<double>(result.histogram[q_a]) /
        static_cast<double>(result.samples);
    env.rows.push_back(
        {Cell::integer(static_cast<std::int64_t>(q_a)),
         Cell::integer(static_cast<std::int64_t>(result.histogram[q_a])),
         Cell::real(empirical), Cell::real(exact.rows[q_a].probability)});
  }
  return env;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::int64_t oscillators_a = 0;
  std::int64_t oscillators_b = 0;
  std::int64_t total_energy = 0;
  std::string factors;
};

OutputEnvelope run_sweep(const SweepArgs& args, const GlobalOptions& global) {
  const omega::CoupledSolids base{args.oscillators_a, args.oscillators_b,
                                  args.total_energy};
  const auto factors = parse_int_list(args.factors, "factors");
  const auto sweep = omega::scaling_sweep(base, factors);

  OutputEnvelope env;
  env.metadata = make_metadata(global, false);
  env.columns = {"factor", "mean", "std", "relative_width", "fwhm"};
  for (const auto& [factor, stats] : sweep) {
    env.rows.push_back({Cell::integer(factor), Cell::real(stats.mean),
                        Cell::real(stats.stddev), Cell::real(stats.relative_width),
                        Cell::real(stats.fwhm)});
  }
  return env;
}

// ---------------------------------------------------------------------------
// casino

struct CasinoArgs {
  std::string p_a;
  std::string fee = "100";
  std::string payout = "102";
  std::int64_t plays = 10'000;
  std::int64_t simulate = 0;
};

OutputEnvelope run_casino(const CasinoArgs& args, const GlobalOptions& global) {
  const Rational p_a = parse_rational(args.p_a, "casino p-a");
  if (p_a < 0 || p_a > 1) {
    throw std::domain_error("casino: p-a must lie in [0, 1]");
  }
  const Rational fee = parse_rational(args.fee, "casino fee");
  const Rational payout = parse_rational(args.payout, "casino payout");
  const Rational p_b = 1 - p_a;

  // House nets +fee when A occurs and -payout when B occurs.
  const omega::OutcomeDistribution dist({{"A", p_a}, {"B", p_b}});
  const omega::WagerStructure wager{{{"A", fee}, {"B", -payout}}, args.plays};

  const Rational expected_fees = Rational(args.plays) * p_a * fee;
  const Rational expected_payout = Rational(args.plays) * p_b * payout;
  const Rational expected_profit = omega::expected_house_profit_exact(dist, wager);
  const Rational variance = omega::profit_variance_exact(dist, wager);

  const bool simulating = args.simulate > 0;
  OutputEnvelope env;
  env.metadata = make_metadata(global, simulating);

  env.columns = {"quantity", "exact", "decimal"};
  const auto push = [&env](const char* name, const Rational& value) {
    env.rows.push_back({Cell::text(name), Cell::rational(value),
                        Cell::real(omega::to_double(value))});
  };
  push("expected_fees_kept", expected_fees);
  push("expected_payout", expected_payout);
  push("expected_profit", expected_profit);
  push("profit_variance", variance);

  if (simulating) {
    env.metadata.extra.emplace_back("rng", Cell::text(omega::SplitMix64::algorithm()));
    env.metadata.extra.emplace_back("periods", Cell::integer(args.simulate));

    // Exact Bernoulli threshold: floor(p_a * 2^64), with the endpoints
    // handled outside the draw.
    const ExactNat num = boost::multiprecision::numerator(p_a);
    const ExactNat den = boost::multiprecision::denominator(p_a);
    const ExactNat scaled = (num << 64) / den;
    const bool always_a = p_a == 1;
    const std::uint64_t threshold =
        always_a ? 0 : scaled.convert_to<std::uint64_t>();

    omega::SplitMix64 rng(global.seed);
    Rational sum = 0;
    Rational sum_sq = 0;
    for (std::int64_t period = 0; period < args.simulate; ++period) {
      std::int64_t count_a = 0;
      for (std::int64_t play = 0; play < args.plays; ++play) {
        if (always_a || rng() < threshold) {
          ++count_a;
        }
      }
      const Rational profit =
          fee * count_a - payout * (args.plays - count_a);
      sum += profit;
      sum_sq += profit * profit;
    }
    const Rational mean = sum / args.simulate;
    double stderr_value = 0;
    if (args.simulate > 1) {
      const Rational sample_var =
          (sum_sq - Rational(args.simulate) * mean * mean) / (args.simulate - 1);
      stderr_value = std::sqrt(std::max(0.0, omega::to_double(sample_var)) /
                               static_cast<double>(args.simulate));
    }
    push("simulated_mean", mean);
    env.rows.push_back({Cell::text("simulated_stderr"), Cell::text(""),
                        Cell::real(stderr_value)});
  }
  return env;
}

// ---------------------------------------------------------------------------

void emit(const OutputEnvelope& env, const GlobalOptions& global) {
  const std::string payload = omega::render(env, omega::parse_format(global.format));
  if (global.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(global.output, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + global.output + "'");
  }
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  // Accept the documented single-dash spellings for the oscillator counts.
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc));
  for (int i = 1; i < argc; ++i) {
    std::string token = argv[i];
    if (token.rfind("-Na", 0) == 0 && token.rfind("--", 0) != 0) {
      token.insert(token.begin(), '-');
    } else if (token.rfind("-Nb", 0) == 0 && token.rfind("--", 0) != 0) {
      token.insert(token.begin(), '-');
    }
    args.push_back(std::move(token));
  }

  GlobalOptions global;
  {
    std::string line = "omega";
    for (int i = 1; i < argc; ++i) {
      line += ' ';
      line += quote_token(argv[i]);
    }
    global.command_line = line;
  }

  CLI::App app{"Multiplicity tables, macrostate distributions, and seeded "
               "Monte Carlo for dice ensembles and coupled Einstein solids"};
  app.name("omega");
  app.require_subcommand(1);
  app.add_option("--format", global.format, "Output format: csv or json")
      ->capture_default_str();
  app.add_option("--output", global.output, "Write the payload to a file");
  auto* seed_opt = app.add_option("--seed", global.seed, "64-bit RNG seed");

  DiceArgs dice_args;
  auto* dice = app.add_subcommand("dice", "Macrostate table for a set of dice");
  dice->fallthrough();
  dice->add_option("--dice", dice_args.dice, "Comma-separated face counts, e.g. 6,6")
      ->required();
  dice->add_option("--mapping", dice_args.mapping, "Macrostate mapping: sum or labels")
      ->capture_default_str();

  SolidsArgs solids_args;
  auto* solids = app.add_subcommand(
      "solids", "Macrostate distribution of two coupled Einstein solids");
  solids->fallthrough();
  solids->add_option("--Na,--na", solids_args.oscillators_a, "Oscillators in solid A")
      ->required();
  solids->add_option("--Nb,--nb", solids_args.oscillators_b, "Oscillators in solid B")
      ->required();
  solids->add_option("-q,--q", solids_args.total_energy, "Total energy units")
      ->required();
  solids->add_flag("--log", solids_args.log_space,
                   "Log-space mode (natural logs instead of exact integers)");

  McArgs mc_args;
  auto* mc = app.add_subcommand(
      "mc", "Monte Carlo run of the energy-shift microprocess");
  mc->fallthrough();
  mc->add_option("--Na,--na", mc_args.oscillators_a, "Oscillators in solid A")
      ->required();
  mc->add_option("--Nb,--nb", mc_args.oscillators_b, "Oscillators in solid B")
      ->required();
  mc->add_option("-q,--q", mc_args.total_energy, "Total energy units")->required();
  mc->add_option("--steps", mc_args.steps, "Total steps to run")->required();
  mc->add_option("--burn-in", mc_args.burn_in, "Steps discarded before sampling")
      ->capture_default_str();
  mc->add_option("--stride", mc_args.stride, "Sample every this many steps")
      ->capture_default_str();
  mc->add_option("--init", mc_args.init,
                 "Initial condition: all-in-B, all-in-A, or balanced")
      ->capture_default_str();
  mc->add_option("--trace", mc_args.trace_path,
                 "Write the sampled q_A series to this file, one per line");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep", "Peak statistics across scaled-up copies of a base system");
  sweep->fallthrough();
  sweep->add_option("--Na,--na", sweep_args.oscillators_a, "Oscillators in solid A")
      ->required();
  sweep->add_option("--Nb,--nb", sweep_args.oscillators_b, "Oscillators in solid B")
      ->required();
  sweep->add_option("-q,--q", sweep_args.total_energy, "Total energy units")
      ->required();
  sweep->add_option("--factors", sweep_args.factors,
                    "Comma-separated scale factors, e.g. 1,100,1000")
      ->required();

  CasinoArgs casino_args;
  auto* casino = app.add_subcommand(
      "casino", "Expected profit and variance for a two-outcome wager");
  casino->fallthrough();
  casino->add_option("--p-a", casino_args.p_a,
                     "Probability of outcome A (decimal or fraction)")
      ->required();
  casino->add_option("--fee", casino_args.fee, "House gain when A occurs")
      ->capture_default_str();
  casino->add_option("--payout", casino_args.payout, "House loss when B occurs")
      ->capture_default_str();
  casino->add_option("--plays", casino_args.plays, "Plays per period")
      ->capture_default_str();
  casino->add_option("--simulate", casino_args.simulate,
                     "Also simulate this many periods");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  global.seed_given = seed_opt->count() > 0;

  try {
    if (*dice) {
      emit(run_dice(dice_args, global), global);
    } else if (*solids) {
      emit(run_solids(solids_args, global), global);
    } else if (*mc) {
      emit(run_mc(mc_args, global), global);
    } else if (*sweep) {
      emit(run_sweep(sweep_args, global), global);
    } else if (*casino) {
      emit(run_casino(casino_args, global), global);
    }
  } catch (const omega::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
