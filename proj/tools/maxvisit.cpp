#include "maxvisit/analysis.hpp"
#include "maxvisit/bounds.hpp"
#include "maxvisit/oracle.hpp"
#include "maxvisit/rational.hpp"
#include "maxvisit/verify.hpp"
#include "maxvisit/walk.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr const char* kToolVersion = "1.0.0";

using maxvisit::Rational;
using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

Rational require_rational(const std::string& text) {
  auto parsed = maxvisit::parse_rational(text);
  if (!parsed) {
    std::cerr << "error: cannot parse '" << text << "' as an exact number\n";
    std::exit(1);
  }
  return *parsed;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MAXVISIT_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return &std::cout;
  file.open(path);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    std::exit(1);
  }
  return &file;
}

int cmd_bound(int n, const std::string& x_text, const std::string& format) {
  Rational x = require_rational(x_text);
  auto [value, agree] = maxvisit::d_value_checked(n, x);
  double hoeffding = x > 0 ? maxvisit::hoeffding_bound(std::max(n, 1), x) : 1.0;
  if (format == "json") {
    ordered_json out{{"n", n},
                     {"x", maxvisit::fraction_string(x)},
                     {"d", maxvisit::fraction_string(value)},
                     {"d_float", maxvisit::to_double(value)},
                     {"routes_agree", agree},
                     {"hoeffding_float", hoeffding}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "D_" << n << "(" << maxvisit::fraction_string(x) << ") = "
              << maxvisit::fraction_string(value) << " = "
              << format_double(maxvisit::to_double(value)) << "\n"
              << "recursion/closed-form agreement: " << (agree ? "yes" : "NO") << "\n"
              << "hoeffding exp(-x^2/2n) = " << format_double(hoeffding) << "\n";
  }
  return agree ? 0 : 2;
}

int cmd_table(int n, const std::string& min_text, const std::string& max_text,
              const std::string& step_text, const std::string& out_path) {
  Rational x_min = require_rational(min_text);
  Rational x_max = require_rational(max_text);
  Rational step = require_rational(step_text);
  if (step <= 0 || x_min >= x_max) {
    std::cerr << "error: need x-min < x-max and step > 0\n";
    return 1;
  }
  std::ofstream file;
  std::ostream& os = *open_output(out_path, file);
  os << "n,x_num,x_den,d_num,d_den,d_float,hoeffding_float\n";
  maxvisit::BoundTable table;
  for (Rational x = x_min; x <= x_max; x += step) {
    Rational d = maxvisit::d_recursive(n, x, table);
    double hoeffding = x > 0 ? maxvisit::hoeffding_bound(std::max(n, 1), x) : 1.0;
    os << n << "," << numerator(x) << "," << denominator(x) << "," << numerator(d) << ","
       << denominator(d) << "," << format_double(maxvisit::to_double(d)) << ","
       << format_double(hoeffding) << "\n";
  }
  return 0;
}

int cmd_simulate(int n, const std::string& x_text, long long paths, std::uint64_t seed,
                 unsigned threads, const std::string& out_path, const std::string& format) {
  Rational x = require_rational(x_text);
  maxvisit::McEstimate mc = maxvisit::monte_carlo_estimate(n, x, paths, seed, threads);
  Rational target = maxvisit::d_value(n, x);
  double gap = mc.estimate - maxvisit::to_double(target);
  double z = mc.standard_error > 0 ? gap / mc.standard_error : 0.0;

  std::cout << "estimate = " << format_double(mc.estimate) << " +- "
            << format_double(mc.standard_error) << " (" << paths << " paths, seed " << seed
            << ")\n"
            << "exact D_" << n << "(" << maxvisit::fraction_string(x)
            << ") = " << maxvisit::fraction_string(target) << " = "
            << format_double(maxvisit::to_double(target)) << "\n"
            << "z-score = " << format_double(z) << "\n";

  if (!out_path.empty()) {
    std::ofstream file;
    std::ostream& os = *open_output(out_path, file);
    ordered_json records = ordered_json::array();
    if (format != "json") os << "path,stopping_time,max_level,max_level_float\n";
    for (long long p = 0; p < paths; ++p) {
      maxvisit::WalkPath path = maxvisit::simulate_path(n, x, seed, static_cast<std::uint64_t>(p));
      auto tau = maxvisit::stopping_time(path);
      Rational peak = maxvisit::path_max(path);
      if (format == "json") {
        records.push_back({{"path", p},
                           {"stopping_time", tau ? *tau : -1},
                           {"max_level", maxvisit::fraction_string(peak)},
                           {"max_level_float", maxvisit::to_double(peak)}});
      } else {
        os << p << "," << (tau ? *tau : -1) << "," << maxvisit::fraction_string(peak) << ","
           << format_double(maxvisit::to_double(peak)) << "\n";
      }
    }
    if (format == "json") os << records.dump() << "\n";
  }
  return 0;
}

int cmd_envelope(int n, const std::string& x_text, double resolution) {
  Rational x = require_rational(x_text);
  double xf = maxvisit::to_double(x);
  maxvisit::EnvelopeResult envelope{xf <= 0 ? 1.0 : 0.0, 0.0, 0.0};
  if (n > 0 && xf > 0) {
    maxvisit::EnvelopeOracle oracle(n, resolution, xf);
    envelope = oracle.envelope(n, xf);
  }
  Rational exact = maxvisit::d_value(n, x);
  std::cout << "envelope value = " << format_double(envelope.value) << "\n"
            << "touching abscissas = (" << format_double(envelope.support_lo) << ", "
            << format_double(envelope.support_hi) << ")\n"
            << "gap to exact D_" << n << "(" << maxvisit::fraction_string(x)
            << ") = " << format_double(envelope.value - maxvisit::to_double(exact)) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int n_max, unsigned threads, const std::string& mutate,
               const std::string& out_path) {
  if (mutate == "bnk-printed") {
    maxvisit::set_mutation(maxvisit::Mutation::PrintedBinomialIndex);
  } else if (mutate == "swap-p3q3") {
    maxvisit::set_mutation(maxvisit::Mutation::SwapCase3Probs);
  } else if (mutate != "none") {
    std::cerr << "error: unknown mutation '" << mutate << "'\n";
    return 1;
  }

  std::vector<std::string> names;
  if (suite == "all") {
    names = maxvisit::all_suite_names();
  } else {
    names = {suite};
  }

  ordered_json results = ordered_json::array();
  bool all_pass = true;
  for (const std::string& name : names) {
    maxvisit::SuiteResult r;
    try {
      r = maxvisit::run_suite(name, n_max, threads);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    all_pass = all_pass && r.pass;
    results.push_back({{"suite", r.suite},
                       {"pass", r.pass},
                       {"worst_violation", r.worst_violation},
                       {"witnesses", r.witnesses}});
  }

  ordered_json report{{"tool_version", kToolVersion},
                      {"config", {{"suite", suite}, {"n_max", n_max}, {"mutate", mutate}}},
                      {"results", results}};
  std::ofstream file;
  std::ostream& os = *open_output(out_path, file);
  os << report.dump(2) << "\n";
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp bounds on the probability that a bounded-step martingale visits [x,inf)"};
  app.require_subcommand(1);

  int n = 0, n_max = 20;
  std::string x_text, x_min, x_max, step_text("1/16");
  std::string out_path, format("text"), suite("all"), mutate("none"), method("auto");
  long long paths = 100000;
  std::uint64_t seed = default_seed();
  unsigned threads = 1;
  double grid = 1e-3;

  auto* bound = app.add_subcommand("bound", "compute D_n(x) exactly");
  bound->add_option("--n", n)->required();
  bound->add_option("--x", x_text)->required();
  bound->add_option("--method", method)->check(CLI::IsMember({"auto", "recursion", "closed"}));
  bound->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "emit a CSV of D_n over an x-grid");
  table->add_option("--n", n)->required();
  table->add_option("--x-min", x_min)->required();
  table->add_option("--x-max", x_max)->required();
  table->add_option("--step", step_text);
  table->add_option("--out", out_path);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo over the extremal walk");
  simulate->add_option("--n", n)->required();
  simulate->add_option("--x", x_text)->required();
  simulate->add_option("--paths", paths);
  simulate->add_option("--seed", seed);
  simulate->add_option("--threads", threads);
  simulate->add_option("--out", out_path);
  simulate->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite);
  verify->add_option("--n-max", n_max);
  verify->add_option("--threads", threads);
  verify->add_option("--mutate", mutate)
      ->check(CLI::IsMember({"none", "bnk-printed", "swap-p3q3"}));
  verify->add_option("--out", out_path);

  auto* envelope = app.add_subcommand("envelope", "concave-envelope oracle value at (n, x)");
  envelope->add_option("--n", n)->required();
  envelope->add_option("--x", x_text)->required();
  envelope->add_option("--grid", grid)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (bound->parsed()) return cmd_bound(n, x_text, format);
    if (table->parsed()) return cmd_table(n, x_min, x_max, step_text, out_path);
    if (simulate->parsed()) return cmd_simulate(n, x_text, paths, seed, threads, out_path, format);
    if (verify->parsed()) return cmd_verify(suite, n_max, threads, mutate, out_path);
    if (envelope->parsed()) return cmd_envelope(n, x_text, grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
