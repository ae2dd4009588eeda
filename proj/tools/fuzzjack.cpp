// fuzzjack: approximation experiments for fuzzy-number-valued functions.
//
//   fuzzjack approximate --function scaled_exp --n 4,8,16 --out out/
//   fuzzjack check --function bump_width
//   fuzzjack diff u.json v.json
//   fuzzjack selftest --seed 7

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/experiment.hpp"
#include "fuzzjack/json_io.hpp"
#include "fuzzjack/selftest.hpp"

using namespace fuzzjack;

namespace {

struct Args {
  std::string function;
  std::string file;
  std::string methods = "all";
  std::vector<int> n_list{4, 8, 16};
  double delta_rule = 0.5;
  double eps = 1e-3;
  std::size_t samples = 2049;
  std::size_t alpha_levels = 100;
  std::string out = "fuzzjack_out";
  std::uint64_t seed = 0;
  bool strict = false;
};

void add_function_flags(CLI::App* cmd, Args& a) {
  auto* fn = cmd->add_option("--function", a.function, "catalog entry, optionally name:a,b,c[,d]");
  auto* file = cmd->add_option("--file", a.file, "JSON function file");
  fn->excludes(file);
  cmd->add_option("--alpha-levels", a.alpha_levels, "number of alpha subdivisions (catalog only)")
      ->check(CLI::PositiveNumber);
}

ExperimentConfig make_config(const Args& a) {
  ExperimentConfig c;
  if (!a.file.empty()) {
    c.function.file = a.file;
  } else if (!a.function.empty()) {
    c.function = parse_function_arg(a.function);
  }
  c.methods = parse_methods(a.methods);
  c.n_list = a.n_list;
  c.delta_rule = a.delta_rule;
  c.epsilon = a.eps;
  c.samples = a.samples;
  c.alpha_levels = a.alpha_levels;
  c.output = a.out;
  if (const char* env = std::getenv("FUZZJACK_OUT"); env && *env) c.output = env;
  c.seed = a.seed;
  c.strict = a.strict;
  c.validate();
  return c;
}

int approximate(const Args& a) {
  const auto config = make_config(a);
  const auto reports = run_experiment(config);
  emit_report(reports, config.output);
  std::cout << "method        n   sup_distance            bound                   verdict\n";
  for (const auto& r : reports) {
    std::string line = std::string(to_string(r.method));
    line.resize(12, ' ');
    std::cout << line << ' ' << r.n << "  ";
    if (r.status == ReportStatus::skipped) {
      std::cout << "skipped: " << r.skip_reason << "\n";
      continue;
    }
    std::cout << format_double(r.sup_distance) << "  " << format_double(r.bound_value) << "  "
              << r.verdict() << "\n";
  }
  std::cout << "wrote " << config.output.string() << "\n";
  return exit_code(reports);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int check(const Args& a) {
  ExperimentConfig c;
  if (!a.file.empty()) {
    c.function.file = a.file;
  } else if (!a.function.empty()) {
    c.function = parse_function_arg(a.function);
  } else {
    throw ConfigError("no function given (catalog name or file)");
  }
  const auto f = resolve_function(c.function, a.alpha_levels);
  std::cout << "function " << f.name() << "\n";
  std::cout << "nested decreasing (f(y) inside f(x), x <= y): "
            << yes_no(check_nested_decreasing(f)) << "\n";
  std::cout << "nested increasing (f(x) inside f(y), x <= y): "
            << yes_no(check_nested_increasing(f)) << "\n";
  for (int n : a.n_list) {
    if (n < 1) throw ConfigError("each n must be >= 1");
    const auto m = modulus_upper_bound(f, 1.0 / n);
    std::cout << "n = " << n << ": forward gH chain " << yes_no(check_gh_chain(f, n, ChainDirection::forward))
              << ", backward gH chain " << yes_no(check_gh_chain(f, n, ChainDirection::backward))
              << ", omega(f,1/n) = " << format_double(m.value) << " (" << to_string(m.kind) << ")\n";
  }
  std::size_t dec = 0, inc = 0, neither = 0;
  for (double alpha : f.grid().levels()) {
    const auto slice = alpha_slice(f, alpha);
    if (check_width_nonincreasing(slice)) {
      ++dec;
    } else if (check_width_nondecreasing(slice)) {
      ++inc;
    } else {
      ++neither;
    }
  }
  std::cout << "alpha slices: " << dec << " with nonincreasing width, " << inc
            << " nondecreasing, " << neither << " neither\n";
  return 0;
}

int diff(const std::string& left, const std::string& right) {
  const auto u = fuzzy_number_from_json(read_json_file(left));
  const auto v = fuzzy_number_from_json(read_json_file(right));
  json out;
  if (gh_exists(u, v)) {
    out["gh"] = to_json(gh_difference(u, v));
  } else {
    out["gh"] = nullptr;
    out["gh_note"] = "gH-difference does not exist";
  }
  out["g"] = to_json(g_difference(u, v));
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jackson-type approximation of fuzzy-number-valued functions"};
  app.require_subcommand(1);
  Args args;

  auto* approx = app.add_subcommand("approximate", "run approximation experiments and write reports");
  add_function_flags(approx, args);
  approx->add_option("--methods", args.methods, "comma list of gh_dec,gh_inc,g_diff,trapezoid,interval_gh or all");
  approx->add_option("--n", args.n_list, "node counts")->delimiter(',');
  approx->add_option("--delta-rule", args.delta_rule, "delta as a fraction of 1/(2n)");
  approx->add_option("--eps", args.eps, "slack in the 2*omega + eps bounds");
  approx->add_option("--samples", args.samples, "uniform sample count");
  approx->add_option("--out", args.out, "output directory (FUZZJACK_OUT overrides)");
  approx->add_option("--seed", args.seed, "seed recorded for reproducibility");
  approx->add_flag("--strict", args.strict, "fail instead of skipping when a hypothesis is violated");

  auto* chk = app.add_subcommand("check", "hypothesis diagnostics for a function");
  add_function_flags(chk, args);
  chk->add_option("--n", args.n_list, "node counts for the gH chain checks")->delimiter(',');

  std::string left, right;
  auto* dif = app.add_subcommand("diff", "gH- and g-difference of two fuzzy numbers from JSON");
  dif->add_option("u", left, "minuend JSON file")->required();
  dif->add_option("v", right, "subtrahend JSON file")->required();

  auto* self = app.add_subcommand("selftest", "run the randomized property suites");
  self->add_option("--seed", args.seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*approx) return approximate(args);
    if (*chk) return check(args);
    if (*dif) return diff(left, right);
    if (*self) return run_selftest(args.seed, std::cout) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
