#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzjack/approximants.hpp"
#include "fuzzjack/fuzzy_function.hpp"

namespace fuzzjack {

/// Either a catalog entry (with optional fuzzy parameter) or a JSON function file.
struct FunctionSource {
  std::string catalog_name;
  CatalogParams params;
  std::filesystem::path file;
};

// "name" or "name:a,b,c[,d]". Throws ConfigError on malformed parameters.
FunctionSource parse_function_arg(std::string_view text);

struct ExperimentConfig {
  FunctionSource function;
  std::vector<Method> methods;
  std::vector<int> n_list{4, 8, 16};
  double delta_rule = 0.5;  // δ = delta_rule / (2n)
  double epsilon = 1e-3;
  std::size_t samples = 2049;
  std::size_t alpha_levels = 100;
  std::filesystem::path output = "fuzzjack_out";
  std::uint64_t seed = 0;
  bool strict = false;

  // Throws ConfigError.
  void validate() const;
};

// The four fuzzy methods; interval_gh has to be asked for by name.
std::vector<Method> default_methods();

// Comma separated list; "all" expands to default_methods(). Throws ConfigError.
std::vector<Method> parse_methods(std::string_view text);

FuzzyFunction load_function(const std::filesystem::path& path);
FuzzyFunction resolve_function(const FunctionSource& source, std::size_t alpha_levels);

// One report per (method, n). Hypothesis failures turn into skipped reports
// unless config.strict is set, in which case the builder error propagates.
std::vector<ErrorReport> run_experiment(const ExperimentConfig& config);
std::vector<ErrorReport> run_experiment(const ExperimentConfig& config, const FuzzyFunction& f);

// interval_gh over every grid level of f, combined into one report: the
// distance at x is the largest level distance, which is d_infty of the
// level-wise approximant. ω^F(f, 1/n) bounds every level modulus.
ErrorReport run_interval_gh(const FuzzyFunction& f, int n, double delta, double eps,
                            std::size_t samples);

// %.17g with '.' regardless of locale.
std::string format_double(double v);

std::string convergence_csv(std::span<const ErrorReport> reports);
std::string errors_csv(const ErrorReport& report);

// report.json, convergence.csv and errors_<method>_<n>.csv. Skipped reports
// appear only in report.json. Throws IOError.
void emit_report(std::span<const ErrorReport> reports, const std::filesystem::path& output_dir);

// 0 iff every completed, non-indicative report passes.
int exit_code(std::span<const ErrorReport> reports);

}  // namespace fuzzjack
