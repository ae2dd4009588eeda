#include "fuzzjack/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/json_io.hpp"
#include "fuzzjack/kernels.hpp"

namespace fuzzjack {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("bad number '" + std::string(s) + "' in " + std::string(what));
  }
  return v;
}

enum class WidthTrend { nonincreasing, nondecreasing, neither };

WidthTrend width_trend(const IntervalFunction& slice) {
  if (check_width_nonincreasing(slice)) return WidthTrend::nonincreasing;
  if (check_width_nondecreasing(slice)) return WidthTrend::nondecreasing;
  return WidthTrend::neither;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IOError("failed writing " + path.string());
}

ErrorReport run_one(const FuzzyFunction& f, Method method, int n, const ExperimentConfig& c) {
  const double delta = c.delta_rule / (2.0 * n);
  const double eps = method == Method::trapezoid ? 0.0 : c.epsilon;
  try {
    switch (method) {
      case Method::gh_dec:
        return sup_distance(f, build_gh_dec(f, n, eps, delta), c.samples);
      case Method::gh_inc:
        return sup_distance(f, build_gh_inc(f, n, eps, delta), c.samples);
      case Method::g_diff:
        return sup_distance(f, build_g(f, n, eps, delta), c.samples);
      case Method::trapezoid:
        return sup_distance(f, build_trapezoid(f, n, delta), c.samples);
      case Method::interval_gh:
        return run_interval_gh(f, n, delta, eps, c.samples);
    }
  } catch (const HypothesisViolated& e) {
    if (c.strict) throw;
    return skipped_report(method, n, delta, eps, e.what());
  } catch (const GHDifferenceUndefined& e) {
    if (c.strict) throw;
    return skipped_report(method, n, delta, eps, e.what());
  }
  throw InvalidParams("unknown method");
}

}  // namespace

FunctionSource parse_function_arg(std::string_view text) {
  FunctionSource src;
  const auto colon = text.find(':');
  src.catalog_name = std::string(trim(text.substr(0, colon)));
  if (src.catalog_name.empty()) throw ConfigError("empty function name");
  if (colon == std::string_view::npos) return src;
  for (auto part : split(text.substr(colon + 1), ',')) {
    src.params.u.push_back(parse_double(part, "function parameters"));
  }
  if (src.params.u.size() != 3 && src.params.u.size() != 4) {
    throw ConfigError("function parameters need 3 (triangular) or 4 (trapezoidal) values");
  }
  return src;
}

void ExperimentConfig::validate() const {
  if (function.catalog_name.empty() && function.file.empty()) {
    throw ConfigError("no function given (catalog name or file)");
  }
  if (!function.catalog_name.empty() && !function.file.empty()) {
    throw ConfigError("give either a catalog function or a file, not both");
  }
  if (methods.empty()) throw ConfigError("no methods selected");
  if (n_list.empty()) throw ConfigError("n list is empty");
  for (int n : n_list) {
    if (n < 1) throw ConfigError("each n must be >= 1, got " + std::to_string(n));
  }
  if (!(delta_rule > 0.0 && delta_rule < 1.0)) throw ConfigError("delta rule must lie in (0,1)");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw ConfigError("epsilon must lie in (0, 1/2)");
  if (samples < 2) throw ConfigError("samples must be >= 2");
  if (alpha_levels < 1) throw ConfigError("alpha levels must be >= 1");
}

std::vector<Method> default_methods() {
  return {Method::gh_dec, Method::gh_inc, Method::g_diff, Method::trapezoid};
}

std::vector<Method> parse_methods(std::string_view text) {
  std::vector<Method> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    if (part == "all") {
      for (Method m : default_methods()) out.push_back(m);
      continue;
    }
    const auto m = parse_method(part);
    if (!m) throw ConfigError("unknown method '" + std::string(part) + "'");
    out.push_back(*m);
  }
  // keep first occurrence order, drop repeats
  std::vector<Method> unique;
  for (Method m : out) {
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(m);
  }
  return unique;
}

FuzzyFunction load_function(const std::filesystem::path& path) {
  auto data = sampled_function_from_json(read_json_file(path));
  return make_sampled(std::move(data), path.stem().string());
}

FuzzyFunction resolve_function(const FunctionSource& source, std::size_t alpha_levels) {
  if (!source.file.empty()) return load_function(source.file);
  return catalog(source.catalog_name, source.params, AlphaGrid::uniform(alpha_levels));
}

ErrorReport run_interval_gh(const FuzzyFunction& f, int n, double delta, double eps,
                            std::size_t samples) {
  const auto& levels = f.grid().levels();
  std::vector<IntervalApproximant> parts;
  parts.reserve(levels.size());
  auto psi = make_psi_family(f, n, eps, delta);
  for (double alpha : levels) {
    const auto slice = alpha_slice(f, alpha);
    switch (width_trend(slice)) {
      case WidthTrend::nonincreasing:
        parts.push_back(build_interval_gh_dec(slice, psi, eps));
        break;
      case WidthTrend::nondecreasing:
        parts.push_back(build_interval_gh_inc(slice, psi, eps));
        break;
      case WidthTrend::neither: {
        std::ostringstream os;
        os.precision(17);
        os << "width hypothesis failed: len([f(x)]_alpha) is not monotone at alpha = " << alpha;
        throw HypothesisViolated(os.str());
      }
    }
  }

  const auto xs = sample_points(n, delta, samples);
  const auto values = kernels::sample_values([&f](double x) { return f(x); }, xs);
  ErrorReport r;
  r.method = Method::interval_gh;
  r.n = n;
  r.delta = delta;
  r.eps = eps;
  r.per_sample.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double d = 0.0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      d = std::max(d, hausdorff(values[i].cut(k), parts[k](xs[i])));
    }
    r.per_sample.push_back({xs[i], d});
    r.sup_distance = std::max(r.sup_distance, d);
  }
  const auto modulus = modulus_upper_bound(f, 1.0 / n);
  r.modulus_value = modulus.value;
  r.modulus_kind = modulus.kind;
  r.bound_value = bound_value(Method::interval_gh, n, eps, modulus.value);
  r.bound_formula = bound_formula(Method::interval_gh);
  r.pass = r.sup_distance <= r.bound_value + kReportTol;
  return r;
}

std::vector<ErrorReport> run_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_experiment(config, resolve_function(config.function, config.alpha_levels));
}

std::vector<ErrorReport> run_experiment(const ExperimentConfig& config, const FuzzyFunction& f) {
  config.validate();
  std::vector<ErrorReport> reports;
  reports.reserve(config.methods.size() * config.n_list.size());
  for (Method method : config.methods) {
    for (int n : config.n_list) reports.push_back(run_one(f, method, n, config));
  }
  return reports;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string convergence_csv(std::span<const ErrorReport> reports) {
  std::string out = "method,n,sup_distance,modulus,bound,pass\n";
  for (const auto& r : reports) {
    if (r.status == ReportStatus::skipped) continue;
    out += std::string(to_string(r.method)) + ',' + std::to_string(r.n) + ',' +
           format_double(r.sup_distance) + ',' + format_double(r.modulus_value) + ',' +
           format_double(r.bound_value) + ',' + r.verdict() + '\n';
  }
  return out;
}

std::string errors_csv(const ErrorReport& report) {
  std::string out = "x,d_infty\n";
  for (const auto& s : report.per_sample) {
    out += format_double(s.x) + ',' + format_double(s.distance) + '\n';
  }
  return out;
}

void emit_report(std::span<const ErrorReport> reports, const std::filesystem::path& output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec || !std::filesystem::is_directory(output_dir)) {
    throw IOError("cannot create output directory " + output_dir.string() +
                  (ec ? ": " + ec.message() : std::string()));
  }
  write_file(output_dir / "report.json", reports_to_json(reports).dump(2) + "\n");
  write_file(output_dir / "convergence.csv", convergence_csv(reports));
  for (const auto& r : reports) {
    if (r.status == ReportStatus::skipped) continue;
    const std::string name = "errors_" + std::string(to_string(r.method)) + "_" + std::to_string(r.n) + ".csv";
    write_file(output_dir / name, errors_csv(r));
  }
}

int exit_code(std::span<const ErrorReport> reports) {
  for (const auto& r : reports) {
    if (r.verdict() == "false") return 1;
  }
  return 0;
}

}  // namespace fuzzjack
