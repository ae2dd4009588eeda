#include "fuzzjack/json_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "fuzzjack/errors.hpp"

namespace fuzzjack {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) schema_fail(path, "expected a number");
  return v.get<double>();
}

long long integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_fail(path, "expected an integer");
  return v.get<long long>();
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) schema_fail(path, "expected an array");
  return v;
}

std::string string(const json& v, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected a string");
  return v.get<std::string>();
}

AlphaGrid grid_from_json(const json& levels, const std::string& path) {
  array(levels, path);
  std::vector<double> values;
  values.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) values.push_back(number(levels[i], index(path, i)));
  try {
    return AlphaGrid(std::move(values));
  } catch (const InvariantError& e) {
    throw InvariantError(path + ": " + e.what());
  }
}

// `where` prefixes the level in invariant messages, e.g. "sample 0 ".
std::vector<Interval> cuts_from_json(const json& cuts, const std::string& path,
                                     const AlphaGrid& grid, const std::string& where) {
  array(cuts, path);
  if (cuts.size() != grid.size()) {
    std::ostringstream os;
    os << "expected " << grid.size() << " cuts, got " << cuts.size();
    schema_fail(path, os.str());
  }
  std::vector<Interval> out;
  out.reserve(cuts.size());
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const std::string p = index(path, k);
    const json& pair = array(cuts[k], p);
    if (pair.size() != 2) schema_fail(p, "expected [lo, hi]");
    const double lo = number(pair[0], index(p, 0));
    const double hi = number(pair[1], index(p, 1));
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      throw InvariantError("non-finite endpoint at " + where + "level " + std::to_string(k));
    }
    if (lo > hi) throw InvariantError("lo > hi at " + where + "level " + std::to_string(k));
    out.emplace_back(lo, hi);
  }
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    if (!contains(out[k], out[k + 1], kNestingTol)) {
      throw InvariantError("cuts not nested at " + where + "between levels " + std::to_string(k) +
                           " and " + std::to_string(k + 1));
    }
  }
  return out;
}

json cuts_to_json(std::span<const Interval> cuts) {
  json out = json::array();
  for (const auto& c : cuts) out.push_back({c.lo(), c.hi()});
  return out;
}

// JSON has no infinities or NaN; non-finite doubles become null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_nan(const json& v, const std::string& path) {
  if (v.is_null()) return std::nan("");
  return number(v, path);
}

std::optional<ModulusKind> parse_modulus_kind(const std::string& s) {
  for (ModulusKind k : {ModulusKind::analytic, ModulusKind::certified, ModulusKind::lower_estimate}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

}  // namespace

json to_json(const FuzzyNumber& u) {
  return {{"levels", u.grid().levels()}, {"cuts", cuts_to_json(u.cuts())}};
}

FuzzyNumber fuzzy_number_from_json(const json& doc) {
  const AlphaGrid grid = grid_from_json(field(doc, "", "levels"), "levels");
  auto cuts = cuts_from_json(field(doc, "", "cuts"), "cuts", grid, "");
  return FuzzyNumber(grid, std::move(cuts));
}

json to_json(const PsiFamily& family) {
  json exps = json::array();
  for (const auto& p : family.members()) exps.push_back({p.degree, p.exponent});
  return {{"n", family.n()}, {"delta", family.delta()}, {"eps", family.eps()}, {"exponents", exps}};
}

json to_json(const ErrorReport& r) {
  json samples = json::array();
  for (const auto& s : r.per_sample) samples.push_back({s.x, finite_or_null(s.distance)});
  json out = {
      {"method", std::string(to_string(r.method))},
      {"n", r.n},
      {"delta", r.delta},
      {"eps", r.eps},
      {"status", r.status == ReportStatus::skipped ? "skipped" : "completed"},
      {"verdict", r.verdict()},
      {"bound_formula", r.bound_formula},
  };
  if (r.status == ReportStatus::skipped) {
    out["skip_reason"] = r.skip_reason;
    return out;
  }
  out["sup_distance"] = finite_or_null(r.sup_distance);
  out["modulus"] = finite_or_null(r.modulus_value);
  out["modulus_kind"] = std::string(to_string(r.modulus_kind));
  out["bound"] = finite_or_null(r.bound_value);
  out["pass"] = r.pass;
  out["samples"] = std::move(samples);
  return out;
}

ErrorReport report_from_json(const json& doc, const std::string& path) {
  ErrorReport r;
  const std::string method = string(field(doc, path, "method"), join(path, "method"));
  const auto m = parse_method(method);
  if (!m) schema_fail(join(path, "method"), "unknown method '" + method + "'");
  r.method = *m;
  r.n = static_cast<int>(integer(field(doc, path, "n"), join(path, "n")));
  r.delta = number(field(doc, path, "delta"), join(path, "delta"));
  r.eps = number(field(doc, path, "eps"), join(path, "eps"));
  r.bound_formula = string(field(doc, path, "bound_formula"), join(path, "bound_formula"));
  const std::string status = string(field(doc, path, "status"), join(path, "status"));
  if (status == "skipped") {
    r.status = ReportStatus::skipped;
    r.skip_reason = string(field(doc, path, "skip_reason"), join(path, "skip_reason"));
    return r;
  }
  if (status != "completed") schema_fail(join(path, "status"), "unknown status '" + status + "'");
  r.status = ReportStatus::completed;
  r.sup_distance = number_or_nan(field(doc, path, "sup_distance"), join(path, "sup_distance"));
  r.modulus_value = number_or_nan(field(doc, path, "modulus"), join(path, "modulus"));
  const std::string kind = string(field(doc, path, "modulus_kind"), join(path, "modulus_kind"));
  const auto k = parse_modulus_kind(kind);
  if (!k) schema_fail(join(path, "modulus_kind"), "unknown modulus kind '" + kind + "'");
  r.modulus_kind = *k;
  r.bound_value = number_or_nan(field(doc, path, "bound"), join(path, "bound"));
  const json& pass = field(doc, path, "pass");
  if (!pass.is_boolean()) schema_fail(join(path, "pass"), "expected a boolean");
  r.pass = pass.get<bool>();
  const std::string sp = join(path, "samples");
  const json& samples = array(field(doc, path, "samples"), sp);
  r.per_sample.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string p = index(sp, i);
    const json& pair = array(samples[i], p);
    if (pair.size() != 2) schema_fail(p, "expected [x, d_infty]");
    r.per_sample.push_back({number(pair[0], index(p, 0)), number_or_nan(pair[1], index(p, 1))});
  }
  return r;
}

json reports_to_json(std::span<const ErrorReport> reports) {
  json list = json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  return {{"reports", std::move(list)}};
}

std::vector<ErrorReport> reports_from_json(const json& doc) {
  const json& list = array(field(doc, "", "reports"), "reports");
  std::vector<ErrorReport> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(report_from_json(list[i], index("reports", i)));
  return out;
}

json to_json(const SampledFuzzyFunction& data) {
  if (data.values.empty()) throw InvalidParams("sampled function has no samples");
  json samples = json::array();
  for (std::size_t i = 0; i < data.xs.size(); ++i) {
    samples.push_back({{"x", data.xs[i]}, {"cuts", cuts_to_json(data.values.at(i).cuts())}});
  }
  return {{"levels", data.values.front().grid().levels()}, {"samples", std::move(samples)}};
}

SampledFuzzyFunction sampled_function_from_json(const json& doc) {
  const AlphaGrid grid = grid_from_json(field(doc, "", "levels"), "levels");
  const json& samples = array(field(doc, "", "samples"), "samples");
  if (samples.size() < 2) schema_fail("samples", "need at least two samples");
  SampledFuzzyFunction out;
  out.xs.reserve(samples.size());
  out.values.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::string p = index("samples", i);
    const double x = number(field(samples[i], p, "x"), p + ".x");
    const std::string where = "sample " + std::to_string(i) + " ";
    auto cuts = cuts_from_json(field(samples[i], p, "cuts"), p + ".cuts", grid, where);
    if (!out.xs.empty() && !(x > out.xs.back())) {
      throw InvariantError("x not strictly increasing at sample " + std::to_string(i));
    }
    out.xs.push_back(x);
    out.values.emplace_back(grid, std::move(cuts));
  }
  if (out.xs.front() != 0.0) throw InvariantError("first sample must have x = 0");
  if (out.xs.back() != 1.0) throw InvariantError("last sample must have x = 1");
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

}  // namespace fuzzjack
