#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "fuzzjack/errors.hpp"
#include "fuzzjack/experiment.hpp"
#include "fuzzjack/json_io.hpp"

using namespace fuzzjack;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = FUZZJACK_TEST_DATA;

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("fuzzjack_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig config_for(const std::string& fn, std::vector<Method> methods, std::vector<int> ns) {
  ExperimentConfig c;
  c.function = parse_function_arg(fn);
  c.methods = std::move(methods);
  c.n_list = std::move(ns);
  c.samples = 257;
  c.alpha_levels = 20;
  return c;
}

}  // namespace

TEST_CASE("fuzzy number JSON round-trips bit for bit") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  const auto grid = AlphaGrid::uniform(37);
  for (int t = 0; t < 50; ++t) {
    double v[4] = {d(rng), d(rng), d(rng), d(rng)};
    std::sort(v, v + 4);
    const auto u = FuzzyNumber::trapezoidal(v[0], v[1], v[2], v[3], grid);
    const auto back = fuzzy_number_from_json(json::parse(to_json(u).dump()));
    REQUIRE(back.size() == u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
      CHECK(back.cut(k) == u.cut(k));
      CHECK(back.grid().level(k) == grid.level(k));
    }
  }
}

TEST_CASE("fuzzy number JSON errors") {
  CHECK(message_of([] { fuzzy_number_from_json(json::parse(R"({"cuts": []})")); }) == "levels: missing");
  CHECK(message_of([] { fuzzy_number_from_json(json::parse(R"({"levels": [0, 1], "cuts": [[0, 1], [0, "x"]]})")); }) ==
        "cuts[1][1]: expected a number");
  CHECK_THROWS_AS(fuzzy_number_from_json(json::parse(R"({"levels": [0, 1], "cuts": [[0, 1]]})")), SchemaError);
  CHECK(message_of([] { fuzzy_number_from_json(json::parse(R"({"levels": [0, 1], "cuts": [[0, 1], [2, 1]]})")); }) ==
        "lo > hi at level 1");
  CHECK_THROWS_AS(fuzzy_number_from_json(json::parse(R"({"levels": [0.5, 1], "cuts": [[0, 1], [0, 1]]})")),
                  InvariantError);
}

TEST_CASE("psi family JSON") {
  const PsiFamily psi(3, 0.1, 0.01);
  const auto j = to_json(psi);
  CHECK(j["n"] == 3);
  CHECK(j["exponents"].size() == 4);
  CHECK(j["exponents"][1][0].get<std::uint64_t>() == psi.member(1).degree);
  CHECK(j["exponents"][1][1].get<double>() == psi.member(1).exponent);
}

TEST_CASE("load_function reads and interpolates a two-sample file") {
  const auto f = load_function(data_dir / "two_samples.json");
  CHECK(f.name() == "two_samples");
  const auto mid = f(0.5);
  CHECK(mid.cut(0).lo() == 0.0);
  CHECK(mid.cut(0).hi() == doctest::Approx(1.0));
  CHECK(mid.core().lo() == doctest::Approx(0.5));
}

TEST_CASE("load_function errors name the offending sample and level") {
  CHECK(message_of([] { load_function(data_dir / "lo_gt_hi.json"); }) == "lo > hi at sample 0 level 3");
  CHECK_THROWS_AS(load_function(data_dir / "lo_gt_hi.json"), InvariantError);
  CHECK(message_of([] { load_function(data_dir / "not_nested.json"); }) ==
        "cuts not nested at sample 1 between levels 4 and 5");
  CHECK(message_of([] { load_function(data_dir / "missing_x.json"); }) == "samples[1].x: missing");
  CHECK_THROWS_AS(load_function(data_dir / "truncated.json"), SchemaError);
  CHECK_THROWS_AS(load_function(data_dir / "does_not_exist.json"), IOError);
}

TEST_CASE("sampled function JSON round-trips") {
  const auto data = sampled_function_from_json(read_json_file(data_dir / "two_samples.json"));
  const auto again = sampled_function_from_json(json::parse(to_json(data).dump()));
  CHECK(again.xs == data.xs);
  for (std::size_t i = 0; i < data.values.size(); ++i) CHECK(again.values[i] == data.values[i]);
}

TEST_CASE("function argument and method parsing") {
  const auto s = parse_function_arg("scaled_exp:-2,0,2.5");
  CHECK(s.catalog_name == "scaled_exp");
  CHECK(s.params.u == std::vector<double>{-2, 0, 2.5});
  CHECK(parse_function_arg("constant").params.u.empty());
  CHECK_THROWS_AS(parse_function_arg("scaled_exp:1,2"), ConfigError);
  CHECK_THROWS_AS(parse_function_arg("scaled_exp:1,x,2"), ConfigError);
  CHECK(parse_methods("all") == default_methods());
  CHECK(parse_methods("trapezoid,gh_dec,trapezoid") == std::vector<Method>{Method::trapezoid, Method::gh_dec});
  CHECK_THROWS_AS(parse_methods("gh_dec,nope"), ConfigError);
}

TEST_CASE("config validation") {
  auto c = config_for("scaled_exp", default_methods(), {4});
  CHECK_NOTHROW(c.validate());
  auto bad = c;
  bad.n_list = {0};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.delta_rule = 1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.epsilon = 0.5;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.samples = 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = c;
  bad.function = {};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("run_experiment routes hypothesis failures to skipped reports") {
  const auto reports = run_experiment(config_for("scaled_exp", default_methods(), {4, 8, 16}));
  CHECK(reports.size() == 12);
  int skipped = 0;
  for (const auto& r : reports) {
    if (r.status == ReportStatus::skipped) {
      ++skipped;
      CHECK(r.method == Method::gh_inc);
    } else {
      CHECK(r.verdict() == "true");
    }
  }
  CHECK(skipped == 3);
  CHECK(exit_code(reports) == 0);
}

TEST_CASE("run_experiment on a constant function") {
  auto c = config_for("constant", default_methods(), {2, 4});
  c.methods.push_back(Method::interval_gh);
  for (const auto& r : run_experiment(c)) {
    CHECK(r.status == ReportStatus::completed);
    CHECK(r.sup_distance <= c.epsilon);
  }
}

TEST_CASE("bump_width with gh_dec is skipped, or thrown under strict") {
  auto c = config_for("bump_width", {Method::gh_dec}, {4});
  const auto reports = run_experiment(c);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == ReportStatus::skipped);
  CHECK(reports[0].skip_reason.find("nesting hypothesis failed") == 0);
  c.strict = true;
  CHECK_THROWS_AS(run_experiment(c), HypothesisViolated);
}

TEST_CASE("interval_gh over all levels") {
  const auto f = catalog("scaled_linear", {}, AlphaGrid::uniform(20));
  const auto r = run_interval_gh(f, 8, default_delta(8), 1e-3, 513);
  CHECK(r.pass);
  CHECK(r.modulus_kind == ModulusKind::analytic);
  CHECK(r.sup_distance <= 2.0 / 8 + 1e-3);
  CHECK_THROWS_AS(run_interval_gh(catalog("bump_width", {}, AlphaGrid::uniform(20)), 4, 0.0625, 1e-3, 65),
                  HypothesisViolated);
}

TEST_CASE("experiments are deterministic") {
  const auto c = config_for("bump_width", default_methods(), {4, 8});
  const auto a = run_experiment(c), b = run_experiment(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]) == to_json(b[i]));
}

TEST_CASE("format_double") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
}

TEST_CASE("emit_report writes all files") {
  const auto dir = scratch("emit");
  auto c = config_for("scaled_exp", {Method::gh_dec, Method::gh_inc, Method::trapezoid}, {4});
  const auto reports = run_experiment(c);
  emit_report(reports, dir);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "errors_gh_dec_4.csv"));
  CHECK(fs::exists(dir / "errors_trapezoid_4.csv"));
  CHECK_FALSE(fs::exists(dir / "errors_gh_inc_4.csv"));

  const auto csv = slurp(dir / "convergence.csv");
  CHECK(csv.rfind("method,n,sup_distance,modulus,bound,pass\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find(",true\n") != std::string::npos);

  const auto err = slurp(dir / "errors_gh_dec_4.csv");
  CHECK(err.rfind("x,d_infty\n0,", 0) == 0);

  const auto back = reports_from_json(read_json_file(dir / "report.json"));
  REQUIRE(back.size() == reports.size());
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(to_json(back[i]) == to_json(reports[i]));
  fs::remove_all(dir);
}

TEST_CASE("convergence table counts and verdict column") {
  std::vector<ErrorReport> rs(3);
  rs[0].modulus_kind = ModulusKind::analytic;
  rs[0].pass = true;
  rs[1].modulus_kind = ModulusKind::certified;
  rs[1].pass = false;
  rs[2].modulus_kind = ModulusKind::lower_estimate;
  rs[2].pass = true;
  const auto csv = convergence_csv(rs);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find(",true\n") != std::string::npos);
  CHECK(csv.find(",false\n") != std::string::npos);
  CHECK(csv.find(",indicative\n") != std::string::npos);
  CHECK(exit_code(rs) == 1);
  rs[1].pass = true;
  CHECK(exit_code(rs) == 0);
}

TEST_CASE("emit_report reports unwritable paths") {
  const auto dir = scratch("blocked");
  { std::ofstream(dir.string()) << "file in the way"; }
  CHECK_THROWS_AS(emit_report({}, dir / "sub"), IOError);
  fs::remove_all(dir);
}
