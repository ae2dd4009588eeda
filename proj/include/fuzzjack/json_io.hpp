#pragma once

// JSON schemas:
//   fuzzy number   { "levels": [λ_0..λ_m], "cuts": [[lo,hi], ...] }
//   function file  { "levels": [...], "samples": [ { "x": x_i, "cuts": [[lo,hi], ...] }, ... ] }
//   psi family     { "n", "delta", "eps", "exponents": [[m,n], ...] }
//   report file    { "reports": [ {...}, ... ] }
// Doubles are written in shortest round-trip form, so finite values reload
// bit for bit.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzjack/approximants.hpp"
#include "fuzzjack/fuzzy_function.hpp"
#include "fuzzjack/fuzzy_number.hpp"
#include "fuzzjack/smoothstep.hpp"

namespace fuzzjack {

using json = nlohmann::json;

json to_json(const FuzzyNumber& u);
// Throws SchemaError (with field path) or InvariantError.
FuzzyNumber fuzzy_number_from_json(const json& doc);

json to_json(const PsiFamily& family);
json to_json(const ErrorReport& report);
ErrorReport report_from_json(const json& doc, const std::string& path = "report");

json reports_to_json(std::span<const ErrorReport> reports);
std::vector<ErrorReport> reports_from_json(const json& doc);

json to_json(const SampledFuzzyFunction& data);
// Validates every invariant; errors name the first offending sample/level.
SampledFuzzyFunction sampled_function_from_json(const json& doc);

// Parses a file; JSON syntax errors become SchemaError carrying the parser's
// line/column message, unreadable files IOError.
json read_json_file(const std::filesystem::path& path);

}  // namespace fuzzjack
