#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lelong/current.hpp"
#include "lelong/lelong.hpp"
#include "lelong/mass.hpp"
#include "lelong/theorems.hpp"

namespace lelong {

using Json = nlohmann::json;

Json to_json(const Eigenvalue& lambda);
Json to_json(const HarmonicSpec& spec);
Json to_json(const TransversalAtom& atom);
Json to_json(const Current& current);
Json to_json(const MassResult& mass);
Json to_json(const LelongEstimate& est);
Json to_json(const VerificationReport& report);
Json to_json(const std::vector<VerificationReport>& reports);

// Parsers throw Error(Input) naming the offending field, e.g. "atoms[0].weight".
// Structural validation of the result (positivity, normalization, ...) is left to the
// constructors, which keep their own error kinds.
Eigenvalue eigenvalue_from_json(const Json& j, const std::string& path = "lambda");
HarmonicSpec spec_from_json(const Json& j, const std::string& path = "spec");
Current current_from_json(const Json& j);
Current parse_current(const std::string& text);
Current load_current(const std::string& path);

// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_number(double x);
// Fixed notation with the given digits after the point.
std::string format_fixed(double x, int digits);

// Columns r,nu,err,monotone_violation with '\n' line endings.
std::string schedule_csv(const LelongEstimate& est);

void write_file(const std::string& path, const std::string& contents);

}  // namespace lelong
