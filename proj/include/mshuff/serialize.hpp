#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mshuff/codec.hpp"
#include "mshuff/multiset.hpp"
#include "mshuff/oracle.hpp"

namespace mshuff {

// Fixed 9-decimal rendering for every float the tools print, so output is
// byte-stable across platforms and libm versions.
std::string format_fixed9(double value);

// The same value as a JSON number, rounded to 9 decimals.
nlohmann::json json_fixed9(double value);

// Nat as a JSON number when it fits 64 bits, else as a decimal string.
nlohmann::json json_nat(const Nat& n);

nlohmann::json to_json(const DyadicClass& c);
nlohmann::json to_json(const CodeTable& table);
nlohmann::json to_json(const LawReport& report);
nlohmann::json to_json(const std::vector<ConvergencePoint>& points);

// "n,weight,denominator,ratio" header plus one line per point.
std::string convergence_csv(const std::vector<ConvergencePoint>& points);

} // namespace mshuff
