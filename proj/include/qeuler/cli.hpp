/**
 * @file cli.hpp
 * @brief Command-line front end: `eval`, `verify` and `table`.
 *
 * Exit status: 0 success, 1 a verify check failed, 2 parse or validation
 * error (the diagnostic names the flag), 3 divergence guard or tail bound
 * violation during evaluation.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qeuler/characters.hpp"
#include "qeuler/eulerpoly.hpp"
#include "qeuler/scalar.hpp"

namespace qeuler::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kDivergence = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ModeSpec {
  Mode mode = Mode::Float;
  unsigned precision = kDefaultPrecision;
};

/// "exact", "float" or "float:N".
ModeSpec parse_mode(std::string_view text);

/// "f=3;values=0,1,-1".
DirichletCharacter parse_character(std::string_view text, unsigned precision = kDefaultPrecision);

/// "a=1,2;b=0,1".
BarnesParams parse_barnes(std::string_view text, unsigned precision = kDefaultPrecision);

/// "a..b" inclusive, or a single integer.
std::pair<long, long> parse_range(std::string_view text);

/// {display, numerator, denominator} for exact values, {display, re, im} for floats.
nlohmann::ordered_json number_json(const Number& value, int digits = 0);

/// RFC 4180 quoting when the field needs it.
std::string csv_field(std::string_view text);

}  // namespace qeuler::cli
