#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "askzeta/mrep.hpp"
#include "askzeta/rational.hpp"
#include "askzeta/zeta_forms.hpp"

namespace askzeta {

using Json = nlohmann::ordered_json;

/// Schema violation in tensor JSON; the message names the line or field.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integers up to 2^53 in magnitude become JSON numbers, larger ones decimal strings.
Json big_to_json(const BigInt& value);
/// Accepts a JSON integer or a decimal string; `path` prefixes error messages.
BigInt big_from_json(const Json& value, const std::string& path);

/// "num/den"
Json rational_to_json(const Rational& value);
Json rationals_to_json(const std::vector<Rational>& values);

/// {"shape": {"l", "d", "e"}, "coeffs": c[h][i][j]}
Json rep_to_json(const MRep& rep);
MRep rep_from_json(const Json& doc);
/// Parses text, reporting syntax errors with line and column.
MRep parse_rep(const std::string& text);

/// {"q": "p/1", "num": [...], "den": [...]} with "num/den" coefficients.
Json rational_function_to_json(const RationalFunction& f);

/// One verified claim: {claim, paper_ref, expected, computed, match}.
struct ReportEntry {
  std::string claim;
  std::string ref;  // neutral identifier of the law being checked
  std::string expected;
  std::string computed;
  bool match = false;
};

Json report_entry_to_json(const ReportEntry& entry);

}  // namespace askzeta
