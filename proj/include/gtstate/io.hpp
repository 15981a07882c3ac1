#pragma once

// Serialization: JSON for exact polynomials, expansions and regular families;
// versioned CSV with RFC-4180 quoting; atomic file output.

#include "gtstate/limits.hpp"
#include "gtstate/shifted_symmetric.hpp"
#include "gtstate/weyl.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gtstate {

using json = nlohmann::json;

/// {"gamma": "1/2", "coefficients": {"2": ["3", "4"], ...}}; big integers as
/// decimal strings.
json to_json(const StatePolynomial& p);
StatePolynomial state_polynomial_from_json(const json& j);

/// [{"multiset": [3], "numerator": "1", "denominator": "1"}, ...]
json to_json(const WeightedBasisExpansion& e);

/// {"gamma": 1, "etas": [...], "overlaps": [[...], ...]}
json to_json(const RegularFamilySpec& s);
RegularFamilySpec regular_family_from_json(const json& j);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

/// Every CSV starts with "#schema,<name>,<version>" followed by the column row.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::string_view schema, int version, const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  size_t width_;
};

/// Writes to a temporary file next to `path` and renames it into place.
void write_atomic(const std::string& path, std::string_view content);

/// "%.17g" formatting, so doubles round-trip.
std::string format_double(double v);

}  // namespace gtstate
