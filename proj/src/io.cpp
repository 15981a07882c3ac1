#include "gtstate/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unistd.h>

namespace gtstate {

json to_json(const StatePolynomial& p) {
  json coeffs = json::object();
  for (const auto& [d, c] : p.coefficients()) {
    coeffs[std::to_string(d)] = json::array({numerator_of(c).str(), denominator_of(c).str()});
  }
  return json{{"gamma", to_string(p.gamma())}, {"coefficients", coeffs}};
}

StatePolynomial state_polynomial_from_json(const json& j) {
  const Rational gamma = parse_rational(j.at("gamma").get<std::string>());
  std::map<int, Rational> coeffs;
  for (const auto& [key, val] : j.at("coefficients").items()) {
    size_t used = 0;
    const int d = std::stoi(key, &used);
    if (used != key.size() || d < 0) throw std::invalid_argument("bad degree key '" + key + "'");
    if (!val.is_array() || val.size() != 2) throw std::invalid_argument("coefficient must be [numerator, denominator]");
    coeffs[d] = parse_rational(val[0].get<std::string>() + "/" + val[1].get<std::string>());
  }
  return StatePolynomial(gamma, std::move(coeffs));
}

json to_json(const WeightedBasisExpansion& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms) {
    terms.push_back({{"multiset", m}, {"numerator", numerator_of(c).str()}, {"denominator", denominator_of(c).str()}});
  }
  return json{{"source_k", e.source_k}, {"terms", terms}};
}

json to_json(const RegularFamilySpec& s) {
  json overlaps = json::array();
  for (Eigen::Index r = 0; r < s.overlaps.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < s.overlaps.cols(); ++c) row.push_back(s.overlaps(r, c));
    overlaps.push_back(row);
  }
  json j{{"gamma", s.gamma}, {"etas", s.etas}, {"overlaps", overlaps}};
  if (s.union_bound) j["union_bound"] = *s.union_bound;
  return j;
}

RegularFamilySpec regular_family_from_json(const json& j) {
  RegularFamilySpec s;
  s.gamma = j.at("gamma").get<double>();
  s.etas = j.at("etas").get<std::vector<double>>();
  const auto& ov = j.at("overlaps");
  const auto n = static_cast<Eigen::Index>(s.etas.size());
  if (!ov.is_array() || static_cast<Eigen::Index>(ov.size()) != n) {
    throw std::invalid_argument("regular family: overlaps must have one row per eta");
  }
  s.overlaps.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = ov[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw std::invalid_argument("regular family: overlaps must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) s.overlaps(r, c) = row[static_cast<size_t>(c)].get<double>();
  }
  if (j.contains("union_bound")) s.union_bound = j["union_bound"].get<double>();
  s.validate();
  return s;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += "\r\n";
  return out;
}

CsvWriter::CsvWriter(std::ostream& out, std::string_view schema, int version, const std::vector<std::string>& columns)
    : out_(out), width_(columns.size()) {
  out_ << csv_row({"#schema", std::string(schema), std::to_string(version)});
  out_ << csv_row(columns);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw std::logic_error("CsvWriter: row width does not match the header");
  out_ << csv_row(fields);
}

void write_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp);
      throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into '" + path + "': " + ec.message());
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace gtstate
