#include "doctest.h"

#include "gtstate/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gtstate;

TEST_CASE("rationals") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("4/8") == Rational(1, 2));
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational(""));
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("state polynomial json round trip") {
  BigInt big = boost::multiprecision::pow(BigInt(10), 30);
  StatePolynomial p(Rational(1, 2), {{0, Rational(-1, 3)}, {2, Rational(big, 7)}});
  const auto j = to_json(p);
  CHECK(j["gamma"] == "1/2");
  CHECK(j["coefficients"]["2"][0] == big.str());
  CHECK(state_polynomial_from_json(j) == p);
  CHECK(state_polynomial_from_json(json::parse(j.dump())) == p);
  json bad = j;
  bad["coefficients"]["x"] = json::array({"1", "1"});
  CHECK_THROWS(state_polynomial_from_json(bad));
}

TEST_CASE("expansion json") {
  const auto j = to_json(top_weight_expansion(3));
  CHECK(j["source_k"] == 3);
  CHECK(j["terms"].size() == 2);
}

TEST_CASE("regular family json") {
  const auto j = json::parse(R"({"gamma": 1, "etas": [1, 0.5], "overlaps": [[1, 0.5], [0.5, 0.5]]})");
  const auto s = regular_family_from_json(j);
  CHECK(s.etas.size() == 2);
  CHECK(s.overlaps(0, 1) == 0.5);
  CHECK(regular_family_from_json(to_json(s)).overlaps == s.overlaps);
  CHECK_THROWS(regular_family_from_json(json::parse(R"({"gamma": 1, "etas": [1], "overlaps": [[1, 0]]})")));
}

TEST_CASE("csv quoting and schema") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_row({"1", "2,1"}) == "1,\"2,1\"\r\n");
  std::ostringstream os;
  CsvWriter w(os, "demo", 2, {"a", "b"});
  w.row({"1", "x"});
  CHECK(os.str() == "#schema,demo,2\r\na,b\r\n1,x\r\n");
  CHECK_THROWS(w.row({"1"}));
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("atomic writes") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gtstate_io_test";
  fs::create_directories(dir);
  const auto target = (dir / "out.csv").string();
  write_atomic(target, "first\n");
  write_atomic(target, "second\n");
  std::ifstream f(target);
  std::string line;
  std::getline(f, line);
  CHECK(line == "second");
  size_t n = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++n;
  CHECK(n == 1);
  CHECK_THROWS(write_atomic((dir / "missing" / "x.csv").string(), "x"));
  fs::remove_all(dir);
}
