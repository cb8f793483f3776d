// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fracspec/rational.hpp"

using namespace fracspec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(FRACSPEC_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("parse_index_range") {
  CHECK(cli::parse_index_range("3") == std::pair{3, 3});
  CHECK(cli::parse_index_range("1..4") == std::pair{1, 4});
  CHECK_THROWS(cli::parse_index_range("0..2"));
  CHECK_THROWS(cli::parse_index_range("4..2"));
  CHECK_THROWS(cli::parse_index_range("a..b"));
  CHECK_THROWS(cli::parse_index_range(""));
}

TEST_CASE("cli: bounds json is deterministic and exact") {
  const std::vector<std::string> args{"bounds", "--params", data("lebesgue.json"), "--n", "1..2",
                                      "--tol", "1/10", "--format", "json"};
  const auto first = call(args);
  const auto second = call(args);
  REQUIRE(first.code == cli::kExitOk);
  CHECK(first.out == second.out);
  const auto doc = nlohmann::json::parse(first.out);
  REQUIRE(doc["brackets"].size() == 2);
  int n = 1;
  for (const auto& b : doc["brackets"]) {
    CHECK(b["n"] == n);
    CHECK(b["status"] == "certified");
    const Rational lo = parse_scalar(b["lo"].get<std::string>());
    const Rational hi = parse_scalar(b["hi"].get<std::string>());
    CHECK(lo < hi);
    CHECK(hi - lo <= parse_scalar("1/10"));
    const double target = n * n * 9.869604401089358;
    CHECK(to_float(lo) <= target);
    CHECK(to_float(hi) >= target);
    CHECK_FALSE(b["log"].empty());
    ++n;
  }
}

TEST_CASE("cli: negative brackets and not-found exit code") {
  const auto neg = call({"bounds", "--params", data("indefinite.json"), "--negative", "--n", "1",
                         "--tol", "1", "--format", "json"});
  REQUIRE(neg.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(neg.out);
  CHECK(doc["brackets"][0]["negative"] == true);
  CHECK(parse_scalar(doc["brackets"][0]["hi"].get<std::string>()) < Rational(0));

  const auto none = call({"bounds", "--params", data("indefinite.json"), "--n", "9", "--tol", "1",
                          "--lambda-max", "100"});
  CHECK(none.code == cli::kExitUncertified);
  CHECK(none.out.find("not_found") != std::string::npos);
}

TEST_CASE("cli: moments") {
  const auto r = call({"moments", "--params", data("cantor.json")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("5/16") != std::string::npos);
  CHECK(r.out.find("3/10") != std::string::npos);
  const auto j = call({"moments", "--params", data("cantor.json"), "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.dump().find("\"1/6\"") != std::string::npos);
}

TEST_CASE("cli: input errors exit with 1") {
  const auto bad = call({"moments", "--params", data("bad_widths.json")});
  CHECK(bad.code == cli::kExitInputError);
  CHECK(bad.err.find("sum to 1") != std::string::npos);
  CHECK(call({"moments", "--params", data("missing.json")}).code == cli::kExitInputError);
  CHECK(call({"bounds", "--params", data("lebesgue.json"), "--n", "2..1"}).code == cli::kExitInputError);
  CHECK(call({"inertia", "--params", data("lebesgue.json"), "--epsilon", "-1"}).code == cli::kExitInputError);
  CHECK(call({"frobnicate"}).code == cli::kExitInputError);
}

TEST_CASE("cli: inertia, sample and oracle") {
  const auto in = call({"inertia", "--params", data("lebesgue.json"), "--lambda", "20", "--level", "3",
                        "--format", "json"});
  REQUIRE(in.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(in.out);
  CHECK(doc["negatives"] == 1);
  CHECK(doc["zeros"] == 0);
  CHECK(doc["positives"] == 6);

  const auto sm = call({"sample", "--params", data("lebesgue.json"), "--grid", "4", "--iterations", "3"});
  REQUIRE(sm.code == cli::kExitOk);
  CHECK(sm.out.rfind("x,value\n", 0) == 0);
  CHECK(std::count(sm.out.begin(), sm.out.end(), '\n') == 6);

  const auto orc = call({"oracle", "--params", data("indefinite.json"), "--negative", "--n", "1..2",
                         "--format", "csv"});
  REQUIRE(orc.code == cli::kExitOk);
  CHECK(orc.out.rfind("n,estimate,mesh_level\n1,-50.3", 0) == 0);
}
