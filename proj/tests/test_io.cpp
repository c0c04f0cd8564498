#include <doctest.h>

#include <string>

#include "drum/io.hpp"

using namespace drum;

namespace {

const char* kMinimal = R"({
  "periods": 1,
  "budgets": [
    {"period": 1, "index": 1, "prices": ["5", "3"], "expenditure": "15"},
    {"period": 1, "index": 2, "prices": ["3", "5"], "expenditure": "15"}
  ],
  "observed_paths": [[1], [2]],
  "rho": [
    {"path": [1], "patches": [1], "prob": "2/3"},
    {"path": [1], "patches": [2], "prob": "1/3"},
    {"path": [2], "patches": [1], "prob": "1/3"},
    {"path": [2], "patches": [2], "prob": "2/3"}
  ]
})";

std::string patched(const std::string& from, const std::string& to) {
  std::string s = kMinimal;
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("round trip preserves the panel") {
  StochasticChoice data = parse_dataset(kMinimal);
  CHECK(data.periods.size() == 1);
  CHECK(data.rho.size() == 4);
  CHECK(data.prob({1}, {{1, 1}}) == parse_rat("2/3"));

  StochasticChoice again = parse_dataset(dataset_json(data));
  CHECK(again.observed_paths == data.observed_paths);
  REQUIRE(again.rho.size() == data.rho.size());
  for (std::size_t i = 0; i < data.rho.size(); ++i) {
    CHECK(again.rho[i].budget_path == data.rho[i].budget_path);
    CHECK(again.rho[i].patches == data.rho[i].patches);
    CHECK(again.rho[i].prob == data.rho[i].prob);
  }
}

TEST_CASE("rational literals are strict") {
  CHECK(parse_rat("-7/2") == Rat(-7) / 2);
  CHECK(rat_str(parse_rat("4/6")) == "2/3");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("malformed datasets are rejected with a reason") {
  // floating point probability
  CHECK_THROWS_AS(parse_dataset(patched("\"2/3\"", "0.6667")),
                  std::invalid_argument);
  // block sum violation names the offending path
  CHECK_THROWS_WITH_AS(parse_dataset(patched("\"1/3\"", "\"1/2\"")),
                       doctest::Contains("(1)"), std::invalid_argument);
  // unknown patch index
  CHECK_THROWS_AS(parse_dataset(patched("\"patches\": [2], \"prob\": \"1/3\"",
                                        "\"patches\": [9], \"prob\": \"1/3\"")),
                  std::exception);
  // not JSON at all
  CHECK_THROWS_AS(parse_dataset("not json"), std::invalid_argument);
  // negative price
  CHECK_THROWS_AS(parse_dataset(patched("\"5\", \"3\"", "\"-5\", \"3\"")),
                  std::invalid_argument);
}

TEST_CASE("fixture files load and validate") {
  for (const char* name :
       {"simple2x2", "table5", "table6", "sarpd_cycle", "pooling_budgets"}) {
    StochasticChoice data =
        load_dataset(std::string(DRUM_TEST_DATA) + "/" + name + ".json");
    CHECK_NOTHROW(data.validate());
  }
  CHECK_THROWS_AS(load_dataset("/nonexistent/path.json"),
                  std::invalid_argument);
}

TEST_CASE("report serializers emit the advertised fields") {
  StochasticChoice data = parse_dataset(kMinimal);
  const std::string pj = patches_json(data.periods[0]);
  CHECK(pj.find("x_{1|1}") != std::string::npos);
  CHECK(pj.find("dominance") != std::string::npos);

  ProfileMatrix m = build_profile_matrix(data.periods, true);
  const std::string mj = matrix_json(m);
  CHECK(mj.find("{1|1}") != std::string::npos);
  CHECK(mj.find("columns") != std::string::npos);

  FeasibilityResult res = test_drum(m, data);
  const std::string vj = verdict_json(m, res);
  CHECK(vj.find("feasible") != std::string::npos);
}
