#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "drum/rationality.hpp"

using namespace drum;

namespace {

Rat R(const char* s) { return parse_rat(s); }

std::vector<Budget> crossing(int period) {
  return {{period, 1, {R("5"), R("3")}, R("15")},
          {period, 2, {R("3"), R("5")}, R("15")}};
}

std::set<std::string> type_labels(const std::vector<DemandType>& ts) {
  std::set<std::string> out;
  for (const DemandType& t : ts) out.insert(t.label());
  return out;
}

// The nine-column 0/1 system of the two-period crossing setup, frozen by row
// label. Columns are profiles (first-period type, second-period type) with
// types ordered (1,1), (1,2), (2,2).
const std::map<std::string, std::string> kFrozenMatrix = {
    {"{1|1,1|1}", "110110000"}, {"{1|1,2|1}", "001001000"},
    {"{1|1,1|2}", "100100000"}, {"{1|1,2|2}", "011011000"},
    {"{2|1,1|1}", "000000110"}, {"{2|1,2|1}", "000000001"},
    {"{2|1,1|2}", "000000100"}, {"{2|1,2|2}", "000000011"},
    {"{1|2,1|1}", "110000000"}, {"{1|2,2|1}", "001000000"},
    {"{1|2,1|2}", "100000000"}, {"{1|2,2|2}", "011000000"},
    {"{2|2,1|1}", "000110110"}, {"{2|2,2|1}", "000001001"},
    {"{2|2,1|2}", "000100100"}, {"{2|2,2|2}", "000011011"},
};

}  // namespace

TEST_CASE("crossing setup: three rational types under continuous demand") {
  PatchSet ps = build_patches(crossing(1));
  auto labels = type_labels(enumerate_rational_types(ps, true));
  CHECK(labels == std::set<std::string>{"(1,1)", "(1,2)", "(2,2)"});
  // (2,1) = below the other budget on both planes is the excluded cycle.
  CHECK(!labels.count("(2,1)"));
}

TEST_CASE("crossing setup: six types when intersection patches count") {
  PatchSet ps = build_patches(crossing(1));
  auto labels = type_labels(enumerate_rational_types(ps, false));
  CHECK(labels == std::set<std::string>{"(1,1)", "(1,2)", "(2,2)", "(3,3)",
                                        "(1,3)", "(3,2)"});
}

TEST_CASE("continuous types are the intersection-free types") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> price(1, 9), money(5, 30);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Budget> budgets;
    for (int j = 1; j <= 2 + trial % 2; ++j) {
      Budget b{1, j, {Rat(price(rng)), Rat(price(rng))}, Rat(money(rng))};
      bool dup = false;
      for (const Budget& prev : budgets) dup = dup || prev.same_plane(b);
      if (dup) {
        --j;
        continue;
      }
      budgets.push_back(std::move(b));
    }
    PatchSet ps = build_patches(budgets);
    auto all = enumerate_rational_types(ps, false);
    auto cont = enumerate_rational_types(ps, true);
    std::set<std::string> expect;
    for (const DemandType& t : all) {
      bool has_intersection = false;
      for (const PatchId& c : t.choices)
        has_intersection =
            has_intersection || ps.patch(c).is_intersection;
      if (!has_intersection) expect.insert(t.label());
    }
    CHECK(type_labels(cont) == expect);
  }
}

TEST_CASE("transitive-closure oracle for type admissibility") {
  // Recompute admissibility with a different algorithm: build the strict
  // preference relation from scratch and reject a selection iff the
  // Floyd-Warshall closure contains a patch preferred to itself.
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> price(1, 9), money(5, 30);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Budget> budgets;
    for (int j = 1; j <= 2 + trial % 2; ++j) {
      Budget b{1, j, {Rat(price(rng)), Rat(price(rng))}, Rat(money(rng))};
      bool dup = false;
      for (const Budget& prev : budgets) dup = dup || prev.same_plane(b);
      if (dup) {
        --j;
        continue;
      }
      budgets.push_back(std::move(b));
    }
    PatchSet ps = build_patches(budgets);
    const int J = static_cast<int>(ps.budgets.size());

    std::set<std::string> expect;
    std::vector<int> idx(J, 0);
    std::vector<std::vector<int>> opts(J);
    for (int j = 0; j < J; ++j) opts[j] = ps.patch_indices(j + 1, false);
    for (;;) {
      std::vector<const Patch*> sel(J);
      for (int j = 0; j < J; ++j) sel[j] = &ps.patch({j + 1, opts[j][idx[j]]});
      std::vector<std::vector<bool>> pref(J, std::vector<bool>(J, false));
      for (int j = 0; j < J; ++j)
        for (int l = 0; l < J; ++l) {
          if (j == l) continue;
          const bool same_set =
              sel[j]->id() == sel[l]->id() ||
              std::find(sel[j]->same_as.begin(), sel[j]->same_as.end(),
                        sel[l]->id()) != sel[j]->same_as.end();
          if (same_set) continue;
          if (dot(ps.budgets[j].prices, sel[l]->representative) <=
              ps.budgets[j].expenditure)
            pref[j][l] = true;
        }
      for (int k = 0; k < J; ++k)
        for (int i = 0; i < J; ++i)
          for (int l = 0; l < J; ++l)
            if (pref[i][k] && pref[k][l]) pref[i][l] = true;
      bool cyclic = false;
      for (int j = 0; j < J; ++j) cyclic = cyclic || pref[j][j];
      if (!cyclic) {
        DemandType t;
        for (int j = 0; j < J; ++j) t.choices.push_back(sel[j]->id());
        expect.insert(t.label());
      }
      int j = J - 1;
      while (j >= 0 && idx[j] + 1 == static_cast<int>(opts[j].size()))
        idx[j--] = 0;
      if (j < 0) break;
      ++idx[j];
    }
    CHECK(type_labels(enumerate_rational_types(ps, false)) == expect);
  }
}

TEST_CASE("two-period crossing setup reproduces the frozen 16x9 system") {
  std::vector<PatchSet> periods{build_patches(crossing(1)),
                                build_patches(crossing(2))};
  ProfileMatrix m = build_profile_matrix(periods, true);
  REQUIRE(m.row_count() == 16);
  REQUIRE(m.col_count() == 9);

  // Column order: profiles (a,b) lexicographic over the three types.
  CHECK(m.col_label(0) == "[(1,1),(1,1)]");
  CHECK(m.col_label(1) == "[(1,1),(1,2)]");
  CHECK(m.col_label(8) == "[(2,2),(2,2)]");

  std::map<std::string, std::string> got;
  for (int r = 0; r < 16; ++r) {
    std::string bits;
    for (int c = 0; c < 9; ++c) bits += m.entries[r][c] ? '1' : '0';
    got[m.row_label(r)] = bits;
  }
  CHECK(got == kFrozenMatrix);
}

TEST_CASE("cell formulas: A nu expands to the frozen index sets") {
  // For each choice path, which mixture components contribute. Checked by
  // symbolic expansion against the matrix rows, and numerically for random
  // rational weights.
  const std::map<std::string, std::vector<int>> cells = {
      {"{1|1,1|1}", {1, 2, 4, 5}}, {"{1|1,2|1}", {3, 6}},
      {"{1|1,1|2}", {1, 4}},       {"{1|1,2|2}", {2, 3, 5, 6}},
      {"{2|1,1|1}", {7, 8}},       {"{2|1,2|1}", {9}},
      {"{2|1,1|2}", {7}},          {"{2|1,2|2}", {8, 9}},
      {"{1|2,1|1}", {1, 2}},       {"{1|2,2|1}", {3}},
      {"{1|2,1|2}", {1}},          {"{1|2,2|2}", {2, 3}},
      {"{2|2,1|1}", {4, 5, 7, 8}}, {"{2|2,2|1}", {6, 9}},
      {"{2|2,1|2}", {4, 7}},       {"{2|2,2|2}", {5, 6, 8, 9}},
  };
  std::vector<PatchSet> periods{build_patches(crossing(1)),
                                build_patches(crossing(2))};
  ProfileMatrix m = build_profile_matrix(periods, true);
  for (int r = 0; r < m.row_count(); ++r) {
    std::vector<int> nonzero;
    for (int c = 0; c < 9; ++c)
      if (m.entries[r][c]) nonzero.push_back(c + 1);
    CHECK(nonzero == cells.at(m.row_label(r)));
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(0, 50);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> nu(9);
    Rat total = 0;
    for (Rat& v : nu) {
      v = Rat(num(rng));
      total += v;
    }
    if (total == 0) continue;
    for (Rat& v : nu) v /= total;
    for (int r = 0; r < m.row_count(); ++r) {
      Rat lhs = 0;
      for (int c = 0; c < 9; ++c)
        if (m.entries[r][c]) lhs += nu[c];
      Rat rhs = 0;
      for (const int i : cells.at(m.row_label(r))) rhs += nu[i - 1];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("each column selects exactly one row per budget path") {
  std::vector<PatchSet> periods{build_patches(crossing(1)),
                                build_patches(crossing(2))};
  for (const bool continuous : {false, true}) {
    ProfileMatrix m = build_profile_matrix(periods, continuous);
    std::map<std::vector<int>, std::vector<int>> by_path;
    for (int r = 0; r < m.row_count(); ++r)
      by_path[m.rows[r].budget_path].push_back(r);
    for (int c = 0; c < m.col_count(); ++c)
      for (const auto& [path, rows] : by_path) {
        int ones = 0;
        for (const int r : rows) ones += m.entries[r][c];
        CHECK(ones == 1);
      }
  }
}

TEST_CASE("matrix size guard") {
  std::vector<PatchSet> periods{build_patches(crossing(1)),
                                build_patches(crossing(2))};
  CHECK_THROWS_AS(build_profile_matrix(periods, true, 10),
                  std::length_error);
}

TEST_CASE("panel validation catches malformed probabilities") {
  std::vector<PatchSet> periods{build_patches(crossing(1)),
                                build_patches(crossing(2))};
  StochasticChoice data;
  data.periods = periods;
  data.observed_paths = {{1, 1}};
  data.rho = {{{1, 1}, {{1, 1}, {1, 1}}, R("1/2")},
              {{1, 1}, {{1, 2}, {1, 1}}, R("1/4")}};
  CHECK_THROWS_WITH_AS(data.validate(),
                       doctest::Contains("sum to 3/4"),
                       std::invalid_argument);
  data.rho.push_back({{1, 1}, {{1, 3}, {1, 1}}, R("1/4")});
  CHECK_NOTHROW(data.validate());

  // owner disagreeing with the budget path
  data.rho.back().patches[0] = {2, 1};
  CHECK_THROWS_AS(data.validate(), std::invalid_argument);
  data.rho.back().patches[0] = {1, 3};

  // entry on an unobserved path
  data.rho.push_back({{2, 1}, {{2, 1}, {1, 1}}, R("0")});
  CHECK_THROWS_AS(data.validate(), std::invalid_argument);
  data.rho.pop_back();

  // duplicate entry
  data.rho.push_back({{1, 1}, {{1, 1}, {1, 1}}, R("0")});
  CHECK_THROWS_AS(data.validate(), std::invalid_argument);
}
