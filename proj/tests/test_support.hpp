// Shared generators for the randomized suites. Everything is exact: prices,
// expenditures and probabilities are drawn as small integers and normalized
// as rationals, so no trial ever depends on rounding.
#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "drum/rationality.hpp"

namespace drum::testing {

inline std::vector<Budget> random_budgets(std::mt19937_64& rng, int period,
                                          int goods, int count) {
  std::uniform_int_distribution<int> price(1, 9), money(5, 30);
  std::vector<Budget> budgets;
  int attempts = 0;
  for (int j = 1; j <= count && attempts < 1000; ++attempts) {
    Budget b{period, j, {}, Rat(money(rng))};
    for (int k = 0; k < goods; ++k) b.prices.push_back(Rat(price(rng)));
    bool dup = false;
    for (const Budget& prev : budgets) dup = dup || prev.same_plane(b);
    if (dup) continue;
    budgets.push_back(std::move(b));
    ++j;
  }
  return budgets;
}

// A valid panel whose blocks are independent random distributions; usually
// not rationalizable.
inline StochasticChoice random_block_panel(const ProfileMatrix& m,
                                           std::mt19937_64& rng) {
  StochasticChoice data;
  data.periods = m.periods;
  std::map<std::vector<int>, std::vector<int>> by_path;
  for (int r = 0; r < m.row_count(); ++r)
    by_path[m.rows[r].budget_path].push_back(r);
  std::uniform_int_distribution<int> num(0, 12);
  for (const auto& [path, rows] : by_path) {
    data.observed_paths.push_back(path);
    std::vector<Rat> w(rows.size());
    Rat total = 0;
    while (total == 0) {
      total = 0;
      for (Rat& v : w) {
        v = Rat(num(rng));
        total += v;
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      data.rho.push_back({path, m.rows[rows[i]].patches, w[i] / total});
  }
  return data;
}

// A random arrangement (up to three periods, two or three goods, up to three
// budgets per period) whose full profile system stays small enough to
// enumerate; resamples until the entry count fits the budget.
inline ProfileMatrix random_profile_matrix(std::mt19937_64& rng,
                                           long max_entries) {
  std::uniform_int_distribution<int> tdist(1, 3), kdist(2, 3), jdist(1, 3);
  for (;;) {
    const int T = tdist(rng);
    const int K = kdist(rng);
    std::vector<PatchSet> periods;
    for (int t = 1; t <= T; ++t)
      periods.push_back(build_patches(random_budgets(rng, t, K, jdist(rng))));
    try {
      return build_profile_matrix(periods, false, max_entries);
    } catch (const std::length_error&) {
      // too large; draw again
    }
  }
}

}  // namespace drum::testing
