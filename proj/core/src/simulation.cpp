#include "drum/simulation.hpp"

#include <random>
#include <stdexcept>

#include "drum/linalg.hpp"

namespace drum {

StochasticChoice simulate_mixture(const ProfileMatrix& m,
                                  const std::vector<Rat>& nu) {
  if (static_cast<int>(nu.size()) != m.col_count())
    throw std::invalid_argument("simulate_mixture: weight count mismatch");
  Rat total = 0;
  for (const Rat& v : nu) {
    if (v < 0) throw std::invalid_argument("simulate_mixture: negative weight");
    total += v;
  }
  if (total != 1)
    throw std::invalid_argument("simulate_mixture: weights sum to " +
                                rat_str(total) + ", not 1");
  StochasticChoice data;
  data.periods = m.periods;
  for (int r = 0; r < m.row_count(); ++r) {
    if (!data.path_observed(m.rows[r].budget_path))
      data.observed_paths.push_back(m.rows[r].budget_path);
    Rat p = 0;
    for (int c = 0; c < m.col_count(); ++c)
      if (m.entries[r][c]) p += nu[c];
    data.rho.push_back({m.rows[r].budget_path, m.rows[r].patches, p});
  }
  return data;
}

std::vector<Rat> independent_mixture(
    const ProfileMatrix& m, const std::vector<std::vector<Rat>>& per_period) {
  if (per_period.size() != m.types.size())
    throw std::invalid_argument("independent_mixture: period count mismatch");
  for (std::size_t t = 0; t < per_period.size(); ++t) {
    if (per_period[t].size() != m.types[t].size())
      throw std::invalid_argument("independent_mixture: type count mismatch");
    Rat s = 0;
    for (const Rat& w : per_period[t]) {
      if (w < 0)
        throw std::invalid_argument("independent_mixture: negative weight");
      s += w;
    }
    if (s != 1)
      throw std::invalid_argument("independent_mixture: period weights must "
                                  "sum to 1");
  }
  std::vector<Rat> nu(m.col_count(), Rat(1));
  for (int c = 0; c < m.col_count(); ++c)
    for (std::size_t t = 0; t < per_period.size(); ++t)
      nu[c] *= per_period[t][m.profiles[c][t]];
  return nu;
}

std::vector<Rat> constant_mixture(const ProfileMatrix& m,
                                  const std::vector<Rat>& weights) {
  for (const auto& tys : m.types)
    if (tys.size() != m.types.front().size())
      throw std::invalid_argument(
          "constant_mixture: periods have different type counts");
  if (weights.size() != m.types.front().size())
    throw std::invalid_argument("constant_mixture: weight count mismatch");
  Rat s = 0;
  for (const Rat& w : weights) {
    if (w < 0) throw std::invalid_argument("constant_mixture: negative weight");
    s += w;
  }
  if (s != 1)
    throw std::invalid_argument("constant_mixture: weights must sum to 1");
  std::vector<Rat> nu(m.col_count(), Rat(0));
  for (int c = 0; c < m.col_count(); ++c) {
    bool constant = true;
    for (const int i : m.profiles[c])
      if (i != m.profiles[c].front()) { constant = false; break; }
    if (constant) nu[c] = weights[m.profiles[c].front()];
  }
  return nu;
}

std::vector<Rat> random_weights(int n, std::uint64_t seed, long denominator) {
  if (n <= 0 || denominator <= 0)
    throw std::invalid_argument("random_weights: bad arguments");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(0, denominator);
  std::vector<long> raw(n);
  long total = 0;
  while (total == 0) {
    for (long& v : raw) {
      v = dist(rng);
      total += v;
    }
  }
  std::vector<Rat> out(n);
  for (int i = 0; i < n; ++i) out[i] = Rat(raw[i]) / Rat(total);
  return out;
}

Point cobb_douglas_demand(const Budget& b, const std::vector<Rat>& alpha) {
  if (static_cast<int>(alpha.size()) != b.goods())
    throw std::invalid_argument("cobb_douglas_demand: weight count mismatch");
  Rat s = 0;
  for (const Rat& a : alpha) {
    if (a < 0)
      throw std::invalid_argument("cobb_douglas_demand: negative weight");
    s += a;
  }
  if (s != 1)
    throw std::invalid_argument("cobb_douglas_demand: weights must sum to 1");
  Point y(b.goods());
  for (int k = 0; k < b.goods(); ++k)
    y[k] = alpha[k] * b.expenditure / b.prices[k];
  return y;
}

std::vector<Observation> simulate_panel(const std::vector<PatchSet>& periods,
                                        const std::vector<Agent>& agents) {
  std::vector<Observation> panel;
  for (const Agent& ag : agents) {
    if (ag.budget_path.size() != periods.size() ||
        ag.alpha.size() != periods.size())
      throw std::invalid_argument("simulate_panel: agent shape mismatch");
    for (std::size_t t = 0; t < periods.size(); ++t) {
      const Budget& b = periods[t].budget(ag.budget_path[t]);
      panel.push_back({b.period, b.index, cobb_douglas_demand(b, ag.alpha[t])});
    }
  }
  return panel;
}

namespace {

bool subset_search(const Mat& a, const std::vector<Rat>& b, int max_support,
                   std::vector<int>& chosen, int from, long& budget) {
  if (--budget < 0)
    throw std::length_error("brute_force_verdict: subset budget exhausted");
  if (!chosen.empty()) {
    Mat sub(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
      sub[r].reserve(chosen.size());
      for (const int c : chosen) sub[r].push_back(a[r][c]);
    }
    if (auto x = solve_unique(sub, b)) {
      bool nonneg = true;
      for (const Rat& v : *x)
        if (v < 0) { nonneg = false; break; }
      if (nonneg) return true;
    }
  } else {
    bool all_zero = true;
    for (const Rat& v : b)
      if (v != 0) { all_zero = false; break; }
    if (all_zero) return true;
  }
  if (static_cast<int>(chosen.size()) == max_support) return false;
  for (int c = from; c < static_cast<int>(a.empty() ? 0 : a[0].size()); ++c) {
    chosen.push_back(c);
    if (subset_search(a, b, max_support, chosen, c + 1, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool brute_force_verdict(const ProfileMatrix& m, const StochasticChoice& data,
                         int max_support) {
  data.validate();
  Mat a;
  std::vector<Rat> b;
  for (int r = 0; r < m.row_count(); ++r) {
    if (!data.path_observed(m.rows[r].budget_path)) continue;
    std::vector<Rat> row(m.col_count());
    for (int c = 0; c < m.col_count(); ++c) row[c] = Rat(int(m.entries[r][c]));
    a.push_back(std::move(row));
    b.push_back(data.prob(m.rows[r].budget_path, m.rows[r].patches));
  }
  if (a.empty())
    throw std::invalid_argument("brute_force_verdict: no observed paths");
  const int cap = std::min<int>(max_support, static_cast<int>(a.size()));
  std::vector<int> chosen;
  long budget = 5000000;  // node visits; small instances only
  return subset_search(a, b, cap, chosen, 0, budget);
}

}  // namespace drum
