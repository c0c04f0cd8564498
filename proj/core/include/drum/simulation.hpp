#pragma once

#include <cstdint>
#include <vector>

#include "drum/pooling.hpp"
#include "drum/rationality.hpp"

namespace drum {

/// The exact forward map rho = A nu: the panel a mixture nu over type
/// profiles generates, with every budget path observed and every choice path
/// listed (zeros included). nu must be nonnegative and sum to one.
StochasticChoice simulate_mixture(const ProfileMatrix& m,
                                  const std::vector<Rat>& nu);

/// Mixture over profiles with independent draws per period:
/// per_period[t] weighs the types of period t (each must sum to one).
std::vector<Rat> independent_mixture(const ProfileMatrix& m,
                                     const std::vector<std::vector<Rat>>& per_period);

/// Mixture where the same type index persists through all periods (requires
/// equal type counts); weights are over that shared index.
std::vector<Rat> constant_mixture(const ProfileMatrix& m,
                                  const std::vector<Rat>& weights);

/// n exact nonnegative weights summing to one, from a seeded mt19937_64 with
/// integer numerators over the given denominator grid.
std::vector<Rat> random_weights(int n, std::uint64_t seed,
                                long denominator = 1000);

/// Exact Cobb-Douglas demand y_k = alpha_k w / p_k; alpha must be a
/// probability vector over the goods.
Point cobb_douglas_demand(const Budget& b, const std::vector<Rat>& alpha);

/// One simulated consumer: a budget path and per-period Cobb-Douglas weights.
struct Agent {
  std::vector<int> budget_path;
  std::vector<std::vector<Rat>> alpha;
};

/// One observation per agent and period, on the agent's budget path.
std::vector<Observation> simulate_panel(const std::vector<PatchSet>& periods,
                                        const std::vector<Agent>& agents);

/// Independent small-instance check of the mixture test: searches every
/// column subset up to max_support for an exact nonnegative solution
/// (a feasible instance always has one of support at most the row count).
/// Throws std::length_error when the subset count is out of reach.
bool brute_force_verdict(const ProfileMatrix& m, const StochasticChoice& data,
                         int max_support = 12);

}  // namespace drum
