// Randomized cross-module properties over small random arrangements.
#include <doctest.h>

#include <random>

#include "drum/axioms.hpp"
#include "drum/simulation.hpp"
#include "test_support.hpp"

using namespace drum;
using namespace drum::testing;

TEST_CASE("mixture panels on random arrangements satisfy every battery") {
  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 40; ++trial) {
    ProfileMatrix m = random_profile_matrix(rng, 40000);
    StochasticChoice data =
        simulate_mixture(m, random_weights(m.col_count(), 1000 + trial));
    CAPTURE(trial);
    CHECK_NOTHROW(data.validate());

    CHECK(check_stability(data).status != AxiomStatus::Fail);
    CHECK(check_monotonicity(data).status != AxiomStatus::Fail);
    CHECK(check_intensity(data).status != AxiomStatus::Fail);

    for (std::size_t t = 1; t <= data.periods.size(); ++t) {
      Slice s = slice(data, static_cast<int>(t));
      CHECK(s.well_defined);
      CHECK(test_rum_static(data.periods[t - 1], s.marginal, false).feasible);
    }

    FeasibilityResult res = test_drum(m, data);
    CHECK(res.feasible);
    CHECK(verify_witness(m, data, res.witness));
  }
}

TEST_CASE("solver and subset search agree, artifacts verify, duality holds") {
  std::mt19937_64 rng(777);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int trial = 0; trial < 25; ++trial) {
    // Kept tiny: the subset search solves an exact linear system per node.
    ProfileMatrix m = random_profile_matrix(rng, 600);
    StochasticChoice data = random_block_panel(m, rng);
    CAPTURE(trial);
    CHECK_NOTHROW(data.validate());

    FeasibilityResult res = test_drum(m, data);
    if (res.feasible) {
      ++feasible_seen;
      CHECK(verify_witness(m, data, res.witness));
      CHECK(!verify_certificate(m, data, res.certificate));
    } else {
      ++infeasible_seen;
      CHECK(verify_certificate(m, data, res.certificate));
      CHECK(res.witness.nu.empty());
    }
    // With the support cap at the full column count the subset search is a
    // complete decision procedure; wider instances are skipped.
    if (m.col_count() > 12) continue;
    CHECK(brute_force_verdict(m, data, m.col_count()) == res.feasible);
  }
  // The generator must exercise both branches for the test to mean anything.
  CHECK(feasible_seen > 0);
  CHECK(infeasible_seen > 0);
}

TEST_CASE("a constant taste on a shared arrangement never shows a cycle") {
  // Same planes in every period and the same rational type throughout: the
  // supported patches are the choices of one acyclic preference, so the
  // dominance relation among them inherits that acyclicity.
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const int K = 2 + (trial % 2);
    const int T = 2;
    std::vector<Budget> base = random_budgets(rng, 1, K, 2);
    std::vector<PatchSet> periods;
    for (int t = 1; t <= T; ++t) {
      std::vector<Budget> bs = base;
      for (Budget& b : bs) b.period = t;
      periods.push_back(build_patches(bs));
    }
    ProfileMatrix m = build_profile_matrix(periods, false, 200000);
    const int n = static_cast<int>(m.types[0].size());
    std::vector<Rat> weights(n, 0);
    weights[std::uniform_int_distribution<int>(0, n - 1)(rng)] = 1;
    StochasticChoice data = simulate_mixture(m, constant_mixture(m, weights));
    CAPTURE(trial);
    CHECK(check_sarpd(data).consistent);
    CHECK(test_drum(m, data).feasible);
  }
}
