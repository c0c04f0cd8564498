#include <benchmark/benchmark.h>

#include "drum/feasibility.hpp"
#include "drum/geometry.hpp"
#include "drum/rationality.hpp"
#include "drum/simulation.hpp"

namespace {

using namespace drum;

std::vector<Budget> crossing_budgets(int t) {
  return {{t, 1, {Rat(5), Rat(3)}, Rat(15)}, {t, 2, {Rat(3), Rat(5)}, Rat(15)}};
}

void bm_build_patches(benchmark::State& state) {
  const int extra = static_cast<int>(state.range(0));
  std::vector<Budget> budgets = crossing_budgets(1);
  for (int i = 0; i < extra; ++i)
    budgets.push_back(
        {1, 3 + i, {Rat(4 + i), Rat(4 - i % 2)}, Rat(15 + i)});
  for (auto _ : state) benchmark::DoNotOptimize(build_patches(budgets));
}
BENCHMARK(bm_build_patches)->Arg(0)->Arg(2)->Arg(4);

void bm_test_drum(benchmark::State& state) {
  std::vector<PatchSet> periods{build_patches(crossing_budgets(1)),
                                build_patches(crossing_budgets(2))};
  ProfileMatrix m = build_profile_matrix(periods, true);
  StochasticChoice data =
      simulate_mixture(m, random_weights(m.col_count(), 7));
  for (auto _ : state) benchmark::DoNotOptimize(test_drum(m, data));
}
BENCHMARK(bm_test_drum);

}  // namespace

BENCHMARK_MAIN();
