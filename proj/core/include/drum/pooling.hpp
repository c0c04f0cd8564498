#pragma once

#include <map>
#include <vector>

#include "drum/axioms.hpp"
#include "drum/geometry.hpp"

namespace drum {

/// The single arrangement built from every budget plane of every period, with
/// the mapping back onto the per-period arrangements it refines.
struct PooledPatches {
  PatchSet pooled;  // budgets renumbered 1..J, stored with period 1
  /// pooled budget index -> (original period, original budget index)
  std::map<int, std::pair<int, int>> budget_origin;
  /// pooled patch -> the patch of the owning plane's own period containing it
  std::map<PatchId, PatchId> refines;
};

/// Throws when two periods share a budget plane (the pooled view would be
/// ambiguous about which period an observation belongs to).
PooledPatches build_pooled_patches(const std::vector<PatchSet>& periods);

/// One demand observation: a quantity point on a specific budget.
struct Observation {
  int period = 0;
  int budget = 0;
  Point quantity;
};

/// Empirical pooled choice frequencies: for every pooled budget with
/// observations, the share of its patches. Throws when a point is off its
/// budget plane.
std::map<PatchId, Rat> pool(const PooledPatches& pp,
                            const std::vector<Observation>& panel);

/// Random-utility test of pooled frequencies, treating every plane as a
/// budget of one static arrangement.
StaticRumResult test_rum_pooled(const PooledPatches& pp,
                                const std::map<PatchId, Rat>& pooled_marginal,
                                bool continuous_demand);

}  // namespace drum
