#include "drum/pooling.hpp"

#include <stdexcept>

namespace drum {

PooledPatches build_pooled_patches(const std::vector<PatchSet>& periods) {
  if (periods.empty())
    throw std::invalid_argument("build_pooled_patches: no periods");
  PooledPatches pp;
  std::vector<Budget> planes;
  int next = 1;
  for (const PatchSet& ps : periods)
    for (const Budget& b : ps.budgets) {
      for (const Budget& seen : planes)
        if (seen.same_plane(b))
          throw std::invalid_argument(
              "build_pooled_patches: plane of period " +
              std::to_string(b.period) + " budget " + std::to_string(b.index) +
              " repeats an earlier plane");
      Budget pooled_b = b;
      pooled_b.period = 1;
      pooled_b.index = next;
      pp.budget_origin[next] = {b.period, b.index};
      planes.push_back(std::move(pooled_b));
      ++next;
    }
  pp.pooled = build_patches(planes);

  // Each pooled patch sits inside exactly one patch of the owning plane's
  // original period; locate it through the representative point.
  for (const Patch& p : pp.pooled.patches) {
    const auto [t, j] = pp.budget_origin.at(p.owner);
    const PatchSet* orig = nullptr;
    for (const PatchSet& ps : periods)
      if (ps.period == t) orig = &ps;
    auto id = classify_point(p.representative, *orig);
    if (!id || id->owner != j)
      throw std::logic_error("build_pooled_patches: refinement lookup failed");
    pp.refines[p.id()] = *id;
  }
  return pp;
}

namespace {

// The patch of plane j containing y; y must lie on plane j.
PatchId classify_on_plane(const PatchSet& ps, int j, const Point& y) {
  if (side_of(ps.budget(j), y) != Sign::On)
    throw std::invalid_argument("observation point is off its budget plane");
  for (const Patch& p : ps.patches) {
    if (p.owner != j) continue;
    bool match = true;
    for (const auto& [l, s] : p.signs)
      if (side_of(ps.budget(l), y) != s) { match = false; break; }
    if (match) return p.id();
  }
  throw std::logic_error("point on plane but in no patch");
}

}  // namespace

std::map<PatchId, Rat> pool(const PooledPatches& pp,
                            const std::vector<Observation>& panel) {
  if (panel.empty()) throw std::invalid_argument("pool: empty panel");
  std::map<int, long> per_budget;
  std::map<PatchId, long> per_patch;
  for (const Observation& obs : panel) {
    int pooled_index = -1;
    for (const auto& [idx, origin] : pp.budget_origin)
      if (origin == std::make_pair(obs.period, obs.budget)) pooled_index = idx;
    if (pooled_index < 0)
      throw std::invalid_argument("pool: observation on unknown budget (" +
                                  std::to_string(obs.period) + "," +
                                  std::to_string(obs.budget) + ")");
    const PatchId id = classify_on_plane(pp.pooled, pooled_index, obs.quantity);
    ++per_budget[pooled_index];
    ++per_patch[id];
  }
  std::map<PatchId, Rat> freq;
  for (const auto& [idx, total] : per_budget)
    for (const int i : pp.pooled.patch_indices(idx, false)) {
      const PatchId id{idx, i};
      auto it = per_patch.find(id);
      const long cnt = it == per_patch.end() ? 0L : it->second;
      freq[id] = Rat(cnt) / Rat(total);
    }
  return freq;
}

StaticRumResult test_rum_pooled(const PooledPatches& pp,
                                const std::map<PatchId, Rat>& pooled_marginal,
                                bool continuous_demand) {
  return test_rum_static(pp.pooled, pooled_marginal, continuous_demand);
}

}  // namespace drum
