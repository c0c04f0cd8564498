#pragma once

#include <map>
#include <string>
#include <vector>

#include "drum/feasibility.hpp"
#include "drum/rationality.hpp"

namespace drum {

enum class AxiomStatus { Pass, Fail, NotApplicable };

std::string to_string(AxiomStatus s);

/// One concrete inequality (or equality) checked for an axiom, with the two
/// exactly evaluated sides.
struct AxiomInstance {
  std::string description;
  Rat lhs;
  Rat rhs;
  bool ok = false;
};

struct AxiomReport {
  std::string axiom;
  AxiomStatus status = AxiomStatus::NotApplicable;
  std::vector<AxiomInstance> instances;

  std::vector<AxiomInstance> violations() const;
};

/// Marginal distributions over any proper subset of periods must not depend
/// on the budgets of the remaining periods. Checked over every pair of
/// observed budget paths agreeing on the subset.
AxiomReport check_stability(const StochasticChoice& data);

/// For every within-period dominance pair a > b and every off-period context,
/// the mass of the patches on a's budget dominating b must be at least the
/// mass of the patches on b's budget dominated by a.
AxiomReport check_monotonicity(const StochasticChoice& data);

/// Across two periods, the monotonicity gap of a dominance pair cannot shrink
/// when the other period moves from its dominated to its dominating side:
/// with the same patch unions as monotonicity, the four-path difference
/// rho(x1,y1) - rho(x2,y1) >= rho(x1,y2) - rho(x2,y2) must hold.
AxiomReport check_intensity(const StochasticChoice& data);

/// The period-t view of the panel: one marginal over period-t patches for
/// each configuration of the other periods' budgets.
struct Slice {
  int period = 0;
  bool well_defined = false;

  struct Family {
    std::vector<int> context;  // other periods' budget indices, period order
    std::map<PatchId, Rat> marginal;
  };
  std::vector<Family> families;
  /// The union of the family marginals; meaningful when well_defined.
  std::map<PatchId, Rat> marginal;
};

Slice slice(const StochasticChoice& data, int period);

/// Single-period random-utility test of a marginal over patches. Budgets not
/// mentioned by the marginal are unconstrained; each mentioned budget's
/// probabilities must sum to one.
struct StaticRumResult {
  bool feasible = false;
  std::vector<DemandType> types;
  std::vector<PatchId> row_patches;
  std::vector<Rat> nu;  // over types, when feasible
  std::vector<Rat> d;   // separating vector over row_patches, when infeasible
};

StaticRumResult test_rum_static(const PatchSet& ps,
                                const std::map<PatchId, Rat>& marginal,
                                bool continuous_demand);

/// Acyclicity of revealed dominance across all supported patches of the whole
/// panel (within and across periods, via the representative-point test).
struct SarpdResult {
  bool consistent = false;
  /// When inconsistent: a directed cycle, as (period, patch) pairs; the last
  /// element dominates the first.
  std::vector<std::pair<int, PatchId>> cycle;
};

SarpdResult check_sarpd(const StochasticChoice& data);

}  // namespace drum
