#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drum/rational.hpp"

namespace drum {

/// One linear budget plane  { y in R^K_+ : prices . y == expenditure }.
struct Budget {
  int period = 0;  // t, 1-based
  int index = 0;   // j within the period, 1-based
  std::vector<Rat> prices;
  Rat expenditure;

  int goods() const { return static_cast<int>(prices.size()); }
  void validate() const;
  /// True when the two budgets describe the same plane (proportional data).
  bool same_plane(const Budget& other) const;
};

/// Position of a point (or a whole cell) relative to a budget plane.
enum class Sign { Above, Below, On };

Sign side_of(const Budget& b, const Point& y);

/// (owner budget index, patch index within that budget), both 1-based.
struct PatchId {
  int owner = 0;
  int index = 0;
  auto operator<=>(const PatchId&) const = default;
};

std::string to_string(const PatchId& id);

/// A cell of the within-period budget-plane arrangement. The cell is stored
/// symbolically as its sign vector relative to every other budget plane of
/// the period; membership tests are exact rational sign evaluations.
struct Patch {
  int period = 0;
  int owner = 0;  // owning budget index j
  int index = 0;  // i within the owner, 1-based
  std::map<int, Sign> signs;  // keyed by the other budgets' indices
  bool is_intersection = false;
  Point representative;        // vertex centroid, relative interior
  std::vector<Point> vertices; // cell polytope vertices, sorted
  std::vector<PatchId> same_as;  // set-equal intersection patches, other owners

  PatchId id() const { return {owner, index}; }
};

/// The patch partition of one period, with the revealed-dominance relation.
struct PatchSet {
  int period = 0;
  std::vector<Budget> budgets;  // sorted by index
  std::vector<Patch> patches;   // grouped by owner, owner-major order
  /// All ordered pairs (a, b) with a revealed dominant to b.
  std::vector<std::pair<PatchId, PatchId>> dominance;

  const Budget& budget(int j) const;
  const Patch& patch(PatchId id) const;
  /// Patch indices available on budget j; intersection patches are dropped
  /// when continuous_demand is set.
  std::vector<int> patch_indices(int j, bool continuous_demand) const;
  int patch_count(int j) const;
  bool dominates_pair(PatchId a, PatchId b) const;
};

/// Builds the coarsest partition of the period's budget planes into patches,
/// with representatives and the dominance relation. Throws on duplicate or
/// invalid budgets.
PatchSet build_patches(const std::vector<Budget>& budgets_of_one_period);

/// Identifies the patch containing y, or nullopt when y lies on no budget
/// plane of the period. y must have K nonnegative coordinates.
std::optional<PatchId> classify_point(const Point& y, const PatchSet& ps);

/// Patch revealed dominance, decided exactly on sign vectors.
/// Throws on a cross-period comparison.
bool dominates(const Patch& a, const Patch& b, const PatchSet& ps);

/// Cross-period dominance: the same two-inequality test evaluated on the
/// representative points under both owner price systems.
bool dominates_across_periods(const Patch& a, const Budget& owner_a,
                              const Patch& b, const Budget& owner_b);

}  // namespace drum
