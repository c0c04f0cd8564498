#pragma once

#include <string>
#include <vector>

#include "drum/geometry.hpp"

namespace drum {

/// A rational demand type for one period: one patch per budget such that the
/// strict revealed preference generated by weak affordability of the
/// representatives is acyclic. Choices are ordered by budget index.
struct DemandType {
  int period = 0;
  std::vector<PatchId> choices;

  /// "(i_1,...,i_J)": the patch index chosen on each budget, in index order.
  std::string label() const;
};

/// All rational demand types of the period, in lexicographic order of their
/// choice tuples. With continuous_demand set, intersection patches are not
/// available as choices.
std::vector<DemandType> enumerate_rational_types(const PatchSet& ps,
                                                 bool continuous_demand);

/// One row of the profile matrix: a budget path (one budget index per period)
/// together with a choice path (one patch on each of those budgets).
struct MatrixRow {
  std::vector<int> budget_path;
  std::vector<PatchId> patches;
};

/// The 0/1 system  rho = A nu  linking choice-path probabilities to a mixture
/// over profiles of per-period demand types. Rows are grouped by budget path
/// (budget paths in lexicographic order, choice paths lexicographic within);
/// columns are type profiles in lexicographic order, first period outermost.
struct ProfileMatrix {
  std::vector<PatchSet> periods;
  std::vector<std::vector<DemandType>> types;  // per period
  std::vector<MatrixRow> rows;
  std::vector<std::vector<int>> profiles;  // column -> type index per period
  std::vector<std::vector<char>> entries;  // entries[row][col] in {0,1}

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return static_cast<int>(profiles.size()); }

  /// "{i|j,i'|j'}": the choice path, one patch per period.
  std::string row_label(int r) const;
  /// "[(..),(..)]": the per-period type labels of the profile.
  std::string col_label(int c) const;

  int find_row(const std::vector<int>& budget_path,
               const std::vector<PatchId>& patches) const;  // -1 when absent
};

/// Builds the full matrix over every budget path. Throws when the number of
/// entries would exceed max_entries (guards against accidental blow-ups).
ProfileMatrix build_profile_matrix(const std::vector<PatchSet>& periods,
                                   bool continuous_demand,
                                   long max_entries = 10000000L);

/// One observed choice-path probability.
struct PathProb {
  std::vector<int> budget_path;
  std::vector<PatchId> patches;
  Rat prob;
};

/// A panel of stochastic choices: per-period patch sets, the budget paths
/// actually observed, and a probability for each choice path along them.
struct StochasticChoice {
  std::vector<PatchSet> periods;
  std::vector<std::vector<int>> observed_paths;
  std::vector<PathProb> rho;

  /// Probability of a choice path; zero when not listed.
  Rat prob(const std::vector<int>& budget_path,
           const std::vector<PatchId>& patches) const;

  bool path_observed(const std::vector<int>& budget_path) const;

  /// Checks that every listed probability is in [0,1], owners match the
  /// budget path, and each observed budget path's block sums to one. Throws
  /// std::invalid_argument naming the offending path otherwise.
  void validate() const;

  /// The rho vector aligned with the rows of m; unlisted rows get zero.
  std::vector<Rat> rho_vector(const ProfileMatrix& m) const;
};

std::string path_label(const std::vector<int>& budget_path,
                       const std::vector<PatchId>& patches);

}  // namespace drum
