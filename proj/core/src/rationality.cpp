#include "drum/rationality.hpp"

#include <algorithm>
#include <stdexcept>

namespace drum {

namespace {

// Cartesian product in lexicographic order, first coordinate outermost.
// sizes[i] is the number of options at position i.
template <class F>
void for_each_tuple(const std::vector<int>& sizes, F&& f) {
  std::vector<int> pos(sizes.size(), 0);
  for (const int s : sizes)
    if (s == 0) return;
  for (;;) {
    f(pos);
    int i = static_cast<int>(sizes.size()) - 1;
    while (i >= 0 && pos[i] == sizes[i] - 1) pos[i--] = 0;
    if (i < 0) return;
    ++pos[i];
  }
}

bool set_equal(const Patch& a, const Patch& b) {
  if (a.id() == b.id() && a.owner == b.owner) return true;
  return std::find(a.same_as.begin(), a.same_as.end(), b.id()) !=
         a.same_as.end();
}

bool acyclic(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<int, int>> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    stack.emplace_back(s, 0);
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < static_cast<int>(adj[v].size())) {
        const int w = adj[v][next++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

std::string DemandType::label() const {
  std::string s = "(";
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(choices[i].index);
  }
  return s + ")";
}

std::vector<DemandType> enumerate_rational_types(const PatchSet& ps,
                                                 bool continuous_demand) {
  const int J = static_cast<int>(ps.budgets.size());
  std::vector<std::vector<int>> options(J);
  for (int j = 0; j < J; ++j)
    options[j] = ps.patch_indices(ps.budgets[j].index, continuous_demand);

  std::vector<int> sizes(J);
  for (int j = 0; j < J; ++j) sizes[j] = static_cast<int>(options[j].size());

  std::vector<DemandType> out;
  for_each_tuple(sizes, [&](const std::vector<int>& pos) {
    std::vector<const Patch*> sel(J);
    for (int j = 0; j < J; ++j)
      sel[j] = &ps.patch({ps.budgets[j].index, options[j][pos[j]]});

    // Strict revealed preference: the choice on budget j beats any distinct
    // selected patch whose representative is weakly affordable at budget j.
    // Set-equal intersection patches count as the same choice.
    std::vector<std::vector<int>> adj(J);
    for (int j = 0; j < J; ++j)
      for (int l = 0; l < J; ++l) {
        if (l == j || set_equal(*sel[j], *sel[l])) continue;
        if (dot(ps.budgets[j].prices, sel[l]->representative) <=
            ps.budgets[j].expenditure)
          adj[j].push_back(l);
      }
    if (!acyclic(adj)) return;

    DemandType t;
    t.period = ps.period;
    for (int j = 0; j < J; ++j) t.choices.push_back(sel[j]->id());
    out.push_back(std::move(t));
  });
  return out;
}

std::string path_label(const std::vector<int>& budget_path,
                       const std::vector<PatchId>& patches) {
  std::string s = "{";
  for (std::size_t t = 0; t < patches.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(patches[t].index) + "|" +
         std::to_string(budget_path[t]);
  }
  return s + "}";
}

std::string ProfileMatrix::row_label(int r) const {
  return path_label(rows[r].budget_path, rows[r].patches);
}

std::string ProfileMatrix::col_label(int c) const {
  std::string s = "[";
  for (std::size_t t = 0; t < profiles[c].size(); ++t) {
    if (t) s += ",";
    s += types[t][profiles[c][t]].label();
  }
  return s + "]";
}

int ProfileMatrix::find_row(const std::vector<int>& budget_path,
                            const std::vector<PatchId>& patches) const {
  for (int r = 0; r < row_count(); ++r)
    if (rows[r].budget_path == budget_path && rows[r].patches == patches)
      return r;
  return -1;
}

ProfileMatrix build_profile_matrix(const std::vector<PatchSet>& periods,
                                   bool continuous_demand, long max_entries) {
  if (periods.empty())
    throw std::invalid_argument("build_profile_matrix: no periods");
  ProfileMatrix m;
  m.periods = periods;
  const int T = static_cast<int>(periods.size());

  for (const PatchSet& ps : periods) {
    m.types.push_back(enumerate_rational_types(ps, continuous_demand));
    if (m.types.back().empty())
      throw std::logic_error("build_profile_matrix: a period has no types");
  }

  std::vector<int> type_sizes(T);
  for (int t = 0; t < T; ++t)
    type_sizes[t] = static_cast<int>(m.types[t].size());
  for_each_tuple(type_sizes,
                 [&](const std::vector<int>& pos) { m.profiles.push_back(pos); });

  // Rows: budget paths in lexicographic order of budget indices, then choice
  // paths lexicographically within each budget path.
  std::vector<int> budget_sizes(T);
  for (int t = 0; t < T; ++t)
    budget_sizes[t] = static_cast<int>(periods[t].budgets.size());
  long n_rows = 0;
  for_each_tuple(budget_sizes, [&](const std::vector<int>& bpos) {
    std::vector<int> budget_path(T);
    std::vector<std::vector<int>> options(T);
    std::vector<int> sizes(T);
    for (int t = 0; t < T; ++t) {
      budget_path[t] = periods[t].budgets[bpos[t]].index;
      options[t] = periods[t].patch_indices(budget_path[t], continuous_demand);
      sizes[t] = static_cast<int>(options[t].size());
    }
    for_each_tuple(sizes, [&](const std::vector<int>& cpos) {
      MatrixRow row;
      row.budget_path = budget_path;
      for (int t = 0; t < T; ++t)
        row.patches.push_back({budget_path[t], options[t][cpos[t]]});
      m.rows.push_back(std::move(row));
      ++n_rows;
    });
  });

  if (n_rows * static_cast<long>(m.profiles.size()) > max_entries)
    throw std::length_error("build_profile_matrix: matrix would have " +
                            std::to_string(n_rows) + " x " +
                            std::to_string(m.profiles.size()) + " entries");

  // Per-type choice lookup keyed by budget index.
  std::vector<std::vector<std::map<int, PatchId>>> choice_of(T);
  for (int t = 0; t < T; ++t)
    for (const DemandType& ty : m.types[t]) {
      std::map<int, PatchId> by_budget;
      for (const PatchId& c : ty.choices) by_budget[c.owner] = c;
      choice_of[t].push_back(std::move(by_budget));
    }

  m.entries.assign(m.rows.size(),
                   std::vector<char>(m.profiles.size(), 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.profiles.size(); ++c) {
      bool one = true;
      for (int t = 0; t < T; ++t) {
        const PatchId chosen =
            choice_of[t][m.profiles[c][t]].at(m.rows[r].budget_path[t]);
        if (chosen != m.rows[r].patches[t]) {
          one = false;
          break;
        }
      }
      m.entries[r][c] = one ? 1 : 0;
    }
  return m;
}

Rat StochasticChoice::prob(const std::vector<int>& budget_path,
                           const std::vector<PatchId>& patches) const {
  for (const PathProb& p : rho)
    if (p.budget_path == budget_path && p.patches == patches) return p.prob;
  return Rat(0);
}

bool StochasticChoice::path_observed(const std::vector<int>& budget_path) const {
  return std::find(observed_paths.begin(), observed_paths.end(), budget_path) !=
         observed_paths.end();
}

void StochasticChoice::validate() const {
  const int T = static_cast<int>(periods.size());
  if (T == 0) throw std::invalid_argument("dataset has no periods");
  auto check_path = [&](const std::vector<int>& bp) {
    if (static_cast<int>(bp.size()) != T)
      throw std::invalid_argument("budget path has wrong length");
    for (int t = 0; t < T; ++t) periods[t].budget(bp[t]);  // throws if absent
  };
  for (const auto& bp : observed_paths) check_path(bp);
  for (const PathProb& p : rho) {
    check_path(p.budget_path);
    if (!path_observed(p.budget_path))
      throw std::invalid_argument("probability listed for unobserved path " +
                                  path_label(p.budget_path, p.patches));
    if (static_cast<int>(p.patches.size()) != T)
      throw std::invalid_argument("choice path has wrong length: " +
                                  path_label(p.budget_path, p.patches));
    for (int t = 0; t < T; ++t) {
      if (p.patches[t].owner != p.budget_path[t])
        throw std::invalid_argument("patch owner disagrees with budget path: " +
                                    path_label(p.budget_path, p.patches));
      periods[t].patch(p.patches[t]);  // throws if absent
    }
    if (p.prob < 0 || p.prob > 1)
      throw std::invalid_argument("probability out of [0,1] for " +
                                  path_label(p.budget_path, p.patches));
  }
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t l = i + 1; l < rho.size(); ++l)
      if (rho[i].budget_path == rho[l].budget_path &&
          rho[i].patches == rho[l].patches)
        throw std::invalid_argument("duplicate probability entry for " +
                                    path_label(rho[i].budget_path,
                                               rho[i].patches));
  for (const auto& bp : observed_paths) {
    Rat sum = 0;
    for (const PathProb& p : rho)
      if (p.budget_path == bp) sum += p.prob;
    if (sum != 1) {
      std::string lbl = "(";
      for (std::size_t t = 0; t < bp.size(); ++t)
        lbl += (t ? "," : "") + std::to_string(bp[t]);
      throw std::invalid_argument("probabilities along budget path " + lbl +
                                  ") sum to " + rat_str(sum) + ", not 1");
    }
  }
}

std::vector<Rat> StochasticChoice::rho_vector(const ProfileMatrix& m) const {
  std::vector<Rat> out(m.row_count(), Rat(0));
  for (int r = 0; r < m.row_count(); ++r)
    out[r] = prob(m.rows[r].budget_path, m.rows[r].patches);
  return out;
}

}  // namespace drum
