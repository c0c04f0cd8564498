#include "drum/feasibility.hpp"

#include <stdexcept>

namespace drum {

ConeResult solve_cone(const Mat& a, const std::vector<Rat>& b) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("solve_cone: shape mismatch");

  // Phase-one: minimize the sum of artificials in  A' x + s = b', x,s >= 0,
  // where rows with negative b are negated first.
  std::vector<int> flip(m, 1);
  Mat t(m, std::vector<Rat>(n + m + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    flip[i] = b[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) t[i][j] = flip[i] * a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip[i] * b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced-cost row for the phase-one objective (artificials cost 1).
  std::vector<Rat> red(n + m + 1, Rat(0));
  for (int j = 0; j <= n + m; ++j)
    for (int i = 0; i < m; ++i) red[j] -= t[i][j];
  for (int i = 0; i < m; ++i) red[n + i] += 1;

  for (;;) {
    int enter = -1;  // Bland: smallest negative reduced cost index
    for (int j = 0; j < n + m; ++j)
      if (red[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rat ratio = t[i][n + m] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("solve_cone: unbounded phase-one objective");
    const Rat piv = t[leave][enter];
    for (int j = 0; j <= n + m; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat f = t[i][enter];
      for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    {
      const Rat f = red[enter];
      if (f != 0)
        for (int j = 0; j <= n + m; ++j) red[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rat objective = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n) objective += t[i][n + m];

  ConeResult res;
  if (objective == 0) {
    res.feasible = true;
    res.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = t[i][n + m];
    return res;
  }

  // Farkas vector from the phase-one duals: y_i = sum over basic artificials
  // of the tableau entry in the i-th original artificial column, with the
  // row flips undone.
  res.feasible = false;
  res.y.assign(m, Rat(0));
  for (int i = 0; i < m; ++i) {
    Rat yi = 0;
    for (int k = 0; k < m; ++k)
      if (basis[k] >= n) yi += t[k][n + i];
    res.y[i] = flip[i] * yi;
  }
  return res;
}

namespace {

// Rows of the matrix lying on observed budget paths, in row order.
std::vector<int> observed_rows(const ProfileMatrix& m,
                               const StochasticChoice& data) {
  std::vector<int> idx;
  for (int r = 0; r < m.row_count(); ++r)
    if (data.path_observed(m.rows[r].budget_path)) idx.push_back(r);
  if (idx.empty())
    throw std::invalid_argument("test_drum: no observed budget paths");
  return idx;
}

}  // namespace

FeasibilityResult test_drum(const ProfileMatrix& m,
                            const StochasticChoice& data) {
  data.validate();
  const std::vector<int> idx = observed_rows(m, data);

  Mat a;
  std::vector<Rat> b;
  for (const int r : idx) {
    std::vector<Rat> row(m.col_count());
    for (int c = 0; c < m.col_count(); ++c) row[c] = Rat(int(m.entries[r][c]));
    a.push_back(std::move(row));
    b.push_back(data.prob(m.rows[r].budget_path, m.rows[r].patches));
  }

  FeasibilityResult res;
  ConeResult cone = solve_cone(a, b);
  res.feasible = cone.feasible;
  if (cone.feasible) {
    res.witness.nu = std::move(cone.x);
  } else {
    res.certificate.row_index = idx;
    res.certificate.d = std::move(cone.y);
  }
  return res;
}

bool verify_witness(const ProfileMatrix& m, const StochasticChoice& data,
                    const Witness& w) {
  if (static_cast<int>(w.nu.size()) != m.col_count()) return false;
  Rat total = 0;
  for (const Rat& v : w.nu) {
    if (v < 0) return false;
    total += v;
  }
  if (total != 1) return false;
  for (int r = 0; r < m.row_count(); ++r) {
    if (!data.path_observed(m.rows[r].budget_path)) continue;
    Rat lhs = 0;
    for (int c = 0; c < m.col_count(); ++c)
      if (m.entries[r][c]) lhs += w.nu[c];
    if (lhs != data.prob(m.rows[r].budget_path, m.rows[r].patches))
      return false;
  }
  return true;
}

bool verify_certificate(const ProfileMatrix& m, const StochasticChoice& data,
                        const Certificate& c) {
  if (c.row_index.size() != c.d.size() || c.d.empty()) return false;
  Rat against_rho = 0;
  for (std::size_t i = 0; i < c.d.size(); ++i) {
    const int r = c.row_index[i];
    if (r < 0 || r >= m.row_count()) return false;
    if (!data.path_observed(m.rows[r].budget_path)) return false;
    against_rho +=
        c.d[i] * data.prob(m.rows[r].budget_path, m.rows[r].patches);
  }
  if (against_rho <= 0) return false;
  for (int col = 0; col < m.col_count(); ++col) {
    Rat against_col = 0;
    for (std::size_t i = 0; i < c.d.size(); ++i)
      if (m.entries[c.row_index[i]][col]) against_col += c.d[i];
    if (against_col > 0) return false;
  }
  return true;
}

}  // namespace drum
