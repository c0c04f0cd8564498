#include "drum/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "drum/linalg.hpp"

namespace drum {

void Budget::validate() const {
  if (period < 1) throw std::invalid_argument("budget period must be >= 1");
  if (index < 1) throw std::invalid_argument("budget index must be >= 1");
  if (goods() < 2)
    throw std::invalid_argument("budgets need K >= 2 goods");
  for (const Rat& p : prices)
    if (p <= 0)
      throw std::invalid_argument("budget prices must be strictly positive");
  if (expenditure <= 0)
    throw std::invalid_argument("budget expenditure must be strictly positive");
}

bool Budget::same_plane(const Budget& other) const {
  if (goods() != other.goods()) return false;
  // Proportional (p, w) describe the same plane.
  for (int k = 0; k < goods(); ++k)
    if (prices[k] * other.expenditure != other.prices[k] * expenditure)
      return false;
  return true;
}

Sign side_of(const Budget& b, const Point& y) {
  const Rat v = dot(b.prices, y);
  if (v > b.expenditure) return Sign::Above;
  if (v < b.expenditure) return Sign::Below;
  return Sign::On;
}

std::string to_string(const PatchId& id) {
  return "x_{" + std::to_string(id.index) + "|" + std::to_string(id.owner) + "}";
}

const Budget& PatchSet::budget(int j) const {
  for (const Budget& b : budgets)
    if (b.index == j) return b;
  throw std::out_of_range("no budget with index " + std::to_string(j));
}

const Patch& PatchSet::patch(PatchId id) const {
  for (const Patch& p : patches)
    if (p.owner == id.owner && p.index == id.index) return p;
  throw std::out_of_range("no patch " + to_string(id));
}

std::vector<int> PatchSet::patch_indices(int j, bool continuous_demand) const {
  std::vector<int> out;
  for (const Patch& p : patches)
    if (p.owner == j && !(continuous_demand && p.is_intersection))
      out.push_back(p.index);
  return out;
}

int PatchSet::patch_count(int j) const {
  return static_cast<int>(patch_indices(j, false).size());
}

bool PatchSet::dominates_pair(PatchId a, PatchId b) const {
  return dominates(patch(a), patch(b), *this);
}

namespace {

// Vertices of the cell arrangement restricted to the owner plane: every
// intersection of the owner plane with K-1 constraints drawn from the other
// budget planes and the coordinate hyperplanes, kept when nonnegative.
std::vector<Point> arrangement_vertices(const Budget& owner,
                                        const std::vector<Budget>& others) {
  const int K = owner.goods();
  struct Constraint {
    std::vector<Rat> normal;
    Rat rhs;
  };
  std::vector<Constraint> cons;
  for (const Budget& b : others) cons.push_back({b.prices, b.expenditure});
  for (int k = 0; k < K; ++k) {
    std::vector<Rat> e(K, Rat(0));
    e[k] = 1;
    cons.push_back({std::move(e), Rat(0)});
  }

  std::set<Point> found;
  const int n = static_cast<int>(cons.size());
  // Enumerate (K-1)-subsets of the constraints.
  std::vector<int> idx(K - 1);
  for (int i = 0; i < K - 1; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = K - 2;
    while (i >= 0 && idx[i] == n - (K - 1) + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int k = i + 1; k < K - 1; ++k) idx[k] = idx[k - 1] + 1;
    return true;
  };
  if (K - 1 > n) return {};
  do {
    Mat a;
    std::vector<Rat> rhs;
    a.push_back(owner.prices);
    rhs.push_back(owner.expenditure);
    for (int i : idx) {
      a.push_back(cons[i].normal);
      rhs.push_back(cons[i].rhs);
    }
    auto y = solve_unique(a, rhs);
    if (!y) continue;
    bool nonneg = true;
    for (const Rat& c : *y)
      if (c < 0) { nonneg = false; break; }
    if (nonneg) found.insert(*y);
  } while (advance());
  return {found.begin(), found.end()};
}

Point vertex_centroid(const std::vector<Point>& vs) {
  Point c(vs.front().size(), Rat(0));
  for (const Point& v : vs)
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += v[k];
  const Rat n(static_cast<long>(vs.size()));
  for (Rat& x : c) x /= n;
  return c;
}

}  // namespace

PatchSet build_patches(const std::vector<Budget>& budgets_of_one_period) {
  if (budgets_of_one_period.empty())
    throw std::invalid_argument("build_patches: no budgets");
  PatchSet ps;
  ps.budgets = budgets_of_one_period;
  std::sort(ps.budgets.begin(), ps.budgets.end(),
            [](const Budget& a, const Budget& b) { return a.index < b.index; });
  ps.period = ps.budgets.front().period;
  const int K = ps.budgets.front().goods();
  for (std::size_t i = 0; i < ps.budgets.size(); ++i) {
    const Budget& b = ps.budgets[i];
    b.validate();
    if (b.period != ps.period)
      throw std::invalid_argument("build_patches: budgets from mixed periods");
    if (b.goods() != K)
      throw std::invalid_argument("build_patches: inconsistent number of goods");
    for (std::size_t l = i + 1; l < ps.budgets.size(); ++l) {
      if (b.index == ps.budgets[l].index)
        throw std::invalid_argument("build_patches: repeated budget index " +
                                    std::to_string(b.index));
      if (b.same_plane(ps.budgets[l]))
        throw std::invalid_argument(
            "build_patches: duplicate budget plane (indices " +
            std::to_string(b.index) + " and " +
            std::to_string(ps.budgets[l].index) + ")");
    }
  }

  for (const Budget& owner : ps.budgets) {
    std::vector<Budget> others;
    for (const Budget& b : ps.budgets)
      if (b.index != owner.index) others.push_back(b);
    const auto vertices = arrangement_vertices(owner, others);

    std::vector<std::vector<Sign>> vsigns(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v)
      for (const Budget& b : others)
        vsigns[v].push_back(side_of(b, vertices[v]));

    // Enumerate candidate sign vectors over the other planes; a cell is kept
    // when the centroid of its compatible vertices reproduces the sign vector
    // exactly (the open cell is then nonempty and the centroid is interior).
    const std::size_t m = others.size();
    std::vector<Patch> cells;
    std::vector<Sign> sigma(m, Sign::Above);
    const Sign order[3] = {Sign::Above, Sign::Below, Sign::On};
    std::vector<int> digit(m, 0);
    for (;;) {
      for (std::size_t l = 0; l < m; ++l) sigma[l] = order[digit[l]];
      std::vector<Point> compat;
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        bool ok = true;
        for (std::size_t l = 0; l < m; ++l) {
          const Sign s = vsigns[v][l];
          if (sigma[l] == Sign::On ? s != Sign::On
                                   : (s != sigma[l] && s != Sign::On)) {
            ok = false;
            break;
          }
        }
        if (ok) compat.push_back(vertices[v]);
      }
      if (!compat.empty()) {
        const Point c = vertex_centroid(compat);
        bool realized = true;
        for (std::size_t l = 0; l < m; ++l)
          if (side_of(others[l], c) != sigma[l]) { realized = false; break; }
        if (realized) {
          Patch p;
          p.period = ps.period;
          p.owner = owner.index;
          p.representative = c;
          p.vertices = compat;
          for (std::size_t l = 0; l < m; ++l) {
            p.signs[others[l].index] = sigma[l];
            if (sigma[l] == Sign::On) p.is_intersection = true;
          }
          cells.push_back(std::move(p));
        }
      }
      std::size_t l = 0;
      while (l < m && digit[l] == 2) digit[l++] = 0;
      if (l == m) break;  // odometer wrapped; lone budgets emit one cell
      ++digit[l];
    }

    // Deterministic indexing: non-intersection patches first, each group
    // ordered by representative.
    std::stable_sort(cells.begin(), cells.end(),
                     [](const Patch& a, const Patch& b) {
                       if (a.is_intersection != b.is_intersection)
                         return !a.is_intersection;
                       return a.representative < b.representative;
                     });
    for (std::size_t i = 0; i < cells.size(); ++i)
      cells[i].index = static_cast<int>(i) + 1;
    for (Patch& p : cells) ps.patches.push_back(std::move(p));
  }

  // Cross-reference set-equal intersection patches (same vertex sets).
  for (Patch& a : ps.patches) {
    if (!a.is_intersection) continue;
    for (const Patch& b : ps.patches) {
      if (b.owner == a.owner || !b.is_intersection) continue;
      if (a.vertices == b.vertices) a.same_as.push_back(b.id());
    }
  }

  for (const Patch& a : ps.patches)
    for (const Patch& b : ps.patches)
      if (dominates(a, b, ps)) ps.dominance.emplace_back(a.id(), b.id());
  return ps;
}

std::optional<PatchId> classify_point(const Point& y, const PatchSet& ps) {
  if (static_cast<int>(y.size()) != ps.budgets.front().goods())
    throw std::invalid_argument("classify_point: dimension mismatch");
  for (const Rat& c : y)
    if (c < 0) throw std::invalid_argument("classify_point: negative coordinate");
  for (const Budget& owner : ps.budgets) {
    if (side_of(owner, y) != Sign::On) continue;
    for (const Patch& p : ps.patches) {
      if (p.owner != owner.index) continue;
      bool match = true;
      for (const auto& [j, s] : p.signs)
        if (side_of(ps.budget(j), y) != s) { match = false; break; }
      if (match) return p.id();
    }
    throw std::logic_error("classify_point: point on plane but in no patch");
  }
  return std::nullopt;
}

bool dominates(const Patch& a, const Patch& b, const PatchSet&) {
  if (a.period != b.period)
    throw std::invalid_argument("dominates: cross-period comparison");
  if (a.owner == b.owner) return false;
  // a must lie strictly above b's owner plane and b strictly below a's.
  return a.signs.at(b.owner) == Sign::Above &&
         b.signs.at(a.owner) == Sign::Below;
}

bool dominates_across_periods(const Patch& a, const Budget& owner_a,
                              const Patch& b, const Budget& owner_b) {
  return dot(owner_a.prices, b.representative) < owner_a.expenditure &&
         dot(owner_b.prices, a.representative) > owner_b.expenditure;
}

}  // namespace drum
