#include "drum/axioms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace drum {

std::string to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Pass: return "pass";
    case AxiomStatus::Fail: return "fail";
    case AxiomStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::vector<AxiomInstance> AxiomReport::violations() const {
  std::vector<AxiomInstance> out;
  for (const AxiomInstance& i : instances)
    if (!i.ok) out.push_back(i);
  return out;
}

namespace {

std::string fmt_path(const std::vector<int>& bp) {
  std::string s = "(";
  for (std::size_t t = 0; t < bp.size(); ++t)
    s += (t ? "," : "") + std::to_string(bp[t]);
  return s + ")";
}

std::string fmt_patch(int period, const PatchId& id) {
  return "x^" + std::to_string(period) + "_{" + std::to_string(id.index) +
         "|" + std::to_string(id.owner) + "}";
}

// Sum of rho over the given budget path, restricted at each constrained
// period to the admissible patches.
Rat mass(const StochasticChoice& data, const std::vector<int>& path,
         const std::map<int, std::vector<PatchId>>& allowed) {
  Rat s = 0;
  for (const PathProb& p : data.rho) {
    if (p.budget_path != path) continue;
    bool ok = true;
    for (const auto& [t, adm] : allowed)
      if (std::find(adm.begin(), adm.end(), p.patches[t]) == adm.end()) {
        ok = false;
        break;
      }
    if (ok) s += p.prob;
  }
  return s;
}

// All patch tuples over the listed periods along a budget path.
std::vector<std::vector<PatchId>> patch_tuples(
    const StochasticChoice& data, const std::vector<int>& path,
    const std::vector<int>& which_periods) {
  std::vector<std::vector<PatchId>> out{{}};
  for (const int t : which_periods) {
    std::vector<std::vector<PatchId>> next;
    for (const int i : data.periods[t].patch_indices(path[t], false))
      for (const auto& prefix : out) {
        auto ext = prefix;
        ext.push_back({path[t], i});
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

void finalize(AxiomReport& r) {
  if (r.instances.empty()) {
    r.status = AxiomStatus::NotApplicable;
    return;
  }
  r.status = AxiomStatus::Pass;
  for (const AxiomInstance& i : r.instances)
    if (!i.ok) {
      r.status = AxiomStatus::Fail;
      break;
    }
}

// Patches on a.owner's budget that dominate b, and patches on b.owner's
// budget dominated by a; the two unions compared by monotonicity.
std::pair<std::vector<PatchId>, std::vector<PatchId>> dominance_unions(
    const PatchSet& ps, const Patch& a, const Patch& b) {
  std::vector<PatchId> upper, lower;
  for (const Patch& p : ps.patches) {
    if (p.owner == a.owner && dominates(p, b, ps)) upper.push_back(p.id());
    if (p.owner == b.owner && dominates(a, p, ps)) lower.push_back(p.id());
  }
  return {upper, lower};
}

std::string fmt_union(int period, const std::vector<PatchId>& u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.size(); ++i)
    s += (i ? "," : "") + fmt_patch(period, u[i]);
  return s + "}";
}

}  // namespace

AxiomReport check_stability(const StochasticChoice& data) {
  data.validate();
  AxiomReport r;
  r.axiom = "stability";
  const int T = static_cast<int>(data.periods.size());
  std::set<std::string> seen;
  for (unsigned mask = 1; T > 1 && mask + 1 < (1u << T); ++mask) {
    std::vector<int> sub;
    for (int t = 0; t < T; ++t)
      if (mask & (1u << t)) sub.push_back(t);
    for (std::size_t i = 0; i < data.observed_paths.size(); ++i)
      for (std::size_t j = i + 1; j < data.observed_paths.size(); ++j) {
        const auto& b1 = data.observed_paths[i];
        const auto& b2 = data.observed_paths[j];
        if (b1 == b2) continue;
        bool agree = true;
        for (const int t : sub)
          if (b1[t] != b2[t]) { agree = false; break; }
        if (!agree) continue;
        for (const auto& tuple : patch_tuples(data, b1, sub)) {
          std::map<int, std::vector<PatchId>> fix;
          std::string lbl = "marginal of";
          for (std::size_t k = 0; k < sub.size(); ++k) {
            fix[sub[k]] = {tuple[k]};
            lbl += " " + fmt_patch(sub[k] + 1, tuple[k]);
          }
          lbl += " under paths " + fmt_path(b1) + " vs " + fmt_path(b2);
          if (!seen.insert(lbl).second) continue;
          AxiomInstance inst;
          inst.description = lbl;
          inst.lhs = mass(data, b1, fix);
          inst.rhs = mass(data, b2, fix);
          inst.ok = inst.lhs == inst.rhs;
          r.instances.push_back(std::move(inst));
        }
      }
  }
  finalize(r);
  return r;
}

AxiomReport check_monotonicity(const StochasticChoice& data) {
  data.validate();
  AxiomReport r;
  r.axiom = "monotonicity";
  const int T = static_cast<int>(data.periods.size());
  std::set<std::string> seen;
  for (int t = 0; t < T; ++t) {
    const PatchSet& ps = data.periods[t];
    for (const auto& [aid, bid] : ps.dominance) {
      const Patch& a = ps.patch(aid);
      const Patch& b = ps.patch(bid);
      const auto [upper, lower] = dominance_unions(ps, a, b);
      for (const auto& p1 : data.observed_paths) {
        if (p1[t] != a.owner) continue;
        for (const auto& p2 : data.observed_paths) {
          if (p2[t] != b.owner) continue;
          bool same_off = true;
          for (int u = 0; u < T; ++u)
            if (u != t && p1[u] != p2[u]) { same_off = false; break; }
          if (!same_off) continue;
          std::vector<int> off;
          for (int u = 0; u < T; ++u)
            if (u != t) off.push_back(u);
          for (const auto& ctx : patch_tuples(data, p1, off)) {
            std::map<int, std::vector<PatchId>> fix1, fix2;
            std::string clbl;
            for (std::size_t k = 0; k < off.size(); ++k) {
              fix1[off[k]] = {ctx[k]};
              fix2[off[k]] = {ctx[k]};
              clbl += (k ? "," : "") + fmt_patch(off[k] + 1, ctx[k]);
            }
            fix1[t] = upper;
            fix2[t] = lower;
            std::string lbl = fmt_patch(t + 1, aid) + " > " +
                              fmt_patch(t + 1, bid) + ": " +
                              fmt_union(t + 1, upper) + " vs " +
                              fmt_union(t + 1, lower) + " given {" + clbl +
                              "} paths " + fmt_path(p1) + "/" + fmt_path(p2);
            if (!seen.insert(lbl).second) continue;
            AxiomInstance inst;
            inst.description = lbl;
            inst.lhs = mass(data, p1, fix1);
            inst.rhs = mass(data, p2, fix2);
            inst.ok = inst.lhs >= inst.rhs;
            r.instances.push_back(std::move(inst));
          }
        }
      }
    }
  }
  finalize(r);
  return r;
}

AxiomReport check_intensity(const StochasticChoice& data) {
  data.validate();
  AxiomReport r;
  r.axiom = "intensity";
  const int T = static_cast<int>(data.periods.size());
  std::set<std::string> seen;
  for (int t = 0; t < T; ++t)
    for (int t2 = 0; t2 < T; ++t2) {
      if (t2 == t) continue;
      const PatchSet& psa = data.periods[t];
      const PatchSet& psb = data.periods[t2];
      for (const auto& [aid, bid] : psa.dominance) {
        const auto [x1, x2] =
            dominance_unions(psa, psa.patch(aid), psa.patch(bid));
        const int k = aid.owner, kp = bid.owner;
        for (const auto& [cid, did] : psb.dominance) {
          const auto [y1, y2] =
              dominance_unions(psb, psb.patch(cid), psb.patch(did));
          const int ks = cid.owner, ksp = did.owner;
          // The four budget paths (k,ks), (kp,ks), (k,ksp), (kp,ksp),
          // agreeing on every other period.
          for (const auto& base : data.observed_paths) {
            if (base[t] != k || base[t2] != ks) continue;
            auto path_with = [&](int bt, int bt2) {
              auto p = base;
              p[t] = bt;
              p[t2] = bt2;
              return p;
            };
            const auto p11 = path_with(k, ks), p21 = path_with(kp, ks),
                       p12 = path_with(k, ksp), p22 = path_with(kp, ksp);
            if (!data.path_observed(p21) || !data.path_observed(p12) ||
                !data.path_observed(p22))
              continue;
            std::vector<int> off;
            for (int u = 0; u < T; ++u)
              if (u != t && u != t2) off.push_back(u);
            for (const auto& ctx : patch_tuples(data, base, off)) {
              std::map<int, std::vector<PatchId>> fix;
              std::string clbl;
              for (std::size_t q = 0; q < off.size(); ++q) {
                fix[off[q]] = {ctx[q]};
                clbl += (q ? "," : "") + fmt_patch(off[q] + 1, ctx[q]);
              }
              auto term = [&](const std::vector<int>& path,
                              const std::vector<PatchId>& ut,
                              const std::vector<PatchId>& ut2) {
                auto f = fix;
                f[t] = ut;
                f[t2] = ut2;
                return mass(data, path, f);
              };
              std::string lbl =
                  fmt_patch(t + 1, aid) + " > " + fmt_patch(t + 1, bid) +
                  " with " + fmt_patch(t2 + 1, cid) + " > " +
                  fmt_patch(t2 + 1, did) + " given {" + clbl + "} paths " +
                  fmt_path(p11) + "/" + fmt_path(p21) + "/" + fmt_path(p12) +
                  "/" + fmt_path(p22);
              if (!seen.insert(lbl).second) continue;
              AxiomInstance inst;
              inst.description = lbl;
              inst.lhs = term(p11, x1, y1) - term(p21, x2, y1);
              inst.rhs = term(p12, x1, y2) - term(p22, x2, y2);
              inst.ok = inst.lhs >= inst.rhs;
              r.instances.push_back(std::move(inst));
            }
          }
        }
      }
    }
  finalize(r);
  return r;
}

Slice slice(const StochasticChoice& data, int period) {
  data.validate();
  const int T = static_cast<int>(data.periods.size());
  if (period < 1 || period > T)
    throw std::invalid_argument("slice: no period " + std::to_string(period));
  const int t = period - 1;

  Slice s;
  s.period = period;
  std::vector<std::vector<int>> contexts;
  for (const auto& bp : data.observed_paths) {
    std::vector<int> ctx;
    for (int u = 0; u < T; ++u)
      if (u != t) ctx.push_back(bp[u]);
    if (std::find(contexts.begin(), contexts.end(), ctx) == contexts.end())
      contexts.push_back(ctx);
  }
  for (const auto& ctx : contexts) {
    Slice::Family fam;
    fam.context = ctx;
    for (const auto& bp : data.observed_paths) {
      std::vector<int> c;
      for (int u = 0; u < T; ++u)
        if (u != t) c.push_back(bp[u]);
      if (c != ctx) continue;
      for (const int i : data.periods[t].patch_indices(bp[t], false)) {
        const PatchId id{bp[t], i};
        fam.marginal[id] = mass(data, bp, {{t, {id}}});
      }
    }
    s.families.push_back(std::move(fam));
  }

  s.well_defined = true;
  for (const auto& fam : s.families)
    for (const auto& [id, v] : fam.marginal) {
      auto it = s.marginal.find(id);
      if (it == s.marginal.end())
        s.marginal[id] = v;
      else if (it->second != v)
        s.well_defined = false;
    }
  if (!s.well_defined) s.marginal.clear();
  return s;
}

StaticRumResult test_rum_static(const PatchSet& ps,
                                const std::map<PatchId, Rat>& marginal,
                                bool continuous_demand) {
  StaticRumResult res;
  res.types = enumerate_rational_types(ps, continuous_demand);

  std::set<int> covered;
  for (const auto& [id, v] : marginal) {
    if (v < 0 || v > 1)
      throw std::invalid_argument("test_rum_static: probability out of [0,1]");
    if (continuous_demand && ps.patch(id).is_intersection) {
      // Zero-mass intersection entries are simply ignored in this mode.
      if (v > 0)
        throw std::invalid_argument(
            "test_rum_static: mass on an intersection patch under continuous "
            "demand: " + to_string(id));
      continue;
    }
    ps.patch(id);  // throws on unknown patch
    covered.insert(id.owner);
  }
  if (covered.empty())
    throw std::invalid_argument("test_rum_static: empty marginal");
  for (const int j : covered) {
    Rat sum = 0;
    for (const int i : ps.patch_indices(j, continuous_demand)) {
      auto it = marginal.find({j, i});
      if (it != marginal.end()) sum += it->second;
    }
    if (sum != 1)
      throw std::invalid_argument("test_rum_static: budget " +
                                  std::to_string(j) + " block sums to " +
                                  rat_str(sum) + ", not 1");
  }

  for (const int j : covered)
    for (const int i : ps.patch_indices(j, continuous_demand))
      res.row_patches.push_back({j, i});

  Mat a;
  std::vector<Rat> b;
  for (const PatchId& id : res.row_patches) {
    std::vector<Rat> row(res.types.size(), Rat(0));
    for (std::size_t c = 0; c < res.types.size(); ++c)
      for (const PatchId& ch : res.types[c].choices)
        if (ch == id) row[c] = 1;
    a.push_back(std::move(row));
    auto it = marginal.find(id);
    b.push_back(it == marginal.end() ? Rat(0) : it->second);
  }

  ConeResult cone = solve_cone(a, b);
  res.feasible = cone.feasible;
  if (cone.feasible)
    res.nu = std::move(cone.x);
  else
    res.d = std::move(cone.y);
  return res;
}

SarpdResult check_sarpd(const StochasticChoice& data) {
  data.validate();
  const int T = static_cast<int>(data.periods.size());

  struct Node {
    int t;  // 0-based period
    PatchId id;
  };
  std::vector<Node> nodes;
  auto have = [&](int t, PatchId id) {
    for (const Node& n : nodes)
      if (n.t == t && n.id == id) return true;
    return false;
  };
  for (const PathProb& p : data.rho)
    if (p.prob > 0)
      for (int t = 0; t < T; ++t)
        if (!have(t, p.patches[t])) nodes.push_back({t, p.patches[t]});

  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Node& a = nodes[i];
      const Node& b = nodes[j];
      if (a.t == b.t && a.id.owner == b.id.owner) continue;
      const Patch& pa = data.periods[a.t].patch(a.id);
      const Patch& pb = data.periods[b.t].patch(b.id);
      if (dominates_across_periods(pa, data.periods[a.t].budget(a.id.owner),
                                   pb, data.periods[b.t].budget(b.id.owner)))
        adj[i].push_back(j);
    }

  SarpdResult res;
  std::vector<int> state(n, 0);
  for (int s = 0; s < n && res.cycle.empty(); ++s) {
    if (state[s] != 0) continue;
    std::vector<std::pair<int, int>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty() && res.cycle.empty()) {
      auto& [v, next] = stack.back();
      if (next < static_cast<int>(adj[v].size())) {
        const int w = adj[v][next++];
        if (state[w] == 1) {
          // Recover the cycle w -> ... -> v (-> w).
          std::vector<int> path;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            path.push_back(it->first);
            if (it->first == w) break;
          }
          std::reverse(path.begin(), path.end());
          for (const int u : path)
            res.cycle.emplace_back(nodes[u].t + 1, nodes[u].id);
        } else if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  res.consistent = res.cycle.empty();
  return res;
}

}  // namespace drum
