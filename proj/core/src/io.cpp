#include "drum/io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace drum {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument(where +
                              ": rationals must be \"num/den\" strings");
}

json rat_to_json(const Rat& q) { return rat_str(q); }

json point_to_json(const Point& y) {
  json a = json::array();
  for (const Rat& c : y) a.push_back(rat_to_json(c));
  return a;
}

std::string sign_char(Sign s) {
  switch (s) {
    case Sign::Above: return "+";
    case Sign::Below: return "-";
    case Sign::On: return "0";
  }
  return "?";
}

}  // namespace

StochasticChoice parse_dataset(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("dataset is not valid JSON: ") +
                                e.what());
  }
  const int T = j.at("periods").get<int>();
  if (T < 1) throw std::invalid_argument("dataset: periods must be >= 1");

  std::map<int, std::vector<Budget>> by_period;
  for (const json& bj : j.at("budgets")) {
    Budget b;
    b.period = bj.at("period").get<int>();
    b.index = bj.at("index").get<int>();
    for (const json& p : bj.at("prices"))
      b.prices.push_back(rat_from_json(p, "budget prices"));
    b.expenditure = rat_from_json(bj.at("expenditure"), "budget expenditure");
    if (b.period < 1 || b.period > T)
      throw std::invalid_argument("dataset: budget with period " +
                                  std::to_string(b.period) +
                                  " outside 1.." + std::to_string(T));
    by_period[b.period].push_back(std::move(b));
  }

  StochasticChoice data;
  for (int t = 1; t <= T; ++t) {
    auto it = by_period.find(t);
    if (it == by_period.end())
      throw std::invalid_argument("dataset: period " + std::to_string(t) +
                                  " has no budgets");
    data.periods.push_back(build_patches(it->second));
  }

  for (const json& pj : j.at("observed_paths")) {
    std::vector<int> bp;
    for (const json& v : pj) bp.push_back(v.get<int>());
    data.observed_paths.push_back(std::move(bp));
  }

  for (const json& rj : j.at("rho")) {
    PathProb p;
    for (const json& v : rj.at("path")) p.budget_path.push_back(v.get<int>());
    const json& patches = rj.at("patches");
    if (patches.size() != p.budget_path.size())
      throw std::invalid_argument("dataset: rho entry patch/path length "
                                  "mismatch");
    for (std::size_t t = 0; t < patches.size(); ++t)
      p.patches.push_back({p.budget_path[t], patches[t].get<int>()});
    p.prob = rat_from_json(rj.at("prob"), "rho probability");
    data.rho.push_back(std::move(p));
  }

  data.validate();
  return data;
}

StochasticChoice load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open dataset file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_dataset(text);
}

std::string dataset_json(const StochasticChoice& data) {
  json j;
  j["periods"] = data.periods.size();
  j["budgets"] = json::array();
  for (const PatchSet& ps : data.periods)
    for (const Budget& b : ps.budgets) {
      json bj;
      bj["period"] = b.period;
      bj["index"] = b.index;
      bj["prices"] = json::array();
      for (const Rat& p : b.prices) bj["prices"].push_back(rat_to_json(p));
      bj["expenditure"] = rat_to_json(b.expenditure);
      j["budgets"].push_back(std::move(bj));
    }
  j["observed_paths"] = data.observed_paths;
  j["rho"] = json::array();
  for (const PathProb& p : data.rho) {
    json rj;
    rj["path"] = p.budget_path;
    rj["patches"] = json::array();
    for (const PatchId& id : p.patches) rj["patches"].push_back(id.index);
    rj["prob"] = rat_to_json(p.prob);
    j["rho"].push_back(std::move(rj));
  }
  return j.dump(2);
}

void save_dataset(const StochasticChoice& data, const std::string& path) {
  write_text_file(path, dataset_json(data));
}

std::string patches_json(const PatchSet& ps) {
  json j;
  j["period"] = ps.period;
  j["patches"] = json::array();
  for (const Patch& p : ps.patches) {
    json pj;
    pj["label"] = to_string(p.id());
    pj["owner"] = p.owner;
    pj["index"] = p.index;
    pj["intersection"] = p.is_intersection;
    pj["representative"] = point_to_json(p.representative);
    json signs;
    for (const auto& [l, s] : p.signs) signs[std::to_string(l)] = sign_char(s);
    pj["signs"] = std::move(signs);
    if (!p.same_as.empty()) {
      pj["same_as"] = json::array();
      for (const PatchId& id : p.same_as) pj["same_as"].push_back(to_string(id));
    }
    j["patches"].push_back(std::move(pj));
  }
  j["dominance"] = json::array();
  for (const auto& [a, b] : ps.dominance)
    j["dominance"].push_back({to_string(a), to_string(b)});
  return j.dump(2);
}

std::string matrix_json(const ProfileMatrix& m) {
  json j;
  j["rows"] = json::array();
  for (int r = 0; r < m.row_count(); ++r) {
    json rj;
    rj["path"] = m.rows[r].budget_path;
    rj["label"] = m.row_label(r);
    j["rows"].push_back(std::move(rj));
  }
  j["columns"] = json::array();
  for (int c = 0; c < m.col_count(); ++c) j["columns"].push_back(m.col_label(c));
  j["entries"] = json::array();
  for (int r = 0; r < m.row_count(); ++r)
    for (int c = 0; c < m.col_count(); ++c)
      if (m.entries[r][c]) j["entries"].push_back({r, c});
  return j.dump(2);
}

std::string verdict_json(const ProfileMatrix& m, const FeasibilityResult& res) {
  json j;
  j["feasible"] = res.feasible;
  if (res.feasible) {
    j["witness"] = json::array();
    for (int c = 0; c < m.col_count(); ++c)
      if (res.witness.nu[c] != 0)
        j["witness"].push_back(
            {{"profile", m.col_label(c)},
             {"weight", rat_to_json(res.witness.nu[c])}});
  } else {
    j["certificate"] = json::array();
    for (std::size_t i = 0; i < res.certificate.d.size(); ++i)
      if (res.certificate.d[i] != 0)
        j["certificate"].push_back(
            {{"row", m.row_label(res.certificate.row_index[i])},
             {"coefficient", rat_to_json(res.certificate.d[i])}});
  }
  return j.dump(2);
}

std::string axiom_report_json(const AxiomReport& report) {
  json j;
  j["axiom"] = report.axiom;
  j["status"] = to_string(report.status);
  j["checked"] = report.instances.size();
  j["violations"] = json::array();
  for (const AxiomInstance& i : report.violations())
    j["violations"].push_back({{"instance", i.description},
                               {"lhs", rat_to_json(i.lhs)},
                               {"rhs", rat_to_json(i.rhs)}});
  return j.dump(2);
}

std::string slice_json(const Slice& s) {
  json j;
  j["period"] = s.period;
  j["well_defined"] = s.well_defined;
  j["families"] = json::array();
  for (const auto& fam : s.families) {
    json fj;
    fj["context"] = fam.context;
    fj["marginal"] = json::object();
    for (const auto& [id, v] : fam.marginal)
      fj["marginal"][to_string(id)] = rat_to_json(v);
    j["families"].push_back(std::move(fj));
  }
  if (s.well_defined) {
    j["marginal"] = json::object();
    for (const auto& [id, v] : s.marginal)
      j["marginal"][to_string(id)] = rat_to_json(v);
  }
  return j.dump(2);
}

std::string static_rum_json(const StaticRumResult& res) {
  json j;
  j["feasible"] = res.feasible;
  if (res.feasible) {
    j["witness"] = json::array();
    for (std::size_t c = 0; c < res.types.size(); ++c)
      if (res.nu[c] != 0)
        j["witness"].push_back({{"type", res.types[c].label()},
                                {"weight", rat_to_json(res.nu[c])}});
  } else {
    j["certificate"] = json::array();
    for (std::size_t i = 0; i < res.row_patches.size(); ++i)
      if (res.d[i] != 0)
        j["certificate"].push_back({{"patch", to_string(res.row_patches[i])},
                                    {"coefficient", rat_to_json(res.d[i])}});
  }
  return j.dump(2);
}

std::string sarpd_json(const SarpdResult& res) {
  json j;
  j["consistent"] = res.consistent;
  if (!res.consistent) {
    j["cycle"] = json::array();
    for (const auto& [t, id] : res.cycle)
      j["cycle"].push_back("t" + std::to_string(t) + ":" + to_string(id));
  }
  return j.dump(2);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text << '\n';
}

}  // namespace drum
