// Command-line front end: patch geometry, type enumeration, the mixture
// test with witnesses/certificates, axiom batteries, slices, pooling and
// panel simulation, all over exact rational arithmetic.
//
// Exit codes: 0 = pass/feasible, 1 = fail/infeasible (a certificate or
// violation list is emitted), 2 = bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "drum/axioms.hpp"
#include "drum/feasibility.hpp"
#include "drum/io.hpp"
#include "drum/pooling.hpp"
#include "drum/simulation.hpp"

using namespace drum;
using nlohmann::json;

namespace {

struct Options {
  std::string dataset;
  std::string report_dir;
  bool continuous = false;
  long max_entries = 10000000L;
  long max_columns = 1000000L;
};

ProfileMatrix build_matrix(const std::vector<PatchSet>& periods,
                           const Options& opt) {
  long cols = 1;
  for (const PatchSet& ps : periods) {
    cols *= static_cast<long>(
        enumerate_rational_types(ps, opt.continuous).size());
    if (cols > opt.max_columns)
      throw std::invalid_argument(
          "profile count exceeds --max-columns (" +
          std::to_string(opt.max_columns) + ")");
  }
  return build_profile_matrix(periods, opt.continuous, opt.max_entries);
}

void emit(const Options& opt, const std::string& name,
          const std::string& text) {
  std::cout << text << '\n';
  if (!opt.report_dir.empty())
    write_text_file(opt.report_dir + "/" + name, text);
}

std::vector<Rat> parse_weight_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rat(item));
  return out;
}

std::vector<Observation> load_panel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open panel file: " + path);
  json j = json::parse(in);
  std::vector<Observation> panel;
  for (const json& oj : j.at("panel")) {
    Observation o;
    o.period = oj.at("period").get<int>();
    o.budget = oj.at("budget").get<int>();
    for (const json& q : oj.at("quantity"))
      o.quantity.push_back(parse_rat(q.get<std::string>()));
    panel.push_back(std::move(o));
  }
  return panel;
}

int cmd_patches(const Options& opt, int period) {
  StochasticChoice data = load_dataset(opt.dataset);
  for (const PatchSet& ps : data.periods) {
    if (period > 0 && ps.period != period) continue;
    emit(opt, "patches_t" + std::to_string(ps.period) + ".json",
         patches_json(ps));
  }
  return 0;
}

int cmd_types(const Options& opt) {
  StochasticChoice data = load_dataset(opt.dataset);
  json out = json::array();
  for (const PatchSet& ps : data.periods) {
    json tj;
    tj["period"] = ps.period;
    tj["types"] = json::array();
    for (const DemandType& t : enumerate_rational_types(ps, opt.continuous))
      tj["types"].push_back(t.label());
    out.push_back(std::move(tj));
  }
  emit(opt, "types.json", out.dump(2));
  return 0;
}

int cmd_matrix(const Options& opt) {
  StochasticChoice data = load_dataset(opt.dataset);
  ProfileMatrix m = build_matrix(data.periods, opt);
  emit(opt, "matrix.json", matrix_json(m));
  return 0;
}

int cmd_test(const Options& opt) {
  StochasticChoice data = load_dataset(opt.dataset);
  ProfileMatrix m = build_matrix(data.periods, opt);
  FeasibilityResult res = test_drum(m, data);
  emit(opt, "verdict.json", verdict_json(m, res));
  return res.feasible ? 0 : 1;
}

int cmd_axioms(const Options& opt) {
  StochasticChoice data = load_dataset(opt.dataset);
  bool failed = false;
  for (const AxiomReport& r :
       {check_stability(data), check_monotonicity(data),
        check_intensity(data)}) {
    emit(opt, "axiom_" + r.axiom + ".json", axiom_report_json(r));
    failed = failed || r.status == AxiomStatus::Fail;
  }
  return failed ? 1 : 0;
}

int cmd_slice(const Options& opt, int period, bool run_test) {
  StochasticChoice data = load_dataset(opt.dataset);
  Slice s = slice(data, period);
  emit(opt, "slice_t" + std::to_string(period) + ".json", slice_json(s));
  if (!run_test) return 0;
  if (!s.well_defined) {
    std::cerr << "slice is not well-defined; testing each family instead\n";
    bool any_infeasible = false;
    for (std::size_t f = 0; f < s.families.size(); ++f) {
      StaticRumResult r = test_rum_static(data.periods[period - 1],
                                          s.families[f].marginal,
                                          opt.continuous);
      emit(opt,
           "slice_t" + std::to_string(period) + "_family" +
               std::to_string(f + 1) + "_rum.json",
           static_rum_json(r));
      any_infeasible = any_infeasible || !r.feasible;
    }
    return any_infeasible ? 1 : 0;
  }
  StaticRumResult r =
      test_rum_static(data.periods[period - 1], s.marginal, opt.continuous);
  emit(opt, "slice_t" + std::to_string(period) + "_rum.json",
       static_rum_json(r));
  return r.feasible ? 0 : 1;
}

int cmd_sarpd(const Options& opt) {
  StochasticChoice data = load_dataset(opt.dataset);
  SarpdResult res = check_sarpd(data);
  emit(opt, "sarpd.json", sarpd_json(res));
  return res.consistent ? 0 : 1;
}

int cmd_pool(const Options& opt, const std::string& panel_path) {
  StochasticChoice data = load_dataset(opt.dataset);
  PooledPatches pp = build_pooled_patches(data.periods);
  const auto freq = pool(pp, load_panel(panel_path));
  json fj = json::object();
  for (const auto& [id, v] : freq) fj[to_string(id)] = rat_str(v);
  emit(opt, "pooled_frequencies.json", fj.dump(2));
  StaticRumResult r = test_rum_pooled(pp, freq, opt.continuous);
  emit(opt, "pooled_rum.json", static_rum_json(r));
  return r.feasible ? 0 : 1;
}

int cmd_simulate(const Options& opt, const std::string& mode,
                 const std::string& weights, unsigned long seed,
                 const std::string& out_path) {
  StochasticChoice base = load_dataset(opt.dataset);
  ProfileMatrix m = build_matrix(base.periods, opt);
  std::vector<Rat> nu;
  if (mode == "custom") {
    nu = parse_weight_list(weights);
  } else if (mode == "random") {
    nu = random_weights(m.col_count(), seed);
  } else if (mode == "constant") {
    nu = constant_mixture(m, weights.empty()
                                 ? random_weights(
                                       static_cast<int>(m.types[0].size()), seed)
                                 : parse_weight_list(weights));
  } else if (mode == "independent") {
    std::vector<std::vector<Rat>> per_period;
    if (weights.empty()) {
      for (std::size_t t = 0; t < m.types.size(); ++t)
        per_period.push_back(random_weights(
            static_cast<int>(m.types[t].size()), seed + t));
    } else {
      std::stringstream ss(weights);
      std::string block;
      while (std::getline(ss, block, ';'))
        per_period.push_back(parse_weight_list(block));
    }
    nu = independent_mixture(m, per_period);
  } else {
    throw std::invalid_argument("unknown mixture mode: " + mode);
  }
  StochasticChoice sim = simulate_mixture(m, nu);
  const std::string text = dataset_json(sim);
  if (out_path.empty())
    std::cout << text << '\n';
  else
    write_text_file(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationalizability tests for panels of stochastic choices "
               "from linear budgets"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("DRUM_REPORT_DIR")) opt.report_dir = env;
  if (const char* env = std::getenv("DRUM_MAX_COLUMNS"))
    opt.max_columns = std::strtol(env, nullptr, 10);
  if (const char* env = std::getenv("DRUM_CONTINUOUS_DEMAND"))
    opt.continuous = std::string(env) == "1" || std::string(env) == "true";

  int period = 0;
  bool run_test = false;
  std::string panel_path, mode = "random", weights, out_path;
  unsigned long seed = 0;
  if (const char* env = std::getenv("DRUM_SEED"))
    seed = std::strtoul(env, nullptr, 10);

  auto add_common = [&](CLI::App* sub, bool needs_dataset = true) {
    if (needs_dataset)
      sub->add_option("dataset", opt.dataset, "dataset JSON file")->required();
    sub->add_flag("--continuous-demand", opt.continuous,
                  "drop measure-zero intersection patches");
    sub->add_option("--report-dir", opt.report_dir,
                    "also write each report into this directory");
    sub->add_option("--max-columns", opt.max_columns,
                    "refuse to enumerate more type profiles than this");
  };

  auto* sc_patches = app.add_subcommand("patches", "patch layout per period");
  add_common(sc_patches);
  sc_patches->add_option("--period", period, "restrict to one period");

  auto* sc_types = app.add_subcommand("types", "rational demand types");
  add_common(sc_types);

  auto* sc_matrix = app.add_subcommand("matrix", "the 0/1 mixture system");
  add_common(sc_matrix);
  sc_matrix->add_option("--max-entries", opt.max_entries,
                        "matrix size guard");

  auto* sc_test = app.add_subcommand("test", "rationalizability test");
  add_common(sc_test);
  sc_test->add_option("--max-entries", opt.max_entries, "matrix size guard");

  auto* sc_axioms = app.add_subcommand("axioms", "axiom batteries");
  add_common(sc_axioms);

  auto* sc_slice = app.add_subcommand("slice", "per-period view");
  add_common(sc_slice);
  sc_slice->add_option("--period", period, "period to slice")->required();
  sc_slice->add_flag("--test", run_test, "also run the static test");

  auto* sc_sarpd = app.add_subcommand("sarpd", "cross-period dominance cycles");
  add_common(sc_sarpd);

  auto* sc_pool = app.add_subcommand("pool", "pooled-arrangement test");
  add_common(sc_pool);
  sc_pool->add_option("--panel", panel_path, "panel of demand points JSON")
      ->required();

  auto* sc_sim = app.add_subcommand("simulate", "generate a mixture panel");
  add_common(sc_sim);
  sc_sim->add_option("--mode", mode,
                     "independent | constant | custom | random");
  sc_sim->add_option("--weights", weights,
                     "comma-separated rationals ('; ' between periods for "
                     "independent mode)");
  sc_sim->add_option("--seed", seed, "RNG seed for random weights");
  sc_sim->add_option("--out", out_path, "output dataset file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sc_patches->parsed()) return cmd_patches(opt, period);
    if (sc_types->parsed()) return cmd_types(opt);
    if (sc_matrix->parsed()) return cmd_matrix(opt);
    if (sc_test->parsed()) return cmd_test(opt);
    if (sc_axioms->parsed()) return cmd_axioms(opt);
    if (sc_slice->parsed()) return cmd_slice(opt, period, run_test);
    if (sc_sarpd->parsed()) return cmd_sarpd(opt);
    if (sc_pool->parsed()) return cmd_pool(opt, panel_path);
    if (sc_sim->parsed())
      return cmd_simulate(opt, mode, weights, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
