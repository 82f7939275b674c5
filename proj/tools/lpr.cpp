#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "lpr/constructions.hpp"
#include "lpr/experiments.hpp"
#include "lpr/global_rigidity.hpp"
#include "lpr/graph_io.hpp"
#include "lpr/sampling.hpp"

namespace {

using json = nlohmann::ordered_json;
using lpr::field::PrimeField;
using lpr::field::Rat;
using lpr::field::RationalField;
using lpr::rigidity::PExponent;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitMismatch = 4;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LP_RIGIDITY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw lpr::ParseError("LP_RIGIDITY_SEED must be an unsigned integer");
    }
  }
  return 0;
}

struct OutputOptions {
  std::string format = "text";
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_flag("--timing", out.timing,
                "Include elapsed milliseconds in the JSON report (off by default "
                "so seeded reports are byte-reproducible)");
}

void emit(const OutputOptions& opts, json& report, const std::string& text) {
  if (opts.format == "json") {
    if (opts.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - opts.start;
      report["timing_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

json graph_summary(const std::string& path, const lpr::graphs::Graph& g) {
  return json{{"path", path}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

json tree_pair_json(const lpr::graphs::TreePair& pair) {
  auto edges_json = [](const std::vector<lpr::graphs::Edge>& edges) {
    json arr = json::array();
    for (const auto& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
  };
  return json::array({edges_json(pair.first_tree), edges_json(pair.second_tree)});
}

json string_vector_json(const std::vector<std::string>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v);
  return arr;
}

// ---------------------------------------------------------------- check-local

struct CheckLocalArgs {
  std::string graph_path;
  std::size_t dim = 2;
  int p = 4;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t trials = lpr::rigidity::kDefaultTrials;
  std::uint64_t modulus = lpr::field::kDefaultModulus;
  OutputOptions out;
};

int run_check_local(const CheckLocalArgs& args) {
  const auto g = lpr::io::read_graph_file(args.graph_path);
  if (g.vertex_count() < 1) throw lpr::Error("graph must have at least one vertex");
  const PExponent p(args.p);
  const PrimeField field(args.modulus);
  const std::uint64_t seed = args.seed_set ? args.seed : default_seed();

  const auto lr = lpr::rigidity::generic_local_rigidity(g, args.dim, p, args.trials, seed, field);

  json report;
  report["command"] = "check-local";
  report["input"] = graph_summary(args.graph_path, g);
  report["parameters"] = {
      {"dim", args.dim}, {"p", args.p}, {"seed", seed}, {"trials", args.trials},
      {"field", field.name()}};
  json verdicts;
  verdicts["rank_test"] = {{"rigid", lr.rigid},
                           {"rank", lr.rank},
                           {"target", lr.target},
                           {"reseeded", lr.reseeded}};
  bool rigid = lr.rigid;
  json certificates = json::object();
  if (args.dim == 2) {
    const auto packing = lpr::graphs::two_edge_disjoint_spanning_trees(g);
    verdicts["tree_packing"] = {{"two_tree_connected", packing.has_value()}};
    if (packing) certificates["spanning_trees"] = tree_pair_json(*packing);
    // Kitson-Power: in the plane the packing test is exact, so it decides.
    rigid = packing.has_value();
    verdicts["agreement"] = lr.rigid == packing.has_value();
  }
  verdicts["rigid"] = rigid;
  report["verdicts"] = verdicts;
  report["certificates"] = certificates;

  std::string text = "locally rigid in lp^" + std::to_string(args.dim) + " (p=" +
                     std::to_string(args.p) + "): " + (rigid ? "yes" : "no") + " (rank " +
                     std::to_string(lr.rank) + "/" + std::to_string(lr.target) + ")\n";
  emit(args.out, report, text);
  return rigid ? kExitYes : kExitNo;
}

// --------------------------------------------------------------- check-global

struct CheckGlobalArgs {
  std::string graph_path;
  std::size_t dim = 2;
  int p = 4;
  std::string mode = "both";
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t modulus = lpr::field::kDefaultModulus;
  OutputOptions out;
};

int run_check_global(const CheckGlobalArgs& args) {
  const auto g = lpr::io::read_graph_file(args.graph_path);
  const PExponent p(args.p);
  const PrimeField field(args.modulus);
  const std::uint64_t seed = args.seed_set ? args.seed : default_seed();

  json report;
  report["command"] = "check-global";
  report["input"] = graph_summary(args.graph_path, g);
  report["parameters"] = {{"dim", args.dim}, {"p", args.p}, {"seed", seed},
                          {"mode", args.mode}, {"field", field.name()}};
  json verdicts = json::object();
  json certificates = json::object();

  if (args.dim == 1) {
    const bool rigid = lpr::global_rigidity::global_rigidity_1d(g);
    verdicts["globally_rigid"] = rigid;
    verdicts["two_connected"] = lpr::graphs::is_two_connected(g);
    report["verdicts"] = verdicts;
    report["certificates"] = certificates;
    emit(args.out, report,
         std::string("globally rigid on the line: ") + (rigid ? "yes" : "no") + "\n");
    return rigid ? kExitYes : kExitNo;
  }

  if (args.dim == 2) {
    using lpr::global_rigidity::PlaneMode;
    const PlaneMode mode = args.mode == "combinatorial" ? PlaneMode::Combinatorial
                           : args.mode == "algebraic"   ? PlaneMode::Algebraic
                                                        : PlaneMode::Both;
    lpr::global_rigidity::Verdict verdict;
    try {
      verdict = lpr::global_rigidity::global_rigidity_plane(g, p, mode, seed, field);
    } catch (const lpr::global_rigidity::CrossCheckMismatchError& e) {
      verdicts["cross_check_mismatch"] = true;
      verdicts["combinatorial"] = *e.verdict.combinatorial;
      verdicts["algebraic_all_k"] = *e.verdict.algebraic_all_k;
      verdicts["algebraic_some_k"] = *e.verdict.algebraic_some_k;
      certificates["per_axis_laplacian_rank"] = e.verdict.per_axis_rank;
      if (e.verdict.tree_pair) certificates["spanning_trees"] = tree_pair_json(*e.verdict.tree_pair);
      report["verdicts"] = verdicts;
      report["certificates"] = certificates;
      emit(args.out, report, "cross-check mismatch between combinatorial and algebraic routes\n");
      return kExitMismatch;
    }
    bool rigid = false;
    if (verdict.combinatorial) {
      verdicts["combinatorial"] = *verdict.combinatorial;
      rigid = *verdict.combinatorial;
    }
    if (verdict.algebraic_all_k) {
      verdicts["algebraic_all_k"] = *verdict.algebraic_all_k;
      verdicts["algebraic_some_k"] = *verdict.algebraic_some_k;
      verdicts["no_stress"] = verdict.no_stress;
      certificates["per_axis_laplacian_rank"] = verdict.per_axis_rank;
      if (!verdict.combinatorial) rigid = *verdict.algebraic_all_k;
    }
    verdicts["globally_rigid"] = rigid;
    verdicts["reseeded"] = verdict.reseeded;
    if (verdict.tree_pair) certificates["spanning_trees"] = tree_pair_json(*verdict.tree_pair);
    report["verdicts"] = verdicts;
    report["certificates"] = certificates;
    emit(args.out, report,
         std::string("globally rigid in the lp plane: ") + (rigid ? "yes" : "no") + "\n");
    return rigid ? kExitYes : kExitNo;
  }

  // d >= 3: only sufficient conditions are proven; negatives are inconclusive.
  const auto suff =
      lpr::global_rigidity::global_rigidity_sufficiency_general_d(g, args.dim, p, seed, field);
  const bool rigid = suff.suff_stress || suff.suff_local_d_plus_1;
  verdicts["suff_stress_all_k"] = suff.suff_stress;
  verdicts["suff_local_d_plus_1"] = suff.suff_local_d_plus_1;
  verdicts["globally_rigid"] = rigid ? json(true) : json("inconclusive");
  verdicts["experimental"] = true;
  certificates["per_axis_laplacian_rank"] = suff.per_axis_rank;
  certificates["rank_d_plus_1"] = suff.local_d_plus_1.rank;
  report["verdicts"] = verdicts;
  report["certificates"] = certificates;
  emit(args.out, report,
       rigid ? std::string("globally rigid (sufficient condition)\n")
             : std::string("inconclusive for d >= 3\n"));
  return rigid ? kExitYes : kExitInconclusive;
}

// --------------------------------------------------------------------- stress

struct StressArgs {
  std::string graph_path;
  std::size_t dim = 2;
  int p = 4;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string config_path;
  std::uint64_t modulus = lpr::field::kDefaultModulus;
  OutputOptions out;
};

template <class F>
int report_stress(const F& f, const lpr::graphs::Graph& g,
                  const lpr::rigidity::Configuration<typename F::Elem>& c, PExponent p,
                  std::uint64_t seed, json& report, const StressArgs& args, bool print_laplacians,
                  std::vector<std::size_t> degenerate,
                  const std::function<std::string(const typename F::Elem&)>& show) {
  const auto basis = lpr::rigidity::stress_basis(f, g, c, p);

  json certificates = json::object();
  json verdicts = json::object();
  verdicts["stress_space_dim"] = basis.size();
  json warnings = json::array();
  for (std::size_t axis : degenerate)
    warnings.push_back("axis " + std::to_string(axis) +
                       " has repeated coordinates; generic rank claims do not transfer");
  report["warnings"] = warnings;

  json basis_json = json::array();
  for (const auto& w : basis) {
    json row = json::array();
    for (const auto& v : w) row.push_back(show(v));
    basis_json.push_back(row);
  }
  certificates["stress_basis"] = basis_json;

  std::string text;
  int code = kExitYes;
  if (basis.empty()) {
    verdicts["no_stress"] = true;
    text = "no nonzero self-stress (stress space is trivial)\n";
    code = kExitNo;
  } else {
    verdicts["no_stress"] = false;
    lpr::Rng rng(lpr::derive_seed(seed, 0x57e5));
    const auto w = lpr::rigidity::random_stress_combination(f, basis, rng);
    json wj = json::array();
    for (const auto& v : w) wj.push_back(show(v));
    certificates["generic_stress"] = wj;
    const auto ranks = lpr::rigidity::per_axis_laplacian_ranks(f, g, c, w, p);
    certificates["per_axis_laplacian_rank"] = ranks;
    if (print_laplacians) {
      json laps = json::array();
      for (std::size_t k = 0; k < c.d; ++k) {
        const auto wk = lpr::rigidity::coordinated_stress(f, g, c, w, k, p);
        const auto lap = lpr::rigidity::weighted_laplacian(f, g, wk);
        json rows = json::array();
        for (std::size_t i = 0; i < lap.rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < lap.cols(); ++j) row.push_back(show(lap.at(i, j)));
          rows.push_back(row);
        }
        laps.push_back(rows);
      }
      certificates["coordinated_laplacians"] = laps;
    }
    std::ostringstream os;
    os << "stress space dimension " << basis.size() << "; per-axis coordinated Laplacian ranks:";
    for (auto r : ranks) os << ' ' << r;
    os << " (n-2 = " << g.vertex_count() - 2 << ")\n";
    text = os.str();
  }
  report["verdicts"] = verdicts;
  report["certificates"] = certificates;
  emit(args.out, report, text);
  return code;
}

int run_stress(const StressArgs& args) {
  const auto g = lpr::io::read_graph_file(args.graph_path);
  const PExponent p(args.p);
  const std::uint64_t seed = args.seed_set ? args.seed : default_seed();

  json report;
  report["command"] = "stress";
  report["input"] = graph_summary(args.graph_path, g);

  if (!args.config_path.empty()) {
    // Certificate mode: exact rationals at an explicit configuration.
    const RationalField f;
    const auto c = lpr::io::read_configuration_file(args.config_path, g.vertex_count());
    report["parameters"] = {{"dim", c.d}, {"p", args.p}, {"seed", seed},
                            {"field", f.name()}, {"config", args.config_path}};
    const auto degenerate = lpr::rigidity::degenerate_axes(f, c);
    return report_stress<RationalField>(
        f, g, c, p, seed, report, args, /*print_laplacians=*/true, degenerate,
        [](const Rat& v) { return lpr::field::to_string(v); });
  }

  const PrimeField f(args.modulus);
  report["parameters"] = {{"dim", args.dim}, {"p", args.p}, {"seed", seed},
                          {"field", f.name()}};
  lpr::Rng rng(lpr::derive_seed(seed, 0xcf9));
  const auto c = lpr::rigidity::sample_configuration(f, g.vertex_count(), args.dim, rng);
  return report_stress<PrimeField>(f, g, c, p, seed, report, args, /*print_laplacians=*/false, {},
                                   [](const std::uint64_t& v) { return std::to_string(v); });
}

// ------------------------------------------------------------------- generate

struct GenerateArgs {
  std::size_t count = 10;
  std::size_t max_n = 12;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_dir = ".";
  OutputOptions out;
};

int run_generate(const GenerateArgs& args) {
  const std::uint64_t seed = args.seed_set ? args.seed : default_seed();
  const auto corpus = lpr::constructions::generate_corpus(args.count, args.max_n, seed);

  std::filesystem::create_directories(args.out_dir);
  json manifest;
  manifest["command"] = "generate";
  manifest["parameters"] = {{"count", args.count}, {"max_n", args.max_n}, {"seed", seed}};
  json entries = json::array();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::ostringstream name;
    name << "g" << std::setw(3) << std::setfill('0') << i << ".graph";
    const auto path = std::filesystem::path(args.out_dir) / name.str();
    lpr::io::write_graph_file(corpus[i].graph, path.string());
    entries.push_back({{"file", name.str()},
                       {"n", corpus[i].graph.vertex_count()},
                       {"m", corpus[i].graph.edge_count()},
                       {"trace", string_vector_json(corpus[i].trace)}});
  }
  manifest["graphs"] = entries;
  std::ofstream mf(std::filesystem::path(args.out_dir) / "manifest.json");
  mf << manifest.dump(2) << '\n';

  json report = manifest;
  emit(args.out, report,
       "wrote " + std::to_string(corpus.size()) + " graphs to " + args.out_dir + "\n");
  return kExitYes;
}

// ----------------------------------------------------------------- thresholds

struct ThresholdsArgs {
  std::string n_list = "20,40,80";
  std::size_t dim = 2;
  int p = 4;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t modulus = lpr::field::kDefaultModulus;
  OutputOptions out;
};

int run_thresholds(const ThresholdsArgs& args) {
  const PExponent p(args.p);
  const PrimeField field(args.modulus);
  const std::uint64_t seed = args.seed_set ? args.seed : default_seed();

  std::vector<std::size_t> ns;
  std::stringstream ss(args.n_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      ns.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw lpr::ParseError("invalid --n-list entry '" + tok + "'");
    }
  }
  if (ns.empty()) throw lpr::ParseError("--n-list must contain at least one value");

  const auto rows = lpr::experiments::threshold_report(ns, args.dim, p, args.trials, seed, field);

  json report;
  report["command"] = "thresholds";
  report["parameters"] = {{"dim", args.dim}, {"p", args.p}, {"trials", args.trials},
                          {"seed", seed},    {"field", field.name()},
                          {"gr_is_upper_bound", args.dim >= 3}};
  json rows_json = json::array();
  std::ostringstream text;
  text << "n  freq(M_LR=M_d)  freq(M_GR=M_{d+1})  mean_gap_LR  mean_gap_GR\n";
  for (const auto& row : rows) {
    rows_json.push_back({{"n", row.n},
                         {"trials", row.trials},
                         {"freq_lr_eq_min_degree", row.freq_lr_eq_min_degree},
                         {"freq_gr_eq_min_degree", row.freq_gr_eq_min_degree},
                         {"mean_gap_lr", row.mean_gap_lr},
                         {"mean_gap_gr", row.mean_gap_gr}});
    text << row.n << "  " << row.freq_lr_eq_min_degree << "  " << row.freq_gr_eq_min_degree
         << "  " << row.mean_gap_lr << "  " << row.mean_gap_gr << "\n";
  }
  report["rows"] = rows_json;
  emit(args.out, report, text.str());
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic local and global rigidity of graphs in lp-spaces (p even, >= 4)"};
  app.require_subcommand(1);

  CheckLocalArgs local_args;
  auto* local = app.add_subcommand("check-local", "Decide generic local rigidity");
  local->add_option("graph", local_args.graph_path, "Graph file")->required();
  local->add_option("--dim", local_args.dim, "Dimension d")->capture_default_str();
  local->add_option("--p", local_args.p, "Even norm exponent >= 4")->capture_default_str();
  local->add_option("--seed", local_args.seed, "Random seed")
      ->each([&](const std::string&) { local_args.seed_set = true; });
  local->add_option("--trials", local_args.trials, "Random configurations per test")
      ->capture_default_str();
  local->add_option("--modulus", local_args.modulus, "Prime-field modulus")
      ->capture_default_str();
  add_output_options(local, local_args.out);

  CheckGlobalArgs global_args;
  auto* global = app.add_subcommand("check-global", "Decide generic global rigidity");
  global->add_option("graph", global_args.graph_path, "Graph file")->required();
  global->add_option("--dim", global_args.dim, "Dimension d")->capture_default_str();
  global->add_option("--p", global_args.p, "Even norm exponent >= 4")->capture_default_str();
  global->add_option("--mode", global_args.mode, "Decision route (d = 2)")
      ->check(CLI::IsMember({"combinatorial", "algebraic", "both"}))
      ->capture_default_str();
  global->add_option("--seed", global_args.seed, "Random seed")
      ->each([&](const std::string&) { global_args.seed_set = true; });
  global->add_option("--modulus", global_args.modulus, "Prime-field modulus")
      ->capture_default_str();
  add_output_options(global, global_args.out);

  StressArgs stress_args;
  auto* stress = app.add_subcommand("stress", "Self-stress basis and coordinated Laplacian ranks");
  stress->add_option("graph", stress_args.graph_path, "Graph file")->required();
  stress->add_option("--dim", stress_args.dim, "Dimension d (sampled mode)")
      ->capture_default_str();
  stress->add_option("--p", stress_args.p, "Even norm exponent >= 4")->capture_default_str();
  stress->add_option("--seed", stress_args.seed, "Random seed")
      ->each([&](const std::string&) { stress_args.seed_set = true; });
  stress->add_option("--config", stress_args.config_path,
                     "Exact rational configuration file (certificate mode)");
  stress->add_option("--modulus", stress_args.modulus, "Prime-field modulus")
      ->capture_default_str();
  add_output_options(stress, stress_args.out);

  GenerateArgs generate_args;
  auto* generate = app.add_subcommand(
      "generate", "Generate 2-connected redundantly 2-tree-connected corpus graphs");
  generate->add_option("--count", generate_args.count, "Number of graphs")->capture_default_str();
  generate->add_option("--max-n", generate_args.max_n, "Largest vertex count")
      ->capture_default_str();
  generate->add_option("--seed", generate_args.seed, "Random seed")
      ->each([&](const std::string&) { generate_args.seed_set = true; });
  generate->add_option("--out", generate_args.out_dir, "Output directory")->required();
  add_output_options(generate, generate_args.out);

  ThresholdsArgs thresholds_args;
  auto* thresholds =
      app.add_subcommand("thresholds", "Erdos-Renyi rigidity hitting-time experiment");
  thresholds->add_option("--n-list", thresholds_args.n_list, "Comma-separated vertex counts")
      ->capture_default_str();
  thresholds->add_option("--dim", thresholds_args.dim, "Dimension d")->capture_default_str();
  thresholds->add_option("--p", thresholds_args.p, "Even norm exponent >= 4")
      ->capture_default_str();
  thresholds->add_option("--trials", thresholds_args.trials, "Trials per n")
      ->capture_default_str();
  thresholds->add_option("--seed", thresholds_args.seed, "Random seed")
      ->each([&](const std::string&) { thresholds_args.seed_set = true; });
  thresholds->add_option("--modulus", thresholds_args.modulus, "Prime-field modulus")
      ->capture_default_str();
  add_output_options(thresholds, thresholds_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (local->parsed()) return run_check_local(local_args);
    if (global->parsed()) return run_check_global(global_args);
    if (stress->parsed()) return run_stress(stress_args);
    if (generate->parsed()) return run_generate(generate_args);
    if (thresholds->parsed()) return run_thresholds(thresholds_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
