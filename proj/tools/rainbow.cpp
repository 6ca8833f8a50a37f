// rainbow: command-line front end for edge-colored graph analysis.
//
// Exit codes: 0 success/verified, 1 finding (violation or certified absence),
// 2 usage or input error, 3 indeterminate (search budget exhausted).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rainbow/audit.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/colordeg.hpp"
#include "rainbow/detectors.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/report.hpp"
#include "rainbow/theorems.hpp"

using namespace rainbow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("RAINBOW_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "RAINBOW_SEED is not an unsigned integer");
    }
  }
  return value;
}

SearchBudget budget_from(std::optional<std::uint64_t> nodes) {
  return nodes ? SearchBudget::nodes(*nodes) : SearchBudget::unlimited();
}

void print_vertices(const RainbowWitness& w) {
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    std::cout << (i ? " " : "") << w.vertices[i];
  }
  std::cout << '\n';
  std::cerr << "rainbow " << to_string(w.kind) << " of length " << w.length() << ", colors";
  for (Color c : w.colors) std::cerr << ' ' << c;
  std::cerr << '\n';
}

int print_optional(const std::optional<RainbowWitness>& w) {
  if (w) {
    print_vertices(*w);
    return kExitOk;
  }
  std::cout << "certified absent\n";
  return kExitFinding;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParams, "cannot write '" + path + "'");
  out << text;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "bad vertex '" + item + "' in --path");
    }
  }
  return out;
}

std::size_t default_order(TheoremId id, const TheoremParams& params) {
  switch (id) {
    case TheoremId::MAIN_COMPLETE: return 8 * params.k.value_or(6) - 18;
    case TheoremId::LONGCYC_TANGJAI_FIXED: return 16;
    case TheoremId::LONGCYC_CKRY_ORIG:
    case TheoremId::LONGCYC_CKRY_FIXED: return 14;
    case TheoremId::PATH_LB: return 10;
    default: return 12;
  }
}

int verdict_exit(std::size_t violations, std::size_t indeterminate) {
  if (violations > 0) return kExitFinding;
  if (indeterminate > 0) return kExitIndeterminate;
  return kExitOk;
}

struct TheoremFlags {
  std::string theorem;
  std::optional<std::size_t> k, t, d;

  void attach(CLI::App* app) {
    app->add_option("--theorem", theorem, "Theorem id, e.g. RT_VERTEX")->required();
    app->add_option("--k", k, "Cycle length parameter");
    app->add_option("--t", t, "Color-degree parameter (PATH_LB)");
    app->add_option("--d", d, "Color-degree parameter (LONGCYC_LW)");
  }

  TheoremParams params(TheoremId id) const {
    TheoremParams p = default_params(id);
    if (k) p.k = k;
    if (t) p.t = t;
    if (d) p.d = d;
    return p;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow substructures in edge-colored graphs"};
  app.require_subcommand(1);

  // check
  std::string graph_path;
  auto* check = app.add_subcommand("check", "Print minimum color degree and per-vertex table");
  check->add_option("graph", graph_path, ".ecg file or - for stdin")->required();

  // find
  std::string what;
  std::optional<Vertex> through;
  std::size_t find_k = 3;
  std::optional<std::uint64_t> budget_nodes;
  auto* find = app.add_subcommand("find", "Search for a rainbow structure");
  find->add_option("graph", graph_path, ".ecg file or - for stdin")->required();
  find->add_option("--what", what, "triangle, c4, path or cycle")
      ->required()
      ->check(CLI::IsMember({"triangle", "c4", "path", "cycle"}));
  find->add_option("--through", through, "Vertex that must lie on the structure");
  find->add_option("--k", find_k, "Minimum cycle length for --what cycle");
  find->add_option("--budget", budget_nodes, "Search-tree node limit");

  // audit
  std::string path_text;
  std::size_t audit_k = 0;
  auto* audit = app.add_subcommand("audit", "Audit a rainbow path in a complete graph");
  audit->add_option("graph", graph_path, ".ecg file or - for stdin")->required();
  audit->add_option("--path", path_text, "Comma-separated vertices u1,...,up")->required();
  audit->add_option("--k", audit_k, "Cycle length bound")->required();
  audit->add_option("--budget", budget_nodes, "Node limit for certification searches");

  // gen
  std::string family = "complete_random";
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  std::size_t palette = 1;
  double edge_p = 0.5;
  std::size_t gen_t = 1;
  std::size_t recolor = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as .ecg");
  gen->add_option("--family", family,
                  "complete_random, gnp_random, proper_bipartite, matching_k4, targeted_delta, "
                  "lexical");
  gen->add_option("--n", gen_n, "Order");
  gen->add_option("--m", gen_m, "Side size for proper_bipartite");
  gen->add_option("--palette", palette, "Palette size");
  gen->add_option("--p", edge_p, "Edge probability for gnp_random");
  gen->add_option("--t", gen_t, "Minimum color degree for targeted_delta");
  gen->add_option("--recolor", recolor, "Recolored edges for lexical");
  auto* gen_seed = gen->add_option("--seed", seed, "Seed (RAINBOW_SEED when absent)");
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  // verify
  TheoremFlags vflags;
  std::size_t trials = 100;
  std::uint64_t vbudget = 10'000'000;
  int jobs = 0;
  bool timing = false;
  std::optional<std::size_t> v_n;
  std::optional<std::string> v_family;
  std::optional<std::size_t> v_palette, v_target, v_recolor;
  std::optional<double> v_p;
  auto* verify = app.add_subcommand("verify", "Run a seeded campaign for one theorem");
  vflags.attach(verify);
  verify->add_option("--trials", trials, "Number of generated instances");
  auto* verify_seed = verify->add_option("--seed", seed, "Base seed (RAINBOW_SEED when absent)");
  verify->add_option("--budget", vbudget, "Search-tree node limit per instance");
  verify->add_option("--jobs", jobs, "Worker threads (0: all)");
  verify->add_option("--n", v_n, "Instance order");
  verify->add_option("--family", v_family, "Generator family override");
  verify->add_option("--palette", v_palette, "Palette size override");
  verify->add_option("--target-delta", v_target, "Minimum color degree override");
  verify->add_option("--p", v_p, "Edge probability override");
  verify->add_option("--recolor", v_recolor, "Recolored edges (lexical)");
  verify->add_flag("--timing", timing, "Record wall time in timing_ms");
  verify->add_option("-o,--output", out_path, "Report file (default stdout)");

  // mine
  TheoremFlags mflags;
  std::string mode = "exhaustive";
  std::size_t n_min = 3, n_max = 5, palette_max = 3;
  std::size_t mine_trials = 1000;
  double mine_p = 1.0;
  std::optional<std::uint64_t> mbudget;
  auto* mine = app.add_subcommand("mine", "Search for counterexamples and tightness");
  mflags.attach(mine);
  mine->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  mine->add_option("--n-min", n_min, "Smallest order");
  mine->add_option("--n-max", n_max, "Largest order");
  mine->add_option("--palette-max", palette_max, "Largest palette");
  mine->add_option("--trials", mine_trials, "Instances in random mode");
  mine->add_option("--p", mine_p, "Edge probability in random mode");
  auto* mine_seed = mine->add_option("--seed", seed, "Base seed (RAINBOW_SEED when absent)");
  mine->add_option("--budget", mbudget, "Search-tree node limit per instance");
  mine->add_option("--jobs", jobs, "Worker threads (0: all)");
  mine->add_flag("--timing", timing, "Record wall time in timing_ms");
  mine->add_option("-o,--output", out_path, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) {
      const EdgeColoredGraph g = read_ecg_file(graph_path);
      const ColorDegreeTable table = color_degree_table(g);
      std::cout << "min_color_degree " << table.min_color_degree << '\n';
      for (std::size_t v = 0; v < table.per_vertex.size(); ++v) {
        std::cout << "vertex " << v << ' ' << table.per_vertex[v] << '\n';
      }
      return kExitOk;
    }

    if (find->parsed()) {
      const EdgeColoredGraph g = read_ecg_file(graph_path);
      const SearchBudget budget = budget_from(budget_nodes);
      if (what == "triangle") {
        return print_optional(through ? rainbow_triangle_through(g, *through)
                                      : find_rainbow_triangle(g));
      }
      if (what == "c4") {
        return print_optional(through ? rainbow_c4_through(g, *through) : find_rainbow_c4(g));
      }
      if (through) throw Error(ErrorCode::BadParams, "--through applies to triangle and c4");
      if (what == "path") {
        const PathSearchResult r = longest_rainbow_path(g, budget);
        print_vertices(r.best);
        if (!r.exact) {
          std::cerr << "budget exhausted; path is the best found, not certified longest\n";
          return kExitIndeterminate;
        }
        return kExitOk;
      }
      const CycleSearchResult r = find_rainbow_cycle_at_least(g, find_k, budget);
      switch (r.status) {
        case SearchStatus::Found: print_vertices(*r.witness); return kExitOk;
        case SearchStatus::Absent: std::cout << "certified absent\n"; return kExitFinding;
        case SearchStatus::Indeterminate: std::cout << "indeterminate\n"; return kExitIndeterminate;
      }
    }

    if (audit->parsed()) {
      const EdgeColoredGraph g = read_ecg_file(graph_path);
      RainbowWitness path{WitnessKind::Path, parse_vertex_list(path_text), {}};
      const PathAuditReport r = audit_path(g, path, audit_k, budget_from(budget_nodes));
      std::cout << dump(audit_json(r));
      if (!r.checks_pass()) return kExitFinding;
      if (r.long_cycle == SearchStatus::Indeterminate || !r.path_is_longest) {
        return kExitIndeterminate;
      }
      return kExitOk;
    }

    if (gen->parsed()) {
      GenSpec spec;
      spec.family = family_from_string(family);
      spec.n = spec.family == Family::ProperBipartite ? gen_m : gen_n;
      spec.palette = palette;
      spec.p = edge_p;
      spec.target_delta = gen_t;
      spec.recolor = recolor;
      spec.seed = resolve_seed(gen_seed, seed);
      write_output(serialize_ecg(generate(spec)), out_path);
      return kExitOk;
    }

    if (verify->parsed()) {
      const TheoremId id = theorem_from_string(vflags.theorem);
      CampaignConfig config;
      config.theorem = id;
      config.params = vflags.params(id);
      const std::size_t n = v_n.value_or(default_order(id, config.params));
      if (id == TheoremId::LONGCYC_LW && !config.params.d) config.params.d = (3 * n + 7) / 4;
      config.generator = default_generator(id, config.params, n, resolve_seed(verify_seed, seed));
      if (v_family) {
        config.generator.family = family_from_string(*v_family);
        config.generator.n = n;
      }
      if (v_palette) config.generator.palette = *v_palette;
      if (v_target) config.generator.target_delta = *v_target;
      if (v_p) config.generator.p = *v_p;
      if (v_recolor) config.generator.recolor = *v_recolor;
      config.trials = trials;
      config.budget = SearchBudget::nodes(vbudget);
      config.jobs = jobs;
      const TheoremReport r = run_campaign(config);
      write_output(dump(report_json(r, timing)), out_path);
      std::cerr << to_string(id) << ": " << r.hypothesis_met << " of " << r.trials
                << " instances met the hypothesis, " << r.violations.size() << " violations, "
                << r.indeterminate << " indeterminate\n";
      return verdict_exit(r.violations.size(), r.indeterminate);
    }

    if (mine->parsed()) {
      const TheoremId id = theorem_from_string(mflags.theorem);
      MiningConfig config;
      config.theorem = id;
      config.params = mflags.params(id);
      if (id == TheoremId::LONGCYC_LW && !config.params.d) {
        throw Error(ErrorCode::MissingParam, "LONGCYC_LW needs --d when mining");
      }
      config.n_min = n_min;
      config.n_max = n_max;
      config.palette_max = palette_max;
      config.mode = mode == "random" ? MiningMode::Random : MiningMode::Exhaustive;
      config.trials = mine_trials;
      config.edge_probability = mine_p;
      config.seed = resolve_seed(mine_seed, seed);
      config.budget = budget_from(mbudget);
      config.jobs = jobs;
      const MiningReport r = mine_counterexamples(config);
      write_output(dump(report_json(r, timing)), out_path);
      std::cerr << to_string(id) << ": scanned " << r.instances << " instances, "
                << r.hypothesis_met << " met the hypothesis, " << r.violations.size()
                << " violations\n";
      return verdict_exit(r.violations.size(), r.indeterminate);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
