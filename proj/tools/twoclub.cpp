// twoclub: command-line front end for the 2-club cluster vertex deletion
// solver, generators, ILP export and benchmark harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "twoclub/bench.hpp"
#include "twoclub/gen.hpp"
#include "twoclub/ilp.hpp"
#include "twoclub/io.hpp"
#include "twoclub/oracle.hpp"
#include "twoclub/solver.hpp"

namespace {

using namespace twoclub;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTimeout = 2;

struct SolverFlags {
  std::string config_path;
  std::string rules;
  std::string lbs;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> branch_limit;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON solver configuration")
        ->check(CLI::ExistingFile);
    app->add_option("--rules", rules, "enabled rules, e.g. rr1,rr3 (or all/none)");
    app->add_option("--lb", lbs, "enabled lower bounds, e.g. lb1,lb2 (or all/none)");
    app->add_option("--time-limit", time_limit, "seconds per solve");
    app->add_option("--branch-limit", branch_limit, "maximum branching nodes per solve");
  }

  SolverConfig build() const {
    SolverConfig c;
    if (!config_path.empty()) apply_config_json(c, read_file(config_path));
    if (!rules.empty()) c.rules = parse_rule_list(rules);
    if (!lbs.empty()) apply_lb_list(c, lbs);
    if (time_limit) c.time_limit_seconds = *time_limit;
    if (branch_limit) c.branch_limit = *branch_limit;
    return c;
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

std::string label_of(const LabeledGraph& g, VertexId v) {
  return v < g.labels.size() ? g.labels[v] : std::to_string(v);
}

int run_solve(const std::string& input, std::optional<Weight> k,
              const SolverFlags& flags) {
  const SolverConfig config = flags.build();
  LabeledGraph lg = load_graph(input);
  SolveResult res = k ? solve_within(Instance(lg.graph, *k), config)
                      : solve_minimum(lg.graph, config);
  const SolveStats& st = res.stats;
  std::cout << "n " << lg.graph.num_vertices() << " m " << lg.graph.num_edges() << '\n';
  if (res.timed_out) {
    std::cout << "status timeout\nlower_bound " << res.lower_bound << '\n';
  } else if (!res.solution) {
    std::cout << "status no-solution\n";
  } else {
    std::cout << "status solved\ncost " << res.solution->cost << "\ndeleted";
    for (VertexId v : res.solution->deleted) std::cout << ' ' << label_of(lg, v);
    std::cout << '\n';
  }
  std::cout << "branches " << st.branches << "\nnodes " << st.nodes << "\nlb_root "
            << st.lb_root << "\ntime_ms " << st.elapsed_ms << '\n';
  for (std::size_t r = 0; r < kNumRules; ++r)
    std::cout << rule_name(r) << ' ' << st.rule_applications[r] << '\n';
  return res.timed_out ? kExitTimeout : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for 2-club cluster vertex deletion"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve one graph to optimality");
  std::string solve_input;
  std::optional<Weight> solve_k;
  SolverFlags solve_flags;
  solve->add_option("input", solve_input, "edge-list file or fixture:<name>")->required();
  solve->add_option("--k", solve_k, "decide whether a solution of cost <= k exists");
  solve_flags.attach(solve);

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  auto* gen_fixture = gen->add_subcommand("fixture", "a named fixture graph");
  std::string fixture_name;
  gen_fixture->add_option("name", fixture_name)->required();
  auto* gen_gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  std::size_t gnp_n = 10;
  double gnp_p = 0.5;
  std::uint64_t seed = 1;
  gen_gnp->add_option("--n", gnp_n)->required();
  gen_gnp->add_option("--p", gnp_p)->required()->check(CLI::Range(0.0, 1.0));
  gen_gnp->add_option("--seed", seed);
  auto* gen_compose = gen->add_subcommand("compose", "OR-composition of instances");
  std::vector<std::string> compose_inputs;
  Weight compose_k = 0;
  gen_compose->add_option("inputs", compose_inputs)->required();
  gen_compose->add_option("--k", compose_k, "shared budget")->required();
  auto* gen_ds = gen->add_subcommand("ds-editing", "dominating set to editing instance");
  std::string ds_input;
  gen_ds->add_option("input", ds_input)->required();
  for (auto* sub : {gen_fixture, gen_gnp, gen_compose, gen_ds}) sub->fallthrough();

  // convert
  auto* convert = app.add_subcommand("convert", "threshold a weighted edge list");
  std::string convert_input, convert_out;
  double percent = 100;
  convert->add_option("input", convert_input, "\"u v w\" file")->required();
  convert->add_option("-c,--percent", percent, "keep this percentage of edges")
      ->required()
      ->check(CLI::Range(0.0, 100.0));
  convert->add_option("-o,--output", convert_out);

  // lp
  auto* lp = app.add_subcommand("lp", "export the ILP model in LP format");
  std::string lp_input, lp_out;
  bool lp_weighted = false;
  lp->add_option("input", lp_input)->required();
  lp->add_option("-o,--output", lp_out);
  lp->add_flag("--weighted", lp_weighted, "weighted objective");

  // bench
  auto* bench = app.add_subcommand("bench", "solve a batch and print CSV");
  std::vector<std::string> bench_inputs;
  std::string bench_out;
  bool bench_fixtures = false, no_time = false;
  unsigned threads = 1;
  SolverFlags bench_flags;
  bench->add_option("inputs", bench_inputs, "edge-list files or fixture:<name>");
  bench->add_flag("--fixtures", bench_fixtures, "append the built-in fixture set");
  bench->add_flag("--no-time", no_time, "write NA for time_ms (reproducible output)");
  bench->add_option("--threads", threads, "parallel solves")->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bench_out);
  bench_flags.attach(bench);

  // oracle (debugging)
  auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
  oracle->group("");
  std::string oracle_kind, oracle_input;
  std::size_t oracle_k = 0;
  oracle->add_option("kind", oracle_kind)
      ->required()
      ->check(CLI::IsMember({"2cvd", "editing", "ds"}));
  oracle->add_option("input", oracle_input)->required();
  oracle->add_option("--k", oracle_k, "budget for editing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return run_solve(solve_input, solve_k, solve_flags);

    if (*gen) {
      LabeledGraph g;
      if (*gen_fixture) {
        g = fixture(fixture_name);
      } else if (*gen_gnp) {
        g.graph = gnp(gnp_n, gnp_p, seed);
        for (std::size_t v = 0; v < gnp_n; ++v) g.labels.push_back(std::to_string(v));
      } else if (*gen_compose) {
        std::vector<std::pair<Graph, Weight>> parts;
        for (const auto& in : compose_inputs) parts.emplace_back(load_graph(in).graph, compose_k);
        ComposedInstance c = cross_compose(parts);
        std::cerr << "k' = " << c.k << '\n';
        g = std::move(c.graph);
      } else {
        g = ds_to_editing(load_graph(ds_input).graph);
      }
      emit(write_edge_list(g), gen_out);
      return kExitOk;
    }

    if (*convert) {
      emit(write_edge_list(threshold_convert(read_file(convert_input), percent)),
           convert_out);
      return kExitOk;
    }

    if (*lp) {
      LabeledGraph g = load_graph(lp_input);
      IlpModel model = build_model(Instance(g.graph), lp_weighted);
      if (lp_out.empty())
        std::cout << to_lp_text(model);
      else
        write_lp(model, lp_out);
      return kExitOk;
    }

    if (*bench) {
      if (bench_fixtures)
        for (const auto& name : fixture_names()) bench_inputs.push_back("fixture:" + name);
      BatchResult r = run_batch(bench_inputs, bench_flags.build(),
                                {.threads = threads, .record_time = !no_time});
      emit(r.csv, bench_out);
      if (r.errors) return kExitUsage;
      return r.timeouts ? kExitTimeout : kExitOk;
    }

    if (*oracle) {
      Graph g = load_graph(oracle_input).graph;
      if (oracle_kind == "2cvd") {
        auto sol = brute_force_2cvd(g);
        std::cout << (sol ? sol->cost : -1) << '\n';
      } else if (oracle_kind == "editing") {
        std::cout << (brute_force_2cc_editing(g, oracle_k) ? "yes" : "no") << '\n';
      } else {
        std::cout << brute_force_dominating_set(g) << '\n';
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
