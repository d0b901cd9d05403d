#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "twoclub/gen.hpp"
#include "twoclub/oracle.hpp"
#include "twoclub/solver.hpp"

using namespace twoclub;
using namespace twoclub::testing;

TEST_CASE("select_branching_p4 examples") {
  const Instance p4(path_graph(4));
  CHECK(select_branching_p4(p4) == RestrictedP4{0, 1, 2, 3});

  // Two disjoint P4s; the second holds a permanent vertex.
  const Graph two = disjoint_union(path_graph(4), path_graph(4));
  const VertexId perm[] = {6};
  const Instance with_perm(two, std::vector<Weight>(8, 1), perm);
  CHECK(select_branching_p4(with_perm) == RestrictedP4{4, 5, 6, 7});
  CHECK(select_branching_p4(with_perm, P4Policy::kFirst) == RestrictedP4{0, 1, 2, 3});

  const Instance heavy(two, {1, 1, 1, 1, 1, 1, 1, 5}, {});
  CHECK(select_branching_p4(heavy) == RestrictedP4{4, 5, 6, 7});
  const Instance flat(two);
  CHECK(select_branching_p4(flat) == RestrictedP4{0, 1, 2, 3});
}

TEST_CASE("solve_within examples") {
  const SolveResult cluster = solve_within(Instance(complete_graph(5), Weight{0}));
  REQUIRE(cluster.solution.has_value());
  CHECK(cluster.solution->cost == 0);
  CHECK(cluster.solution->deleted.empty());

  CHECK_FALSE(solve_within(Instance(path_graph(4), Weight{0})).solution.has_value());

  const LabeledGraph f = fixture("fig4");
  const Instance fig4(f.graph, Weight{2});
  const SolveResult r = solve_within(fig4);
  REQUIRE(r.solution.has_value());
  CHECK(r.solution->cost == 2);
  CHECK(verify(fig4, *r.solution));
  CHECK_FALSE(solve_within(Instance(f.graph, Weight{1})).solution.has_value());
}

TEST_CASE("component scheduling examples") {
  const Graph clique_p4 = disjoint_union(complete_graph(4), path_graph(4));
  const SolveResult a = solve_within(Instance(clique_p4, Weight{1}));
  REQUIRE(a.solution.has_value());
  CHECK(a.solution->cost == 1);

  const Graph two = disjoint_union(path_graph(4), path_graph(4));
  CHECK_FALSE(solve_within(Instance(two, Weight{1})).solution.has_value());
  const SolveResult b = solve_within(Instance(two, Weight{2}));
  REQUIRE(b.solution.has_value());
  CHECK(b.solution->cost == 2);
  CHECK(verify(Instance(two), *b.solution));

  SolveStats stats;
  Instance inst(disjoint_union(disjoint_union(path_graph(4), cycle_graph(6)), path_graph(5)),
                Weight{4});
  const auto sol = solve_components(inst, SolverConfig{}, stats);
  REQUIRE(sol.has_value());
  CHECK(sol->cost == 4);
}

TEST_CASE("solve_minimum examples") {
  CHECK(solve_minimum(cycle_graph(6)).solution->cost == 2);
  CHECK(solve_minimum(fixture("fig4").graph).solution->cost == 2);
  CHECK(solve_minimum(disjoint_union(star_graph(4), cycle_graph(5))).solution->cost == 0);
  CHECK(solve_minimum(Graph{}).solution->cost == 0);
  const SolveResult p4 = solve_minimum(path_graph(4));
  CHECK(p4.solution->cost == 1);
  CHECK(p4.lower_bound == 1);
  CHECK(p4.stats.final_k == 1);
}

TEST_CASE("solve_minimum matches the oracle on weighted instances with F") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 800; ++round) {
    const Instance inst = random_instance(rng, 2, 10, 3, 0.2);
    const auto perm = inst.permanent_vertices();
    const auto opt = brute_force_2cvd(inst.graph(), inst.weights(), perm);
    const SolveResult r = solve_minimum(inst);
    REQUIRE(r.solution.has_value() == opt.has_value());
    if (!opt) continue;
    CHECK(r.solution->cost == opt->cost);
    CHECK(verify(inst, *r.solution));
  }
}

TEST_CASE("policies and disabled features keep exactness") {
  std::mt19937_64 rng(62);
  SolverConfig first;
  first.policy = P4Policy::kFirst;
  SolverConfig bare;
  bare.rules = kNoRules;
  bare.lb1 = false;
  bare.permanent_branching = false;
  SolverConfig lb2;
  lb2.lb2 = true;
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_graph(rng, 4, 11);
    const Weight opt = brute_force_2cvd(g)->cost;
    for (const SolverConfig& cfg : {first, bare, lb2}) {
      const SolveResult r = solve_minimum(g, cfg);
      CHECK(r.solution->cost == opt);
      CHECK(verify(Instance(g), *r.solution));
    }
  }
}

TEST_CASE("budget is monotone") {
  std::mt19937_64 rng(63);
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_graph(rng, 4, 11);
    const Weight opt = solve_minimum(g).solution->cost;
    bool solvable = false;
    for (Weight k = 0; k <= 5; ++k) {
      const SolveResult r = solve_within(Instance(g, k));
      if (solvable) REQUIRE(r.solution.has_value());
      CHECK(r.solution.has_value() == (opt <= k));
      if (!r.solution) continue;
      solvable = true;
      CHECK(r.solution->cost >= opt);
      CHECK(r.solution->cost <= k);
      CHECK(verify(Instance(g, k), *r.solution));
    }
  }
}

TEST_CASE("branch count stays within 4^k") {
  std::mt19937_64 rng(64);
  for (int round = 0; round < 500; ++round) {
    const Graph g = random_graph(rng, 5, 13);
    const SolveResult r = solve_minimum(g);
    CHECK(static_cast<double>(r.stats.branches) <=
          std::pow(4.0, static_cast<double>(r.solution->cost)));
    CHECK(r.stats.nodes >= r.stats.branches);
  }
}

TEST_CASE("branch limit yields a timeout result") {
  SolverConfig cfg;
  cfg.branch_limit = 1;
  cfg.rules = kNoRules;
  cfg.lb1 = false;
  const SolveResult r = solve_minimum(cycle_graph(9), cfg);
  CHECK(r.timed_out);
  CHECK_FALSE(r.solution.has_value());
}

TEST_CASE("results are deterministic") {
  std::mt19937_64 rng(65);
  for (int round = 0; round < 50; ++round) {
    const Graph g = random_graph(rng, 6, 14);
    const SolveResult a = solve_minimum(g);
    const SolveResult b = solve_minimum(g);
    CHECK(a.solution->deleted == b.solution->deleted);
    CHECK(a.stats.branches == b.stats.branches);
    CHECK(a.stats.rule_applications == b.stats.rule_applications);
  }
}
