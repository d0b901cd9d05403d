#include <doctest.h>

#include <random>

#include "support.hpp"
#include "twoclub/gen.hpp"
#include "twoclub/oracle.hpp"

using namespace twoclub;
using namespace twoclub::testing;

namespace {

Solution named(const LabeledGraph& f, std::initializer_list<const char*> names) {
  Solution s;
  for (const char* n : names) s.deleted.push_back(f.id(n));
  std::sort(s.deleted.begin(), s.deleted.end());
  s.cost = static_cast<Weight>(s.deleted.size());
  return s;
}

}  // namespace

TEST_CASE("verify examples") {
  const Instance p4(path_graph(4));
  CHECK(verify(p4, Solution{{0}, 1}));
  CHECK_FALSE(verify(p4, Solution{{}, 0}));

  const LabeledGraph f = fixture("fig4");
  const Instance fig4(f.graph);
  CHECK(verify(fig4, named(f, {"e", "j"})));
  CHECK(verify(fig4, named(f, {"i", "k"})));
  CHECK_FALSE(verify(fig4, named(f, {"f"})));

  // The brute-force mask check says the same about {f}.
  const BitGraph bg(f.graph);
  std::uint64_t keep = (std::uint64_t{1} << bg.size()) - 1;
  keep &= ~(std::uint64_t{1} << f.id("f"));
  CHECK_FALSE(is_2club_cluster_mask(bg.adj, keep));
}

TEST_CASE("verify rejects malformed solutions") {
  const Graph p4 = path_graph(4);
  const VertexId perm[] = {0};
  const Instance inst(p4, {2, 1, 1, 1}, perm, Weight{3});
  CHECK_FALSE(verify(inst, Solution{{0}, 2}));      // permanent
  CHECK_FALSE(verify(inst, Solution{{3}, 2}));      // wrong cost
  CHECK_FALSE(verify(inst, Solution{{3, 3}, 2}));   // duplicate
  CHECK(verify(inst, Solution{{3}, 1}));
  CHECK(verify(inst, Solution{{1, 2, 3}, 3}));
  const Instance tight(p4, {1, 1, 1, 1}, {}, Weight{0});
  CHECK_FALSE(verify(tight, Solution{{3}, 1}));     // over budget
}

TEST_CASE("budget accounting and infeasibility sentinel") {
  Graph g(2);
  Instance a(g, {3, 1}, {}, Weight{5});
  a.delete_vertex(0);
  CHECK(a.budget() == 2);
  CHECK_FALSE(a.infeasible());

  Instance b(g, {3, 1}, {}, Weight{2});
  b.delete_vertex(0);
  CHECK(b.infeasible());

  Instance c(g);
  CHECK_FALSE(c.bounded());
  c.delete_vertex(1);
  CHECK_FALSE(c.bounded());
  CHECK_FALSE(c.infeasible());
}

TEST_CASE("mark_permanent is idempotent; deleting a permanent vertex throws") {
  Instance inst(path_graph(3));
  CHECK(inst.mark_permanent(1));
  CHECK_FALSE(inst.mark_permanent(1));
  CHECK(inst.permanent(1));
  CHECK_THROWS_AS(inst.delete_vertex(1), std::logic_error);
  inst.delete_vertex(0);
  CHECK_THROWS_AS(inst.delete_vertex(0), std::logic_error);
}

TEST_CASE("constructor validates weights and permanent set") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(Instance(g, {1, 0, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Instance(g, {1, 1}, {}), std::invalid_argument);
  Graph dead = g;
  dead.remove_vertex(2);
  const VertexId perm[] = {2};
  CHECK_THROWS_AS(Instance(dead, {1, 1, 1}, perm), std::invalid_argument);
}

TEST_CASE("merge and lift") {
  Instance inst(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  inst.mark_permanent(2);
  inst.merge_into(1, 2);
  CHECK(inst.weight(1) == 2);
  CHECK(inst.permanent(1));
  CHECK(inst.state(2) == VertexState::kMerged);
  CHECK(inst.representative(2) == 1);
  const VertexId one[] = {1};
  CHECK(inst.lift(one) == std::vector<VertexId>{1, 2});
}

TEST_CASE("solution_since reports lifted deletions at original weights") {
  Instance inst(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  inst.merge_into(1, 2);
  const std::size_t mark = inst.deletions().size();
  inst.delete_vertex(1);
  const Solution s = inst.solution_since(mark);
  CHECK(s.deleted == std::vector<VertexId>{1, 2});
  CHECK(s.cost == 2);

  inst.add_vertex(1, false);
  inst.delete_vertex(4);
  CHECK_THROWS_AS(inst.solution_since(mark), std::logic_error);
}

TEST_CASE("rollback restores the instance exactly") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 200; ++round) {
    Instance inst = random_instance(rng, 3, 12, 4, 0.2);
    inst.set_budget(Weight{10});
    const auto vs = inst.graph().vertices();
    const auto edges = inst.graph().num_edges();
    const std::vector<Weight> w(inst.weights().begin(), inst.weights().end());
    const auto perm = inst.permanent_vertices();
    const auto budget = inst.budget();
    const auto mark = inst.checkpoint();

    for (int step = 0; step < 6; ++step) {
      const auto alive = inst.graph().vertices();
      if (alive.size() < 2) break;
      const VertexId a = alive[rng() % alive.size()];
      const VertexId b = alive[rng() % alive.size()];
      switch (rng() % 6) {
        case 0:
          if (!inst.permanent(a)) inst.delete_vertex(a);
          break;
        case 1: inst.discard_vertex(a); break;
        case 2: if (a != b) inst.merge_into(a, b); break;
        case 3: inst.mark_permanent(a); break;
        case 4: inst.set_budget(inst.budget().value_or(0) - 1); break;
        case 5: {
          const VertexId c = inst.add_vertex(1, true);
          inst.add_edge(a, c);
          if (a != b) inst.add_edge(a, b);
          break;
        }
      }
    }
    inst.rollback(mark);
    CHECK(inst.graph().vertices() == vs);
    CHECK(inst.graph().num_edges() == edges);
    CHECK(inst.graph().id_bound() == w.size());
    CHECK(std::equal(w.begin(), w.end(), inst.weights().begin(), inst.weights().end()));
    CHECK(inst.permanent_vertices() == perm);
    CHECK(inst.budget() == budget);
    CHECK(inst.deletions().empty());
    for (VertexId v : vs) CHECK(inst.state(v) == VertexState::kAlive);
  }
}

TEST_CASE("weight_of sums current weights") {
  const Instance inst(path_graph(3), {2, 3, 4}, {});
  const VertexId vs[] = {0, 2};
  CHECK(weight_of(inst, vs) == 6);
}
