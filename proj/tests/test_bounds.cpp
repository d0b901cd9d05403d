#include <doctest.h>

#include <random>

#include "support.hpp"
#include "twoclub/bounds.hpp"
#include "twoclub/gen.hpp"
#include "twoclub/oracle.hpp"

using namespace twoclub;
using namespace twoclub::testing;

namespace {

Graph induced(const Graph& g, std::uint32_t mask) {
  Graph h = g;
  for (VertexId v : g.vertices())
    if (!((mask >> v) & 1U)) h.remove_vertex(v);
  return h;
}

Weight brute_max_2club(const Graph& g, std::span<const Weight> w) {
  Weight best = 0;
  const std::size_t n = g.id_bound();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const Graph h = induced(g, mask);
    const auto comps = components(h);
    if (comps.size() != 1 || !is_2club_component(h, comps[0])) continue;
    Weight total = 0;
    for (VertexId v : comps[0]) total += w[v];
    best = std::max(best, total);
  }
  return best;
}

Weight brute_min_cut(const Graph& g, std::span<const Weight> w) {
  Weight best = kInfiniteWeight;
  const std::size_t n = g.id_bound();
  const std::uint32_t all = (1U << n) - 1;
  for (std::uint32_t cut = 0; cut < (1U << n); ++cut) {
    if (components(induced(g, all & ~cut)).size() < 2) continue;
    Weight total = 0;
    for (VertexId v = 0; v < n; ++v)
      if ((cut >> v) & 1U) total += w[v];
    best = std::min(best, total);
  }
  return best;
}

}  // namespace

TEST_CASE("lb1 examples") {
  CHECK(lb1_disjoint_p4_packing(Instance(disjoint_union(complete_graph(4), star_graph(3)))) == 0);
  CHECK(lb1_disjoint_p4_packing(Instance(fixture("fig5").graph)) == 4);
  CHECK(lb1_disjoint_p4_packing(Instance(path_graph(4))) == 1);
  CHECK(lb1_disjoint_p4_packing(Instance(cycle_graph(6))) == 1);
}

TEST_CASE("lb1 on the arm gadget packs a single P4") {
  // All arm P4s share the hub, whose counter is 1, so the bound is 1 and
  // the optimum (delete the hub) is 1 as well.
  for (std::size_t k : {1, 2, 3, 4}) {
    const Graph g = fig3(k).graph;
    CHECK(lb1_disjoint_p4_packing(Instance(g)) == 1);
    CHECK(brute_force_2cvd(g)->cost == 1);
  }
}

TEST_CASE("lb1 packing respects capacities and picks restricted P4s") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 500; ++round) {
    const Instance inst = random_instance(rng, 3, 12, 3, 0.2);
    const auto packed = lb1_packing(inst);
    std::vector<Weight> used(inst.graph().id_bound(), 0);
    for (const auto& p : packed) {
      CHECK(is_restricted_p4(inst.graph(), p));
      for (VertexId x : p.vertices()) ++used[x];
    }
    for (VertexId v : inst.graph().vertices()) CHECK(used[v] <= inst.weight(v));
    CHECK(lb1_packing(inst) == packed);
  }
}

TEST_CASE("lb1 never exceeds the number of restricted P4s under unit weights") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 500; ++round) {
    const Graph g = random_graph(rng, 3, 12);
    CHECK(static_cast<std::size_t>(lb1_disjoint_p4_packing(Instance(g))) <=
          enumerate_restricted_p4s(g).size());
  }
}

TEST_CASE("lb2 examples") {
  CHECK(lb2_cut_bound(Instance(star_graph(5))) == 0);
  CHECK(lb2_cut_bound(Instance(path_graph(4))) == 1);
  CHECK(lb2_cut_bound(Instance(cycle_graph(6))) == 2);
  CHECK(lb2_cut_bound(Instance(disjoint_union(path_graph(4), cycle_graph(6)))) == 3);
  const std::vector<Weight> w(6, 1);
  const Graph c6 = cycle_graph(6);
  CHECK(max_weight_2club(c6, w, c6.vertices()).weight == 3);
  CHECK(min_vertex_cut(c6, w, c6.vertices()) == 2);
  const Graph k4 = complete_graph(4);
  CHECK(min_vertex_cut(k4, std::vector<Weight>(4, 1), k4.vertices()) == kInfiniteWeight);
}

TEST_CASE("lb2 is zero on components above the size gate") {
  const Graph big = path_graph(kLb2MaxComponent + 1);
  CHECK(lb2_cut_bound(Instance(big)) == 0);
}

TEST_CASE("max 2-club and min cut match brute force") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 150; ++round) {
    const Graph g = random_graph(rng, 2, 10);
    if (components(g).size() != 1) continue;
    std::vector<Weight> w(g.id_bound());
    for (auto& x : w) x = 1 + static_cast<Weight>(rng() % 4);
    const Club club = max_weight_2club(g, w, g.vertices());
    CHECK(club.weight == brute_max_2club(g, w));
    Weight sum = 0;
    for (VertexId v : club.vertices) sum += w[v];
    CHECK(sum == club.weight);
    const Graph h = induced(g, [&] {
      std::uint32_t m = 0;
      for (VertexId v : club.vertices) m |= 1U << v;
      return m;
    }());
    CHECK(is_2club_cluster_graph(h));
    CHECK(components(h).size() == 1);
    CHECK(min_vertex_cut(g, w, g.vertices()) == brute_min_cut(g, w));
  }
}

TEST_CASE("lower bounds are sound against the weighted oracle") {
  std::mt19937_64 rng(54);
  for (int round = 0; round < 1500; ++round) {
    const Instance inst = random_instance(rng, 2, 9, 3, 0.2);
    const auto perm = inst.permanent_vertices();
    const auto opt = brute_force_2cvd(inst.graph(), inst.weights(), perm);
    if (!opt) continue;
    CHECK(lb1_disjoint_p4_packing(inst) <= opt->cost);
    CHECK(lb2_cut_bound(inst) <= opt->cost);
  }
}
