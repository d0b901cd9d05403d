#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "support.hpp"
#include "twoclub/gen.hpp"
#include "twoclub/ilp.hpp"

using namespace twoclub;
using namespace twoclub::testing;

namespace {

// Unordered induced P4s counted from ordered 4-tuples.
std::size_t brute_induced_p4s(const Graph& g) {
  const auto vs = g.vertices();
  std::size_t ordered = 0;
  for (VertexId s : vs)
    for (VertexId t : vs)
      for (VertexId u : vs)
        for (VertexId v : vs) {
          if (std::set<VertexId>{s, t, u, v}.size() != 4) continue;
          if (g.adjacent(s, t) && g.adjacent(t, u) && g.adjacent(u, v) &&
              !g.adjacent(s, u) && !g.adjacent(t, v) && !g.adjacent(s, v))
            ++ordered;
        }
  return ordered / 2;
}

}  // namespace

TEST_CASE("model examples") {
  CHECK(build_model(disjoint_union(complete_graph(4), star_graph(3))).constraints.empty());

  const IlpModel p4 = build_model(path_graph(4));
  REQUIRE(p4.constraints.size() == 1);
  CHECK(p4.constraints[0].common.empty());
  CHECK(p4.constraints[0].rhs() == 1);
  CHECK(p4.variables == std::vector<VertexId>{0, 1, 2, 3});

  const LabeledGraph f = fixture("fig4");
  const IlpModel fig4 = build_model(f.graph);
  CHECK(fig4.constraints.size() == brute_induced_p4s(f.graph));
}

TEST_CASE("constraints list induced P4s with their common neighbors") {
  std::mt19937_64 rng(81);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_graph(rng, 2, 10);
    const IlpModel m = build_model(g);
    CHECK(m.constraints.size() == brute_induced_p4s(g));
    const std::size_t n = g.num_vertices();
    CHECK(m.constraints.size() <= n * n * n * n);
    for (const auto& c : m.constraints) {
      const auto [s, t, u, v] = c.path;
      CHECK(g.adjacent(s, t));
      CHECK(g.adjacent(t, u));
      CHECK(g.adjacent(u, v));
      CHECK_FALSE(g.adjacent(s, v));
      std::vector<VertexId> common;
      for (VertexId x : g.neighbors(s))
        if (g.adjacent(x, v)) common.push_back(x);
      CHECK(c.common == common);
      CHECK(c.rhs() == 1 - static_cast<long>(common.size()));
    }
  }
}

TEST_CASE("all-ones and all-zeros assignments") {
  std::mt19937_64 rng(82);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 1, 10);
    const std::vector<std::uint8_t> ones(g.id_bound(), 1), zeros(g.id_bound(), 0);
    CHECK(check_assignment(g, ones));
    CHECK(check_assignment(g, zeros) == is_2club_cluster_graph(g));
  }
}

TEST_CASE("feasible assignments are exactly the valid deletion sets (n <= 5)") {
  for (const Graph& g : connected_graph_catalog(5)) {
    const Instance inst(g);
    const std::size_t n = g.id_bound();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<std::uint8_t> x(n);
      Solution s;
      for (VertexId v = 0; v < n; ++v)
        if ((mask >> v) & 1U) {
          x[v] = 1;
          s.deleted.push_back(v);
        }
      s.cost = static_cast<Weight>(s.deleted.size());
      CHECK(check_assignment(g, x) == verify(inst, s));
    }
  }
}

TEST_CASE("partial assignments are rejected") {
  const Graph g = path_graph(4);
  const std::vector<std::uint8_t> short_x(3, 0), bad(4, 2);
  CHECK_THROWS_AS(check_assignment(g, short_x), std::invalid_argument);
  CHECK_THROWS_AS(check_assignment(g, bad), std::invalid_argument);
}

TEST_CASE("LP text") {
  const std::string p4 = to_lp_text(build_model(path_graph(4)));
  CHECK(p4.find("Minimize\n obj: v0 + v1 + v2 + v3\n") != std::string::npos);
  CHECK(p4.find(" p4_0: v0 + v1 + v2 + v3 >= 1\n") != std::string::npos);
  CHECK(p4.find("Binary\n v0 v1 v2 v3\n") != std::string::npos);
  CHECK(p4.ends_with("End\n"));

  // C5 plus a pendant: common neighbors move to the left with a minus sign.
  const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const IlpModel c4 = build_model(g);
  CHECK(c4.constraints.empty());

  const Graph kite = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}});
  const std::string text = to_lp_text(build_model(kite));
  CHECK(text.find(" - v") != std::string::npos);
  CHECK(text.find(">= 0") != std::string::npos);

  const VertexId perm[] = {1};
  const Instance inst(path_graph(4), {1, 3, 1, 1}, perm);
  const std::string weighted = to_lp_text(build_model(inst, true));
  CHECK(weighted.find("3 v1") != std::string::npos);
  CHECK(weighted.find("Bounds\n v1 = 0\n") != std::string::npos);
  CHECK(to_lp_text(build_model(inst, false)).find("3 v1") == std::string::npos);

  CHECK(to_lp_text(build_model(fixture("fig4").graph)) ==
        to_lp_text(build_model(fixture("fig4").graph)));
}

TEST_CASE("long rows wrap") {
  const std::string text = to_lp_text(build_model(cycle_graph(40)));
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) CHECK(line.size() <= 78);
}

TEST_CASE("write_lp writes the text and reports I/O failures") {
  const auto dir = std::filesystem::temp_directory_path() / "twoclub_ilp_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "p4.lp";
  const IlpModel m = build_model(path_graph(4));
  write_lp(m, path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == to_lp_text(m));
  CHECK_THROWS_AS(write_lp(m, dir / "missing" / "x.lp"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
