#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

/// Directed network with integer capacities, stored as paired residual arcs.
class FlowNetwork {
 public:
  struct Arc {
    std::size_t to;
    Weight cap;
    std::size_t rev;  // index of the reverse arc in arcs(to)
  };

  FlowNetwork() = default;
  FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink);

  std::size_t num_nodes() const noexcept { return out_.size(); }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  std::size_t add_node();
  void add_arc(std::size_t from, std::size_t to, Weight cap);
  std::span<const Arc> arcs(std::size_t node) const { return out_[node]; }
  std::size_t num_arcs() const noexcept { return arc_count_; }

  /// Layers D1, D2, D3 when built by build_layered_network.
  std::array<std::vector<VertexId>, 3> layers;

 private:
  friend struct FlowSolver;
  std::vector<std::vector<Arc>> out_;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
  std::size_t arc_count_ = 0;
};

/// The three-layer network around `v`: every vertex u at distance 1..3 is
/// split into u_in -> u_out with capacity w(u); the source feeds every D1
/// u_in, consecutive layers are joined u_out -> x_in along graph edges, and
/// every D3 u_out drains into the sink. Unbounded arcs carry Σw + 1.
///
/// A unit of flow runs along v-u1-u2-u3 with u_i in D_i. Those are
/// consecutive edges, and dist(v, u3) = 3 forbids the chords v-u2, v-u3 and
/// u1-u3, so every such path is a restricted P4.
FlowNetwork build_layered_network(const Graph& g, std::span<const Weight> w,
                                  VertexId v);

struct MaxFlowResult {
  Weight value = 0;
  /// Nodes reachable from the source in the final residual network.
  std::vector<char> source_side;
};

/// Dinic's algorithm on a private copy of `net`.
MaxFlowResult max_flow_with_cut(const FlowNetwork& net);
Weight max_flow(const FlowNetwork& net);

/// Total capacity of original arcs leaving `side`.
Weight cut_capacity(const FlowNetwork& net, std::span<const char> side);

}  // namespace twoclub
