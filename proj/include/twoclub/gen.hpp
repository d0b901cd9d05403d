#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

/// A graph plus one display name per vertex id. Names are for humans only.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  /// Id of the vertex named `label`; throws std::out_of_range if absent.
  VertexId id(std::string_view label) const;
};

/// Named test graphs: petersen_minus_cd, fig2a, fig2b, fig3(k) (also plain
/// "fig3", meaning k = 2), fig4, fig5, p4, c6. Throws std::invalid_argument
/// for anything else.
LabeledGraph fixture(std::string_view name);
/// The names `bench` runs by default, in order.
std::vector<std::string> fixture_names();

/// v plus k + 1 arms v-a_i-b_i-c_i.
LabeledGraph fig3(std::size_t k);

/// G(n, p). Each pair i < j, in order, draws one 64-bit word from
/// mt19937_64(seed) and becomes an edge when the word is below p * 2^64.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

struct ComposedInstance {
  LabeledGraph graph;
  Weight k = 0;
};

/// OR-composition of 2CVD instances sharing one budget. The list is padded
/// with copies of its last entry up to a power of two ℓ and k' = k + log2 ℓ.
/// Every internal node of the balanced composition tree adds two adjacent
/// centers with k' + 1 private leaves each; a center is adjacent to every
/// vertex built for its half, deeper gadgets included.
ComposedInstance cross_compose(std::span<const std::pair<Graph, Weight>> parts);

/// Exact diameter of a connected graph; kBeyond if disconnected or empty.
std::size_t diameter(const Graph& g);

/// Dominating Set to 2-Club Cluster Editing. Vertex order: v_1..v_n, x, then
/// the clique c_{i,j} row by row. Requires diameter exactly 2.
LabeledGraph ds_to_editing(const Graph& g);

/// One representative of every connected graph with 1..max_n vertices
/// (max_n <= 8), grouped by vertex count.
std::vector<Graph> connected_graph_catalog(std::size_t max_n);

}  // namespace twoclub
