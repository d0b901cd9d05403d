#pragma once

#include <span>
#include <vector>

#include "twoclub/instance.hpp"

namespace twoclub {

/// Components larger than this make LB2 report 0.
inline constexpr std::size_t kLb2MaxComponent = 25;

/// The greedy capacity-respecting packing behind LB1. Start vertices are
/// taken by (degree, id); from each, the restricted P4 with the smallest
/// degree sum (then smallest (t, u, v)) is packed until s runs out of
/// capacity or no P4 with spare capacity remains.
std::vector<RestrictedP4> lb1_packing(const Instance& inst);
Weight lb1_disjoint_p4_packing(const Instance& inst);

/// Heaviest vertex subset of `comp` inducing a subgraph of diameter <= 2.
struct Club {
  std::vector<VertexId> vertices;
  Weight weight = 0;
};
Club max_weight_2club(const Graph& g, std::span<const Weight> w,
                      std::span<const VertexId> comp);

/// Lightest vertex set whose removal disconnects the component `comp`;
/// kInfiniteWeight when `comp` induces a clique.
Weight min_vertex_cut(const Graph& g, std::span<const Weight> w,
                      std::span<const VertexId> comp);

/// Sum over components of min(w(C \ club), min cut); 2-club components
/// contribute 0, as do components above kLb2MaxComponent.
Weight lb2_cut_bound(const Instance& inst);

}  // namespace twoclub
