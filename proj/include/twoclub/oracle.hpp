#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "twoclub/graph.hpp"
#include "twoclub/instance.hpp"

namespace twoclub {

/// Thrown when an oracle input exceeds its enumeration guard.
class OracleRefused : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kOracleMaxVertices = 20;
inline constexpr std::uint64_t kOracleMaxSubsets = 10'000'000;

/// Adjacency of the alive vertices as bit rows; bit i is the i-th alive id.
struct BitGraph {
  std::vector<VertexId> ids;
  std::vector<std::uint64_t> adj;

  explicit BitGraph(const Graph& g);
  std::size_t size() const noexcept { return ids.size(); }
};

/// True iff the subgraph induced by `keep` has no two vertices at distance 3.
bool is_2club_cluster_mask(std::span<const std::uint64_t> adj,
                           std::uint64_t keep);

/// Minimum-weight deletion set avoiding `permanent`, by enumeration in
/// increasing (weight, subset) order. Empty `w` means unit weights.
/// nullopt when the permanent set alone makes the instance unsolvable.
std::optional<Solution> brute_force_2cvd(
    const Graph& g, std::span<const Weight> w = {},
    std::span<const VertexId> permanent = {});

/// Unit-weight decision version: is there a deletion set of size <= k?
/// Guarded by the number of subsets, not by n.
bool brute_force_2cvd_within(const Graph& g, std::size_t k);

/// Can at most k edge insertions or deletions make `g` a 2-club cluster graph?
bool brute_force_2cc_editing(const Graph& g, std::size_t k);

/// Size of a minimum dominating set.
std::size_t brute_force_dominating_set(const Graph& g);

}  // namespace twoclub
