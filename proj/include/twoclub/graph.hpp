#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace twoclub {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::max();
inline constexpr std::uint8_t kBeyond = 0xFF;

/// Undirected simple graph with stable vertex ids.
///
/// Deleting a vertex only clears its alive bit, so a deletion followed by
/// `restore_vertex` in LIFO order brings back exactly the previous state.
/// Every query skips dead vertices. Neighbor lists are kept sorted, so all
/// iteration orders are deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// One past the largest id ever issued (alive or not).
  std::size_t id_bound() const noexcept { return adj_.size(); }
  std::size_t num_vertices() const noexcept { return alive_count_; }
  std::size_t num_edges() const noexcept { return edge_count_; }

  bool alive(VertexId v) const noexcept {
    return v < alive_.size() && alive_[v] != 0;
  }
  bool adjacent(VertexId u, VertexId v) const noexcept {
    return alive(u) && alive(v) && raw_adjacent(u, v);
  }
  std::size_t degree(VertexId v) const;

  /// Alive vertices in increasing id order.
  std::vector<VertexId> vertices() const;
  /// Alive neighbors of `v` in increasing id order.
  std::vector<VertexId> neighbors(VertexId v) const;

  template <class Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    for (VertexId u : adj_[v])
      if (alive_[u]) fn(u);
  }

  VertexId add_vertex();
  /// Returns false when the edge already exists. Self-loops and dead
  /// endpoints throw std::invalid_argument.
  bool add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  void remove_vertex(VertexId v);
  void restore_vertex(VertexId v);
  /// Drops the most recently added vertex; it must have no edges left.
  void pop_vertex();

 private:
  bool raw_adjacent(VertexId u, VertexId v) const noexcept {
    return (bits_[u][v >> 6] >> (v & 63)) & 1U;
  }
  void grow_rows();

  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::uint32_t> degree_;
  std::vector<char> alive_;
  std::size_t words_ = 0;
  std::size_t alive_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Capped single-source BFS result.
struct Distances {
  /// Indexed by VertexId; kBeyond for unreachable or farther than `cap`.
  std::vector<std::uint8_t> dist;
  /// Reached vertices in BFS order; layer i is
  /// reached[layer_begin[i], layer_begin[i + 1]).
  std::vector<VertexId> reached;
  std::vector<std::size_t> layer_begin;
  unsigned cap = 0;

  std::uint8_t operator[](VertexId v) const { return dist[v]; }
  std::span<const VertexId> layer(unsigned i) const;
};

/// Distances from `s` up to `cap`; throws std::invalid_argument if `s` is dead.
Distances bfs_dist(const Graph& g, VertexId s, unsigned cap);

/// All-pairs capped distances over the alive vertices at construction time.
class DistanceTable {
 public:
  DistanceTable(const Graph& g, unsigned cap);
  std::uint8_t at(VertexId u, VertexId v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> dist_;
};

/// An ordered path s-t-u-v with dist(s, v) = 3. Canonical orientation has s < v.
struct RestrictedP4 {
  VertexId s = 0, t = 0, u = 0, v = 0;

  std::array<VertexId, 4> vertices() const { return {s, t, u, v}; }
  RestrictedP4 canonical() const {
    return s < v ? *this : RestrictedP4{v, u, t, s};
  }
  auto operator<=>(const RestrictedP4&) const = default;
};

/// True iff `p` is a restricted P4 of the live graph.
bool is_restricted_p4(const Graph& g, const RestrictedP4& p);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);

/// `comp` must be a component of `g`; true iff its diameter is at most two.
bool is_2club_component(const Graph& g, std::span<const VertexId> comp);

/// True iff every component is a 2-club.
bool is_2club_cluster_graph(const Graph& g);

/// Calls `fn(p)` for every restricted P4 starting at `s` (any orientation),
/// in lexicographic (t, u, v) order. `fn` returns false to stop early; the
/// function then returns false as well.
template <class Fn>
bool for_each_restricted_p4_from(const Graph& g, const Distances& d, VertexId s,
                                 Fn&& fn) {
  // Sorted neighbor lists, not BFS layers, keep the order lexicographic.
  bool keep_going = true;
  g.for_each_neighbor(s, [&](VertexId t) {
    if (!keep_going) return;
    g.for_each_neighbor(t, [&](VertexId u) {
      if (!keep_going || d[u] != 2) return;
      g.for_each_neighbor(u, [&](VertexId v) {
        if (!keep_going || d[v] != 3) return;
        if (!fn(RestrictedP4{s, t, u, v})) keep_going = false;
      });
    });
  });
  return keep_going;
}

/// Calls `fn(p)` for every restricted P4 in canonical orientation, in
/// lexicographic order. Returns false if `fn` stopped the walk.
template <class Fn>
bool for_each_restricted_p4(const Graph& g, Fn&& fn) {
  for (VertexId s : g.vertices()) {
    Distances d = bfs_dist(g, s, 3);
    if (d.layer(3).empty()) continue;
    bool ok = for_each_restricted_p4_from(g, d, s, [&](const RestrictedP4& p) {
      return p.v < s || fn(p);
    });
    if (!ok) return false;
  }
  return true;
}

/// Some restricted P4, or nullopt iff `g` is a 2-club cluster graph.
/// Returns the lexicographically smallest canonical one.
std::optional<RestrictedP4> find_restricted_p4(const Graph& g);

/// Restricted P4s in canonical orientation and lexicographic order, at most
/// `limit` of them.
std::vector<RestrictedP4> enumerate_restricted_p4s(
    const Graph& g, std::size_t limit = std::numeric_limits<std::size_t>::max());

/// True iff some induced P4 s-t-u-v exists for the given endpoints.
bool has_induced_p4(const Graph& g, VertexId s, VertexId v);

/// w(N(s) ∩ N(v)) if an induced P4 from s to v exists, else kInfiniteWeight.
Weight robustness(const Graph& g, std::span<const Weight> w, VertexId s,
                  VertexId v);

/// True iff two neighbors of `b` are the endpoints of an induced P4.
bool is_bridge_vertex(const Graph& g, VertexId b);

/// Articulation points, sorted.
std::vector<VertexId> cut_vertices(const Graph& g);

/// Every unordered pair (u < v) with N[u] = N[v] or N(u) = N(v), sorted.
std::vector<std::pair<VertexId, VertexId>> twins(const Graph& g);

/// True iff `u` and `v` are open or closed twins in the live graph.
bool are_twins(const Graph& g, VertexId u, VertexId v);

}  // namespace twoclub
