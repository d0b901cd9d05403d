#include "twoclub/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace twoclub {

Graph::Graph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex();
}

std::size_t Graph::degree(VertexId v) const {
  if (!alive(v)) throw std::invalid_argument("degree of dead vertex");
  return degree_[v];
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_count_);
  for (VertexId v = 0; v < alive_.size(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(degree_[v]);
  for_each_neighbor(v, [&](VertexId u) { out.push_back(u); });
  return out;
}

void Graph::grow_rows() {
  std::size_t words = std::max<std::size_t>(1, words_ * 2);
  for (auto& row : bits_) row.resize(words, 0);
  words_ = words;
}

VertexId Graph::add_vertex() {
  auto id = static_cast<VertexId>(adj_.size());
  if (adj_.size() + 1 > words_ * 64) grow_rows();
  adj_.emplace_back();
  bits_.emplace_back(words_, 0);
  degree_.push_back(0);
  alive_.push_back(1);
  ++alive_count_;
  return id;
}

void Graph::pop_vertex() {
  if (adj_.empty()) throw std::logic_error("pop_vertex on empty graph");
  VertexId v = static_cast<VertexId>(adj_.size() - 1);
  if (!adj_[v].empty()) throw std::logic_error("pop_vertex on vertex with edges");
  if (alive_[v]) --alive_count_;
  adj_.pop_back();
  bits_.pop_back();
  degree_.pop_back();
  alive_.pop_back();
}

bool Graph::add_edge(VertexId u, VertexId v) {
  if (u == v)
    throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (!alive(u) || !alive(v))
    throw std::invalid_argument("edge endpoint is not an alive vertex");
  if (raw_adjacent(u, v)) return false;
  bits_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
  bits_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
  return true;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (u >= adj_.size() || v >= adj_.size() || !raw_adjacent(u, v))
    throw std::invalid_argument("remove_edge: no such edge");
  bits_[u][v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v][u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
  // degree_[x] counts alive neighbors of x, for dead x as well.
  if (alive_[v]) --degree_[u];
  if (alive_[u]) --degree_[v];
  if (alive_[u] && alive_[v]) --edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  if (!alive(v)) throw std::invalid_argument("remove_vertex: vertex not alive");
  for (VertexId u : adj_[v]) {
    --degree_[u];
    if (alive_[u]) --edge_count_;
  }
  alive_[v] = 0;
  --alive_count_;
}

void Graph::restore_vertex(VertexId v) {
  if (v >= alive_.size() || alive_[v])
    throw std::invalid_argument("restore_vertex: vertex not deleted");
  alive_[v] = 1;
  ++alive_count_;
  for (VertexId u : adj_[v]) {
    ++degree_[u];
    if (alive_[u]) ++edge_count_;
  }
}

std::span<const VertexId> Distances::layer(unsigned i) const {
  if (i + 1 >= layer_begin.size()) return {};
  return std::span<const VertexId>(reached).subspan(
      layer_begin[i], layer_begin[i + 1] - layer_begin[i]);
}

Distances bfs_dist(const Graph& g, VertexId s, unsigned cap) {
  if (!g.alive(s)) throw std::invalid_argument("bfs_dist: source not alive");
  Distances d;
  d.cap = cap;
  d.dist.assign(g.id_bound(), kBeyond);
  d.dist[s] = 0;
  d.reached.push_back(s);
  d.layer_begin = {0, 1};
  for (unsigned level = 1; level <= cap; ++level) {
    std::size_t from = d.layer_begin[level - 1];
    std::size_t to = d.layer_begin[level];
    for (std::size_t i = from; i < to; ++i) {
      g.for_each_neighbor(d.reached[i], [&](VertexId u) {
        if (d.dist[u] == kBeyond) {
          d.dist[u] = static_cast<std::uint8_t>(level);
          d.reached.push_back(u);
        }
      });
    }
    d.layer_begin.push_back(d.reached.size());
    if (d.reached.size() == to) break;
  }
  return d;
}

DistanceTable::DistanceTable(const Graph& g, unsigned cap)
    : n_(g.id_bound()), dist_(n_ * n_, kBeyond) {
  for (VertexId s : g.vertices()) {
    Distances d = bfs_dist(g, s, cap);
    std::copy(d.dist.begin(), d.dist.end(), dist_.begin() + s * n_);
  }
}

std::uint8_t DistanceTable::at(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("DistanceTable::at");
  return dist_[u * n_ + v];
}

bool is_restricted_p4(const Graph& g, const RestrictedP4& p) {
  const auto vs = p.vertices();
  for (VertexId x : vs)
    if (!g.alive(x)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j]) != (j == i + 1))
        return false;
  return bfs_dist(g, p.s, 3)[p.v] == 3;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.id_bound(), 0);
  for (VertexId root : g.vertices()) {
    if (seen[root]) continue;
    std::vector<VertexId> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      g.for_each_neighbor(comp[i], [&](VertexId u) {
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_2club_component(const Graph& g, std::span<const VertexId> comp) {
  std::vector<char> mark(g.id_bound(), 0);
  std::vector<VertexId> touched;
  for (VertexId v : comp) {
    std::size_t count = 0;
    auto visit = [&](VertexId x) {
      if (!mark[x]) {
        mark[x] = 1;
        touched.push_back(x);
        ++count;
      }
    };
    visit(v);
    g.for_each_neighbor(v, [&](VertexId u) {
      visit(u);
      g.for_each_neighbor(u, visit);
    });
    for (VertexId x : touched) mark[x] = 0;
    touched.clear();
    if (count != comp.size()) return false;
  }
  return true;
}

bool is_2club_cluster_graph(const Graph& g) {
  for (const auto& comp : components(g))
    if (!is_2club_component(g, comp)) return false;
  return true;
}

std::optional<RestrictedP4> find_restricted_p4(const Graph& g) {
  std::optional<RestrictedP4> found;
  for_each_restricted_p4(g, [&](const RestrictedP4& p) {
    found = p;
    return false;
  });
  return found;
}

std::vector<RestrictedP4> enumerate_restricted_p4s(const Graph& g,
                                                   std::size_t limit) {
  std::vector<RestrictedP4> out;
  if (limit == 0) return out;
  for_each_restricted_p4(g, [&](const RestrictedP4& p) {
    out.push_back(p);
    return out.size() < limit;
  });
  return out;
}

bool has_induced_p4(const Graph& g, VertexId s, VertexId v) {
  if (s == v || !g.alive(s) || !g.alive(v) || g.adjacent(s, v)) return false;
  bool found = false;
  g.for_each_neighbor(s, [&](VertexId t) {
    if (found || g.adjacent(t, v)) return;
    g.for_each_neighbor(t, [&](VertexId u) {
      if (found || u == s || g.adjacent(u, s)) return;
      if (g.adjacent(u, v)) found = true;
    });
  });
  return found;
}

Weight robustness(const Graph& g, std::span<const Weight> w, VertexId s,
                  VertexId v) {
  if (!has_induced_p4(g, s, v)) return kInfiniteWeight;
  Weight total = 0;
  g.for_each_neighbor(s, [&](VertexId b) {
    if (g.adjacent(b, v)) total += w[b];
  });
  return total;
}

bool is_bridge_vertex(const Graph& g, VertexId b) {
  std::vector<VertexId> nb = g.neighbors(b);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (has_induced_p4(g, nb[i], nb[j])) return true;
  return false;
}

std::vector<VertexId> cut_vertices(const Graph& g) {
  const std::size_t n = g.id_bound();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId v : g.vertices()) nbrs[v] = g.neighbors(v);

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::uint32_t timer = 0;
  for (VertexId root : g.vertices()) {
    if (disc[root] != kUnvisited) continue;
    std::size_t root_children = 0;
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < nbrs[f.v].size()) {
        VertexId u = nbrs[f.v][f.next++];
        if (disc[u] == kUnvisited) {
          disc[u] = low[u] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({u, f.v, 0});
        } else if (u != f.parent) {
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        VertexId v = f.v, parent = f.parent;
        stack.pop_back();
        if (v == root) break;
        low[parent] = std::min(low[parent], low[v]);
        if (parent != root && low[v] >= disc[parent]) is_cut[parent] = 1;
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

bool are_twins(const Graph& g, VertexId u, VertexId v) {
  if (u == v || !g.alive(u) || !g.alive(v)) return false;
  std::vector<VertexId> nu = g.neighbors(u), nv = g.neighbors(v);
  if (nu == nv) return true;
  if (!g.adjacent(u, v)) return false;
  nu.insert(std::lower_bound(nu.begin(), nu.end(), u), u);
  nv.insert(std::lower_bound(nv.begin(), nv.end(), v), v);
  return nu == nv;
}

std::vector<std::pair<VertexId, VertexId>> twins(const Graph& g) {
  std::map<std::vector<VertexId>, std::vector<VertexId>> open, closed;
  for (VertexId v : g.vertices()) {
    std::vector<VertexId> nb = g.neighbors(v);
    open[nb].push_back(v);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    closed[std::move(nb)].push_back(v);
  }
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto* groups : {&open, &closed})
    for (const auto& [key, members] : *groups)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          out.emplace_back(members[i], members[j]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace twoclub
