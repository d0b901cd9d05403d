#include "twoclub/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "twoclub/flow.hpp"

namespace twoclub {

std::vector<RestrictedP4> lb1_packing(const Instance& inst) {
  const Graph& g = inst.graph();
  std::vector<Weight> counter(inst.weights().begin(), inst.weights().end());
  std::vector<VertexId> order = g.vertices();
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) < g.degree(b);
  });

  std::vector<RestrictedP4> packed;
  for (VertexId s : order) {
    if (counter[s] <= 0) continue;
    Distances d = bfs_dist(g, s, 3);
    if (d.layer(3).empty()) continue;
    while (counter[s] > 0) {
      using Key = std::tuple<std::size_t, VertexId, VertexId, VertexId>;
      std::optional<Key> best;
      for (VertexId u : d.layer(2)) {
        if (counter[u] <= 0) continue;
        // Cheapest t and v around u are independent of each other.
        std::optional<std::pair<std::size_t, VertexId>> bt, bv;
        g.for_each_neighbor(u, [&](VertexId x) {
          if (counter[x] <= 0) return;
          std::pair<std::size_t, VertexId> key{g.degree(x), x};
          if (d[x] == 1 && (!bt || key < *bt)) bt = key;
          if (d[x] == 3 && (!bv || key < *bv)) bv = key;
        });
        if (!bt || !bv) continue;
        Key key{g.degree(s) + bt->first + g.degree(u) + bv->first, bt->second,
                u, bv->second};
        if (!best || key < *best) best = key;
      }
      if (!best) break;
      auto [sum, t, u, v] = *best;
      for (VertexId x : {s, t, u, v}) --counter[x];
      packed.push_back({s, t, u, v});
    }
  }
  return packed;
}

Weight lb1_disjoint_p4_packing(const Instance& inst) {
  return static_cast<Weight>(lb1_packing(inst).size());
}

namespace {

struct ClubSearch {
  const Graph& g;
  std::span<const Weight> w;
  std::vector<VertexId> cand;
  std::vector<Weight> suffix;  // weight of cand[i..]
  std::vector<VertexId> chosen;
  Weight chosen_weight = 0;
  Club best;

  bool induced_2club() const {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        VertexId a = chosen[i], b = chosen[j];
        if (g.adjacent(a, b)) continue;
        bool common = std::any_of(chosen.begin(), chosen.end(), [&](VertexId c) {
          return g.adjacent(a, c) && g.adjacent(c, b);
        });
        if (!common) return false;
      }
    return true;
  }

  bool near_all(const std::vector<std::uint8_t>& dist_from_x) const {
    return std::all_of(chosen.begin(), chosen.end(),
                       [&](VertexId c) { return dist_from_x[c] <= 2; });
  }

  void run(std::size_t i, const std::vector<std::vector<std::uint8_t>>& dist) {
    if (chosen_weight + suffix[i] <= best.weight) return;
    if (i == cand.size()) {
      if (induced_2club()) best = {chosen, chosen_weight};
      return;
    }
    VertexId x = cand[i];
    if (near_all(dist[i])) {
      chosen.push_back(x);
      chosen_weight += w[x];
      run(i + 1, dist);
      chosen.pop_back();
      chosen_weight -= w[x];
    }
    run(i + 1, dist);
  }
};

}  // namespace

Club max_weight_2club(const Graph& g, std::span<const Weight> w,
                      std::span<const VertexId> comp) {
  ClubSearch search{g, w, {comp.begin(), comp.end()}, {}, {}, 0, {}};
  std::stable_sort(search.cand.begin(), search.cand.end(),
                   [&](VertexId a, VertexId b) { return w[a] > w[b]; });
  const std::size_t n = search.cand.size();
  search.suffix.assign(n + 1, 0);
  for (std::size_t i = n; i-- > 0;)
    search.suffix[i] = search.suffix[i + 1] + w[search.cand[i]];
  std::vector<std::vector<std::uint8_t>> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    Distances d = bfs_dist(g, search.cand[i], 2);
    dist[i] = std::move(d.dist);
  }
  search.run(0, dist);
  std::sort(search.best.vertices.begin(), search.best.vertices.end());
  return search.best;
}

Weight min_vertex_cut(const Graph& g, std::span<const Weight> w,
                      std::span<const VertexId> comp) {
  Weight total = 0;
  for (VertexId x : comp) total += w[x];
  const Weight inf = total + 1;
  std::vector<std::size_t> index(g.id_bound());
  for (std::size_t i = 0; i < comp.size(); ++i) index[comp[i]] = i;

  Weight best = kInfiniteWeight;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      VertexId a = comp[i], b = comp[j];
      if (g.adjacent(a, b)) continue;
      // Node 2x is x_in, 2x + 1 is x_out.
      FlowNetwork net(2 * comp.size(), 2 * i + 1, 2 * j);
      for (std::size_t x = 0; x < comp.size(); ++x) {
        const bool terminal = x == i || x == j;
        net.add_arc(2 * x, 2 * x + 1, terminal ? inf : w[comp[x]]);
        g.for_each_neighbor(comp[x], [&](VertexId y) {
          net.add_arc(2 * x + 1, 2 * index[y], inf);
        });
      }
      best = std::min(best, max_flow(net));
    }
  return best;
}

Weight lb2_cut_bound(const Instance& inst) {
  const Graph& g = inst.graph();
  Weight bound = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() > kLb2MaxComponent || is_2club_component(g, comp)) continue;
    Weight total = 0;
    for (VertexId x : comp) total += inst.weight(x);
    Club club = max_weight_2club(g, inst.weights(), comp);
    Weight cut = min_vertex_cut(g, inst.weights(), comp);
    bound += std::min(total - club.weight, cut);
  }
  return bound;
}

}  // namespace twoclub
