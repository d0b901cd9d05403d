#include "twoclub/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace twoclub {

FlowNetwork::FlowNetwork(std::size_t nodes, std::size_t source,
                         std::size_t sink)
    : out_(nodes), source_(source), sink_(sink) {
  if (source >= nodes || sink >= nodes || source == sink)
    throw std::invalid_argument("FlowNetwork: bad terminals");
}

std::size_t FlowNetwork::add_node() {
  out_.emplace_back();
  return out_.size() - 1;
}

void FlowNetwork::add_arc(std::size_t from, std::size_t to, Weight cap) {
  if (cap < 0) throw std::invalid_argument("FlowNetwork: negative capacity");
  if (from == to) return;
  out_[from].push_back({to, cap, out_[to].size()});
  out_[to].push_back({from, 0, out_[from].size() - 1});
  ++arc_count_;
}

FlowNetwork build_layered_network(const Graph& g, std::span<const Weight> w,
                                  VertexId v) {
  Distances d = bfs_dist(g, v, 3);
  Weight total = 0;
  for (VertexId u : g.vertices()) total += w[u];
  const Weight inf = total + 1;

  std::vector<std::size_t> in_node(g.id_bound());
  std::size_t next = 2;
  for (unsigned i = 1; i <= 3; ++i)
    for (VertexId u : d.layer(i)) {
      in_node[u] = next;
      next += 2;
    }
  FlowNetwork net(next, 0, 1);
  for (unsigned i = 1; i <= 3; ++i) {
    auto layer = d.layer(i);
    net.layers[i - 1].assign(layer.begin(), layer.end());
    std::sort(net.layers[i - 1].begin(), net.layers[i - 1].end());
  }
  for (unsigned i = 1; i <= 3; ++i)
    for (VertexId u : net.layers[i - 1]) {
      const std::size_t u_in = in_node[u], u_out = u_in + 1;
      net.add_arc(u_in, u_out, w[u]);
      if (i == 1) net.add_arc(net.source(), u_in, inf);
      if (i == 3) {
        net.add_arc(u_out, net.sink(), inf);
        continue;
      }
      g.for_each_neighbor(u, [&](VertexId x) {
        if (d[x] == i + 1) net.add_arc(u_out, in_node[x], inf);
      });
    }
  return net;
}

struct FlowSolver {
  std::vector<std::vector<FlowNetwork::Arc>> out;
  std::vector<int> level;
  std::vector<std::size_t> it;
  std::size_t s, t;

  explicit FlowSolver(const FlowNetwork& net)
      : out(net.out_), level(net.num_nodes()), it(net.num_nodes()),
        s(net.source()), t(net.sink()) {}

  bool bfs() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<std::size_t> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (const auto& a : out[x])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[x] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  Weight dfs(std::size_t x, Weight limit) {
    if (x == t) return limit;
    for (std::size_t& i = it[x]; i < out[x].size(); ++i) {
      auto& a = out[x][i];
      if (a.cap <= 0 || level[a.to] != level[x] + 1) continue;
      Weight pushed = dfs(a.to, std::min(limit, a.cap));
      if (pushed > 0) {
        a.cap -= pushed;
        out[a.to][a.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  Weight run() {
    Weight flow = 0;
    while (bfs()) {
      std::fill(it.begin(), it.end(), 0);
      while (Weight f = dfs(s, std::numeric_limits<Weight>::max())) flow += f;
    }
    return flow;
  }
};

MaxFlowResult max_flow_with_cut(const FlowNetwork& net) {
  MaxFlowResult r;
  if (net.num_nodes() == 0) return r;
  FlowSolver solver(net);
  r.value = solver.run();
  solver.bfs();
  r.source_side.resize(net.num_nodes());
  for (std::size_t x = 0; x < net.num_nodes(); ++x)
    r.source_side[x] = solver.level[x] >= 0 ? 1 : 0;
  return r;
}

Weight max_flow(const FlowNetwork& net) { return max_flow_with_cut(net).value; }

Weight cut_capacity(const FlowNetwork& net, std::span<const char> side) {
  Weight total = 0;
  for (std::size_t x = 0; x < net.num_nodes(); ++x) {
    if (!side[x]) continue;
    for (const auto& a : net.arcs(x)) {
      // Reverse residual arcs start at capacity 0 and add nothing.
      if (!side[a.to]) total += a.cap;
    }
  }
  return total;
}

}  // namespace twoclub
