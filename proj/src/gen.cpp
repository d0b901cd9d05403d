#include "twoclub/gen.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace twoclub {

VertexId LabeledGraph::id(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    throw std::out_of_range("no vertex named " + std::string(label));
  return static_cast<VertexId>(it - labels.begin());
}

namespace {

struct Builder {
  LabeledGraph out;

  VertexId add(std::string label) {
    out.labels.push_back(std::move(label));
    return out.graph.add_vertex();
  }
  void edge(std::string_view a, std::string_view b) {
    out.graph.add_edge(out.id(a), out.id(b));
  }
  void cycle(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      edge(names[i], names[(i + 1) % names.size()]);
  }
};

LabeledGraph petersen_minus_cd() {
  Builder b;
  const std::vector<std::string> outer{"a", "b", "c", "d", "e"};
  for (const auto& s : outer) b.add(s);
  for (int i = 1; i <= 5; ++i) b.add("B" + std::to_string(i));
  b.edge("a", "b");
  b.edge("b", "c");
  b.edge("d", "e");
  b.edge("e", "a");
  for (int i = 0; i < 5; ++i) b.edge(outer[i], "B" + std::to_string(i + 1));
  for (int i = 1; i <= 5; ++i)
    b.edge("B" + std::to_string(i), "B" + std::to_string((i + 1) % 5 + 1));
  return b.out;
}

LabeledGraph fig2a() {
  Builder b;
  for (const char* s : {"A1", "A2", "a", "v", "b", "A6", "c1", "c2", "c3"}) b.add(s);
  b.cycle({"A1", "A2", "a", "v", "b", "A6"});
  b.edge("v", "c1");
  b.edge("c1", "c2");
  b.edge("c1", "c3");
  return b.out;
}

LabeledGraph fig2b() {
  Builder b;
  for (const char* s : {"v", "b", "A3", "A4", "a", "c", "c2", "c3"}) b.add(s);
  b.cycle({"v", "b", "A3", "A4", "a"});
  b.edge("v", "c");
  b.edge("c", "c2");
  b.edge("c", "c3");
  return b.out;
}

LabeledGraph fig4() {
  Builder b;
  for (const char* s : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"})
    b.add(s);
  b.cycle({"e", "a", "b", "c", "d"});
  for (const char* s : {"a", "b", "c", "d", "e"}) b.edge("f", s);
  b.cycle({"g", "h", "i", "j"});
  b.edge("e", "k");
  b.edge("e", "i");
  b.edge("j", "k");
  return b.out;
}

LabeledGraph fig5() {
  Builder b;
  auto name = [](int col, int row) {
    return "p" + std::to_string(col) + std::to_string(row);
  };
  for (int col = 1; col <= 4; ++col)
    for (int row = 1; row <= 4; ++row) b.add(name(col, row));
  for (int col = 1; col <= 4; ++col)
    for (int row = 1; row < 4; ++row) b.edge(name(col, row), name(col, row + 1));
  for (int col = 1; col < 4; ++col) b.edge(name(col, 2), name(col + 1, 2));
  return b.out;
}

LabeledGraph path_or_cycle(std::size_t n, bool closed) {
  Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add("v" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    b.out.graph.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  if (closed) b.out.graph.add_edge(static_cast<VertexId>(n - 1), 0);
  return b.out;
}

}  // namespace

LabeledGraph fig3(std::size_t k) {
  Builder b;
  b.add("v");
  for (std::size_t i = 1; i <= k + 1; ++i) {
    const std::string s = std::to_string(i);
    b.add("a" + s);
    b.add("b" + s);
    b.add("c" + s);
    b.edge("v", "a" + s);
    b.edge("a" + s, "b" + s);
    b.edge("b" + s, "c" + s);
  }
  return b.out;
}

LabeledGraph fixture(std::string_view name) {
  if (name == "petersen_minus_cd") return petersen_minus_cd();
  if (name == "fig2a") return fig2a();
  if (name == "fig2b") return fig2b();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  if (name == "p4") return path_or_cycle(4, false);
  if (name == "c6") return path_or_cycle(6, true);
  if (name == "fig3") return fig3(2);
  if (name.starts_with("fig3(") && name.ends_with(")")) {
    std::string_view digits = name.substr(5, name.size() - 6);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
      return fig3(k);
  }
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

std::vector<std::string> fixture_names() {
  return {"fig4", "p4", "c6", "petersen_minus_cd", "fig2a", "fig2b", "fig3(3)", "fig5"};
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  const long double scaled = std::ldexp(static_cast<long double>(p), 64);
  const bool always = p >= 1.0;
  const std::uint64_t threshold =
      always ? 0 : static_cast<std::uint64_t>(scaled);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t r = rng();
      if (always || r < threshold)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  return g;
}

namespace {

struct Composer {
  std::span<const std::pair<Graph, Weight>> parts;
  Weight k_prime;
  Builder b;
  std::size_t gadgets = 0;

  // Builds parts[lo, hi) and returns the ids created for it.
  std::vector<VertexId> build(std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
      const Graph& g = parts[lo].first;
      std::vector<VertexId> ids(g.id_bound());
      std::vector<VertexId> made;
      for (VertexId v : g.vertices()) {
        ids[v] = b.add("i" + std::to_string(lo) + "/" + std::to_string(v));
        made.push_back(ids[v]);
      }
      for (VertexId v : g.vertices())
        g.for_each_neighbor(v, [&](VertexId u) {
          if (v < u) b.out.graph.add_edge(ids[v], ids[u]);
        });
      return made;
    }
    const std::string tag = "gadget" + std::to_string(gadgets++);
    const VertexId cl = b.add(tag + "/cL");
    const VertexId cr = b.add(tag + "/cR");
    b.out.graph.add_edge(cl, cr);
    for (Weight i = 0; i <= k_prime; ++i) {
      b.out.graph.add_edge(cl, b.add(tag + "/cL.leaf" + std::to_string(i)));
      b.out.graph.add_edge(cr, b.add(tag + "/cR.leaf" + std::to_string(i)));
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<VertexId> left = build(lo, mid);
    std::vector<VertexId> right = build(mid, hi);
    for (VertexId x : left) b.out.graph.add_edge(cl, x);
    for (VertexId x : right) b.out.graph.add_edge(cr, x);
    std::vector<VertexId> made{cl, cr};
    for (VertexId x = cl + 2; x < cl + 2 + 2 * static_cast<VertexId>(k_prime + 1); ++x)
      made.push_back(x);
    made.insert(made.end(), left.begin(), left.end());
    made.insert(made.end(), right.begin(), right.end());
    return made;
  }
};

}  // namespace

ComposedInstance cross_compose(std::span<const std::pair<Graph, Weight>> parts) {
  if (parts.empty()) throw std::invalid_argument("cross_compose: no instances");
  const Weight k = parts.front().second;
  for (const auto& [g, kk] : parts)
    if (kk != k) throw std::invalid_argument("cross_compose: mixed budgets");
  std::vector<std::pair<Graph, Weight>> padded(parts.begin(), parts.end());
  while (!std::has_single_bit(padded.size())) padded.push_back(padded.back());
  const auto levels = static_cast<Weight>(std::countr_zero(padded.size()));
  Composer c{padded, k + levels, {}};
  c.build(0, padded.size());
  return {std::move(c.b.out), k + levels};
}

std::size_t diameter(const Graph& g) {
  if (g.num_vertices() == 0) return kBeyond;
  std::size_t best = 0;
  for (VertexId s : g.vertices()) {
    Distances d = bfs_dist(g, s, kBeyond - 1);
    if (d.reached.size() != g.num_vertices()) return kBeyond;
    best = std::max<std::size_t>(best, d[d.reached.back()]);
  }
  return best;
}

LabeledGraph ds_to_editing(const Graph& g) {
  if (diameter(g) != 2)
    throw std::invalid_argument("ds_to_editing: input must have diameter 2");
  const std::vector<VertexId> vs = g.vertices();
  const std::size_t n = vs.size();
  Builder b;
  std::vector<VertexId> pos(g.id_bound());
  for (std::size_t i = 0; i < n; ++i) {
    pos[vs[i]] = static_cast<VertexId>(i);
    b.add("v" + std::to_string(i + 1));
  }
  const VertexId x = b.add("x");
  auto c = [&](std::size_t i, std::size_t j) {
    return static_cast<VertexId>(x + 1 + i * (n + 1) + j);
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      b.add("c_" + std::to_string(i) + "," + std::to_string(j));
  Graph& h = b.out.graph;
  for (VertexId v : vs)
    g.for_each_neighbor(v, [&](VertexId u) {
      if (v < u) h.add_edge(pos[v], pos[u]);
    });
  for (VertexId a = c(0, 0); a <= c(n, n); ++a)
    for (VertexId z = a + 1; z <= c(n, n); ++z) h.add_edge(a, z);
  for (std::size_t j = 0; j <= n; ++j) h.add_edge(x, c(0, j));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      h.add_edge(static_cast<VertexId>(i - 1), c(i, j));
  return b.out;
}

namespace {

// Small graph on n <= 8 vertices as an upper-triangle edge mask.
struct Small {
  std::size_t n;
  std::uint64_t edges;
};

std::size_t pair_bit(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

bool has(const Small& s, std::size_t i, std::size_t j) {
  return (s.edges >> pair_bit(i, j)) & 1U;
}

// Minimum edge mask over relabelings that order vertices by degree.
std::uint64_t canonical(const Small& s) {
  std::vector<std::size_t> deg(s.n, 0);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      if (i != j && has(s, i, j)) ++deg[i];
  std::vector<std::size_t> order(s.n);
  for (std::size_t i = 0; i < s.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::pair{deg[a], a} < std::pair{deg[b], b}; });
  // Class boundaries: positions where the degree changes.
  std::vector<std::size_t> cls_start;
  for (std::size_t i = 0; i < s.n; ++i)
    if (i == 0 || deg[order[i]] != deg[order[i - 1]]) cls_start.push_back(i);
  cls_start.push_back(s.n);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::size_t> perm = order;  // perm[new label] = old vertex
  // Iterate the product of permutations of each class.
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c + 1 == cls_start.size()) {
      std::uint64_t code = 0;
      for (std::size_t a = 0; a < s.n; ++a)
        for (std::size_t z = a + 1; z < s.n; ++z)
          if (has(s, perm[a], perm[z])) code |= std::uint64_t{1} << pair_bit(a, z);
      best = std::min(best, code);
      return;
    }
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(cls_start[c]);
    auto last = perm.begin() + static_cast<std::ptrdiff_t>(cls_start[c + 1]);
    std::sort(first, last);
    do {
      rec(c + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Graph> connected_graph_catalog(std::size_t max_n) {
  if (max_n > 8) throw std::invalid_argument("catalog: max_n above 8");
  std::vector<Graph> out;
  if (max_n == 0) return out;
  std::vector<Small> level{{1, 0}};
  for (std::size_t n = 1;; ++n) {
    for (const Small& s : level) {
      Graph g(s.n);
      for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j)
          if (has(s, i, j))
            g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      out.push_back(std::move(g));
    }
    if (n == max_n) break;
    std::set<std::uint64_t> seen;
    std::vector<Small> next;
    for (const Small& s : level)
      for (std::uint64_t nb = 1; nb < (std::uint64_t{1} << n); ++nb) {
        Small t{n + 1, s.edges};
        for (std::size_t i = 0; i < n; ++i)
          if ((nb >> i) & 1U) t.edges |= std::uint64_t{1} << pair_bit(i, n);
        const std::uint64_t code = canonical(t);
        if (seen.insert(code).second) next.push_back({n + 1, code});
      }
    level = std::move(next);
  }
  return out;
}

}  // namespace twoclub
