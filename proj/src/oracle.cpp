#include "twoclub/oracle.hpp"

#include <bit>
#include <string>

namespace twoclub {

namespace {

// Σ_{i<=k} C(n, i), saturating at limit + 1.
std::uint64_t subsets_up_to(std::uint64_t n, std::uint64_t k,
                            std::uint64_t limit) {
  std::uint64_t total = 0, term = 1;
  for (std::uint64_t i = 0; i <= k && i <= n; ++i) {
    total += term;
    if (total > limit) return limit + 1;
    // term = C(n, i + 1)
    term = term * (n - i) / (i + 1);
    if (term > limit) term = limit + 1;
  }
  return total;
}

// Calls fn(mask) for every k-subset of `bits`, in lexicographic index order.
// fn returns true to stop.
template <class Fn>
bool for_each_k_subset(const std::vector<int>& bits, std::size_t k, Fn&& fn) {
  const std::size_t n = bits.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint64_t{1} << bits[i];
    if (fn(mask)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

BitGraph::BitGraph(const Graph& g) : ids(g.vertices()) {
  if (ids.size() > 64) throw OracleRefused("oracle: more than 64 vertices");
  std::vector<int> pos(g.id_bound(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
  adj.assign(ids.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i)
    g.for_each_neighbor(ids[i], [&](VertexId y) {
      adj[i] |= std::uint64_t{1} << pos[y];
    });
}

bool is_2club_cluster_mask(std::span<const std::uint64_t> adj,
                           std::uint64_t keep) {
  for (std::uint64_t rest = keep; rest; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    const std::uint64_t n1 = adj[x] & keep;
    std::uint64_t ball2 = n1 | (std::uint64_t{1} << x);
    for (std::uint64_t r = n1; r; r &= r - 1) ball2 |= adj[std::countr_zero(r)];
    ball2 &= keep;
    std::uint64_t ring = 0;
    for (std::uint64_t r = ball2 & ~n1; r; r &= r - 1)
      ring |= adj[std::countr_zero(r)];
    if (ring & keep & ~ball2) return false;
  }
  return true;
}

std::optional<Solution> brute_force_2cvd(const Graph& g,
                                         std::span<const Weight> w,
                                         std::span<const VertexId> permanent) {
  if (g.num_vertices() > kOracleMaxVertices)
    throw OracleRefused("brute_force_2cvd: n = " +
                        std::to_string(g.num_vertices()) + " exceeds " +
                        std::to_string(kOracleMaxVertices));
  BitGraph bg(g);
  const std::size_t n = bg.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<char> fixed(g.id_bound(), 0);
  for (VertexId v : permanent) fixed[v] = 1;
  std::vector<int> free_bits;
  std::vector<Weight> weight(n, 1);
  bool unit = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!w.empty()) weight[i] = w[bg.ids[i]];
    unit = unit && weight[i] == 1;
    if (!fixed[bg.ids[i]]) free_bits.push_back(static_cast<int>(i));
  }

  auto to_solution = [&](std::uint64_t mask) {
    Solution s;
    for (std::uint64_t r = mask; r; r &= r - 1) {
      const int i = std::countr_zero(r);
      s.deleted.push_back(bg.ids[i]);
      s.cost += weight[i];
    }
    return s;
  };

  if (unit) {
    std::optional<std::uint64_t> hit;
    for (std::size_t k = 0; k <= free_bits.size() && !hit; ++k)
      for_each_k_subset(free_bits, k, [&](std::uint64_t mask) {
        if (!is_2club_cluster_mask(bg.adj, all & ~mask)) return false;
        hit = mask;
        return true;
      });
    if (!hit) return std::nullopt;
    return to_solution(*hit);
  }

  // Weighted: scan every subset of the free bits in increasing compressed
  // order and keep the first one of least weight.
  std::optional<std::uint64_t> best;
  Weight best_weight = kInfiniteWeight;
  const std::size_t f = free_bits.size();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << f); ++code) {
    std::uint64_t mask = 0;
    Weight total = 0;
    for (std::size_t b = 0; b < f; ++b)
      if ((code >> b) & 1U) {
        mask |= std::uint64_t{1} << free_bits[b];
        total += weight[free_bits[b]];
      }
    if (total >= best_weight) continue;
    if (!is_2club_cluster_mask(bg.adj, all & ~mask)) continue;
    best = mask;
    best_weight = total;
  }
  if (!best) return std::nullopt;
  return to_solution(*best);
}

bool brute_force_2cvd_within(const Graph& g, std::size_t k) {
  BitGraph bg(g);
  const std::size_t n = bg.size();
  if (subsets_up_to(n, k, kOracleMaxSubsets) > kOracleMaxSubsets)
    throw OracleRefused("brute_force_2cvd_within: too many subsets");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>(i);
  for (std::size_t s = 0; s <= k && s <= n; ++s)
    if (for_each_k_subset(bits, s, [&](std::uint64_t mask) {
          return is_2club_cluster_mask(bg.adj, all & ~mask);
        }))
      return true;
  return false;
}

bool brute_force_2cc_editing(const Graph& g, std::size_t k) {
  BitGraph bg(g);
  const std::size_t n = bg.size();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (subsets_up_to(pairs.size(), k, kOracleMaxSubsets) > kOracleMaxSubsets)
    throw OracleRefused("brute_force_2cc_editing: too many edit sets");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> adj = bg.adj;
  auto flip = [&](std::size_t p) {
    auto [a, b] = pairs[p];
    adj[a] ^= std::uint64_t{1} << b;
    adj[b] ^= std::uint64_t{1} << a;
  };
  // Enumerate k-subsets of pair indices directly; masks would overflow.
  for (std::size_t s = 0; s <= k && s <= pairs.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      for (std::size_t p : idx) flip(p);
      const bool ok = is_2club_cluster_mask(adj, all);
      for (std::size_t p : idx) flip(p);
      if (ok) return true;
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == pairs.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

std::size_t brute_force_dominating_set(const Graph& g) {
  if (g.num_vertices() > kOracleMaxVertices)
    throw OracleRefused("brute_force_dominating_set: graph too large");
  BitGraph bg(g);
  const std::size_t n = bg.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>(i);
  for (std::size_t s = 0; s <= n; ++s)
    if (for_each_k_subset(bits, s, [&](std::uint64_t mask) {
          std::uint64_t covered = mask;
          for (std::uint64_t r = mask; r; r &= r - 1)
            covered |= bg.adj[std::countr_zero(r)];
          return covered == all;
        }))
      return s;
  return n;
}

}  // namespace twoclub
