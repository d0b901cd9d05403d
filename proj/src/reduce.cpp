#include "twoclub/reduce.hpp"

#include <algorithm>
#include <numeric>

#include "twoclub/flow.hpp"

namespace twoclub {

namespace {

constexpr std::size_t kRR1 = 0, kRR2 = 1, kRR3 = 2, kRR4 = 3, kRR5 = 4,
                      kRR6 = 5, kRR7 = 6, kRR8 = 7;

RuleOutcome infeasible_outcome() {
  RuleOutcome out;
  out.infeasible = true;
  return out;
}

// Components of G - v that contain a neighbor of v.
std::vector<std::vector<VertexId>> cut_off_components(const Graph& g,
                                                      VertexId v) {
  std::vector<char> seen(g.id_bound(), 0);
  seen[v] = 1;
  std::vector<std::vector<VertexId>> out;
  for (VertexId start : g.neighbors(v)) {
    if (seen[start]) continue;
    std::vector<VertexId> comp{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      g.for_each_neighbor(comp[i], [&](VertexId y) {
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
      });
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// 2-club test for a component of G - v.
bool is_2club_without(const Graph& g, std::span<const VertexId> comp,
                      VertexId v) {
  std::vector<std::uint32_t> stamp(g.id_bound(), 0);
  std::uint32_t round = 0;
  for (VertexId x : comp) {
    ++round;
    std::size_t ball = 1;
    stamp[x] = round;
    stamp[v] = round;
    g.for_each_neighbor(x, [&](VertexId y) {
      if (stamp[y] == round) return;
      stamp[y] = round;
      ++ball;
    });
    g.for_each_neighbor(x, [&](VertexId y) {
      if (y == v) return;
      g.for_each_neighbor(y, [&](VertexId z) {
        if (stamp[z] == round) return;
        stamp[z] = round;
        ++ball;
      });
    });
    if (ball != comp.size()) return false;
  }
  return true;
}

Weight min_weight(const Instance& inst, std::span<const VertexId> vs) {
  Weight m = kInfiniteWeight;
  for (VertexId x : vs) m = std::min(m, inst.weight(x));
  return m;
}

bool all_permanent(const Instance& inst, std::span<const VertexId> vs) {
  return std::all_of(vs.begin(), vs.end(),
                     [&](VertexId x) { return inst.permanent(x); });
}

std::uint64_t mark_all(Instance& inst, std::span<const VertexId> vs) {
  bool any = false;
  for (VertexId x : vs) any = inst.mark_permanent(x) || any;
  return any ? 1 : 0;
}

}  // namespace

std::string_view rule_name(std::size_t rule) {
  static constexpr std::array<std::string_view, kNumRules> names{
      "rr1", "rr2", "rr3", "rr4", "rr5", "rr6", "rr7", "rr8"};
  return names.at(rule);
}

RuleOutcome& RuleOutcome::operator+=(const RuleOutcome& o) {
  changed = changed || o.changed;
  infeasible = infeasible || o.infeasible;
  for (std::size_t i = 0; i < kNumRules; ++i)
    applications[i] += o.applications[i];
  return *this;
}

RuleOutcome rr1_remove_2club_components(Instance& inst) {
  RuleOutcome out;
  for (const auto& comp : components(inst.graph())) {
    if (!is_2club_component(inst.graph(), comp)) continue;
    for (VertexId x : comp) inst.discard_vertex(x);
    out.count(kRR1);
  }
  return out;
}

RuleOutcome rr2_k_disjoint_p4s(Instance& inst, VertexId v) {
  RuleOutcome out;
  if (!inst.bounded() || !inst.graph().alive(v)) return out;
  FlowNetwork net = build_layered_network(inst.graph(), inst.weights(), v);
  if (net.layers[2].empty()) return out;
  if (max_flow(net) <= *inst.budget()) return out;
  if (inst.permanent(v)) return infeasible_outcome();
  inst.delete_vertex(v);
  out.count(kRR2);
  out.infeasible = inst.infeasible();
  return out;
}

RuleOutcome rr2_all(Instance& inst) {
  RuleOutcome out;
  if (!inst.bounded()) return out;
  for (VertexId v : inst.graph().vertices()) {
    out += rr2_k_disjoint_p4s(inst, v);
    if (out.infeasible) break;
  }
  return out;
}

RuleOutcome rr3_merge_twins(Instance& inst) {
  RuleOutcome out;
  for (auto [u, v] : twins(inst.graph())) {
    const Graph& g = inst.graph();
    if (!g.alive(v)) continue;
    VertexId s = inst.representative(u);
    if (s == v || !g.alive(s) || !are_twins(g, s, v)) continue;
    inst.merge_into(s, v);
    out.count(kRR3);
  }
  return out;
}

RuleOutcome rr4_forced_choice(Instance& inst) {
  RuleOutcome out;
  std::vector<std::pair<RestrictedP4, VertexId>> forced;
  {
    const Graph& g = inst.graph();
    for (VertexId s : inst.permanent_vertices()) {
      Distances d = bfs_dist(g, s, 3);
      if (d.layer(3).empty()) continue;
      bool all_four = false;
      for_each_restricted_p4_from(g, d, s, [&](const RestrictedP4& p) {
        int fixed = 0;
        VertexId free = 0;
        for (VertexId x : p.vertices()) {
          if (inst.permanent(x))
            ++fixed;
          else
            free = x;
        }
        if (fixed == 4) all_four = true;
        if (fixed == 3) forced.emplace_back(p, free);
        return !all_four;
      });
      if (all_four) return infeasible_outcome();
    }
  }
  for (const auto& [p, x] : forced) {
    if (!inst.graph().alive(x) || !is_restricted_p4(inst.graph(), p)) continue;
    inst.delete_vertex(x);
    out.count(kRR4);
    if (inst.infeasible()) {
      out.infeasible = true;
      break;
    }
  }
  return out;
}

RuleOutcome rr5_shrink_permanent(Instance& inst) {
  RuleOutcome out;
  for (VertexId v : inst.graph().vertices()) {
    const Graph& g = inst.graph();
    if (!g.alive(v) || inst.permanent(v)) continue;
    bool touches_permanent = false;
    g.for_each_neighbor(v, [&](VertexId y) {
      touches_permanent = touches_permanent || inst.permanent(y);
    });
    if (!touches_permanent) continue;
    for (const auto& comp : cut_off_components(g, v)) {
      if (!all_permanent(inst, comp) || !is_2club_without(inst.graph(), comp, v))
        continue;
      Distances d = bfs_dist(inst.graph(), v, 3);
      unsigned depth = 0;
      for (VertexId x : comp) depth = std::max<unsigned>(depth, d[x]);
      if (depth >= comp.size()) continue;
      for (VertexId x : comp) inst.discard_vertex(x);
      VertexId prev = v;
      for (unsigned i = 0; i < depth; ++i) {
        VertexId p = inst.add_vertex(1, true);
        inst.add_edge(prev, p);
        prev = p;
      }
      out.count(kRR5);
    }
  }
  return out;
}

RuleOutcome rr6_permanent_2club_cut(Instance& inst) {
  RuleOutcome out;
  const Graph& g = inst.graph();
  for (VertexId v : cut_vertices(g)) {
    if (inst.permanent(v) || is_bridge_vertex(g, v)) continue;
    for (const auto& comp : cut_off_components(g, v)) {
      if (inst.weight(v) > min_weight(inst, comp)) continue;
      if (all_permanent(inst, comp) || !is_2club_without(g, comp, v)) continue;
      out.count(kRR6, mark_all(inst, comp));
    }
  }
  return out;
}

RuleOutcome rr7_permanent_2club_robust(Instance& inst) {
  RuleOutcome out;
  if (!inst.bounded()) return out;
  const Graph& g = inst.graph();
  const Weight k = *inst.budget();
  for (VertexId v : g.vertices()) {
    if (inst.permanent(v)) continue;
    std::vector<std::vector<VertexId>> clubs;
    std::vector<char> in_h(g.id_bound(), 0);
    bool premise = true;
    for (auto& comp : cut_off_components(g, v)) {
      if (is_2club_without(g, comp, v)) {
        premise = premise && inst.weight(v) <= min_weight(inst, comp);
        clubs.push_back(std::move(comp));
      } else {
        for (VertexId x : comp) in_h[x] = 1;
      }
    }
    if (clubs.empty() || !premise) continue;
    std::vector<VertexId> border;
    g.for_each_neighbor(v, [&](VertexId y) {
      if (in_h[y]) border.push_back(y);
    });
    bool robust = true;
    for (std::size_t i = 0; i < border.size() && robust; ++i)
      for (std::size_t j = i + 1; j < border.size() && robust; ++j)
        robust = robustness(g, inst.weights(), border[i], border[j]) > k;
    if (!robust) continue;
    std::uint64_t fired = 0;
    for (const auto& comp : clubs) fired |= mark_all(inst, comp);
    out.count(kRR7, fired);
  }
  return out;
}

RuleOutcome rr8_prevent_nonminimality(Instance& inst) {
  RuleOutcome out;
  for (const auto& rec : inst.deletions()) {
    // Neighbors dropped by RR1/RR5 or hidden by component solving still
    // exist in the real graph, so only deleted representatives count as S.
    std::vector<VertexId> outside;
    for (VertexId y : rec.neighbors) {
      VertexId r = inst.representative(y);
      if (inst.state(r) != VertexState::kDeleted) outside.push_back(r);
    }
    std::sort(outside.begin(), outside.end());
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
    if (outside.size() != 1 || !inst.graph().alive(outside[0])) continue;
    if (inst.mark_permanent(outside[0])) out.count(kRR8);
  }
  return out;
}

RuleOutcome run_reduction_pass(Instance& inst, const RuleMask& enabled) {
  using RuleFn = RuleOutcome (*)(Instance&);
  static constexpr std::array<std::pair<std::size_t, RuleFn>, kNumRules> order{{
      {kRR1, rr1_remove_2club_components},
      {kRR3, rr3_merge_twins},
      {kRR8, rr8_prevent_nonminimality},
      {kRR4, rr4_forced_choice},
      {kRR6, rr6_permanent_2club_cut},
      {kRR7, rr7_permanent_2club_robust},
      {kRR2, rr2_all},
      {kRR5, rr5_shrink_permanent},
  }};
  RuleOutcome total;
  for (auto [rule, fn] : order) {
    if (!enabled[rule]) continue;
    total += fn(inst);
    if (total.infeasible || inst.infeasible()) {
      total.infeasible = true;
      break;
    }
  }
  return total;
}

}  // namespace twoclub
