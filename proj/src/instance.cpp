#include "twoclub/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twoclub {

namespace {
constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
}

Instance::Instance(Graph g, std::optional<Weight> budget)
    : Instance(std::move(g), {}, {}, budget) {}

Instance::Instance(Graph g, std::vector<Weight> weights,
                   std::span<const VertexId> permanent,
                   std::optional<Weight> budget)
    : graph_(std::move(g)), budget_(budget) {
  const std::size_t n = graph_.id_bound();
  if (weights.empty()) weights.assign(n, 1);
  if (weights.size() != n)
    throw std::invalid_argument("weight vector size does not match graph");
  for (VertexId v = 0; v < n; ++v)
    if (graph_.alive(v) && weights[v] < 1)
      throw std::invalid_argument("vertex weights must be positive");
  weight_ = std::move(weights);
  base_weight_ = weight_;
  permanent_.assign(n, 0);
  for (VertexId v : permanent) {
    if (!graph_.alive(v))
      throw std::invalid_argument("permanent vertex is not alive");
    permanent_[v] = 1;
  }
  state_.assign(n, VertexState::kAlive);
  for (VertexId v = 0; v < n; ++v)
    if (!graph_.alive(v)) state_[v] = VertexState::kDiscarded;
  merged_into_.assign(n, kNoVertex);
  merged_from_.resize(n);
  original_size_ = n;
}

std::vector<VertexId> Instance::permanent_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : graph_.vertices())
    if (permanent_[v]) out.push_back(v);
  return out;
}

void Instance::set_budget(std::optional<Weight> budget) {
  trail_.push_back({.op = Op::kBudget, .old_budget = budget_});
  budget_ = budget;
}

void Instance::delete_vertex(VertexId v) {
  if (!graph_.alive(v))
    throw std::logic_error("delete_vertex: vertex " + std::to_string(v) +
                           " is not alive");
  if (permanent_[v])
    throw std::logic_error("delete_vertex: vertex " + std::to_string(v) +
                           " is permanent");
  deletions_.push_back({v, graph_.neighbors(v)});
  trail_.push_back({.op = Op::kDelete, .a = v, .old_budget = budget_});
  graph_.remove_vertex(v);
  state_[v] = VertexState::kDeleted;
  if (budget_) *budget_ -= weight_[v];
}

void Instance::discard_vertex(VertexId v) {
  if (!graph_.alive(v)) throw std::logic_error("discard_vertex: not alive");
  trail_.push_back({.op = Op::kDiscard, .a = v});
  graph_.remove_vertex(v);
  state_[v] = VertexState::kDiscarded;
}

void Instance::merge_into(VertexId survivor, VertexId v) {
  if (survivor == v || !graph_.alive(survivor) || !graph_.alive(v))
    throw std::logic_error("merge_into: both twins must be alive and distinct");
  trail_.push_back({.op = Op::kMerge,
                    .a = survivor,
                    .b = v,
                    .old_weight = weight_[survivor],
                    .old_flag = permanent_[survivor] != 0});
  graph_.remove_vertex(v);
  state_[v] = VertexState::kMerged;
  merged_into_[v] = survivor;
  merged_from_[survivor].push_back(v);
  weight_[survivor] += weight_[v];
  if (permanent_[v]) permanent_[survivor] = 1;
}

bool Instance::mark_permanent(VertexId v) {
  if (!graph_.alive(v)) throw std::logic_error("mark_permanent: not alive");
  if (permanent_[v]) return false;
  trail_.push_back({.op = Op::kPermanent, .a = v});
  permanent_[v] = 1;
  return true;
}

VertexId Instance::add_vertex(Weight w, bool permanent) {
  if (w < 1) throw std::invalid_argument("vertex weights must be positive");
  VertexId v = graph_.add_vertex();
  weight_.push_back(w);
  base_weight_.push_back(w);
  permanent_.push_back(permanent ? 1 : 0);
  state_.push_back(VertexState::kAlive);
  merged_into_.push_back(kNoVertex);
  merged_from_.emplace_back();
  trail_.push_back({.op = Op::kAddVertex, .a = v});
  return v;
}

void Instance::add_edge(VertexId u, VertexId v) {
  if (graph_.add_edge(u, v)) trail_.push_back({.op = Op::kAddEdge, .a = u, .b = v});
}

void Instance::undo(const Entry& e) {
  switch (e.op) {
    case Op::kDelete:
      graph_.restore_vertex(e.a);
      state_[e.a] = VertexState::kAlive;
      budget_ = e.old_budget;
      deletions_.pop_back();
      break;
    case Op::kDiscard:
      graph_.restore_vertex(e.a);
      state_[e.a] = VertexState::kAlive;
      break;
    case Op::kMerge:
      graph_.restore_vertex(e.b);
      state_[e.b] = VertexState::kAlive;
      merged_into_[e.b] = kNoVertex;
      merged_from_[e.a].pop_back();
      weight_[e.a] = e.old_weight;
      permanent_[e.a] = e.old_flag ? 1 : 0;
      break;
    case Op::kPermanent:
      permanent_[e.a] = 0;
      break;
    case Op::kBudget:
      budget_ = e.old_budget;
      break;
    case Op::kAddVertex:
      graph_.pop_vertex();
      weight_.pop_back();
      base_weight_.pop_back();
      permanent_.pop_back();
      state_.pop_back();
      merged_into_.pop_back();
      merged_from_.pop_back();
      break;
    case Op::kAddEdge:
      graph_.remove_edge(e.a, e.b);
      break;
  }
}

void Instance::rollback(Checkpoint mark) {
  if (mark > trail_.size()) throw std::logic_error("rollback past the trail");
  while (trail_.size() > mark) {
    undo(trail_.back());
    trail_.pop_back();
  }
}

VertexId Instance::representative(VertexId v) const {
  while (merged_into_[v] != kNoVertex) v = merged_into_[v];
  return v;
}

std::vector<VertexId> Instance::lift(std::span<const VertexId> vs) const {
  std::vector<VertexId> out;
  std::vector<VertexId> stack(vs.begin(), vs.end());
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (VertexId m : merged_from_[v]) stack.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Solution Instance::solution_since(std::size_t from) const {
  std::vector<VertexId> raw;
  for (std::size_t i = from; i < deletions_.size(); ++i)
    raw.push_back(deletions_[i].vertex);
  Solution sol;
  sol.deleted = lift(raw);
  for (VertexId v : sol.deleted) {
    if (v >= original_size_)
      throw std::logic_error("solution contains a synthetic vertex");
    sol.cost += base_weight_[v];
  }
  return sol;
}

Weight weight_of(const Instance& inst, std::span<const VertexId> vs) {
  Weight total = 0;
  for (VertexId v : vs) total += inst.weight(v);
  return total;
}

bool verify(const Instance& inst, const Solution& sol) {
  const Graph& g = inst.graph();
  std::vector<VertexId> del = sol.deleted;
  std::sort(del.begin(), del.end());
  if (std::adjacent_find(del.begin(), del.end()) != del.end()) return false;
  Weight cost = 0;
  for (VertexId v : del) {
    if (!g.alive(v) || inst.permanent(v)) return false;
    cost += inst.weight(v);
  }
  if (cost != sol.cost) return false;
  if (inst.budget() && cost > *inst.budget()) return false;
  Graph rest = g;
  for (VertexId v : del) rest.remove_vertex(v);
  for (const auto& comp : components(rest))
    if (!is_2club_component(rest, comp)) return false;
  return true;
}

}  // namespace twoclub
