#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

/// A vertex deletion set together with its total weight.
struct Solution {
  std::vector<VertexId> deleted;  // sorted
  Weight cost = 0;
};

enum class VertexState : std::uint8_t {
  kAlive,
  kDeleted,    // put into the solution
  kDiscarded,  // dropped without cost (solved component, shrunk gadget)
  kMerged,     // absorbed by a twin
};

/// One deletion on the current search path, with the alive neighborhood the
/// vertex had at the moment it was deleted.
struct DeletionRecord {
  VertexId vertex;
  std::vector<VertexId> neighbors;
};

/// A Generalized 2-Club Cluster Vertex Deletion instance (G, k, F, w).
///
/// All state transitions are journaled; `rollback(checkpoint())` restores
/// the instance exactly. The budget is signed: once it drops below zero
/// the instance is infeasible. An unset budget means "unbounded".
class Instance {
 public:
  using Checkpoint = std::size_t;

  /// Unweighted embedding (G, k, {}, w = 1).
  explicit Instance(Graph g, std::optional<Weight> budget = std::nullopt);
  Instance(Graph g, std::vector<Weight> weights,
           std::span<const VertexId> permanent,
           std::optional<Weight> budget = std::nullopt);

  const Graph& graph() const noexcept { return graph_; }
  Weight weight(VertexId v) const { return weight_[v]; }
  std::span<const Weight> weights() const noexcept { return weight_; }
  bool permanent(VertexId v) const { return permanent_[v] != 0; }
  std::vector<VertexId> permanent_vertices() const;
  VertexState state(VertexId v) const { return state_[v]; }

  /// Number of vertices the instance was built with; ids below this bound
  /// are the ones solutions are reported in.
  std::size_t original_size() const noexcept { return original_size_; }

  bool bounded() const noexcept { return budget_.has_value(); }
  std::optional<Weight> budget() const noexcept { return budget_; }
  bool infeasible() const noexcept { return budget_ && *budget_ < 0; }
  void set_budget(std::optional<Weight> budget);

  /// Puts `v` into the solution and charges w(v). Throws std::logic_error
  /// if `v` is permanent or not alive.
  void delete_vertex(VertexId v);
  /// Removes `v` from the graph without charging the budget.
  void discard_vertex(VertexId v);
  /// Removes twin `v`, adding its weight (and permanence) to `survivor`.
  void merge_into(VertexId survivor, VertexId v);
  /// Returns true if `v` was not permanent before.
  bool mark_permanent(VertexId v);
  VertexId add_vertex(Weight w, bool permanent);
  void add_edge(VertexId u, VertexId v);

  Checkpoint checkpoint() const noexcept { return trail_.size(); }
  void rollback(Checkpoint mark);

  /// Deletions made so far, oldest first.
  std::span<const DeletionRecord> deletions() const noexcept {
    return deletions_;
  }
  /// Follows merges to the vertex that currently stands for `v`.
  VertexId representative(VertexId v) const;
  /// Expands merged twins: every original vertex a deletion of `vs` implies.
  std::vector<VertexId> lift(std::span<const VertexId> vs) const;
  /// The lifted solution formed by deletions()[from..end).
  Solution solution_since(std::size_t from) const;
  /// Weight in terms of the weights the instance was built with.
  Weight original_weight(VertexId v) const { return base_weight_[v]; }

 private:
  enum class Op : std::uint8_t {
    kDelete,
    kDiscard,
    kMerge,
    kPermanent,
    kBudget,
    kAddVertex,
    kAddEdge,
  };
  struct Entry {
    Op op;
    VertexId a = 0;
    VertexId b = 0;
    Weight old_weight = 0;
    std::optional<Weight> old_budget{};
    bool old_flag = false;
  };

  void undo(const Entry& e);

  Graph graph_;
  std::vector<Weight> weight_;
  std::vector<Weight> base_weight_;
  std::vector<char> permanent_;
  std::vector<VertexState> state_;
  std::vector<VertexId> merged_into_;
  std::vector<std::vector<VertexId>> merged_from_;
  std::vector<DeletionRecord> deletions_;
  std::optional<Weight> budget_;
  std::size_t original_size_ = 0;
  std::vector<Entry> trail_;
};

/// Total current weight of `vs`.
Weight weight_of(const Instance& inst, std::span<const VertexId> vs);

/// Independent solution check: the set is duplicate-free, alive, disjoint
/// from F, its cost matches and fits the budget, and the graph minus the set
/// is a 2-club cluster graph. Only relies on graph::is_2club_component.
bool verify(const Instance& inst, const Solution& sol);

}  // namespace twoclub
