#pragma once

#include <cstdint>
#include <optional>

#include "twoclub/instance.hpp"
#include "twoclub/reduce.hpp"

namespace twoclub {

enum class P4Policy : std::uint8_t {
  kMostPermanent,  // most permanent vertices, then heaviest free part
  kFirst,          // lexicographically first restricted P4
};

/// Defaults match the full solver: every rule, LB1, permanent branching.
struct SolverConfig {
  RuleMask rules = kAllRules;
  bool lb1 = true;
  bool lb2 = false;
  /// Mark earlier P4 vertices permanent in later BR1 branches.
  bool permanent_branching = true;
  P4Policy policy = P4Policy::kMostPermanent;
  /// Reduction passes per search node; a pass without change stops early.
  unsigned max_passes = 3;
  std::optional<std::uint64_t> branch_limit;
  std::optional<double> time_limit_seconds;
};

struct SolveStats {
  /// Search nodes that split on a restricted P4.
  std::uint64_t branches = 0;
  /// All search nodes, including leaves and component sub-solves.
  std::uint64_t nodes = 0;
  RuleCounts rule_applications{};
  Weight lb_root = 0;
  Weight final_k = 0;
  std::uint64_t components_solved = 0;
  double elapsed_ms = 0;
};

struct SolveResult {
  std::optional<Solution> solution;
  SolveStats stats;
  bool timed_out = false;
  /// Largest budget proven insufficient, plus one.
  Weight lower_bound = 0;
};

/// Restricted P4 to branch on; `inst` must contain one.
RestrictedP4 select_branching_p4(const Instance& inst,
                                 P4Policy policy = P4Policy::kMostPermanent);

/// Decision search within the instance's (bounded) budget. The instance is
/// left unchanged; the solution is in the instance's original ids.
std::optional<Solution> branch(Instance& inst, const SolverConfig& config,
                               SolveStats& stats);

/// Solves each component separately, smallest first, handing the whole
/// remaining budget to the last one.
std::optional<Solution> solve_components(Instance& inst,
                                         const SolverConfig& config,
                                         SolveStats& stats);

/// Minimum-weight solution: reductions at unbounded k, then k = lb, lb+1, ...
/// The instance's own budget is ignored.
SolveResult solve_minimum(Instance inst, const SolverConfig& config = {});
SolveResult solve_minimum(const Graph& g, const SolverConfig& config = {});

/// Is there a solution within the instance's budget?
SolveResult solve_within(Instance inst, const SolverConfig& config = {});

}  // namespace twoclub
