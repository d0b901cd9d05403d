#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twoclub/solver.hpp"

namespace twoclub {

/// Enables exactly the listed rules ("rr1,rr4"); "all" and "none" also work.
/// Throws std::invalid_argument on unknown names.
RuleMask parse_rule_list(std::string_view csv);
/// Sets lb1/lb2 from a list such as "lb1,lb2", "all" or "none".
void apply_lb_list(SolverConfig& config, std::string_view csv);
/// Overlays the keys present in a JSON object:
///   rules ({"rr1": bool, ...} or a list of names), lb1, lb2,
///   permanent_branching, policy ("most_permanent" | "first"), max_passes,
///   branch_limit, time_limit (seconds).
void apply_config_json(SolverConfig& config, std::string_view json_text);

struct BatchOptions {
  unsigned threads = 1;
  /// Off makes the CSV byte-identical across runs.
  bool record_time = true;
};

struct BatchResult {
  std::string csv;
  std::size_t solved = 0;
  std::size_t timeouts = 0;
  std::size_t errors = 0;
};

/// Columns: file, n, m, k_opt, branches, nodes, time_ms, rr1..rr8, lb_root,
/// timeout, status.
std::string csv_header();

/// Solves every input ("fixture:<name>" or an edge-list path) to optimality,
/// one row each, rows in input order whatever the thread count.
BatchResult run_batch(std::span<const std::string> inputs,
                      const SolverConfig& config, const BatchOptions& options = {});

}  // namespace twoclub
