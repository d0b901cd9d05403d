#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "twoclub/instance.hpp"

namespace twoclub {

/// Rule indices: RR1 is 0, ..., RR8 is 7.
inline constexpr std::size_t kNumRules = 8;
using RuleCounts = std::array<std::uint64_t, kNumRules>;
using RuleMask = std::array<bool, kNumRules>;

inline constexpr RuleMask kAllRules{true, true, true, true,
                                    true, true, true, true};
inline constexpr RuleMask kNoRules{};

/// "rr1" ... "rr8"
std::string_view rule_name(std::size_t rule);

struct RuleOutcome {
  bool changed = false;
  bool infeasible = false;
  RuleCounts applications{};

  RuleOutcome& operator+=(const RuleOutcome& o);
  void count(std::size_t rule, std::uint64_t times = 1) {
    applications[rule] += times;
    changed = changed || times > 0;
  }
};

/// RR1: drops every component that is already a 2-club.
RuleOutcome rr1_remove_2club_components(Instance& inst);
/// RR2 at a single vertex: deletes `v` when the layered flow exceeds k.
/// No-op for an unbounded budget.
RuleOutcome rr2_k_disjoint_p4s(Instance& inst, VertexId v);
/// RR2 at every vertex, in id order.
RuleOutcome rr2_all(Instance& inst);
/// RR3: merges each twin class into its smallest id.
RuleOutcome rr3_merge_twins(Instance& inst);
/// RR4: deletes the single non-permanent vertex of a restricted P4.
RuleOutcome rr4_forced_choice(Instance& inst);
/// RR5: replaces all-permanent 2-club pieces hanging off a vertex by paths.
RuleOutcome rr5_shrink_permanent(Instance& inst);
/// RR6: non-bridge cut vertices make their cut-off 2-clubs permanent.
RuleOutcome rr6_permanent_2club_cut(Instance& inst);
/// RR7: the robustness variant of RR6. No-op for an unbounded budget.
RuleOutcome rr7_permanent_2club_robust(Instance& inst);
/// RR8 over every deletion recorded in `inst.deletions()`.
RuleOutcome rr8_prevent_nonminimality(Instance& inst);

/// One pass of the enabled rules in the order RR1, RR3, RR8, RR4, RR6, RR7,
/// RR2, RR5. Stops at the first rule reporting infeasibility.
RuleOutcome run_reduction_pass(Instance& inst, const RuleMask& enabled);

}  // namespace twoclub
