#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "twoclub/graph.hpp"
#include "twoclub/instance.hpp"

namespace twoclub {

/// x_s + x_t + x_u + x_v - Σ_{b in common} x_b >= 1 - |common| for an induced
/// P4 s-t-u-v (s < v) with common = N(s) ∩ N(v).
struct P4Constraint {
  std::array<VertexId, 4> path;
  std::vector<VertexId> common;

  long rhs() const { return 1 - static_cast<long>(common.size()); }
};

struct IlpModel {
  std::vector<VertexId> variables;  // alive ids, increasing
  std::vector<Weight> cost;         // per variable; all ones unless weighted
  std::vector<VertexId> fixed_zero;
  std::vector<P4Constraint> constraints;
};

IlpModel build_model(const Graph& g);
/// Permanent vertices become fixed at zero; `weighted` uses w as costs.
IlpModel build_model(const Instance& inst, bool weighted = false);

/// CPLEX LP text: Minimize, Subject To (rows p4_<i>), Bounds, Binary, End.
std::string to_lp_text(const IlpModel& model);
/// Throws std::runtime_error if the file cannot be written.
void write_lp(const IlpModel& model, const std::filesystem::path& path);

/// `assignment[v]` is x_v for every id below g.id_bound(). Throws
/// std::invalid_argument unless every alive vertex is set to 0 or 1.
bool check_assignment(const Graph& g, std::span<const std::uint8_t> assignment);
bool check_assignment(const IlpModel& model,
                      std::span<const std::uint8_t> assignment);

}  // namespace twoclub
