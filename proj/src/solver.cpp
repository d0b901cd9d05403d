#include "twoclub/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "twoclub/bounds.hpp"

namespace twoclub {

namespace {

using Clock = std::chrono::steady_clock;

struct Aborted {};

Solution unite(const Instance& inst, const Solution& a, const Solution& b) {
  Solution out;
  std::set_union(a.deleted.begin(), a.deleted.end(), b.deleted.begin(),
                 b.deleted.end(), std::back_inserter(out.deleted));
  for (VertexId v : out.deleted) out.cost += inst.original_weight(v);
  return out;
}

class Search {
 public:
  Search(Instance& inst, const SolverConfig& config, SolveStats& stats,
         Clock::time_point start)
      : inst_(inst), config_(config), stats_(stats) {
    if (config.time_limit_seconds)
      deadline_ = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(
                                  *config.time_limit_seconds));
  }

  /// Runs the configured reduction passes; false means infeasible.
  bool reduce() {
    if (std::none_of(config_.rules.begin(), config_.rules.end(),
                     [](bool on) { return on; }))
      return !inst_.infeasible();
    for (unsigned pass = 0; pass < config_.max_passes; ++pass) {
      RuleOutcome out = run_reduction_pass(inst_, config_.rules);
      for (std::size_t r = 0; r < kNumRules; ++r)
        stats_.rule_applications[r] += out.applications[r];
      if (out.infeasible) return false;
      if (!out.changed) break;
    }
    return !inst_.infeasible();
  }

  Weight lower_bound() const {
    Weight lb = 0;
    if (config_.lb1) lb = std::max(lb, lb1_disjoint_p4_packing(inst_));
    if (config_.lb2) lb = std::max(lb, lb2_cut_bound(inst_));
    return lb;
  }

  std::vector<std::vector<VertexId>> open_components() const {
    std::vector<std::vector<VertexId>> out;
    for (auto& comp : components(inst_.graph()))
      if (!is_2club_component(inst_.graph(), comp)) out.push_back(std::move(comp));
    return out;
  }

  std::optional<Solution> node() {
    tick();
    const Instance::Checkpoint cp = inst_.checkpoint();
    const std::size_t from = inst_.deletions().size();
    auto done = [&](std::optional<Solution> r) {
      inst_.rollback(cp);
      return r;
    };

    if (!reduce()) return done(std::nullopt);
    const Weight k = *inst_.budget();
    if (lower_bound() > k) return done(std::nullopt);

    auto comps = open_components();
    const Solution here = inst_.solution_since(from);
    if (comps.empty()) return done(here);
    if (comps.size() > 1) {
      auto rest = schedule(std::move(comps));
      if (!rest) return done(std::nullopt);
      return done(unite(inst_, here, *rest));
    }

    const RestrictedP4 p = select_branching_p4(inst_, config_.policy);
    const auto verts = p.vertices();
    std::optional<Solution> found;
    bool split = false;
    for (std::size_t i = 0; i < verts.size() && !found; ++i) {
      const VertexId x = verts[i];
      if (inst_.permanent(x) || inst_.weight(x) > k) continue;
      if (!split) {
        split = true;
        ++stats_.branches;
        if (config_.branch_limit && stats_.branches > *config_.branch_limit)
          throw Aborted{};
      }
      const Instance::Checkpoint cp2 = inst_.checkpoint();
      if (config_.permanent_branching)
        for (std::size_t j = 0; j < i; ++j) inst_.mark_permanent(verts[j]);
      const VertexId group[] = {x};
      Solution taken{inst_.lift(group), 0};
      inst_.delete_vertex(x);
      if (auto sub = node()) found = unite(inst_, unite(inst_, here, taken), *sub);
      inst_.rollback(cp2);
    }
    return done(found);
  }

  /// Component budget scheduling on the current instance.
  std::optional<Solution> schedule(std::vector<std::vector<VertexId>> comps) {
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() != b.size() ? a.size() < b.size()
                                                   : a.front() < b.front();
                     });
    Weight remaining = *inst_.budget();
    Solution total;
    for (std::size_t idx = 0; idx < comps.size(); ++idx) {
      const Instance::Checkpoint cp = inst_.checkpoint();
      std::vector<char> keep(inst_.graph().id_bound(), 0);
      for (VertexId x : comps[idx]) keep[x] = 1;
      for (VertexId x : inst_.graph().vertices())
        if (!keep[x]) inst_.discard_vertex(x);

      std::optional<Solution> got;
      if (idx + 1 == comps.size()) {
        inst_.set_budget(remaining);
        got = node();
      } else {
        for (Weight kk = lower_bound(); kk <= remaining && !got; ++kk) {
          inst_.set_budget(kk);
          got = node();
        }
      }
      inst_.rollback(cp);
      if (!got) return std::nullopt;
      ++stats_.components_solved;
      remaining -= got->cost;
      total = unite(inst_, total, *got);
    }
    return total;
  }

 private:
  void tick() {
    ++stats_.nodes;
    if (deadline_ && Clock::now() > *deadline_) throw Aborted{};
  }

  Instance& inst_;
  const SolverConfig& config_;
  SolveStats& stats_;
  std::optional<Clock::time_point> deadline_;
};

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_or_throw(const Instance& original, const Solution& sol) {
  Instance unbounded = original;
  unbounded.set_budget(std::nullopt);
  if (!verify(unbounded, sol))
    throw std::logic_error("solver produced an invalid deletion set");
}

}  // namespace

RestrictedP4 select_branching_p4(const Instance& inst, P4Policy policy) {
  if (policy == P4Policy::kFirst) {
    if (auto p = find_restricted_p4(inst.graph())) return *p;
    throw std::logic_error("select_branching_p4: no restricted P4");
  }
  std::optional<RestrictedP4> best;
  int best_fixed = -1;
  Weight best_free = -1;
  // Equal permanent counts mean equal numbers of free vertices, so comparing
  // free weight sums compares their means.
  for_each_restricted_p4(inst.graph(), [&](const RestrictedP4& p) {
    int fixed = 0;
    Weight free = 0;
    for (VertexId x : p.vertices()) {
      if (inst.permanent(x))
        ++fixed;
      else
        free += inst.weight(x);
    }
    if (fixed > best_fixed || (fixed == best_fixed && free > best_free)) {
      best = p;
      best_fixed = fixed;
      best_free = free;
    }
    return true;
  });
  if (!best) throw std::logic_error("select_branching_p4: no restricted P4");
  return *best;
}

std::optional<Solution> branch(Instance& inst, const SolverConfig& config,
                               SolveStats& stats) {
  if (!inst.bounded()) throw std::invalid_argument("branch: unbounded budget");
  if (inst.infeasible()) return std::nullopt;
  Search search(inst, config, stats, Clock::now());
  return search.node();
}

std::optional<Solution> solve_components(Instance& inst,
                                         const SolverConfig& config,
                                         SolveStats& stats) {
  if (!inst.bounded())
    throw std::invalid_argument("solve_components: unbounded budget");
  if (inst.infeasible()) return std::nullopt;
  Search search(inst, config, stats, Clock::now());
  auto comps = search.open_components();
  if (comps.empty()) return Solution{};
  return search.schedule(std::move(comps));
}

SolveResult solve_minimum(Instance inst, const SolverConfig& config) {
  const auto start = Clock::now();
  const Instance original = inst;
  SolveResult res;
  Search search(inst, config, res.stats, start);
  try {
    inst.set_budget(std::nullopt);
    const std::size_t from = inst.deletions().size();
    if (search.reduce()) {
      const Solution root = inst.solution_since(from);
      Weight free_weight = 0;
      for (VertexId v : inst.graph().vertices())
        if (!inst.permanent(v)) free_weight += inst.weight(v);
      const Weight lb = search.lower_bound();
      res.stats.lb_root = root.cost + lb;
      for (Weight r = lb; r <= free_weight; ++r) {
        res.lower_bound = root.cost + r;
        const Instance::Checkpoint cp = inst.checkpoint();
        inst.set_budget(r);
        auto got = search.node();
        inst.rollback(cp);
        if (got) {
          res.solution = unite(inst, root, *got);
          res.stats.final_k = res.solution->cost;
          break;
        }
      }
    }
  } catch (const Aborted&) {
    res.timed_out = true;
  }
  res.stats.elapsed_ms = millis_since(start);
  if (res.solution) check_or_throw(original, *res.solution);
  return res;
}

SolveResult solve_minimum(const Graph& g, const SolverConfig& config) {
  return solve_minimum(Instance(g), config);
}

SolveResult solve_within(Instance inst, const SolverConfig& config) {
  if (!inst.bounded())
    throw std::invalid_argument("solve_within: unbounded budget");
  const auto start = Clock::now();
  const Instance original = inst;
  SolveResult res;
  Search search(inst, config, res.stats, start);
  res.stats.lb_root = search.lower_bound();
  res.lower_bound = 0;
  try {
    if (!inst.infeasible()) res.solution = search.node();
    if (res.solution)
      res.stats.final_k = res.solution->cost;
    else
      res.lower_bound = *inst.budget() + 1;
  } catch (const Aborted&) {
    res.timed_out = true;
  }
  res.stats.elapsed_ms = millis_since(start);
  if (res.solution) check_or_throw(original, *res.solution);
  return res;
}

}  // namespace twoclub
