#include "twoclub/bench.hpp"

#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "twoclub/io.hpp"

namespace twoclub {

namespace {

std::vector<std::string_view> split_csv(std::string_view csv) {
  std::vector<std::string_view> out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    std::string_view item = csv.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t rule_index(std::string_view name) {
  for (std::size_t r = 0; r < kNumRules; ++r)
    if (rule_name(r) == name) return r;
  throw std::invalid_argument("unknown rule \"" + std::string(name) + "\"");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

RuleMask parse_rule_list(std::string_view csv) {
  if (csv == "all") return kAllRules;
  RuleMask mask = kNoRules;
  if (csv == "none") return mask;
  for (auto name : split_csv(csv)) mask[rule_index(name)] = true;
  return mask;
}

void apply_lb_list(SolverConfig& config, std::string_view csv) {
  config.lb1 = config.lb2 = csv == "all";
  if (csv == "all" || csv == "none") return;
  for (auto name : split_csv(csv)) {
    if (name == "lb1")
      config.lb1 = true;
    else if (name == "lb2")
      config.lb2 = true;
    else
      throw std::invalid_argument("unknown lower bound \"" + std::string(name) + "\"");
  }
}

void apply_config_json(SolverConfig& config, std::string_view json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  try {
    if (j.contains("rules")) {
      const json& r = j.at("rules");
      if (r.is_array()) {
        config.rules = kNoRules;
        for (const auto& name : r) config.rules[rule_index(name.get<std::string>())] = true;
      } else {
        for (auto it = r.begin(); it != r.end(); ++it)
          config.rules[rule_index(it.key())] = it.value().get<bool>();
      }
    }
    if (j.contains("lb1")) config.lb1 = j.at("lb1").get<bool>();
    if (j.contains("lb2")) config.lb2 = j.at("lb2").get<bool>();
    if (j.contains("permanent_branching"))
      config.permanent_branching = j.at("permanent_branching").get<bool>();
    if (j.contains("policy")) {
      const auto p = j.at("policy").get<std::string>();
      if (p == "most_permanent")
        config.policy = P4Policy::kMostPermanent;
      else if (p == "first")
        config.policy = P4Policy::kFirst;
      else
        throw std::invalid_argument("config: unknown policy \"" + p + "\"");
    }
    if (j.contains("max_passes")) config.max_passes = j.at("max_passes").get<unsigned>();
    if (j.contains("branch_limit"))
      config.branch_limit = j.at("branch_limit").get<std::uint64_t>();
    if (j.contains("time_limit"))
      config.time_limit_seconds = j.at("time_limit").get<double>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

std::string csv_header() {
  std::string h = "file,n,m,k_opt,branches,nodes,time_ms";
  for (std::size_t r = 0; r < kNumRules; ++r) (h += ',') += rule_name(r);
  return h + ",lb_root,timeout,status";
}

BatchResult run_batch(std::span<const std::string> inputs,
                      const SolverConfig& config, const BatchOptions& options) {
  struct Outcome {
    std::string row;
    enum { kSolved, kTimeout, kError } kind = kError;
  };
  std::vector<Outcome> outcomes(inputs.size());

  auto run_one = [&](std::size_t i) {
    Outcome& o = outcomes[i];
    std::ostringstream row;
    row << csv_field(inputs[i]) << ',';
    try {
      LabeledGraph lg = load_graph(inputs[i]);
      SolveResult res = solve_minimum(lg.graph, config);
      const SolveStats& st = res.stats;
      row << lg.graph.num_vertices() << ',' << lg.graph.num_edges() << ',';
      if (res.solution)
        row << res.solution->cost;
      row << ',' << st.branches << ',' << st.nodes << ',';
      if (options.record_time)
        row << std::fixed << std::setprecision(3) << st.elapsed_ms;
      else
        row << "NA";
      for (auto count : st.rule_applications) row << ',' << count;
      row << ',' << st.lb_root << ',' << (res.timed_out ? 1 : 0) << ','
          << (res.timed_out ? "timeout" : "ok");
      o.kind = res.timed_out ? Outcome::kTimeout : Outcome::kSolved;
    } catch (const std::exception& e) {
      row.str("");
      row << csv_field(inputs[i]) << ",,,,,,";
      for (std::size_t r = 0; r < kNumRules; ++r) row << ',';
      row << ",,," << csv_field(std::string("error: ") + e.what());
      o.kind = Outcome::kError;
    }
    o.row = row.str();
  };

  const unsigned workers =
      std::max(1U, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(inputs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) run_one(i);
      });
  }

  BatchResult result;
  result.csv = csv_header() + '\n';
  for (const Outcome& o : outcomes) {
    result.csv += o.row + '\n';
    switch (o.kind) {
      case Outcome::kSolved: ++result.solved; break;
      case Outcome::kTimeout: ++result.timeouts; break;
      case Outcome::kError: ++result.errors; break;
    }
  }
  return result;
}

}  // namespace twoclub
