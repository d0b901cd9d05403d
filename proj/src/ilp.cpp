#include "twoclub/ilp.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace twoclub {

IlpModel build_model(const Graph& g) {
  IlpModel m;
  m.variables = g.vertices();
  m.cost.assign(m.variables.size(), 1);
  for (VertexId s : m.variables)
    g.for_each_neighbor(s, [&](VertexId t) {
      g.for_each_neighbor(t, [&](VertexId u) {
        if (u == s || g.adjacent(u, s)) return;
        g.for_each_neighbor(u, [&](VertexId v) {
          if (v <= s || v == t || g.adjacent(v, s) || g.adjacent(v, t)) return;
          P4Constraint c{{s, t, u, v}, {}};
          g.for_each_neighbor(s, [&](VertexId b) {
            if (g.adjacent(b, v)) c.common.push_back(b);
          });
          m.constraints.push_back(std::move(c));
        });
      });
    });
  return m;
}

IlpModel build_model(const Instance& inst, bool weighted) {
  IlpModel m = build_model(inst.graph());
  for (std::size_t i = 0; i < m.variables.size(); ++i) {
    if (weighted) m.cost[i] = inst.weight(m.variables[i]);
    if (inst.permanent(m.variables[i])) m.fixed_zero.push_back(m.variables[i]);
  }
  return m;
}

namespace {

constexpr std::size_t kLineWidth = 78;

// Appends terms, wrapping before the line grows past kLineWidth.
class Wrapped {
 public:
  explicit Wrapped(std::ostringstream& os, std::string head)
      : os_(os), line_(std::move(head)) {}
  void term(const std::string& t) {
    if (line_.size() + t.size() + 1 > kLineWidth) {
      os_ << line_ << '\n';
      line_ = "   ";
    }
    line_ += ' ';
    line_ += t;
  }
  void finish() { os_ << line_ << '\n'; }

 private:
  std::ostringstream& os_;
  std::string line_;
};

std::string var(VertexId v) { return "v" + std::to_string(v); }

}  // namespace

std::string to_lp_text(const IlpModel& model) {
  std::ostringstream os;
  os << "\\ 2-club cluster vertex deletion\n";
  os << "Minimize\n";
  {
    Wrapped obj(os, " obj:");
    if (model.variables.empty()) obj.term("0");
    for (std::size_t i = 0; i < model.variables.size(); ++i) {
      std::string t = i == 0 ? "" : "+ ";
      if (model.cost[i] != 1) t += std::to_string(model.cost[i]) + " ";
      obj.term(t + var(model.variables[i]));
    }
    obj.finish();
  }
  os << "Subject To\n";
  for (std::size_t i = 0; i < model.constraints.size(); ++i) {
    const P4Constraint& c = model.constraints[i];
    Wrapped row(os, " p4_" + std::to_string(i) + ":");
    for (std::size_t j = 0; j < 4; ++j)
      row.term((j == 0 ? "" : "+ ") + var(c.path[j]));
    for (VertexId b : c.common) row.term("- " + var(b));
    row.term(">= " + std::to_string(c.rhs()));
    row.finish();
  }
  if (!model.fixed_zero.empty()) {
    os << "Bounds\n";
    for (VertexId v : model.fixed_zero) os << ' ' << var(v) << " = 0\n";
  }
  os << "Binary\n";
  {
    Wrapped bin(os, "");
    for (VertexId v : model.variables) bin.term(var(v));
    bin.finish();
  }
  os << "End\n";
  return os.str();
}

void write_lp(const IlpModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << to_lp_text(model);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

namespace {

void check_complete(std::span<const VertexId> vars, std::size_t bound,
                    std::span<const std::uint8_t> x) {
  if (x.size() < bound)
    throw std::invalid_argument("assignment does not cover every vertex");
  for (VertexId v : vars)
    if (x[v] > 1) throw std::invalid_argument("assignment value outside {0,1}");
}

}  // namespace

bool check_assignment(const IlpModel& model,
                      std::span<const std::uint8_t> x) {
  std::size_t bound = 0;
  for (VertexId v : model.variables) bound = std::max<std::size_t>(bound, v + 1);
  check_complete(model.variables, bound, x);
  for (VertexId v : model.fixed_zero)
    if (x[v] != 0) return false;
  for (const P4Constraint& c : model.constraints) {
    long lhs = 0;
    for (VertexId v : c.path) lhs += x[v];
    for (VertexId b : c.common) lhs -= x[b];
    if (lhs < c.rhs()) return false;
  }
  return true;
}

bool check_assignment(const Graph& g, std::span<const std::uint8_t> x) {
  check_complete(g.vertices(), g.id_bound(), x);
  return check_assignment(build_model(g), x);
}

}  // namespace twoclub
