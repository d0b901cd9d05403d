#include "twoclub/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace twoclub {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                              : what),
      line_(line) {}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

struct Interner {
  LabeledGraph g;
  std::unordered_map<std::string, VertexId> ids;

  VertexId get(std::string_view label) {
    auto [it, fresh] = ids.try_emplace(std::string(label), 0);
    if (fresh) {
      it->second = g.graph.add_vertex();
      g.labels.emplace_back(label);
    }
    return it->second;
  }
};

std::string clean_label(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '_';
  return out.empty() ? "_" : out;
}

}  // namespace

LabeledGraph parse_edge_list(std::string_view text) {
  Interner in;
  for_each_line(text, [&](std::size_t no, std::string_view line) {
    auto tok = tokens(line);
    if (tok.empty()) return;
    if (tok.size() == 1) {
      in.get(tok[0]);
      return;
    }
    if (tok.size() != 2)
      throw ParseError(no, "expected \"u v\", got " + std::to_string(tok.size()) +
                               " tokens");
    if (tok[0] == tok[1]) throw ParseError(no, "self-loop on " + std::string(tok[0]));
    const VertexId u = in.get(tok[0]);
    const VertexId v = in.get(tok[1]);
    in.g.graph.add_edge(u, v);
  });
  return std::move(in.g);
}

std::string write_edge_list(const LabeledGraph& g) {
  std::ostringstream os;
  os << "# " << g.graph.num_vertices() << " vertices, " << g.graph.num_edges()
     << " edges\n";
  std::vector<std::string> name(g.graph.id_bound());
  for (VertexId v : g.graph.vertices()) {
    name[v] = v < g.labels.size() ? clean_label(g.labels[v]) : std::to_string(v);
    os << name[v] << '\n';
  }
  for (VertexId v : g.graph.vertices())
    g.graph.for_each_neighbor(v, [&](VertexId u) {
      if (v < u) os << name[v] << ' ' << name[u] << '\n';
    });
  return os.str();
}

std::string write_edge_list(const Graph& g) {
  LabeledGraph lg{g, {}};
  for (std::size_t v = 0; v < g.id_bound(); ++v) lg.labels.push_back(std::to_string(v));
  return write_edge_list(lg);
}

LabeledGraph threshold_convert(std::string_view text, double percent) {
  if (!(percent >= 0.0 && percent <= 100.0))
    throw std::invalid_argument("threshold percentage outside [0, 100]");
  struct Row {
    std::string u, v;
    double w;
  };
  std::vector<Row> rows;
  for_each_line(text, [&](std::size_t no, std::string_view line) {
    auto tok = tokens(line);
    if (tok.empty()) return;
    if (tok.size() != 3) throw ParseError(no, "expected \"u v w\"");
    if (tok[0] == tok[1]) throw ParseError(no, "self-loop on " + std::string(tok[0]));
    double w = 0;
    auto [ptr, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), w);
    if (ec != std::errc{} || ptr != tok[2].data() + tok[2].size() || !std::isfinite(w))
      throw ParseError(no, "malformed weight \"" + std::string(tok[2]) + "\"");
    rows.push_back({std::string(tok[0]), std::string(tok[1]), w});
  });

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].w > rows[b].w; });
  const long double want =
      std::ceil(static_cast<long double>(percent) * rows.size() / 100.0L - 1e-9L);
  const std::size_t keep = std::min(rows.size(), static_cast<std::size_t>(std::max(0.0L, want)));
  std::vector<char> kept(rows.size(), 0);
  for (std::size_t i = 0; i < keep; ++i) kept[order[i]] = 1;

  // Vertices in order of first appearance among kept edges, in input order.
  Interner in;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!kept[i]) continue;
    in.g.graph.add_edge(in.get(rows[i].u), in.get(rows[i].v));
  }
  return std::move(in.g);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LabeledGraph load_graph(std::string_view input) {
  constexpr std::string_view prefix = "fixture:";
  if (input.starts_with(prefix)) return fixture(input.substr(prefix.size()));
  return parse_edge_list(read_file(std::string(input)));
}

}  // namespace twoclub
