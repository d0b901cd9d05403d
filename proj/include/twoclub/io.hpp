#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "twoclub/gen.hpp"

namespace twoclub {

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// "u v" per line, '#' starts a comment, blank lines are skipped. A line
/// with a single token declares an isolated vertex. Labels get dense ids in
/// order of first appearance; duplicate edges collapse.
LabeledGraph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: every vertex is declared in id order, then
/// each edge once, so parsing the output reproduces the same ids.
std::string write_edge_list(const LabeledGraph& g);
std::string write_edge_list(const Graph& g);

/// "u v w" per line with real weights. Keeps the ceil(c/100 * m) heaviest
/// edges (input order breaks ties), then drops isolated vertices.
LabeledGraph threshold_convert(std::string_view text, double percent);

/// "fixture:<name>" or a path to an edge-list file.
LabeledGraph load_graph(std::string_view input);

std::string read_file(const std::string& path);

}  // namespace twoclub
