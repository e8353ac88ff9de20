#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cctri/graph.hpp"
#include "cctri/objective.hpp"
#include "cctri/tree_decomposition.hpp"

namespace cctri {

// Input error with a 1-based line number (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// PACE graph: "c" comments, header "p tw <n> <m>", then m lines "u v" (1-based).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// One clique per line, 1-based vertex indices; "c" comments.
CliqueCover read_cover(std::istream& in, int n);
void write_cover(std::ostream& out, const CliqueCover& w);

// PACE decomposition: "s td <#bags> <width+1> <n>", "b <i> <v...>", tree edges "i j".
TreeDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const TreeDecomposition& td, int n);

// Lines "u v w" with decimal w on non-edges; unlisted non-edges weigh 1.
WeightTable read_weights(std::istream& in, const Graph& g);
// Lines "u v" listing admissible non-edges.
AdmissibleSet read_admissible(std::istream& in, const Graph& g);

// Helpers shared by the text parsers.
namespace detail {
bool is_comment(const std::string& line, char marker);
int parse_int(const std::string& tok, int line);
}  // namespace detail

}  // namespace cctri
