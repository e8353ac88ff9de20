#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cctri/graph.hpp"

namespace cctri {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // bag indices

  int width() const;
};

// Empty when td is a valid tree decomposition of g.
std::optional<std::string> decomposition_violation(const Graph& g, const TreeDecomposition& td);
inline bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
  return !decomposition_violation(g, td);
}

// G plus every pair inside a bag.
Graph triangulation_of(const Graph& g, const TreeDecomposition& td);
// Edges of h missing from g; h must be a supergraph on the same vertices.
std::vector<Edge> fill_edges(const Graph& g, const Graph& h);

// Perfect elimination order via maximum cardinality search, or empty when
// g is not chordal.
std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

// Clique tree of a chordal graph: maximal cliques joined by a maximum-weight
// spanning tree (forests of disconnected graphs are linked into one tree).
TreeDecomposition clique_tree(const Graph& chordal);

}  // namespace cctri
