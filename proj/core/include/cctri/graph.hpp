#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cctri/vertex_set.hpp"

namespace cctri {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return m_; }

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  // Edges {u, v} with u < v, sorted.
  std::vector<Edge> edges() const;

  // G[keep] relabelled to 0..|keep|-1 in increasing order. If `original` is
  // non-null it receives the old label of every new vertex.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* original = nullptr) const;

  bool is_clique(const VertexSet& s) const;
  bool is_complete() const { return is_clique(vertices()); }
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
};

// N(X) = (union of N(x)) \ X, optionally restricted to the induced subgraph
// G[within].
VertexSet neighborhood(const Graph& g, const VertexSet& x);
VertexSet neighborhood(const Graph& g, const VertexSet& x, const VertexSet& within);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

// Connected components of G[vertices], ordered by smallest vertex.
std::vector<VertexSet> components_of(const Graph& g, const VertexSet& vertices);
// Connected components of G \ removed.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
// Component of G[vertices] containing v (v must lie in `vertices`).
VertexSet component_containing(const Graph& g, const VertexSet& vertices, Vertex v);

bool is_connected(const Graph& g, const VertexSet& vertices);

// Edge clique cover: cliques whose edges together cover E.
class CliqueCover {
 public:
  CliqueCover() = default;
  CliqueCover(int n, std::vector<VertexSet> cliques);

  int size() const { return static_cast<int>(cliques_.size()); }
  int universe() const { return n_; }
  const VertexSet& clique(int i) const { return cliques_[i]; }
  const std::vector<VertexSet>& cliques() const { return cliques_; }

  // W[v]: cliques containing v.
  Part member_mask(Vertex v) const { return members_[v]; }
  Part all() const { return Part::all(size()); }

 private:
  int n_ = 0;
  std::vector<VertexSet> cliques_;
  std::vector<Part> members_;
};

// Greedy cover: each uncovered edge, in lexicographic order, is grown to a
// maximal clique by adding the smallest common neighbour. A graph with a
// single vertex gets the cover {{0}}.
CliqueCover greedy_cover(const Graph& g);

// Empty when the cover is valid for g; otherwise a description of the first
// violation. Isolated vertices in graphs with n >= 2 need not be covered.
std::optional<std::string> cover_violation(const Graph& g, const CliqueCover& w);
inline bool validate_cover(const Graph& g, const CliqueCover& w) { return !cover_violation(g, w); }

// W[X]: cliques intersecting X.
Part cliques_touching(const CliqueCover& w, const VertexSet& x);
// V(G, W') = {v : W[v] subset of W'}.
VertexSet part_vertices(const CliqueCover& w, Part part);
// V(G, W1, W2) = V(G, W1) | V(G, W2).
VertexSet part_vertices(const CliqueCover& w, Part w1, Part w2);
// Components of G[V(G, W')].
std::vector<VertexSet> part_components(const Graph& g, const CliqueCover& w, Part part);

// Cover of G[keep] (relabelled like Graph::induced): restrictions of the
// cliques with at least two kept vertices, deduplicated, plus singletons for
// vertices no such clique covers.
CliqueCover restrict_cover(const CliqueCover& w, const VertexSet& keep);

}  // namespace cctri
