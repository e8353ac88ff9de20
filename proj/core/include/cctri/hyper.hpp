#pragma once

#include <cstddef>
#include <istream>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cctri/graph.hpp"
#include "cctri/rational.hpp"
#include "cctri/tree_decomposition.hpp"

namespace cctri {

class Hypergraph {
 public:
  Hypergraph() = default;
  // Vertices 0..n-1 named "1".."n".
  Hypergraph(int n, std::vector<VertexSet> edges);
  Hypergraph(std::vector<std::string> names, std::vector<VertexSet> edges);

  int n() const { return static_cast<int>(names_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const VertexSet& edge(int i) const { return edges_[i]; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  // Sub-hypergraph on `keep` (relabelled in increasing order), keeping the
  // non-empty restrictions of the hyperedges.
  Hypergraph induced(const VertexSet& keep) const;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> edges_;
};

// One hyperedge per line of whitespace-separated vertex names; "#" starts a
// comment. Vertices are numbered by first appearance.
Hypergraph read_hypergraph(std::istream& in);

// Primal graph with the inclusion-maximal hyperedges as its clique cover.
struct PrimalGraph {
  Graph graph;
  CliqueCover cover;
};
PrimalGraph primal_graph(const Hypergraph& h);

struct FractionalCover {
  std::vector<Rational> weights;  // per hyperedge
  Rational size;
};

// Minimum fractional edge cover of x, solved exactly. Throws
// std::invalid_argument if a vertex of x lies in no hyperedge.
FractionalCover fractional_cover(const Hypergraph& h, const VertexSet& x);
Rational fcov(const Hypergraph& h, const VertexSet& x);
// Maximum fractional independent set of x (the dual LP).
Rational fractional_independent_set(const Hypergraph& h, const VertexSet& x);

// fcov with a bounded memo table; safe to share between threads.
class FcovCache {
 public:
  explicit FcovCache(const Hypergraph& h, std::size_t capacity = 1 << 16) : h_(h), capacity_(capacity) {}
  Rational operator()(const VertexSet& x) const;
  std::size_t size() const;

 private:
  const Hypergraph& h_;
  std::size_t capacity_;
  mutable std::mutex mu_;
  mutable std::list<VertexSet> order_;
  mutable std::unordered_map<VertexSet, std::pair<Rational, std::list<VertexSet>::iterator>> memo_;
};

enum class FhtwAlgorithm { kBtdp, kPolyspace };

struct FhtwResult {
  Rational value;
  TreeDecomposition witness;
  std::vector<Rational> bag_fcov;
};
// Disconnected hypergraphs are solved per component (maximum).
FhtwResult fhtw(const Hypergraph& h, FhtwAlgorithm algo = FhtwAlgorithm::kBtdp);

}  // namespace cctri
