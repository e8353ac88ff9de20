#pragma once

#include <cstddef>

#include "cctri/btdp.hpp"
#include "cctri/graph.hpp"

namespace cctri {

struct PolyspaceOptions {
  // PMCs kept per restart of the duplicate stream; 0 picks max(n, 16).
  std::size_t buffer = 0;
  bool witness = false;
};

// Recursion over balanced PMCs: a PMC is tried only when every component C
// of G \ omega has |W[C]| <= |W| / 2, and each R(C) is solved recursively with
// the cover W[C] + {N(C)}. No tables are kept, so working memory is
// polynomial. Supports treewidth (optionally bounded), weighted fill-in and
// fhtw; throws std::invalid_argument for sandwich. Disconnected graphs are
// solved per component.
Solution solve_polyspace(const Graph& g, const CliqueCover& w, const Objective& obj,
                         const PolyspaceOptions& options = {});
// tw(G) <= k.
bool treewidth_polyspace(const Graph& g, const CliqueCover& w, int k);

// Variant given only an integer cc: returns infeasible when |Pi(G)| > 3^cc
// or (per graph) some PMC leaves more than cc components, and recurses with
// ceil(cc / 2) + 1. The value is never below the optimum, and equals it when
// G has an edge clique cover of size cc. Treewidth and weighted fill-in only.
Solution solve_polyspace_nocover(const Graph& g, int cc, const Objective& obj,
                                 const PolyspaceOptions& options = {});
// Decision form of the same recursion, checking PMCs in lexicographic order.
bool treewidth_polyspace_nocover(const Graph& g, int cc, int k);

// R(C): G[N[C]] with N(C) completed to a clique, relabelled in increasing
// order; `original` receives the old labels.
Graph realization(const Graph& g, const VertexSet& c, std::vector<Vertex>* original = nullptr);

}  // namespace cctri
