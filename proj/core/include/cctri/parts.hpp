#pragma once

#include "cctri/graph.hpp"

namespace cctri {

// Every component of G[V(G, part)] is a block. Parts with no vertices are good.
bool is_good_part(const Graph& g, const CliqueCover& w, Part part);

// V(G, p1, p2) = V(G, p1 | p2). Throws std::invalid_argument unless p1 and p2
// are disjoint and non-empty.
bool are_compatible(const Graph& g, const CliqueCover& w, Part p1, Part p2);

}  // namespace cctri
