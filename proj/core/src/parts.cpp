#include "cctri/parts.hpp"

#include <stdexcept>

#include "cctri/separators.hpp"

namespace cctri {

bool is_good_part(const Graph& g, const CliqueCover& w, Part part) {
  for (const VertexSet& c : part_components(g, w, part))
    if (!is_minimal_separator(g, neighborhood(g, c))) return false;
  return true;
}

bool are_compatible(const Graph& g, const CliqueCover& w, Part p1, Part p2) {
  (void)g;
  if (p1.empty() || p2.empty() || p1.intersects(p2)) throw std::invalid_argument("parts must be disjoint and non-empty");
  return part_vertices(w, p1, p2) == part_vertices(w, p1 | p2);
}

}  // namespace cctri
