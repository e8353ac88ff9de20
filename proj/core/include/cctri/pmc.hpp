#pragma once

#include <cstddef>
#include <vector>

#include "cctri/separators.hpp"

namespace cctri {

// Potential maximal clique test: G \ omega has no full component and every
// pair of omega is adjacent or shares a component of G \ omega in its
// neighbourhood.
bool is_pmc(const Graph& g, const VertexSet& omega);
bool is_pmc(const Graph& g, const VertexSet& omega, const VertexSet& within);

// Candidates N[v] that are potential maximal cliques, deduplicated and sorted.
std::vector<VertexSet> type1_pmcs(const Graph& g);

// For omega a PMC of G \ {v}, whichever of omega and omega + v is a PMC of G.
// Throws std::logic_error when neither or both are.
VertexSet lift_pmc(const Graph& g, Vertex v, const VertexSet& omega);

enum class SeparatorEnumeration { kHashed, kPolyspace };

struct PmcOptions {
  SeparatorEnumeration separators = SeparatorEnumeration::kHashed;
  int threads = 1;
};

// Incremental enumeration over the prefixes G[{0..i}]; PMCs may repeat. With
// kPolyspace separators the working memory is polynomial.
void enumerate_pmcs_dupes(const Graph& g, const VertexSetCallback& emit,
                          SeparatorEnumeration separators = SeparatorEnumeration::kPolyspace);

// All PMCs, deduplicated, in lexicographic order.
std::vector<VertexSet> enumerate_pmcs(const Graph& g, const PmcOptions& options = {});

// All PMCs, each exactly once, in lexicographic order, in polynomial working
// memory. Each restart of the duplicate stream keeps the `buffer` smallest
// PMCs above the last one reported. buffer == 0 picks max(n, 16).
void enumerate_pmcs_polyspace(const Graph& g, const VertexSetCallback& emit, std::size_t buffer = 0);
// As above; stops once `visit` returns false. Returns false iff stopped.
bool enumerate_pmcs_polyspace_until(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                                    std::size_t buffer = 0);

}  // namespace cctri
