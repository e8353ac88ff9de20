#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "cctri/graph.hpp"
#include "cctri/objective.hpp"
#include "cctri/rational.hpp"
#include "cctri/separators.hpp"
#include "cctri/tree_decomposition.hpp"

namespace cctri {

struct DpStats {
  std::size_t blocks = 0;
  std::size_t pmcs = 0;
  std::size_t candidates = 0;     // (block, PMC) pairs
  std::size_t table_entries = 0;  // blocks with a stored value
};

template <class V>
struct DpSolution {
  Extended<V> value;
  TreeDecomposition witness;  // empty when infeasible
  DpStats stats;
};

using FcovFunction = std::function<Rational(const VertexSet&)>;

// `pmcs` must be the potential maximal cliques of g (any order, no
// repeats). `cover`, when given, must be a valid cover of g; blocks are then
// keyed by their clique parts. Disconnected graphs are solved per component.
DpSolution<int> solve_treewidth(const Graph& g, const std::vector<VertexSet>& pmcs,
                                std::optional<int> bound = std::nullopt, const CliqueCover* cover = nullptr);
// Value in the weight table's scaled units.
DpSolution<std::int64_t> solve_weighted_fill(const Graph& g, const std::vector<VertexSet>& pmcs,
                                             const WeightTable& weights, const CliqueCover* cover = nullptr);
// Feasible (value 0) iff a triangulation adds only admissible pairs.
DpSolution<std::int64_t> solve_sandwich(const Graph& g, const std::vector<VertexSet>& pmcs,
                                        const AdmissibleSet& admissible, const CliqueCover* cover = nullptr);
DpSolution<Rational> solve_fhtw(const Graph& g, const std::vector<VertexSet>& pmcs, const FcovFunction& fcov,
                                const CliqueCover* cover = nullptr);

struct TreewidthObjective {
  std::optional<int> bound;
};
struct WeightedFillObjective {
  WeightTable weights;
};
struct SandwichObjective {
  AdmissibleSet admissible;
};
struct FhtwObjective {
  FcovFunction fcov;
};
using Objective = std::variant<TreewidthObjective, WeightedFillObjective, SandwichObjective, FhtwObjective>;

// Objective-independent view: value is empty when infeasible; weighted fill
// values are unscaled.
struct Solution {
  std::optional<Rational> value;
  TreeDecomposition witness;
  DpStats stats;
};
Solution solve(const Graph& g, const CliqueCover* cover, const Objective& obj, const std::vector<VertexSet>& pmcs);

// Blocks served by omega: for each component D of G \ omega with N(D) != {},
// the full component C of N(D) meeting omega \ N(D), together with the
// components of G \ omega inside C.
struct PmcAssignment {
  int block;
  std::vector<int> children;
};
std::vector<PmcAssignment> assign_pmc_to_blocks(const Graph& g, const BlockIndex& index, const VertexSet& omega);

// Chordal supergraph realised by a witness decomposition.
inline Graph extract_triangulation(const Graph& g, const TreeDecomposition& witness) {
  return triangulation_of(g, witness);
}

}  // namespace cctri
