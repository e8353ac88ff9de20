#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "cctri/graph.hpp"
#include "cctri/rational.hpp"

namespace cctri {

class Hypergraph;
class CharacterMatrix;

// Exhaustive reference implementations on 64-bit vertex masks. They share no
// code with the solvers beyond the Graph adjacency they read, and are meant
// for small inputs (n <= 16 for the subset dynamic programs).
namespace oracle {

using Mask = std::uint64_t;

std::vector<VertexSet> brute_minimal_separators(const Graph& g);
std::vector<VertexSet> brute_pmcs(const Graph& g);
std::vector<VertexSet> brute_blocks(const Graph& g);

// Dynamic programs over elimination orders: eliminating v after the set S
// makes Q(S, v), the vertices outside S + v reachable from v through S, a
// clique.
int brute_treewidth(const Graph& g);
// Sum over pairs of the weight of every fill edge; weight(u, v) is queried
// only for non-edges.
std::int64_t brute_weighted_fill(const Graph& g, const std::function<std::int64_t(Vertex, Vertex)>& weight);
std::int64_t brute_fill_in(const Graph& g);
bool brute_sandwich(const Graph& g, const std::function<bool(Vertex, Vertex)>& admissible);

// Fractional edge cover number by enumerating basic solutions of the LP.
Rational brute_fcov(const Hypergraph& h, const VertexSet& x);
Rational brute_fhtw(const Hypergraph& h);

// Four-gamete test over every completion of the missing cells by states the
// character already shows. Characters must have at most two states.
bool four_gamete(const CharacterMatrix& m);

}  // namespace oracle

// Deterministic instance generators.
struct GraphWithCover {
  Graph graph;
  CliqueCover cover;
};

// Vertices v_1..v_cc (indices 0..cc-1) then v_{i,j}, i < j, in lexicographic
// order; W_i = {v_i} + {v_{i,j}}. Requires cc >= 2.
GraphWithCover gen_kcc2(int cc);
// Two cliques on {0..n/2-1} and {n/2..n-1} with the matching i -- i+n/2.
// Requires n even and n >= 2.
Graph gen_matched_cliques(int n);
// G(n, p) resampled until connected. Throws for p == 0 with n > 1, and after
// 10000 failed draws.
Graph gen_random(int n, double p, std::uint64_t seed);
// Hypergraph with `edges` random hyperedges over n vertices, every vertex in
// at least one hyperedge.
Hypergraph gen_random_hypergraph(int n, int edges, std::uint64_t seed);
// Binary matrix; each cell is missing with probability `missing`.
CharacterMatrix gen_random_binary_matrix(int taxa, int characters, double missing, std::uint64_t seed);

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_complete(int n);
Graph gen_grid(int rows, int cols);

}  // namespace cctri
