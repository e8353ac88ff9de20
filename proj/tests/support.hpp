#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "cctri/graph.hpp"
#include "cctri/oracle.hpp"

namespace cctri::test {

// Graphs and sets written with 1-based labels, as in the text formats.
inline Graph graph1(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

inline VertexSet set1(int n, std::initializer_list<int> elems) {
  VertexSet s(n);
  for (int v : elems) s.insert(v - 1);
  return s;
}

inline std::set<VertexSet> as_set(const std::vector<VertexSet>& v) { return {v.begin(), v.end()}; }

inline Graph p3() { return graph1(3, {{1, 2}, {2, 3}}); }
inline Graph c4() { return gen_cycle(4); }
inline Graph k4() { return gen_complete(4); }

struct CorpusGraph {
  Graph graph;
  int n;
  double p;
  std::uint64_t seed;
};

// Seeded random connected graphs with n in [4, max_n] and p in {0.2, 0.4, 0.6}.
inline std::vector<CorpusGraph> random_corpus(int count, int max_n = 12, std::uint64_t base_seed = 1000) {
  static constexpr double kProbs[] = {0.2, 0.4, 0.6};
  std::vector<CorpusGraph> out;
  for (int i = 0; i < count; ++i) {
    int n = 4 + i % (max_n - 3);
    double p = kProbs[(i / (max_n - 3)) % 3];
    std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    out.push_back({gen_random(n, p, seed), n, p, seed});
  }
  return out;
}

// Fixed structured graphs used alongside the random corpus.
inline std::vector<Graph> structured_corpus(int max_kcc2 = 6) {
  std::vector<Graph> out;
  for (int cc = 2; cc <= max_kcc2; ++cc) out.push_back(gen_kcc2(cc).graph);
  for (int n = 3; n <= 10; ++n) out.push_back(gen_cycle(n));
  for (int r = 1; r <= 3; ++r)
    for (int c = 2; c <= 4; ++c) out.push_back(gen_grid(r, c));
  for (int n = 1; n <= 5; ++n) out.push_back(gen_complete(n));
  for (int n = 4; n <= 8; n += 2) out.push_back(gen_matched_cliques(n));
  return out;
}

}  // namespace cctri::test
