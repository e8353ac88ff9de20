#include <random>
#include <stdexcept>

#include "cctri/hyper.hpp"
#include "cctri/oracle.hpp"
#include "cctri/phylo.hpp"

namespace cctri {

GraphWithCover gen_kcc2(int cc) {
  if (cc < 2 || cc > Part::kMaxCliques) throw std::invalid_argument("gen_kcc2 needs 2 <= cc <= 64");
  const int n = cc + cc * (cc - 1) / 2;
  std::vector<VertexSet> cliques(cc, VertexSet(n));
  for (int i = 0; i < cc; ++i) cliques[i].insert(i);
  int next = cc;
  for (int i = 0; i < cc; ++i)
    for (int j = i + 1; j < cc; ++j) {
      cliques[i].insert(next);
      cliques[j].insert(next);
      ++next;
    }
  Graph g(n);
  for (const VertexSet& k : cliques)
    for (Vertex u : k)
      for (Vertex v = k.next(u); v != -1; v = k.next(v)) g.add_edge(u, v);
  return {std::move(g), CliqueCover(n, std::move(cliques))};
}

Graph gen_matched_cliques(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("gen_matched_cliques needs an even n >= 2");
  const int h = n / 2;
  Graph g(n);
  for (int i = 0; i < h; ++i) {
    g.add_edge(i, i + h);
    for (int j = i + 1; j < h; ++j) {
      g.add_edge(i, j);
      g.add_edge(i + h, j + h);
    }
  }
  return g;
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random needs n >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability outside [0, 1]");
  if (n > 1 && p == 0) throw std::invalid_argument("p = 0 never yields a connected graph");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("gen_random found no connected graph in 10000 draws");
}

Hypergraph gen_random_hypergraph(int n, int edges, std::uint64_t seed) {
  if (n < 1 || edges < 1) throw std::invalid_argument("gen_random_hypergraph needs n, edges >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_vertex(0, n - 1);
  std::uniform_int_distribution<int> pick_edge(0, edges - 1);
  std::uniform_int_distribution<int> pick_size(1, std::min(n, 4));
  std::vector<VertexSet> es(edges, VertexSet(n));
  for (auto& e : es) {
    int size = pick_size(rng);
    while (e.size() < size) e.insert(pick_vertex(rng));
  }
  for (Vertex v = 0; v < n; ++v) {
    bool covered = false;
    for (const auto& e : es) covered = covered || e.contains(v);
    if (!covered) es[pick_edge(rng)].insert(v);
  }
  return Hypergraph(n, std::move(es));
}

CharacterMatrix gen_random_binary_matrix(int taxa, int characters, double missing, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution hole(missing);
  std::bernoulli_distribution bit(0.5);
  std::vector<std::string> tn, cn;
  for (int t = 0; t < taxa; ++t) tn.push_back("t" + std::to_string(t + 1));
  for (int c = 0; c < characters; ++c) cn.push_back("c" + std::to_string(c + 1));
  std::vector<std::vector<std::optional<std::string>>> cells(taxa);
  for (auto& row : cells)
    for (int c = 0; c < characters; ++c) {
      bool h = hole(rng);
      bool b = bit(rng);
      row.push_back(h ? std::nullopt : std::optional<std::string>(b ? "1" : "0"));
    }
  return CharacterMatrix(std::move(tn), std::move(cn), std::move(cells));
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycles need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph gen_path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph gen_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph gen_grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  return g;
}

}  // namespace cctri
