#include "cctri/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cctri {

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* original) const {
  std::vector<Vertex> old = keep.to_vector();
  std::vector<Vertex> idx(n_, -1);
  for (std::size_t i = 0; i < old.size(); ++i) idx[old[i]] = static_cast<Vertex>(i);
  Graph h(static_cast<int>(old.size()));
  for (std::size_t i = 0; i < old.size(); ++i) {
    VertexSet nb = adj_[old[i]] & keep;
    for (Vertex u : nb)
      if (idx[u] > static_cast<Vertex>(i)) h.add_edge(static_cast<Vertex>(i), idx[u]);
  }
  if (original) *original = std::move(old);
  return h;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (Vertex v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(adj_[v])) return false;
  }
  return true;
}

bool Graph::is_connected() const { return n_ == 0 || cctri::is_connected(*this, vertices()); }

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out(g.n());
  for (Vertex v : x) out |= g.neighbors(v);
  out -= x;
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x, const VertexSet& within) {
  VertexSet out = neighborhood(g, x);
  out &= within;
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out = x;
  for (Vertex v : x) out |= g.neighbors(v);
  return out;
}

VertexSet component_containing(const Graph& g, const VertexSet& vertices, Vertex v) {
  VertexSet comp(g.n());
  comp.insert(v);
  VertexSet frontier = comp;
  VertexSet left = vertices;
  left.erase(v);
  while (!frontier.empty()) {
    VertexSet grow(g.n());
    for (Vertex u : frontier) grow |= g.neighbors(u);
    grow &= left;
    left -= grow;
    comp |= grow;
    frontier = std::move(grow);
  }
  return comp;
}

std::vector<VertexSet> components_of(const Graph& g, const VertexSet& vertices) {
  std::vector<VertexSet> out;
  VertexSet left = vertices;
  while (!left.empty()) {
    VertexSet c = component_containing(g, left, left.first());
    left -= c;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  return components_of(g, removed.complement());
}

bool is_connected(const Graph& g, const VertexSet& vertices) {
  if (vertices.empty()) return true;
  return component_containing(g, vertices, vertices.first()) == vertices;
}

CliqueCover::CliqueCover(int n, std::vector<VertexSet> cliques)
    : n_(n), cliques_(std::move(cliques)), members_(n) {
  if (cliques_.size() > static_cast<std::size_t>(Part::kMaxCliques))
    throw std::length_error("clique cover larger than 64 cliques");
  for (int i = 0; i < size(); ++i) {
    if (cliques_[i].universe() != n) throw std::invalid_argument("clique over wrong universe");
    for (Vertex v : cliques_[i]) members_[v].set(i);
  }
}

CliqueCover greedy_cover(const Graph& g) {
  const int n = g.n();
  if (n == 1) return CliqueCover(1, {VertexSet(1, {0})});
  std::vector<VertexSet> covered(n, VertexSet(n));
  std::vector<VertexSet> cliques;
  for (auto [u, v] : g.edges()) {
    if (covered[u].contains(v)) continue;
    VertexSet k(n, {u, v});
    VertexSet common = g.neighbors(u) & g.neighbors(v);
    while (!common.empty()) {
      Vertex w = common.first();
      k.insert(w);
      common &= g.neighbors(w);
    }
    for (Vertex a : k) covered[a] |= k;
    cliques.push_back(std::move(k));
  }
  if (cliques.size() > static_cast<std::size_t>(Part::kMaxCliques))
    throw std::length_error("greedy cover needs more than 64 cliques");
  return CliqueCover(n, std::move(cliques));
}

std::optional<std::string> cover_violation(const Graph& g, const CliqueCover& w) {
  const int n = g.n();
  if (w.universe() != n) return "cover universe does not match the graph";
  std::vector<VertexSet> covered(n, VertexSet(n));
  for (int i = 0; i < w.size(); ++i) {
    const VertexSet& k = w.clique(i);
    if (k.empty()) return "clique " + std::to_string(i) + " is empty";
    if (!g.is_clique(k)) return "clique " + std::to_string(i) + " is not complete";
    for (Vertex a : k) covered[a] |= k;
  }
  for (auto [u, v] : g.edges())
    if (!covered[u].contains(v))
      return "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " is not covered";
  if (n == 1 && w.member_mask(0).empty()) return "vertex 1 is not covered";
  return std::nullopt;
}

Part cliques_touching(const CliqueCover& w, const VertexSet& x) {
  Part p;
  for (Vertex v : x) p |= w.member_mask(v);
  return p;
}

VertexSet part_vertices(const CliqueCover& w, Part part) {
  VertexSet out(w.universe());
  for (Vertex v = 0; v < w.universe(); ++v)
    if (w.member_mask(v).is_subset_of(part)) out.insert(v);
  return out;
}

VertexSet part_vertices(const CliqueCover& w, Part w1, Part w2) {
  return part_vertices(w, w1) | part_vertices(w, w2);
}

std::vector<VertexSet> part_components(const Graph& g, const CliqueCover& w, Part part) {
  return components_of(g, part_vertices(w, part));
}

CliqueCover restrict_cover(const CliqueCover& w, const VertexSet& keep) {
  std::vector<Vertex> old = keep.to_vector();
  const int k = static_cast<int>(old.size());
  std::vector<Vertex> idx(w.universe(), -1);
  for (int i = 0; i < k; ++i) idx[old[i]] = i;
  std::vector<VertexSet> cliques;
  std::unordered_set<VertexSet> seen;
  VertexSet covered(k);
  for (const VertexSet& c : w.cliques()) {
    VertexSet r = c & keep;
    if (r.size() < 2) continue;
    VertexSet mapped(k);
    for (Vertex v : r) mapped.insert(idx[v]);
    if (!seen.insert(mapped).second) continue;
    covered |= mapped;
    cliques.push_back(std::move(mapped));
  }
  for (int i = 0; i < k; ++i)
    if (!covered.contains(i)) cliques.push_back(VertexSet(k, {i}));
  return CliqueCover(k, std::move(cliques));
}

}  // namespace cctri
