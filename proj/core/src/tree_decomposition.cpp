#include "cctri/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cctri {

int TreeDecomposition::width() const {
  int w = 0;
  for (const VertexSet& b : bags) w = std::max(w, b.size());
  return w - 1;
}

std::optional<std::string> decomposition_violation(const Graph& g, const TreeDecomposition& td) {
  const int k = static_cast<int>(td.bags.size());
  const int n = g.n();
  if (k == 0) return n == 0 ? std::nullopt : std::optional<std::string>("no bags");
  if (static_cast<int>(td.edges.size()) != k - 1) return "tree must have #bags - 1 edges";
  for (const VertexSet& b : td.bags)
    if (b.universe() != n) return "bag over the wrong universe";
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return "invalid tree edge";
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(k, -2);
  std::vector<int> order{0};
  parent[0] = -1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : adj[order[i]])
      if (parent[c] == -2) {
        parent[c] = order[i];
        order.push_back(c);
      }
  if (static_cast<int>(order.size()) != k) return "tree is not connected";

  VertexSet seen(n);
  for (const VertexSet& b : td.bags) seen |= b;
  if (seen.size() != n) return "vertex " + std::to_string(seen.complement().first() + 1) + " is in no bag";
  for (auto [u, v] : g.edges()) {
    bool ok = std::any_of(td.bags.begin(), td.bags.end(),
                          [&](const VertexSet& b) { return b.contains(u) && b.contains(v); });
    if (!ok) return "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " is in no bag";
  }
  // Bags holding v are connected iff exactly one of them has a parent
  // without v.
  for (Vertex v = 0; v < n; ++v) {
    int tops = 0;
    for (int i = 0; i < k; ++i)
      if (td.bags[i].contains(v) && (parent[i] < 0 || !td.bags[parent[i]].contains(v))) ++tops;
    if (tops != 1) return "bags containing vertex " + std::to_string(v + 1) + " are not connected";
  }
  return std::nullopt;
}

Graph triangulation_of(const Graph& g, const TreeDecomposition& td) {
  Graph h = g;
  for (const VertexSet& b : td.bags)
    for (Vertex u : b)
      for (Vertex v = b.next(u); v != -1; v = b.next(v)) h.add_edge(u, v);
  return h;
}

std::vector<Edge> fill_edges(const Graph& g, const Graph& h) {
  std::vector<Edge> out;
  for (auto e : h.edges())
    if (!g.adjacent(e.first, e.second)) out.push_back(e);
  return out;
}

namespace {

// Reverse of a maximum cardinality search order.
std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<bool> done(n, false);
  std::vector<Vertex> order(n);
  for (int i = n - 1; i >= 0; --i) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (best == -1 || weight[v] > weight[best])) best = v;
    done[best] = true;
    order[i] = best;
    for (Vertex u : g.neighbors(best))
      if (!done[u]) ++weight[u];
  }
  return order;
}

}  // namespace

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
  const int n = g.n();
  std::vector<Vertex> order = mcs_order(g);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    Vertex parent = -1;
    VertexSet later(n);
    for (Vertex u : g.neighbors(v))
      if (pos[u] > i) {
        later.insert(u);
        if (parent == -1 || pos[u] < pos[parent]) parent = u;
      }
    if (parent == -1) continue;
    later.erase(parent);
    if (!later.is_subset_of(g.neighbors(parent))) return std::nullopt;
  }
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

TreeDecomposition clique_tree(const Graph& chordal) {
  const int n = chordal.n();
  TreeDecomposition td;
  auto peo = perfect_elimination_order(chordal);
  if (!peo) return td;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*peo)[i]] = i;
  std::vector<VertexSet> cands;
  for (int i = 0; i < n; ++i) {
    Vertex v = (*peo)[i];
    VertexSet c(n, {v});
    for (Vertex u : chordal.neighbors(v))
      if (pos[u] > i) c.insert(u);
    cands.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cands.size() && maximal; ++j)
      if (i != j && cands[i].is_subset_of(cands[j]) && (cands[i] != cands[j] || j < i)) maximal = false;
    if (maximal) td.bags.push_back(cands[i]);
  }
  const int k = static_cast<int>(td.bags.size());
  std::vector<bool> in(k, false);
  std::vector<int> best(k, -1), link(k, -1);
  if (k > 0) in[0] = true;
  for (int j = 1; j < k; ++j) {
    best[j] = td.bags[0].intersection_size(td.bags[j]);
    link[j] = 0;
  }
  for (int step = 1; step < k; ++step) {
    int pick = -1;
    for (int j = 0; j < k; ++j)
      if (!in[j] && (pick == -1 || best[j] > best[pick])) pick = j;
    in[pick] = true;
    td.edges.emplace_back(link[pick], pick);
    for (int j = 0; j < k; ++j) {
      if (in[j]) continue;
      int w = td.bags[pick].intersection_size(td.bags[j]);
      if (w > best[j]) {
        best[j] = w;
        link[j] = pick;
      }
    }
  }
  return td;
}

}  // namespace cctri
