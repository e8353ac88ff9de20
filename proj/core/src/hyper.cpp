#include "cctri/hyper.hpp"

#include <sstream>
#include <stdexcept>

#include "cctri/btdp.hpp"
#include "cctri/io.hpp"
#include "cctri/lp.hpp"
#include "cctri/pmc.hpp"
#include "cctri/polyspace.hpp"

namespace cctri {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  return names;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : Hypergraph(default_names(n), std::move(edges)) {}

Hypergraph::Hypergraph(std::vector<std::string> names, std::vector<VertexSet> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const int n = static_cast<int>(names_.size());
  VertexSet covered(n);
  for (const VertexSet& e : edges_) {
    if (e.universe() != n) throw std::invalid_argument("hyperedge over the wrong vertex count");
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    covered |= e;
  }
  if (covered.size() != n) throw std::invalid_argument("vertex " + names_[covered.complement().first()] + " lies in no hyperedge");
}

Hypergraph Hypergraph::induced(const VertexSet& keep) const {
  std::vector<Vertex> idx(n(), -1);
  std::vector<std::string> names;
  for (Vertex v : keep) {
    idx[v] = static_cast<Vertex>(names.size());
    names.push_back(names_[v]);
  }
  const int k = static_cast<int>(names.size());
  std::vector<VertexSet> edges;
  for (const VertexSet& e : edges_) {
    VertexSet r(k);
    for (Vertex v : e & keep) r.insert(idx[v]);
    if (!r.empty()) edges.push_back(std::move(r));
  }
  return Hypergraph(std::move(names), std::move(edges));
}

Hypergraph read_hypergraph(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::vector<Vertex>> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<Vertex> edge;
    std::string tok;
    while (ss >> tok) {
      auto [it, fresh] = index.emplace(tok, static_cast<Vertex>(names.size()));
      if (fresh) names.push_back(tok);
      edge.push_back(it->second);
    }
    if (!edge.empty()) raw.push_back(std::move(edge));
  }
  if (raw.empty()) throw ParseError(lineno, "no hyperedges");
  const int n = static_cast<int>(names.size());
  std::vector<VertexSet> edges;
  for (const auto& e : raw) {
    VertexSet s(n);
    for (Vertex v : e) s.insert(v);
    edges.push_back(std::move(s));
  }
  return Hypergraph(std::move(names), std::move(edges));
}

PrimalGraph primal_graph(const Hypergraph& h) {
  Graph g(h.n());
  for (const VertexSet& e : h.edges())
    for (Vertex u : e)
      for (Vertex v = e.next(u); v != -1; v = e.next(v))
        if (!g.adjacent(u, v)) g.add_edge(u, v);
  std::vector<VertexSet> maximal;
  for (int i = 0; i < h.m(); ++i) {
    const VertexSet& e = h.edge(i);
    bool dominated = false;
    for (int j = 0; j < h.m() && !dominated; ++j) {
      if (i == j) continue;
      const VertexSet& f = h.edge(j);
      dominated = e.is_subset_of(f) && (e != f || j < i);
    }
    if (!dominated) maximal.push_back(e);
  }
  return {std::move(g), CliqueCover(h.n(), std::move(maximal))};
}

FractionalCover fractional_cover(const Hypergraph& h, const VertexSet& x) {
  FractionalCover out;
  out.weights.assign(h.m(), Rational(0));
  if (x.empty()) return out;
  std::vector<int> used;
  for (int i = 0; i < h.m(); ++i)
    if (h.edge(i).intersects(x)) used.push_back(i);
  LinearProgram lp;
  lp.variables = static_cast<int>(used.size());
  lp.objective.assign(used.size(), Rational(1));
  for (Vertex v : x) {
    std::vector<Rational> row(used.size(), Rational(0));
    bool any = false;
    for (std::size_t j = 0; j < used.size(); ++j)
      if (h.edge(used[j]).contains(v)) {
        row[j] = 1;
        any = true;
      }
    if (!any) throw std::invalid_argument("vertex " + h.name(v) + " lies in no hyperedge");
    lp.add_row(std::move(row), Relation::kGreaterEqual, Rational(1));
  }
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) throw std::logic_error("fractional cover LP not optimal");
  for (std::size_t j = 0; j < used.size(); ++j) out.weights[used[j]] = r.x[j];
  out.size = r.value;
  return out;
}

Rational fcov(const Hypergraph& h, const VertexSet& x) { return fractional_cover(h, x).size; }

Rational fractional_independent_set(const Hypergraph& h, const VertexSet& x) {
  if (x.empty()) return Rational(0);
  std::vector<Vertex> vs(x.begin(), x.end());
  LinearProgram lp;
  lp.variables = static_cast<int>(vs.size());
  lp.objective.assign(vs.size(), Rational(1));
  lp.maximize = true;
  for (const VertexSet& e : h.edges()) {
    if (!e.intersects(x)) continue;
    std::vector<Rational> row(vs.size(), Rational(0));
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (e.contains(vs[j])) row[j] = 1;
    lp.add_row(std::move(row), Relation::kLessEqual, Rational(1));
  }
  LpResult r = solve_lp(lp);
  if (r.status == LpStatus::kUnbounded) throw std::invalid_argument("a vertex of x lies in no hyperedge");
  if (r.status != LpStatus::kOptimal) throw std::logic_error("independent set LP not optimal");
  return r.value;
}

Rational FcovCache::operator()(const VertexSet& x) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(x); it != memo_.end()) {
      order_.splice(order_.begin(), order_, it->second.second);
      return it->second.first;
    }
  }
  Rational value = fcov(h_, x);
  std::lock_guard<std::mutex> lock(mu_);
  if (memo_.count(x)) return value;
  order_.push_front(x);
  memo_.emplace(x, std::make_pair(value, order_.begin()));
  while (memo_.size() > capacity_) {
    memo_.erase(order_.back());
    order_.pop_back();
  }
  return value;
}

std::size_t FcovCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

FhtwResult fhtw(const Hypergraph& h, FhtwAlgorithm algo) {
  PrimalGraph whole = primal_graph(h);
  FhtwResult out;
  out.value = 0;
  int prev_top = -1;
  for (const VertexSet& k : components(whole.graph, whole.graph.empty_set())) {
    std::vector<Vertex> orig(k.begin(), k.end());
    Hypergraph sub = h.induced(k);
    PrimalGraph p = primal_graph(sub);
    FcovCache cache(sub);
    FcovFunction f = [&cache](const VertexSet& x) { return cache(x); };
    Solution s;
    if (algo == FhtwAlgorithm::kBtdp) {
      s = solve(p.graph, &p.cover, FhtwObjective{f}, enumerate_pmcs(p.graph));
    } else {
      PolyspaceOptions opts;
      opts.witness = true;
      s = solve_polyspace(p.graph, p.cover, FhtwObjective{f}, opts);
    }
    if (!s.value) throw std::logic_error("fhtw found no decomposition");
    if (*s.value > out.value) out.value = *s.value;
    const int offset = static_cast<int>(out.witness.bags.size());
    for (const VertexSet& bag : s.witness.bags) {
      VertexSet b(h.n());
      for (Vertex v : bag) b.insert(orig[v]);
      out.bag_fcov.push_back(cache(bag));
      out.witness.bags.push_back(std::move(b));
    }
    for (auto [a, b] : s.witness.edges) out.witness.edges.emplace_back(a + offset, b + offset);
    if (prev_top >= 0) out.witness.edges.emplace_back(prev_top, offset);
    prev_top = offset;
  }
  return out;
}

}  // namespace cctri
