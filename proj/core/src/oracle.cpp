#include "cctri/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cctri/hyper.hpp"
#include "cctri/phylo.hpp"

namespace cctri::oracle {

namespace {

struct MaskGraph {
  int n;
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : n(g.n()), adj(g.n(), 0) {
    if (n > 62) throw std::invalid_argument("oracle graphs are limited to 62 vertices");
    for (auto [u, v] : g.edges()) {
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
  }

  Mask all() const { return (Mask{1} << n) - 1; }

  Mask nbhd(Mask x) const {
    Mask out = 0;
    for (Mask y = x; y; y &= y - 1) out |= adj[std::countr_zero(y)];
    return out & ~x;
  }

  Mask reach(Mask avail, int v) const {
    Mask comp = Mask{1} << v, frontier = comp;
    while (frontier) {
      Mask grow = nbhd(frontier) & avail & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return comp;
  }

  std::vector<Mask> comps(Mask vertices) const {
    std::vector<Mask> out;
    while (vertices) {
      Mask c = reach(vertices, std::countr_zero(vertices));
      out.push_back(c);
      vertices &= ~c;
    }
    return out;
  }

  bool minsep(Mask s) const {
    int full = 0;
    for (Mask c : comps(all() & ~s))
      if (nbhd(c) == s) ++full;
    return full >= 2;
  }

  // Q(S, v): vertices outside S + v reachable from v through S.
  Mask q(Mask s, int v) const { return nbhd(reach(s | (Mask{1} << v), v)) & ~s; }
};

VertexSet to_set(Mask m, int n) {
  VertexSet s(n);
  for (; m; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

std::vector<VertexSet> sorted_sets(const std::vector<Mask>& masks, int n) {
  std::vector<VertexSet> out;
  for (Mask m : masks) out.push_back(to_set(m, n));
  std::sort(out.begin(), out.end());
  return out;
}

void require_small(int n, int limit = 24) {
  if (n > limit) throw std::invalid_argument("subset oracles are limited to " + std::to_string(limit) + " vertices");
}

// Listing oracles keep no table, so they only pay in time.
constexpr int kListingLimit = 30;

// min over elimination orders of the combination of per-step costs.
template <class T, class Step, class Combine>
T elimination_dp(int n, T zero, T inf, Step step, Combine combine) {
  require_small(n);
  std::vector<T> f(std::size_t{1} << n, inf);
  f[0] = zero;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    T best = inf;
    for (Mask y = s; y; y &= y - 1) {
      int v = std::countr_zero(y);
      Mask rest = s & ~(Mask{1} << v);
      if (f[rest] == inf) continue;
      T c = step(rest, v);
      if (c == inf) continue;
      T val = combine(f[rest], c);
      if (val < best) best = val;
    }
    f[s] = best;
  }
  return f.back();
}

}  // namespace

std::vector<VertexSet> brute_minimal_separators(const Graph& g) {
  MaskGraph mg(g);
  require_small(mg.n, kListingLimit);
  std::vector<Mask> out;
  for (Mask s = 1; s <= mg.all(); ++s)
    if (mg.minsep(s)) out.push_back(s);
  return sorted_sets(out, mg.n);
}

std::vector<VertexSet> brute_pmcs(const Graph& g) {
  MaskGraph mg(g);
  require_small(mg.n, kListingLimit);
  std::vector<Mask> out;
  for (Mask om = 1; om <= mg.all(); ++om) {
    std::vector<Mask> nb;
    bool ok = true;
    for (Mask c : mg.comps(mg.all() & ~om)) {
      Mask nc = mg.nbhd(c);
      if (nc == om) {
        ok = false;
        break;
      }
      nb.push_back(nc);
    }
    for (Mask x = om; ok && x; x &= x - 1) {
      int u = std::countr_zero(x);
      for (Mask y = x & (x - 1); ok && y; y &= y - 1) {
        int v = std::countr_zero(y);
        if (mg.adj[u] >> v & 1) continue;
        Mask pair = (Mask{1} << u) | (Mask{1} << v);
        ok = std::any_of(nb.begin(), nb.end(), [&](Mask m) { return (m & pair) == pair; });
      }
    }
    if (ok) out.push_back(om);
  }
  return sorted_sets(out, mg.n);
}

std::vector<VertexSet> brute_blocks(const Graph& g) {
  MaskGraph mg(g);
  require_small(mg.n);
  std::unordered_set<Mask> seps;
  for (Mask s = 1; s <= mg.all(); ++s)
    if (mg.minsep(s)) seps.insert(s);
  std::vector<Mask> out;
  for (Mask c = 1; c <= mg.all(); ++c)
    if (mg.reach(c, std::countr_zero(c)) == c && seps.contains(mg.nbhd(c))) out.push_back(c);
  return sorted_sets(out, mg.n);
}

int brute_treewidth(const Graph& g) {
  MaskGraph mg(g);
  if (mg.n == 0) return -1;
  const int inf = std::numeric_limits<int>::max();
  return elimination_dp<int>(
      mg.n, 0, inf, [&](Mask s, int v) { return std::popcount(mg.q(s, v)); },
      [](int a, int b) { return std::max(a, b); });
}

std::int64_t brute_weighted_fill(const Graph& g, const std::function<std::int64_t(Vertex, Vertex)>& weight) {
  MaskGraph mg(g);
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  return elimination_dp<std::int64_t>(
      mg.n, 0, inf,
      [&](Mask s, int v) {
        std::int64_t c = 0;
        for (Mask y = mg.q(s, v) & ~mg.adj[v]; y; y &= y - 1) c += weight(v, std::countr_zero(y));
        return c;
      },
      [](std::int64_t a, std::int64_t b) { return a + b; });
}

std::int64_t brute_fill_in(const Graph& g) {
  return brute_weighted_fill(g, [](Vertex, Vertex) { return std::int64_t{1}; });
}

bool brute_sandwich(const Graph& g, const std::function<bool(Vertex, Vertex)>& admissible) {
  MaskGraph mg(g);
  return elimination_dp<int>(
             mg.n, 0, 1,
             [&](Mask s, int v) {
               for (Mask y = mg.q(s, v) & ~mg.adj[v]; y; y &= y - 1)
                 if (!admissible(v, std::countr_zero(y))) return 1;
               return 0;
             },
             [](int a, int b) { return std::max(a, b); }) == 0;
}

namespace {

// Solves a square system exactly; false when singular.
bool solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t k = b.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

Rational brute_fcov(const Hypergraph& h, const VertexSet& x) {
  if (x.empty()) return 0;
  if (h.n() > 62) throw std::invalid_argument("oracle hypergraphs are limited to 62 vertices");
  Mask xm = 0;
  for (Vertex v : x) xm |= Mask{1} << v;
  // Restricted hyperedges, duplicates and dominated ones dropped.
  std::vector<Mask> edges;
  for (const VertexSet& e : h.edges()) {
    Mask m = 0;
    for (Vertex v : e) m |= Mask{1} << v;
    if (m & xm) edges.push_back(m & xm);
  }
  std::vector<Mask> keep;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < edges.size() && !dominated; ++j)
      if (i != j && (edges[i] & ~edges[j]) == 0 && (edges[i] != edges[j] || j < i)) dominated = true;
    if (!dominated) keep.push_back(edges[i]);
  }
  const int m = static_cast<int>(keep.size());
  // Rows: membership pattern of each vertex; drop patterns implied by others.
  std::vector<Mask> rows;
  for (Vertex v : x) {
    Mask r = 0;
    for (int i = 0; i < m; ++i)
      if (keep[i] >> v & 1) r |= Mask{1} << i;
    if (r == 0) throw std::invalid_argument("vertex in no hyperedge");
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<Mask> tight_rows;
  for (Mask r : rows)
    if (std::none_of(rows.begin(), rows.end(), [&](Mask o) { return o != r && (o & ~r) == 0; }))
      tight_rows.push_back(r);
  const int nr = static_cast<int>(tight_rows.size());

  std::optional<Rational> best;
  // A basic solution: free variables F (|F| = t) and t tight rows.
  for (Mask f = 1; f < (Mask{1} << m); ++f) {
    const int t = std::popcount(f);
    if (t > nr) continue;
    std::vector<int> fv;
    for (Mask y = f; y; y &= y - 1) fv.push_back(std::countr_zero(y));
    for (Mask rs = 0; rs < (Mask{1} << nr); ++rs) {
      if (std::popcount(rs) != t) continue;
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (Mask y = rs; y; y &= y - 1) {
        Mask r = tight_rows[std::countr_zero(y)];
        std::vector<Rational> row;
        for (int var : fv) row.emplace_back((r >> var & 1) ? 1 : 0);
        a.push_back(std::move(row));
        b.emplace_back(1);
      }
      std::vector<Rational> sol;
      if (!solve_square(a, b, sol)) continue;
      if (std::any_of(sol.begin(), sol.end(), [](const Rational& q) { return q < 0; })) continue;
      bool feasible = true;
      for (Mask r : tight_rows) {
        Rational lhs = 0;
        for (int i = 0; i < t; ++i)
          if (r >> fv[i] & 1) lhs += sol[i];
        if (lhs < 1) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      Rational total = 0;
      for (const Rational& q : sol) total += q;
      if (!best || total < *best) best = total;
    }
  }
  return *best;
}

Rational brute_fhtw(const Hypergraph& h) {
  const int n = h.n();
  require_small(n);
  std::vector<Mask> adj(n, 0);
  for (const VertexSet& e : h.edges())
    for (Vertex u : e)
      for (Vertex v : e)
        if (u != v) adj[u] |= Mask{1} << v;
  auto nbhd = [&](Mask x) {
    Mask out = 0;
    for (Mask y = x; y; y &= y - 1) out |= adj[std::countr_zero(y)];
    return out & ~x;
  };
  auto q = [&](Mask s, int v) {
    Mask comp = Mask{1} << v, frontier = comp, avail = s | comp;
    while (frontier) {
      Mask grow = nbhd(frontier) & avail & ~comp;
      comp |= grow;
      frontier = grow;
    }
    return nbhd(comp) & ~s;
  };
  std::unordered_map<Mask, Rational> memo;
  auto cost = [&](Mask bag) -> const Rational& {
    auto it = memo.find(bag);
    if (it == memo.end()) it = memo.emplace(bag, brute_fcov(h, to_set(bag, n))).first;
    return it->second;
  };
  std::vector<std::optional<Rational>> f(std::size_t{1} << n);
  f[0] = Rational(0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    std::optional<Rational> best;
    for (Mask y = s; y; y &= y - 1) {
      int v = std::countr_zero(y);
      Mask rest = s & ~(Mask{1} << v);
      Rational val = std::max(*f[rest], cost(q(rest, v) | (Mask{1} << v)));
      if (!best || val < *best) best = val;
    }
    f[s] = best;
  }
  return *f.back();
}

bool four_gamete(const CharacterMatrix& m) {
  const int t = m.taxa();
  if (t > 64) throw std::invalid_argument("four-gamete oracle is limited to 64 taxa");
  struct Column {
    Mask ones = 0;
    std::vector<int> missing;
  };
  std::vector<Column> cols;
  for (int c = 0; c < m.characters(); ++c) {
    std::vector<std::string> states;
    Column col;
    for (int i = 0; i < t; ++i) {
      const auto& cell = m.cell(i, c);
      if (!cell) {
        col.missing.push_back(i);
        continue;
      }
      auto it = std::find(states.begin(), states.end(), *cell);
      if (it == states.end()) {
        states.push_back(*cell);
        it = states.end() - 1;
      }
      if (states.size() > 2) throw std::invalid_argument("four-gamete oracle needs binary characters");
      if (it - states.begin() == 1) col.ones |= Mask{1} << i;
    }
    if (states.size() == 2) cols.push_back(std::move(col));
  }
  const Mask all = t == 64 ? ~Mask{0} : (Mask{1} << t) - 1;
  auto conflict = [&](Mask a, Mask b) {
    return (a & b) && (a & ~b & all) && (~a & b & all) && (~a & ~b & all);
  };
  std::vector<Mask> chosen;
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == cols.size()) return true;
    const Column& col = cols[j];
    for (Mask fill = 0; fill < (Mask{1} << col.missing.size()); ++fill) {
      Mask ones = col.ones;
      for (std::size_t k = 0; k < col.missing.size(); ++k)
        if (fill >> k & 1) ones |= Mask{1} << col.missing[k];
      if (std::any_of(chosen.begin(), chosen.end(), [&](Mask o) { return conflict(o, ones); })) continue;
      chosen.push_back(ones);
      if (self(self, j + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace cctri::oracle
