#include "cctri/polyspace.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "cctri/pmc.hpp"

namespace cctri {

Graph realization(const Graph& g, const VertexSet& c, std::vector<Vertex>* original) {
  VertexSet sep = neighborhood(g, c);
  std::vector<Vertex> old;
  Graph r = g.induced(c | sep, &old);
  std::vector<Vertex> idx(g.n(), -1);
  for (std::size_t i = 0; i < old.size(); ++i) idx[old[i]] = static_cast<Vertex>(i);
  for (Vertex u : sep)
    for (Vertex v = sep.next(u); v != -1; v = sep.next(v)) r.add_edge(idx[u], idx[v]);
  if (original) *original = std::move(old);
  return r;
}

namespace {

struct TreewidthCost {
  using Value = int;
  std::optional<int> bound;
  Extended<int> local(const Graph&, const std::vector<Vertex>&, const VertexSet& omega) const {
    int w = omega.size() - 1;
    if (bound && w > *bound) return Extended<int>::infeasible();
    return w;
  }
  static Extended<int> combine(const Extended<int>& a, const Extended<int>& b) { return max(a, b); }
  static Extended<int> child_upper(const Extended<int>& best, const Extended<int>&) { return best; }
};

struct FillCost {
  using Value = std::int64_t;
  const WeightTable& w;
  Extended<Value> local(const Graph& g, const std::vector<Vertex>& orig, const VertexSet& omega) const {
    Value total = 0;
    for (Vertex u : omega) {
      VertexSet miss = omega - g.neighbors(u);
      for (Vertex v = miss.next(u); v != -1; v = miss.next(v)) total += w.at(orig[u], orig[v]);
    }
    return total;
  }
  static Extended<Value> combine(const Extended<Value>& a, const Extended<Value>& b) { return a + b; }
  static Extended<Value> child_upper(const Extended<Value>& best, const Extended<Value>& partial) {
    if (!best.feasible()) return best;
    return best.value() - partial.value();
  }
};

struct FhtwCost {
  using Value = Rational;
  const FcovFunction& fcov;
  int n;
  Extended<Value> local(const Graph&, const std::vector<Vertex>& orig, const VertexSet& omega) const {
    VertexSet x(n);
    for (Vertex v : omega) x.insert(orig[v]);
    return fcov(x);
  }
  static Extended<Value> combine(const Extended<Value>& a, const Extended<Value>& b) { return max(a, b); }
  static Extended<Value> child_upper(const Extended<Value>& best, const Extended<Value>&) { return best; }
};

std::uint64_t pmc_budget(int cc) {
  std::uint64_t b = 1;
  for (int i = 0; i < cc; ++i) {
    if (b > std::numeric_limits<std::uint64_t>::max() / 3) return std::numeric_limits<std::uint64_t>::max();
    b *= 3;
  }
  return b;
}

template <class Cost>
class Recursion {
 public:
  using V = typename Cost::Value;
  using E = Extended<V>;

  Recursion(const Cost& cost, int n, const PolyspaceOptions& options) : cost_(cost), n_(n), options_(options) {}

  // Optimum over minimal triangulations if it is below `upper`; otherwise
  // some value not below `upper`. With a cover the balance filter applies;
  // without one (`w` null) `cc` drives the counting guard. Stops at the first
  // value <= target. With `td`, appends the optimal decomposition and sets
  // *top to its root bag.
  E solve(const Graph& g, const std::vector<Vertex>& orig, const CliqueCover* w, int cc, const E& upper,
          const std::optional<V>& target, TreeDecomposition* td, int* top) {
    if (w) {
      if (auto bad = cover_violation(g, *w)) throw std::logic_error("recursive cover invalid: " + *bad);
    } else {
      std::uint64_t budget = pmc_budget(cc), count = 0;
      bool within = enumerate_pmcs_polyspace_until(g, [&](const VertexSet&) { return ++count <= budget; },
                                                   options_.buffer);
      if (!within) return E::infeasible();
    }
    const int child_cc = (cc + 1) / 2 + 1;
    E best = upper;
    std::optional<VertexSet> best_omega;
    bool too_many = false;
    enumerate_pmcs_polyspace_until(
        g,
        [&](const VertexSet& omega) {
          E v = cost_.local(g, orig, omega);
          if (!(v < best)) return true;
          std::vector<VertexSet> comps = components(g, omega);
          if (!w && static_cast<int>(comps.size()) > cc) {
            too_many = true;
            return false;
          }
          if (w)
            for (const VertexSet& c : comps)
              if (2 * cliques_touching(*w, c).count() > w->size()) return true;
          for (const VertexSet& c : comps) {
            E sub = child(g, orig, w, child_cc, c, Cost::child_upper(best, v), nullptr, nullptr);
            v = Cost::combine(v, sub);
            if (!(v < best)) return true;
          }
          best = v;
          best_omega = omega;
          return !(target && best.value() <= *target);
        },
        options_.buffer);
    if (too_many || !best_omega) return E::infeasible();
    if (td) {
      VertexSet bag(n_);
      for (Vertex v : *best_omega) bag.insert(orig[v]);
      *top = static_cast<int>(td->bags.size());
      td->bags.push_back(std::move(bag));
      for (const VertexSet& c : components(g, *best_omega)) {
        int sub_top = -1;
        const int first = static_cast<int>(td->bags.size());
        child(g, orig, w, child_cc, c, E::infeasible(), td, &sub_top);
        // The child's subtree joins at a bag holding N(C), which R(C) makes a clique.
        VertexSet sep(n_);
        for (Vertex v : neighborhood(g, c)) sep.insert(orig[v]);
        int join = sub_top;
        for (int i = first; i < static_cast<int>(td->bags.size()); ++i)
          if (sep.is_subset_of(td->bags[i])) {
            join = i;
            break;
          }
        td->edges.emplace_back(*top, join);
      }
    }
    return best;
  }

 private:
  E child(const Graph& g, const std::vector<Vertex>& orig, const CliqueCover* w, int cc, const VertexSet& c,
          const E& upper, TreeDecomposition* td, int* top) {
    std::vector<Vertex> local;
    Graph r = realization(g, c, &local);
    std::vector<Vertex> sub_orig(local.size());
    for (std::size_t i = 0; i < local.size(); ++i) sub_orig[i] = orig[local[i]];
    if (!w) return solve(r, sub_orig, nullptr, cc, upper, std::nullopt, td, top);
    std::vector<Vertex> idx(g.n(), -1);
    for (std::size_t i = 0; i < local.size(); ++i) idx[local[i]] = static_cast<Vertex>(i);
    std::vector<VertexSet> cliques;
    std::unordered_set<VertexSet> seen;
    auto add = [&](const VertexSet& k) {
      VertexSet m(r.n());
      for (Vertex v : k) m.insert(idx[v]);
      if (!m.empty() && seen.insert(m).second) cliques.push_back(std::move(m));
    };
    for (const VertexSet& k : w->cliques())
      if (k.intersects(c)) add(k);
    add(neighborhood(g, c));
    CliqueCover sub(r.n(), std::move(cliques));
    return solve(r, sub_orig, &sub, cc, upper, std::nullopt, td, top);
  }

  const Cost& cost_;
  int n_;
  PolyspaceOptions options_;
};

template <class Cost>
Solution run(const Graph& g, const CliqueCover* w, int cc, const Cost& cost, const PolyspaceOptions& options,
             const std::optional<typename Cost::Value>& target, bool sum) {
  using E = Extended<typename Cost::Value>;
  Recursion<Cost> rec(cost, g.n(), options);
  Solution out;
  E total = [&] {
    if constexpr (std::is_same_v<typename Cost::Value, Rational>)
      return E(Rational(0));
    else
      return E(typename Cost::Value{0});
  }();
  int prev_top = -1;
  for (const VertexSet& k : components(g, g.empty_set())) {
    std::vector<Vertex> orig;
    Graph sub = g.induced(k, &orig);
    std::optional<CliqueCover> sub_cover;
    if (w) sub_cover = restrict_cover(*w, k);
    int top = -1;
    E v = rec.solve(sub, orig, sub_cover ? &*sub_cover : nullptr, cc, E::infeasible(), target,
                    options.witness ? &out.witness : nullptr, &top);
    total = sum ? total + v : max(total, v);
    if (!v.feasible()) break;
    if (options.witness) {
      if (prev_top >= 0) out.witness.edges.emplace_back(prev_top, top);
      prev_top = top;
    }
  }
  if (total.feasible()) {
    out.value = Rational(total.value());
  } else {
    out.witness = {};
  }
  return out;
}

Solution dispatch(const Graph& g, const CliqueCover* w, int cc, const Objective& obj,
                  const PolyspaceOptions& options) {
  return std::visit(
      [&](const auto& o) -> Solution {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, TreewidthObjective>) {
          return run(g, w, cc, TreewidthCost{o.bound}, options, o.bound, false);
        } else if constexpr (std::is_same_v<T, WeightedFillObjective>) {
          Solution s = run(g, w, cc, FillCost{o.weights}, options, std::nullopt, true);
          if (s.value) {
            *s.value /= Rational(mpz_class(std::to_string(o.weights.scale())));
          }
          return s;
        } else if constexpr (std::is_same_v<T, FhtwObjective>) {
          if (!w) throw std::invalid_argument("fhtw needs the hyperedge cover");
          return run(g, w, cc, FhtwCost{o.fcov, g.n()}, options, std::nullopt, false);
        } else {
          throw std::invalid_argument("the polynomial-space solver does not handle sandwich");
        }
      },
      obj);
}

}  // namespace

Solution solve_polyspace(const Graph& g, const CliqueCover& w, const Objective& obj, const PolyspaceOptions& options) {
  if (auto bad = cover_violation(g, w)) throw std::invalid_argument("invalid cover: " + *bad);
  return dispatch(g, &w, w.size(), obj, options);
}

bool treewidth_polyspace(const Graph& g, const CliqueCover& w, int k) {
  return solve_polyspace(g, w, TreewidthObjective{k}).value.has_value();
}

Solution solve_polyspace_nocover(const Graph& g, int cc, const Objective& obj, const PolyspaceOptions& options) {
  if (cc < 1) throw std::invalid_argument("cc must be positive");
  if (std::holds_alternative<FhtwObjective>(obj))
    throw std::invalid_argument("the cover-free solver handles treewidth and weighted fill-in only");
  return dispatch(g, nullptr, cc, obj, options);
}

bool treewidth_polyspace_nocover(const Graph& g, int cc, int k) {
  return solve_polyspace_nocover(g, cc, TreewidthObjective{k}).value.has_value();
}

}  // namespace cctri
