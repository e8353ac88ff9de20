#include "cctri/btdp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace cctri {

std::vector<PmcAssignment> assign_pmc_to_blocks(const Graph& g, const BlockIndex& index, const VertexSet& omega) {
  auto lookup = [&](const VertexSet& c) {
    int id = index.lookup(c);
    if (id < 0) throw std::logic_error("component is not a block");
    return id;
  };
  std::vector<VertexSet> comps;
  for (VertexSet& d : components(g, omega))
    if (!neighborhood(g, d).empty()) comps.push_back(std::move(d));
  std::vector<PmcAssignment> out;
  for (const VertexSet& d : comps) {
    VertexSet s = neighborhood(g, d);
    VertexSet rest = omega - s;
    if (rest.empty()) throw std::logic_error("component is full for a PMC");
    VertexSet c = component_containing(g, s.complement(), rest.first());
    int id = lookup(c);
    if (std::any_of(out.begin(), out.end(), [&](const PmcAssignment& a) { return a.block == id; })) continue;
    PmcAssignment a{id, {}};
    for (const VertexSet& e : comps)
      if (e.intersects(c)) a.children.push_back(lookup(e));
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

struct TreewidthModel {
  using Value = int;
  std::optional<int> bound;
  Extended<int> local(const VertexSet& omega, const VertexSet&) const {
    int w = omega.size() - 1;
    if (bound && w > *bound) return Extended<int>::infeasible();
    return w;
  }
  Extended<int> root(const VertexSet&) const { return 0; }
  static Extended<int> combine(const Extended<int>& a, const Extended<int>& b) { return max(a, b); }
  static Extended<int> identity() { return 0; }
};

struct FillModel {
  using Value = std::int64_t;
  const Graph& g;
  const WeightTable& w;
  Extended<Value> local(const VertexSet& omega, const VertexSet& sep) const { return w.fill_cost(g, omega, sep); }
  Extended<Value> root(const VertexSet& s) const { return w.fill_cost(g, s); }
  static Extended<Value> combine(const Extended<Value>& a, const Extended<Value>& b) { return a + b; }
  static Extended<Value> identity() { return Value{0}; }
};

struct FhtwModel {
  using Value = Rational;
  const FcovFunction& fcov;
  Extended<Value> local(const VertexSet& omega, const VertexSet&) const { return fcov(omega); }
  Extended<Value> root(const VertexSet&) const { return Rational(0); }
  static Extended<Value> combine(const Extended<Value>& a, const Extended<Value>& b) { return max(a, b); }
  static Extended<Value> identity() { return Rational(0); }
};

template <class Model>
class BtDp {
 public:
  using V = typename Model::Value;

  BtDp(const Graph& g, const std::vector<VertexSet>& pmcs, const CliqueCover* cover, const Model& model)
      : g_(g), pmcs_(pmcs), model_(model), index_(g, enumerate_minimal_separators(g), cover) {}

  DpSolution<V> run() {
    DpSolution<V> out;
    const int nb = index_.size();
    std::vector<std::vector<Candidate>> cands(nb);
    for (std::size_t p = 0; p < pmcs_.size(); ++p)
      for (PmcAssignment& a : assign_pmc_to_blocks(g_, index_, pmcs_[p])) {
        cands[a.block].push_back(Candidate{static_cast<int>(p), std::move(a.children)});
        ++out.stats.candidates;
      }
    std::vector<int> order(nb);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return index_.block(a).vertices.size() < index_.block(b).vertices.size();
    });
    value_.assign(nb, Extended<V>::infeasible());
    choice_.assign(nb, -1);
    for (int b : order) {
      const Block& blk = index_.block(b);
      for (std::size_t i = 0; i < cands[b].size(); ++i) {
        const Candidate& c = cands[b][i];
        Extended<V> v = model_.local(pmcs_[c.pmc], blk.separator);
        for (int ch : c.children) {
          if (!v.feasible()) break;
          v = Model::combine(v, value_[ch]);
        }
        if (v < value_[b]) {
          value_[b] = v;
          choice_[b] = static_cast<int>(i);
        }
      }
      if (value_[b].feasible()) ++out.stats.table_entries;
    }
    cands_ = std::move(cands);

    Extended<V> total = Model::identity();
    std::vector<std::pair<VertexSet, int>> roots;  // component, separator id or -1
    for (const VertexSet& k : components(g_, g_.empty_set())) {
      Extended<V> best = Extended<V>::infeasible();
      int best_sep = -1;
      if (g_.is_clique(k)) {
        best = model_.local(k, g_.empty_set());
      } else {
        const auto& seps = index_.separators();
        for (std::size_t s = 0; s < seps.size(); ++s) {
          if (!seps[s].is_subset_of(k)) continue;
          Extended<V> v = model_.root(seps[s]);
          for (int ch : index_.separator_components(static_cast<int>(s))) v = Model::combine(v, value_[ch]);
          if (v < best) {
            best = v;
            best_sep = static_cast<int>(s);
          }
        }
      }
      total = Model::combine(total, best);
      roots.emplace_back(k, best_sep);
    }
    out.value = total;
    out.stats.blocks = static_cast<std::size_t>(nb);
    out.stats.pmcs = pmcs_.size();
    if (total.feasible()) out.witness = witness(roots);
    return out;
  }

 private:
  struct Candidate {
    int pmc;
    std::vector<int> children;
  };

  int build(int block, TreeDecomposition& td) const {
    const Candidate& c = cands_[block][choice_[block]];
    int top = static_cast<int>(td.bags.size());
    td.bags.push_back(pmcs_[c.pmc]);
    for (int ch : c.children) td.edges.emplace_back(top, build(ch, td));
    return top;
  }

  TreeDecomposition witness(const std::vector<std::pair<VertexSet, int>>& roots) const {
    TreeDecomposition td;
    int prev_top = -1;
    for (const auto& [k, sep] : roots) {
      int top;
      if (sep < 0) {
        top = static_cast<int>(td.bags.size());
        td.bags.push_back(k);
      } else {
        int full = index_.separator_full_components(sep).front();
        top = build(full, td);
        for (int ch : index_.separator_components(sep))
          if (ch != full) td.edges.emplace_back(top, build(ch, td));
      }
      if (prev_top >= 0) td.edges.emplace_back(prev_top, top);
      prev_top = top;
    }
    return td;
  }

  const Graph& g_;
  const std::vector<VertexSet>& pmcs_;
  Model model_;
  BlockIndex index_;
  std::vector<std::vector<Candidate>> cands_;
  std::vector<Extended<V>> value_;
  std::vector<int> choice_;
};

template <class Model>
DpSolution<typename Model::Value> run_dp(const Graph& g, const std::vector<VertexSet>& pmcs,
                                          const CliqueCover* cover, const Model& model) {
  if (cover && !validate_cover(g, *cover)) throw std::invalid_argument("cover is not valid for the graph");
  return BtDp<Model>(g, pmcs, cover, model).run();
}

}  // namespace

DpSolution<int> solve_treewidth(const Graph& g, const std::vector<VertexSet>& pmcs, std::optional<int> bound,
                                const CliqueCover* cover) {
  return run_dp(g, pmcs, cover, TreewidthModel{bound});
}

DpSolution<std::int64_t> solve_weighted_fill(const Graph& g, const std::vector<VertexSet>& pmcs,
                                             const WeightTable& weights, const CliqueCover* cover) {
  return run_dp(g, pmcs, cover, FillModel{g, weights});
}

DpSolution<std::int64_t> solve_sandwich(const Graph& g, const std::vector<VertexSet>& pmcs,
                                        const AdmissibleSet& admissible, const CliqueCover* cover) {
  WeightTable w = admissible.as_weights(g);
  DpSolution<std::int64_t> sol = run_dp(g, pmcs, cover, FillModel{g, w});
  if (sol.value.feasible() && sol.value.value() != 0) {
    sol.value = Extended<std::int64_t>::infeasible();
    sol.witness = {};
  }
  return sol;
}

DpSolution<Rational> solve_fhtw(const Graph& g, const std::vector<VertexSet>& pmcs, const FcovFunction& fcov,
                                const CliqueCover* cover) {
  return run_dp(g, pmcs, cover, FhtwModel{fcov});
}

Solution solve(const Graph& g, const CliqueCover* cover, const Objective& obj, const std::vector<VertexSet>& pmcs) {
  auto wrap = [](auto sol, auto to_rational) {
    Solution out;
    if (sol.value.feasible()) out.value = to_rational(sol.value.value());
    out.witness = std::move(sol.witness);
    out.stats = sol.stats;
    return out;
  };
  return std::visit(
      [&](const auto& o) -> Solution {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, TreewidthObjective>) {
          return wrap(solve_treewidth(g, pmcs, o.bound, cover), [](int v) { return Rational(v); });
        } else if constexpr (std::is_same_v<T, WeightedFillObjective>) {
          std::int64_t scale = o.weights.scale();
          return wrap(solve_weighted_fill(g, pmcs, o.weights, cover), [scale](std::int64_t v) {
            Rational r(mpz_class(std::to_string(v)), mpz_class(std::to_string(scale)));
            r.canonicalize();
            return r;
          });
        } else if constexpr (std::is_same_v<T, SandwichObjective>) {
          return wrap(solve_sandwich(g, pmcs, o.admissible, cover), [](std::int64_t v) { return Rational(v); });
        } else {
          return wrap(solve_fhtw(g, pmcs, o.fcov, cover), [](const Rational& v) { return v; });
        }
      },
      obj);
}

}  // namespace cctri
