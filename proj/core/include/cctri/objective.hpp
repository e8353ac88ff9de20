#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cctri/graph.hpp"

namespace cctri {

// Value or the infeasible top element. Infeasible compares above every value
// and absorbs under the combine operations.
template <class T>
class Extended {
 public:
  Extended() = default;
  Extended(T v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static Extended infeasible() { return Extended(); }

  bool feasible() const { return v_.has_value(); }
  const T& value() const { return *v_; }

  friend bool operator==(const Extended& a, const Extended& b) { return a.v_ == b.v_; }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (!a.feasible()) return false;
    if (!b.feasible()) return true;
    return *a.v_ < *b.v_;
  }
  friend Extended max(const Extended& a, const Extended& b) { return a < b ? b : a; }
  friend Extended min(const Extended& a, const Extended& b) { return b < a ? b : a; }
  friend Extended operator+(const Extended& a, const Extended& b) {
    if (!a.feasible() || !b.feasible()) return infeasible();
    return Extended(*a.v_ + *b.v_);
  }

 private:
  std::optional<T> v_;
};

// Non-negative weights on non-edges, stored as integers over a common
// decimal scale so sums stay exact. Unlisted pairs weigh 1.
class WeightTable {
 public:
  WeightTable() = default;
  explicit WeightTable(int n, std::int64_t scale = 1);
  static WeightTable unit(int n) { return WeightTable(n); }

  int n() const { return n_; }
  std::int64_t scale() const { return scale_; }
  // Scaled weight of the pair {u, v}.
  std::int64_t at(Vertex u, Vertex v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(Vertex u, Vertex v, std::int64_t scaled);

  // Scaled weight of the pairs of s not in E(G) and not inside `except`.
  std::int64_t fill_cost(const Graph& g, const VertexSet& s) const;
  std::int64_t fill_cost(const Graph& g, const VertexSet& s, const VertexSet& except) const;

  // Scaled value as a decimal string.
  std::string format(std::int64_t scaled) const;

 private:
  int n_ = 0;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> w_;
};

// Non-edges that a sandwich triangulation may add.
class AdmissibleSet {
 public:
  AdmissibleSet() = default;
  explicit AdmissibleSet(int n) : n_(n), allowed_(n, VertexSet(n)) {}
  static AdmissibleSet from_pairs(int n, const std::vector<Edge>& pairs);
  // Every non-edge admissible.
  static AdmissibleSet everything(int n);

  int n() const { return n_; }
  void allow(Vertex u, Vertex v);
  bool admissible(Vertex u, Vertex v) const { return allowed_[u].contains(v); }
  const VertexSet& allowed(Vertex v) const { return allowed_[v]; }

  // True iff every pair of s is an edge of g or admissible.
  bool completable(const Graph& g, const VertexSet& s) const;
  // 0/1 weights: forbidden non-edges weigh 1.
  WeightTable as_weights(const Graph& g) const;
  std::vector<Edge> pairs() const;

 private:
  int n_ = 0;
  std::vector<VertexSet> allowed_;
};

}  // namespace cctri
