#include "cctri/lp.hpp"

#include <stdexcept>

namespace cctri {

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation rel, Rational b) {
  if (static_cast<int>(coeffs.size()) != variables) throw std::invalid_argument("row width does not match");
  rows.push_back(std::move(coeffs));
  relations.push_back(rel);
  rhs.push_back(std::move(b));
}

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> t, std::vector<int> basis, int columns)
      : t_(std::move(t)), basis_(std::move(basis)), cols_(columns), allowed_(columns, true) {}

  void set_cost(const std::vector<Rational>& c) {
    z_.assign(cols_ + 1, Rational(0));
    for (int j = 0; j < cols_; ++j) z_[j] = c[j];
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) z_[j] -= cb * t_[i][j];
    }
  }

  // Minimises the current cost; false when unbounded.
  bool optimise() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j)
        if (allowed_[j] && z_[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    Rational p = t_[r][c];
    for (int j = 0; j <= cols_; ++j) t_[r][j] /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (int j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    if (z_[c] != 0) {
      Rational f = z_[c];
      for (int j = 0; j <= cols_; ++j) z_[j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  Rational value() const { return -z_[cols_]; }

  // Pivots artificial columns [first, cols) out of the basis; drops
  // redundant rows.
  void expel(int first) {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < first) {
        ++i;
        continue;
      }
      int c = -1;
      for (int j = 0; j < first && c < 0; ++j)
        if (t_[i][j] != 0) c = j;
      if (c >= 0) {
        pivot(static_cast<int>(i), c);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (int j = first; j < cols_; ++j) allowed_[j] = false;
  }

  std::vector<Rational> solution(int vars) const {
    std::vector<Rational> x(vars, Rational(0));
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] < vars) x[basis_[i]] = t_[i][cols_];
    return x;
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  int cols_;
  std::vector<bool> allowed_;
  std::vector<Rational> z_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const int n = lp.variables;
  const int m = static_cast<int>(lp.rows.size());
  if (static_cast<int>(lp.objective.size()) != n) throw std::invalid_argument("objective width does not match");

  // Normalise to non-negative right-hand sides.
  std::vector<std::vector<Rational>> a = lp.rows;
  std::vector<Relation> rel = lp.relations;
  std::vector<Rational> b = lp.rhs;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& q : a[i]) q = -q;
      b[i] = -b[i];
      if (rel[i] == Relation::kLessEqual)
        rel[i] = Relation::kGreaterEqual;
      else if (rel[i] == Relation::kGreaterEqual)
        rel[i] = Relation::kLessEqual;
    }

  int slacks = 0, artificials = 0;
  for (Relation r : rel) {
    if (r != Relation::kEqual) ++slacks;
    if (r != Relation::kLessEqual) ++artificials;
  }
  const int first_art = n + slacks;
  const int cols = first_art + artificials;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<int> basis(m);
  int s = n, art = first_art;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][cols] = b[i];
    if (rel[i] == Relation::kLessEqual) {
      t[i][s] = 1;
      basis[i] = s++;
    } else {
      if (rel[i] == Relation::kGreaterEqual) t[i][s++] = -1;
      t[i][art] = 1;
      basis[i] = art++;
    }
  }

  Tableau tab(std::move(t), std::move(basis), cols);
  LpResult out;
  if (artificials > 0) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (int j = first_art; j < cols; ++j) phase1[j] = 1;
    tab.set_cost(phase1);
    tab.optimise();
    if (tab.value() != 0) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    tab.expel(first_art);
  }
  std::vector<Rational> cost(cols, Rational(0));
  for (int j = 0; j < n; ++j) cost[j] = lp.maximize ? Rational(-lp.objective[j]) : lp.objective[j];
  tab.set_cost(cost);
  if (!tab.optimise()) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.value = lp.maximize ? Rational(-tab.value()) : tab.value();
  out.x = tab.solution(n);
  return out;
}

}  // namespace cctri
