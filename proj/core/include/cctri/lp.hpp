#pragma once

#include <vector>

#include "cctri/rational.hpp"

namespace cctri {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

// Optimise objective . x subject to rows[i] . x (rel[i]) rhs[i] and x >= 0.
struct LinearProgram {
  int variables = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Relation> relations;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
  bool maximize = false;

  void add_row(std::vector<Rational> coeffs, Relation rel, Rational b);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// Exact two-phase dense tableau simplex with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace cctri
