#pragma once

#include "ubckit/rational.hpp"
#include "ubckit/sparse.hpp"

#include <vector>

namespace ubckit::lp {

/// min costᵀx subject to Ax = rhs, x ≥ 0, with A stored by column.
struct StandardForm {
  int rows = 0;
  std::vector<std::vector<MatrixEntry>> columns;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;

  int cols() const { return static_cast<int>(columns.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// On Optimal, `dual` satisfies Aᵀdual ≤ cost and rhsᵀdual = objective.
/// On Infeasible, `dual` is a Farkas ray: Aᵀdual ≤ 0 and rhsᵀdual > 0.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  std::vector<Rational> dual;
  Rational objective;
  long pivots = 0;
};

/// Two-phase revised primal simplex over exact rationals. Entering and
/// leaving variables follow Bland's rule on variable index, so the pivot
/// sequence is a pure function of the input.
LpSolution solve_standard_form(const StandardForm& problem);

}  // namespace ubckit::lp
