#pragma once

#include "ubckit/rational.hpp"
#include "ubckit/sparse.hpp"

#include <optional>
#include <vector>

namespace ubckit {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form of a dense matrix, computed exactly.
struct Echelon {
  DenseMatrix reduced;
  std::vector<int> pivot_columns;
  int rank() const { return static_cast<int>(pivot_columns.size()); }
};

Echelon row_reduce(DenseMatrix matrix, int cols);

/// Exact rank by sparse Gaussian elimination.
int rank(const SparseMat& matrix);

/// Indices of a maximal linearly independent set of columns, chosen
/// greedily from the left.
std::vector<int> independent_columns(const SparseMat& matrix);

/// Basis of {x : Ax = 0} for a dense matrix with the given column count.
std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& matrix, int cols);

/// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(DenseMatrix matrix, std::vector<Rational> rhs);

/// Some solution of Ax = b, or nullopt when b is outside the column span.
std::optional<std::vector<Rational>> solve_any(const DenseMatrix& matrix, int cols,
                                                const std::vector<Rational>& rhs);

}  // namespace ubckit
