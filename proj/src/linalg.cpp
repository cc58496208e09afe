#include "ubckit/linalg.hpp"

#include <algorithm>
#include <map>

namespace ubckit {

Echelon row_reduce(DenseMatrix matrix, int cols) {
  Echelon out;
  const int rows = static_cast<int>(matrix.size());
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r)
      if (matrix[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(matrix[lead], matrix[pivot]);
    const Rational inv = 1 / matrix[lead][col];
    for (int c = col; c < cols; ++c) matrix[lead][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || matrix[r][col] == 0) continue;
      const Rational factor = matrix[r][col];
      for (int c = col; c < cols; ++c)
        if (matrix[lead][c] != 0) matrix[r][c] -= factor * matrix[lead][c];
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.reduced = std::move(matrix);
  return out;
}

namespace {

using SparseRow = std::map<int, Rational>;

// Eliminates rows one at a time against a growing set of pivot rows keyed by
// leading column. Returns the pivot rows' leading columns in insertion order.
class IncrementalEliminator {
 public:
  // Returns true if the row was independent of those added so far.
  bool add(SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        const Rational inv = 1 / lead->second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(lead->first, std::move(row));
        return true;
      }
      const Rational factor = lead->second;
      for (const auto& [c, v] : it->second) {
        auto [slot, inserted] = row.try_emplace(c, -factor * v);
        if (!inserted) {
          slot->second -= factor * v;
          if (slot->second == 0) row.erase(slot);
        }
      }
    }
    return false;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::map<int, SparseRow> pivots_;
};

}  // namespace

int rank(const SparseMat& matrix) {
  // Rank of the transpose: eliminate columns of the matrix as sparse rows.
  IncrementalEliminator elim;
  for (int j = 0; j < matrix.cols(); ++j) {
    SparseRow row;
    for (const auto& e : matrix.column(j)) row.emplace(e.row, e.value);
    elim.add(std::move(row));
  }
  return elim.rank();
}

std::vector<int> independent_columns(const SparseMat& matrix) {
  IncrementalEliminator elim;
  std::vector<int> out;
  for (int j = 0; j < matrix.cols(); ++j) {
    SparseRow row;
    for (const auto& e : matrix.column(j)) row.emplace(e.row, e.value);
    if (elim.add(std::move(row))) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& matrix, int cols) {
  const Echelon ech = row_reduce(matrix, cols);
  std::vector<char> is_pivot(cols, 0);
  for (int c : ech.pivot_columns) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (int r = 0; r < ech.rank(); ++r) v[ech.pivot_columns[r]] = -ech.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_square(DenseMatrix matrix, std::vector<Rational> rhs) {
  const int n = static_cast<int>(matrix.size());
  for (int r = 0; r < n; ++r) matrix[r].push_back(rhs[r]);
  const Echelon ech = row_reduce(std::move(matrix), n + 1);
  if (ech.rank() != n || ech.pivot_columns.back() != n - 1) return std::nullopt;
  std::vector<Rational> x(n);
  for (int r = 0; r < n; ++r) x[r] = ech.reduced[r][n];
  return x;
}

std::optional<std::vector<Rational>> solve_any(const DenseMatrix& matrix, int cols,
                                                const std::vector<Rational>& rhs) {
  DenseMatrix aug = matrix;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
  const Echelon ech = row_reduce(std::move(aug), cols + 1);
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols);
  for (int r = 0; r < ech.rank(); ++r) x[ech.pivot_columns[r]] = ech.reduced[r][cols];
  return x;
}

}  // namespace ubckit
