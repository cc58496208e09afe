#include "ubckit/lp.hpp"

#include "ubckit/errors.hpp"
#include "ubckit/simplex.hpp"

#include <algorithm>

namespace ubckit {

namespace {

std::vector<char> full_mask(const SparseMat& D, const std::vector<char>& penalized) {
  if (penalized.empty()) return std::vector<char>(D.cols(), 1);
  if (static_cast<int>(penalized.size()) != D.cols()) throw InputError("penalty mask has wrong length");
  return penalized;
}

std::vector<Rational> dense_rhs(const SparseMat& D, const SparseVec& b) {
  std::vector<Rational> rhs(D.rows());
  for (const auto& [label, value] : b) {
    auto i = D.row_index(label);
    if (!i) throw InputError("right-hand side label '" + label + "' is not a row of the matrix");
    rhs[*i] = value;
  }
  return rhs;
}

std::vector<MatrixEntry> negated(std::span<const MatrixEntry> column) {
  std::vector<MatrixEntry> out(column.begin(), column.end());
  for (auto& e : out) e.value = -e.value;
  return out;
}

FillResult assemble(const SparseMat& D, const lp::LpSolution& sol, std::span<const Rational> column_values) {
  FillResult out;
  if (sol.status == lp::LpStatus::Unbounded)
    throw InternalError("minimal-norm filling reported unbounded; the objective is a norm");
  std::vector<Rational> y(sol.dual.begin(), sol.dual.begin() + D.rows());
  out.dual_certificate = from_dense(y, D.row_labels());
  if (sol.status == lp::LpStatus::Infeasible) {
    out.status = FillStatus::Infeasible;
    out.objective = 0;
    return out;
  }
  out.status = FillStatus::Optimal;
  out.objective = sol.objective;
  out.solution = from_dense(column_values, D.col_labels());
  return out;
}

}  // namespace

FillResult solve_min_norm(const SparseMat& D, const SparseVec& b, FillNorm norm,
                          const std::vector<char>& penalized_in) {
  const std::vector<char> penalized = full_mask(D, penalized_in);
  const int m = D.rows();
  const int n = D.cols();
  lp::StandardForm problem;
  problem.rhs = dense_rhs(D, b);
  std::vector<Rational> values(n);

  if (norm == FillNorm::L1) {
    // c = c⁺ − c⁻, variables ordered (c⁺_0, c⁻_0, c⁺_1, ...).
    problem.rows = m;
    for (int j = 0; j < n; ++j) {
      problem.columns.emplace_back(D.column(j).begin(), D.column(j).end());
      problem.columns.push_back(negated(D.column(j)));
      const Rational w = penalized[j] ? 1 : 0;
      problem.cost.push_back(w);
      problem.cost.push_back(w);
    }
    const lp::LpSolution sol = lp::solve_standard_form(problem);
    if (sol.status == lp::LpStatus::Optimal)
      for (int j = 0; j < n; ++j) values[j] = sol.x[2 * j] - sol.x[2 * j + 1];
    FillResult out = assemble(D, sol, values);
    if (!verify_fill(D, b, out, norm, penalized))
      throw InternalError("l1 filling failed exact certificate verification");
    return out;
  }

  // ℓ∞: variable t bounds every penalized coordinate; one pair of rows
  // c_j − t + s_j = 0, −c_j − t + s'_j = 0 per penalized column.
  std::vector<int> pen_index(n, -1);
  int p = 0;
  for (int j = 0; j < n; ++j)
    if (penalized[j]) pen_index[j] = p++;
  problem.rows = m + 2 * p;
  problem.rhs.resize(problem.rows);

  std::vector<MatrixEntry> t_column;
  for (int q = 0; q < 2 * p; ++q) t_column.push_back({m + q, Rational(-1)});
  problem.columns.push_back(std::move(t_column));
  problem.cost.push_back(1);
  for (int j = 0; j < n; ++j) {
    std::vector<MatrixEntry> plus(D.column(j).begin(), D.column(j).end());
    std::vector<MatrixEntry> minus = negated(D.column(j));
    if (pen_index[j] >= 0) {
      const int r = m + 2 * pen_index[j];
      plus.push_back({r, Rational(1)});
      plus.push_back({r + 1, Rational(-1)});
      minus.push_back({r, Rational(-1)});
      minus.push_back({r + 1, Rational(1)});
    }
    problem.columns.push_back(std::move(plus));
    problem.columns.push_back(std::move(minus));
    problem.cost.push_back(0);
    problem.cost.push_back(0);
  }
  for (int q = 0; q < 2 * p; ++q) {
    problem.columns.push_back({MatrixEntry{m + q, Rational(1)}});
    problem.cost.push_back(0);
  }
  const lp::LpSolution sol = lp::solve_standard_form(problem);
  if (sol.status == lp::LpStatus::Optimal)
    for (int j = 0; j < n; ++j) values[j] = sol.x[1 + 2 * j] - sol.x[2 + 2 * j];
  FillResult out = assemble(D, sol, values);
  if (!verify_fill(D, b, out, norm, penalized))
    throw InternalError("linf filling failed exact certificate verification");
  return out;
}

FillResult solve_min_l1(const SparseMat& D, const SparseVec& b) { return solve_min_norm(D, b, FillNorm::L1); }

FillResult solve_min_linf(const SparseMat& D, const SparseVec& b) {
  return solve_min_norm(D, b, FillNorm::Linf);
}

bool verify_fill(const SparseMat& D, const SparseVec& b, const FillResult& result, FillNorm norm,
                 const std::vector<char>& penalized_in) {
  const std::vector<char> penalized = full_mask(D, penalized_in);
  const std::vector<Rational> rhs = dense_rhs(D, b);
  const std::vector<Rational> y = to_dense(result.dual_certificate, D.row_labels());
  const std::vector<Rational> dty = D.apply_transpose(y);
  Rational ytb = 0;
  for (int i = 0; i < D.rows(); ++i) ytb += y[i] * rhs[i];

  if (result.status == FillStatus::Infeasible) {
    return std::all_of(dty.begin(), dty.end(), [](const Rational& v) { return v == 0; }) && ytb != 0;
  }

  if (D.apply(result.solution) != b) return false;
  Rational primal = 0;
  for (const auto& [label, value] : result.solution) {
    if (!penalized[*D.col_index(label)]) continue;
    primal = norm == FillNorm::L1 ? primal + abs_value(value) : std::max(primal, abs_value(value));
  }
  if (primal != result.objective || ytb != result.objective) return false;

  Rational dual_mass = 0;
  for (int j = 0; j < D.cols(); ++j) {
    if (!penalized[j]) {
      if (dty[j] != 0) return false;
      continue;
    }
    if (norm == FillNorm::L1 && abs_value(dty[j]) > 1) return false;
    dual_mass += abs_value(dty[j]);
  }
  return norm == FillNorm::L1 || dual_mass <= 1;
}

Rational operator_norm(const SparseMat& M, OperatorNormKind kind) {
  Rational best = 0;
  if (kind == OperatorNormKind::L1toL1) {
    for (int j = 0; j < M.cols(); ++j) {
      Rational sum = 0;
      for (const auto& e : M.column(j)) sum += abs_value(e.value);
      best = std::max(best, sum);
    }
    return best;
  }
  std::vector<Rational> row_sums(M.rows());
  for (int j = 0; j < M.cols(); ++j)
    for (const auto& e : M.column(j)) row_sums[e.row] += abs_value(e.value);
  for (const auto& s : row_sums) best = std::max(best, s);
  return best;
}

}  // namespace ubckit
