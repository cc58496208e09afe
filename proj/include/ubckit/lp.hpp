#pragma once

#include "ubckit/rational.hpp"
#include "ubckit/sparse.hpp"

#include <vector>

namespace ubckit {

enum class FillStatus { Optimal, Infeasible };
enum class FillNorm { L1, Linf };

/// Outcome of a minimal-norm filling problem min |c| subject to Dc = b.
///
/// Optimal: `solution` attains `objective` and `dual_certificate` is a row
/// vector y with yᵀb = objective and Dᵀy inside the dual-norm unit ball
/// (|Dᵀy|∞ ≤ 1 for the ℓ¹ objective, |Dᵀy|₁ ≤ 1 for the ℓ∞ objective), which
/// proves optimality.
///
/// Infeasible: `dual_certificate` is a Farkas vector u with uᵀD = 0 and
/// uᵀb ≠ 0, which proves b ∉ im D.
struct FillResult {
  FillStatus status = FillStatus::Infeasible;
  SparseVec solution;
  Rational objective;
  SparseVec dual_certificate;

  bool optimal() const { return status == FillStatus::Optimal; }
};

FillResult solve_min_l1(const SparseMat& D, const SparseVec& b);
FillResult solve_min_linf(const SparseMat& D, const SparseVec& b);

/// Minimizes the chosen norm over the penalized columns only; columns with
/// penalized[j] == 0 are free and contribute nothing to the objective. An
/// empty mask penalizes every column.
FillResult solve_min_norm(const SparseMat& D, const SparseVec& b, FillNorm norm,
                          const std::vector<char>& penalized = {});

/// Re-checks a result from scratch with exact arithmetic: feasibility of the
/// solution, the norm identity, and the dual (or Farkas) certificate.
bool verify_fill(const SparseMat& D, const SparseVec& b, const FillResult& result, FillNorm norm,
                 const std::vector<char>& penalized = {});

enum class OperatorNormKind { L1toL1, LinfToLinf };

/// Exact induced operator norm: largest column ℓ¹-sum for ℓ¹→ℓ¹, largest row
/// ℓ¹-sum for ℓ∞→ℓ∞. The empty matrix has norm 0.
Rational operator_norm(const SparseMat& M, OperatorNormKind kind);

}  // namespace ubckit
