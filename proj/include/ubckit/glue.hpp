#pragma once

#include "ubckit/complex.hpp"
#include "ubckit/lp.hpp"
#include "ubckit/rational.hpp"
#include "ubckit/sparse.hpp"

#include <set>
#include <string>
#include <vector>

namespace ubckit {

/// (1 + K·(n+1))·Σ volumes.
Rational glue_upper_bound(const Rational& K, int n, const std::vector<Rational>& volumes);
/// (K·(n+1) + 1)·relative_volume.
Rational interior_bound(const Rational& K, int n, const Rational& relative_volume);

struct GluePiece {
  std::string name;
  NormedComplex complex;
  /// Relative cycle in the top degree.
  SparseVec cycle;
  std::set<std::string> glue_faces;
  std::set<std::string> free_faces;
};

/// `piece_b:label_b` is attached to `piece_a:label_a` with reversed
/// orientation.
struct Identification {
  std::string piece_a;
  std::string label_a;
  std::string piece_b;
  std::string label_b;

  friend bool operator==(const Identification&, const Identification&) = default;
};

struct GlueingInstance {
  int degree = 0;
  std::vector<GluePiece> pieces;
  std::vector<Identification> identifications;

  const GluePiece& piece(const std::string& name) const;
};

/// Throws InputError unless every piece is an ℓ¹ chain complex with top
/// degree `degree`, every cycle is a relative cycle for its glue and free
/// faces, and the identifications pair up all glue faces exactly once.
void validate_instance(const GlueingInstance& instance);

/// "piece:label".
std::string glued_label(const std::string& piece, const std::string& label);

/// Chain complex of the glue locus N: the glue faces (named by their
/// first-listed side) and everything below them. N is empty in the top degree.
NormedComplex glue_locus(const GlueingInstance& instance);

struct GlueResult {
  FillStatus status = FillStatus::Infeasible;
  /// Σ z_i − c in the glued labels, top degree.
  SparseVec z;
  SparseVec filler;
  /// Σ ∂z_i restricted to N.
  SparseVec b;
  /// Farkas vector on N when b cannot be filled.
  SparseVec farkas;
  Rational sum_cycle_norms;
  Rational b_norm;
  Rational filler_norm;
  /// |c|₁/|b|₁, 0 when b = 0.
  Rational k_measured;
  bool certificate_ok = false;
  /// ∂z touches only free faces.
  bool relative_cycle = false;
  /// |b|₁ ≤ Σ|∂z_i|₁ ≤ (n+1)·Σ|z_i|₁.
  bool boundary_chain_ok = false;
  /// |c|₁ ≤ K_measured·(n+1)·Σ|z_i|₁; false without a filler.
  bool measured_bound_ok = false;
  /// |c|₁ ≤ K_declared·|b|₁.
  bool declared_bound_ok = false;

  bool optimal() const { return status == FillStatus::Optimal; }
  /// |c|₁ ≤ K·(n+1)·Σ|z_i|₁ for a given constant K.
  bool within(const Rational& K, int n) const;
};

GlueResult glue_cycle(const GlueingInstance& instance, const Rational& K_declared);

}  // namespace ubckit
