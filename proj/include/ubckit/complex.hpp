#pragma once

#include "ubckit/errors.hpp"
#include "ubckit/lp.hpp"
#include "ubckit/rational.hpp"
#include "ubckit/sparse.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ubckit {

enum class Direction { Chain, Cochain };
enum class NormFlavor { L1, Linf };

std::string to_string(Direction direction);
std::string to_string(NormFlavor flavor);

/// A finite graded module with labeled bases and sparse differentials.
///
/// Bases are stored in sorted label order. Differentials are keyed by their
/// source degree: for a chain complex `differential(k)` is ∂_k: C_k → C_{k−1},
/// for a cochain complex it is δ^k: C^k → C^{k+1}. Unset differentials and
/// degrees outside the declared range are zero.
class NormedComplex {
 public:
  NormedComplex() = default;
  NormedComplex(std::string name, Direction direction, NormFlavor flavor);

  const std::string& name() const { return name_; }
  Direction direction() const { return direction_; }
  NormFlavor flavor() const { return flavor_; }
  FillNorm fill_norm_kind() const { return flavor_ == NormFlavor::L1 ? FillNorm::L1 : FillNorm::Linf; }
  Rational norm(const SparseVec& v) const { return flavor_ == NormFlavor::L1 ? v.l1_norm() : v.linf_norm(); }

  /// Declares (or replaces) the basis of degree k; labels are sorted.
  void set_basis(int k, std::vector<std::string> labels);
  /// Sets differential(k); rows and columns may come in any order but must be
  /// exactly the bases of the target and source degrees.
  void set_differential(int k, const SparseMat& matrix);

  bool empty() const { return bases_.empty(); }
  int min_degree() const;
  int max_degree() const;
  const std::vector<std::string>& basis(int k) const;
  int dimension(int k) const { return static_cast<int>(basis(k).size()); }
  bool contains(int k, const std::string& label) const;

  /// Degree reached by differential(k).
  int target_degree(int k) const { return direction_ == Direction::Chain ? k - 1 : k + 1; }
  SparseMat differential(int k) const;
  /// The differential whose image lies in degree k.
  SparseMat into(int k) const;
  /// The differential leaving degree k.
  SparseMat out_of(int k) const { return differential(k); }

  const std::map<int, SparseMat>& differentials() const { return maps_; }

  friend bool operator==(const NormedComplex& lhs, const NormedComplex& rhs);

 private:
  std::string name_;
  Direction direction_ = Direction::Chain;
  NormFlavor flavor_ = NormFlavor::L1;
  std::map<int, std::vector<std::string>> bases_;
  std::map<int, SparseMat> maps_;
};

/// Copy of `m` whose rows and columns follow the given label orders; every
/// stored entry must be addressable in the new labeling.
SparseMat relabeled(const SparseMat& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols);

/// Throws NonComplexError with the first nonzero entry of a composite of two
/// consecutive differentials.
void validate_complex(const NormedComplex& C);

/// Minimal-norm filling of b by the differential into degree k, in the
/// complex's own norm flavor.
FillResult fill_norm(const NormedComplex& C, int k, const SparseVec& b);

/// inf |z − dc| over c in the neighbouring degree; z must be a (co)cycle.
Rational homology_seminorm(const NormedComplex& C, int k, const SparseVec& z);

/// dim H_k (or H^k) by exact rank computation.
int homology_dimension(const NormedComplex& C, int k);

enum class EstimateMode { ExactOnFiniteComplex, SampledLowerBound };

struct Witness {
  SparseVec boundary;
  Rational boundary_norm;
  Rational fill_norm;
  Rational ratio() const { return boundary_norm == 0 ? Rational(0) : fill_norm / boundary_norm; }
};

struct ConstantEstimate {
  Rational value;
  EstimateMode mode = EstimateMode::ExactOnFiniteComplex;
  std::vector<Witness> witnesses;
  /// Index into `witnesses` of a maximizing entry, when there is one.
  std::optional<std::size_t> best;
};

enum class UbcMode { Exact, Sampled, Auto };

struct UbcOptions {
  UbcMode mode = UbcMode::Exact;
  int samples = 200;
  std::uint64_t seed = 0;
  int support = 8;
};

inline constexpr int kExactImageDimensionCap = 8;

/// Rank of the differential into degree k.
int image_dimension(const NormedComplex& C, int k);

/// Best constant K with fill(b) ≤ K·|b| for every b in the image of the
/// differential into degree k. Exact mode enumerates the vertices of the
/// unit ball of the image; sampled mode reports a lower bound. Auto picks
/// exact when the image dimension is at most kExactImageDimensionCap.
ConstantEstimate ubc_constant(const NormedComplex& C, int k, const UbcOptions& options = {});

class EmptyFamilyError : public InputError {
 public:
  EmptyFamilyError() : InputError("empty family of complexes") {}
};

ConstantEstimate uubc_constant(const std::vector<NormedComplex>& family, int k, const UbcOptions& options = {});

/// ‖f‖·‖g‖·K + ‖h‖.
Rational inherited_ubc_constant(const Rational& norm_f, const Rational& norm_g, const Rational& K,
                                const Rational& norm_h);

/// Degree-wise direct sum with the sup norm over degrees min..k_max. Member
/// i's labels are prefixed with "p<i>_".
NormedComplex bounded_product(const std::vector<NormedComplex>& family, int k_max);

/// Transposed differentials: chain → ℓ∞ cochain, cochain → ℓ¹ chain.
NormedComplex dual_complex(const NormedComplex& C);

/// Degree-wise linear maps between two complexes of the same direction.
/// Component k maps degree k of the source to degree k + shift of the
/// target; shift is 0 for (co)chain maps and −1 (cochain) or +1 (chain) for
/// homotopies.
struct CochainMap {
  std::shared_ptr<const NormedComplex> source;
  std::shared_ptr<const NormedComplex> target;
  int shift = 0;
  std::map<int, SparseMat> components;
  std::map<int, Rational> declared_norm_bound;

  /// Component k, or the zero matrix with the right labels.
  SparseMat component(int k) const;
  /// Operator norm of component k in the source's norm flavor.
  Rational measured_norm(int k) const;
  /// Exact commutation with the differentials in every degree where both
  /// sides are defined; only meaningful when shift == 0.
  bool commutes() const;
  bool within_declared_bounds() const;
};

}  // namespace ubckit
