#pragma once

#include "ubckit/complex.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ubckit {

/// A finite group given by its multiplication table; the group axioms are
/// checked on construction.
class FiniteGroupData {
 public:
  FiniteGroupData(std::vector<std::string> names, std::vector<std::vector<int>> table);

  /// Z/m with elements "0".."m-1".
  static FiniteGroupData cyclic(int m);
  /// S_n on one-line notation ("012", "021", ...) in lexicographic order,
  /// composed as (στ)(i) = σ(τ(i)). Requires n ≤ 6.
  static FiniteGroupData symmetric(int n);

  int order() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }

  /// Throws InputError unless the sorted index set is a subgroup.
  void check_subgroup(const std::vector<int>& elements) const;
  /// Subgroup generated by the given elements, sorted.
  std::vector<int> generated(const std::vector<int>& generators) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// A group acting on a finite set: act[g][x] is g·x.
struct GroupAction {
  std::vector<std::string> point_names;
  std::vector<std::vector<int>> act;
};

/// Orbit decomposition of X^{k+1} under the diagonal action. Tuples are
/// encoded base |X| with the first entry most significant.
struct OrbitTable {
  int points = 0;
  int length = 0;
  std::vector<int> orbit_of;                // tuple code → orbit id
  std::vector<std::vector<int>> representatives;  // lexicographically minimal tuple per orbit

  int code(const std::vector<int>& tuple) const;
  int orbit(const std::vector<int>& tuple) const { return orbit_of[code(tuple)]; }
};

OrbitTable orbit_table(const GroupAction& action, int length);

/// Label of a tuple: point names joined with '.'.
std::string tuple_label(const GroupAction& action, const std::vector<int>& tuple);

/// ℓ∞(X^{*+1})^H with the homogeneous coboundary in degrees 0..k_max + 1
/// (so cohomology is available through degree k_max). Coordinates are the
/// values on orbit representatives, so the norm is the sup norm.
NormedComplex invariant_cochains(const GroupAction& action, int k_max, const std::string& name);

/// C_b^*(G) = ℓ∞(G^{*+1})^G with G acting on itself by left multiplication.
NormedComplex finite_group_bounded_cochains(const FiniteGroupData& G, int k_max);

/// H acting on the subset H ⊆ G (or on all of G) by left multiplication.
GroupAction left_multiplication(const FiniteGroupData& G, const std::vector<int>& acting,
                                const std::vector<int>& points);

struct ShapiroMaps {
  std::shared_ptr<const NormedComplex> small;  // ℓ∞(H^{*+1})^H
  std::shared_ptr<const NormedComplex> large;  // ℓ∞((J×H)^{*+1})^H, realized on G
  CochainMap phi;                              // small → large
  CochainMap psi;                              // large → small
  CochainMap homotopy;                         // large → large, degree −1
  std::vector<int> coset_representatives;      // J, identity first
};

/// Explicit Shapiro maps for H ≤ G in degrees 0..k_max. Each g ∈ G is written
/// uniquely as g = h·j with j the smallest element of the right coset Hg.
ShapiroMaps shapiro_maps(const FiniteGroupData& G, const std::vector<int>& H, int k_max);

struct ShapiroDegree {
  int k = 0;
  Rational phi_norm;
  Rational psi_norm;
  Rational homotopy_norm;
  /// ψφ = id.
  bool retraction = false;
  /// δh + hδ = φψ − id.
  bool homotopy = false;
};

/// Exact checks of the Shapiro identities and norms in degrees 0..k_max.
std::vector<ShapiroDegree> check_shapiro(const ShapiroMaps& maps, int k_max);

/// Antisymmetrization alt(f)(s) = (1/(k+1)!) Σ_σ sign(σ) f(s∘σ) on ℓ∞(S^{*+1})
/// in degrees 0..k + 1, as a cochain map of that complex to itself.
CochainMap alternating_projection(int s_size, int k);

}  // namespace ubckit
