#pragma once

#include "ubckit/simplicial.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ubckit {

/// Connected components of the 1-skeleton of the full subcomplex on
/// `subset`. Each component is sorted by label; components are ordered by
/// their smallest label.
std::vector<std::vector<std::string>> components(const SimplicialComplex& X, const std::vector<std::string>& subset);
std::vector<std::set<int>> component_sets(const SimplicialComplex& X, const std::set<int>& subset);

struct CoverMember {
  std::string name;
  std::set<int> vertices;
};

/// A cover of (X, A) by full subcomplexes, given by vertex sets.
class CoverData {
 public:
  CoverData() = default;
  /// Validates that the members jointly contain every simplex of X and that
  /// each member is connected. Members are kept sorted by name.
  CoverData(SimplicialComplex ambient, const std::vector<std::string>& subspace,
            const std::vector<std::pair<std::string, std::vector<std::string>>>& members);

  const SimplicialComplex& ambient() const { return ambient_; }
  const std::set<int>& subspace() const { return subspace_; }
  const std::vector<CoverMember>& members() const { return members_; }

  /// Common vertex set of the members with the given indices.
  std::set<int> intersection(const std::vector<int>& member_indices) const;
  std::vector<std::string> vertex_labels(const std::set<int>& vertices) const;

 private:
  SimplicialComplex ambient_;
  std::set<int> subspace_;
  std::vector<CoverMember> members_;
};

struct NervePair {
  /// Nerve N(U) over the member names (in name order).
  SimplicialComplex nerve;
  /// Simplices of N_A(U): subfamilies whose intersection meets A.
  std::set<SimplicialComplex::Simplex> relative;
  int mult = 0;
  int mult_A = 0;

  int dimension() const { return nerve.dimension(); }
  /// Largest dimension of a simplex of N(U) outside N_A(U), −1 if none.
  int relative_dimension() const;
};

NervePair nerve_pair(const CoverData& cover);

struct CoverWitness {
  std::string property;
  std::vector<std::string> members;
  std::vector<std::string> component;
};

struct RelativeCoverReport {
  bool rc1 = true;
  bool weakly_convex = true;
  bool convex = true;
  /// The π₁ condition is not checked; this only echoes the caller's claim.
  bool rc2_user_asserted = false;
  std::vector<CoverWitness> witnesses;
};

RelativeCoverReport check_relative_cover(const CoverData& cover, bool rc2_user_asserted = false);

/// max(mult, mult_boundary + 1).
int collar_multiplicity_bound(int mult, int mult_boundary);

}  // namespace ubckit
