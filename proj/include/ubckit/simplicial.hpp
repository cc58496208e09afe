#pragma once

#include "ubckit/complex.hpp"
#include "ubckit/sparse.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ubckit {

/// Finite abstract simplicial complex over an ordered vertex list.
///
/// A simplex is a strictly increasing tuple of vertex indices; the set is
/// closed under faces. Orientation follows the vertex order, and a simplex
/// is labeled by joining its vertex labels with '.'.
class SimplicialComplex {
 public:
  using Simplex = std::vector<int>;

  SimplicialComplex() = default;
  /// Vertex labels in orientation order; facets may list vertices in any
  /// order and are closed under faces. Isolated vertices are included.
  SimplicialComplex(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::optional<int> vertex_index(const std::string& label) const;
  const std::set<Simplex>& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  int dimension() const;
  std::vector<Simplex> simplices_of_dimension(int d) const;
  /// Simplices not properly contained in another one.
  std::vector<Simplex> facets() const;

  std::string label(const Simplex& s) const;
  /// Inverse of label(); throws InputError on an unknown simplex.
  Simplex parse_label(const std::string& label) const;

  /// Full subcomplex spanned by a vertex subset, over the same vertex list.
  std::set<Simplex> induced(const std::set<int>& vertex_subset) const;

  /// Simplicial chain complex with ℓ¹ norm in degrees 0..dim.
  NormedComplex chain_complex(const std::string& name) const;

 private:
  void add_closed(const Simplex& s);

  std::vector<std::string> vertices_;
  std::map<std::string, int> index_;
  std::set<Simplex> simplices_;
};

/// Validates a vertex label: nonempty, drawn from [A-Za-z0-9_-].
void check_vertex_label(const std::string& label);

/// Boundary Σ(−1)^i of the faces, as labels of `X`.
SparseVec simplex_boundary(const SimplicialComplex& X, const SimplicialComplex::Simplex& s);

/// X×[0,1] triangulated by staircases. Vertex v becomes v_0 and v_1, ordered
/// v0_0 < v0_1 < v1_0 < v1_1 < ...
SimplicialComplex cylinder(const SimplicialComplex& X);

/// Image of a chain of X in the end X×{end} of the cylinder.
SparseVec end_inclusion(const SimplicialComplex& X, const SparseVec& c, int end);

struct PrismResult {
  SparseVec chain;
  SimplicialComplex product;
  NormedComplex target;
};

/// Prism operator on a degree-(n−1) chain: the simplex [v0..v_{n−1}] goes to
/// Σ_i (−1)^i [v0_0..vi_0 vi_1..v_{n−1}_1].
PrismResult prism(const SparseVec& c, int n, const SimplicialComplex& X);

/// The prism chain alone, for a cylinder that is already built.
SparseVec prism_chain(const SparseVec& c, int n, const SimplicialComplex& X);

}  // namespace ubckit
