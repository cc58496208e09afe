#pragma once

// Hand-rolled generators for the property tests.

#include "ubckit/complex.hpp"
#include "ubckit/glue.hpp"
#include "ubckit/rng.hpp"
#include "ubckit/simplicial.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gen {

using ubckit::NormedComplex;
using ubckit::Rational;
using ubckit::SimplicialComplex;
using ubckit::SparseMat;
using ubckit::SparseVec;
using ubckit::XorShift64Star;

/// Random complex on `vertices` vertices with `facets` random facets of
/// dimension between 1 and max_dim.
inline SimplicialComplex random_simplicial(XorShift64Star& rng, int vertices, int facets, int max_dim) {
  std::vector<std::string> names;
  for (int v = 0; v < vertices; ++v) names.push_back("v" + std::to_string(v));
  std::vector<std::vector<std::string>> tops;
  for (int f = 0; f < facets; ++f) {
    const int size = static_cast<int>(rng.between(2, std::min(max_dim + 1, vertices)));
    std::vector<int> pool(vertices);
    for (int v = 0; v < vertices; ++v) pool[v] = v;
    std::vector<std::string> facet;
    for (int s = 0; s < size; ++s) {
      const int pick = s + static_cast<int>(rng.below(static_cast<std::uint64_t>(vertices - s)));
      std::swap(pool[s], pool[pick]);
      facet.push_back(names[pool[s]]);
    }
    tops.push_back(facet);
  }
  return SimplicialComplex(names, tops);
}

/// Random integral chain on the d-simplices of X (possibly zero).
inline SparseVec random_chain(XorShift64Star& rng, const SimplicialComplex& X, int d, int max_support) {
  SparseVec c;
  const auto cells = X.simplices_of_dimension(d);
  if (cells.empty()) return c;
  const int support = static_cast<int>(rng.between(1, max_support));
  for (int s = 0; s < support; ++s) {
    const auto& cell = cells[rng.below(cells.size())];
    c.add(X.label(cell), Rational(rng.nonzero_coefficient(3)));
  }
  return c;
}

/// A chain complex C and a complex D chain-homotopy equivalent to it, with
/// explicit maps f: C → D, g: D → C, gf = id, and h on D with
/// id − fg = ∂h + h∂.
struct HomotopyPair {
  std::shared_ptr<NormedComplex> C;
  std::shared_ptr<NormedComplex> D;
  std::map<int, SparseMat> f;
  std::map<int, SparseMat> g;
  std::map<int, SparseMat> h;  // h[k]: D_k → D_{k+1}
};

namespace detail {

inline SparseMat dense_square(const std::vector<std::string>& labels,
                              const std::vector<std::vector<Rational>>& values) {
  SparseMat M(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (values[i][j] != 0) M.set(static_cast<int>(i), static_cast<int>(j), values[i][j]);
  return M;
}

}  // namespace detail

/// C is the simplicial chain complex of a small random complex. D is C ⊕ E,
/// with E an elementary pair x ↦ λy, conjugated by random elementary basis
/// changes A_k in every degree.
inline HomotopyPair random_homotopy_pair(XorShift64Star& rng) {
  HomotopyPair out;
  const SimplicialComplex X = random_simplicial(rng, static_cast<int>(rng.between(3, 5)),
                                                static_cast<int>(rng.between(1, 3)), 2);
  out.C = std::make_shared<NormedComplex>(X.chain_complex("C"));
  const NormedComplex& C = *out.C;
  const int top = std::max(1, C.max_degree());
  const int d = static_cast<int>(rng.between(1, top));
  static const Rational lambdas[] = {Rational(1), Rational(-2), Rational(1, 2), Rational(3)};
  const Rational lambda = lambdas[rng.below(4)];

  // S = C ⊕ E on the same label sets plus "x" in degree d and "y" in d − 1.
  NormedComplex S("S", ubckit::Direction::Chain, ubckit::NormFlavor::L1);
  const int lo = C.min_degree(), hi = std::max(C.max_degree(), d);
  for (int k = lo; k <= hi; ++k) {
    auto labels = C.basis(k);
    if (k == d) labels.push_back("x");
    if (k == d - 1) labels.push_back("y");
    S.set_basis(k, labels);
  }
  for (int k = lo + 1; k <= hi; ++k) {
    SparseMat M(S.basis(k - 1), S.basis(k));
    const SparseMat dc = C.differential(k);
    for (int j = 0; j < dc.cols(); ++j)
      for (const auto& e : dc.column(j)) M.set(dc.row_labels()[e.row], dc.col_labels()[j], e.value);
    if (k == d) M.set("y", "x", lambda);
    S.set_differential(k, M);
  }

  // Elementary basis changes A_k = I + μ e_ij and their inverses.
  static const Rational mus[] = {Rational(1), Rational(-1), Rational(2), Rational(-1, 2)};
  std::map<int, SparseMat> A, Ainv;
  for (int k = lo; k <= hi; ++k) {
    const auto& labels = S.basis(k);
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n)), ai(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) a[i][i] = ai[i][i] = 1;
    if (n >= 2) {
      const int i = static_cast<int>(rng.below(n));
      int j = static_cast<int>(rng.below(n - 1));
      if (j >= i) ++j;
      const Rational mu = mus[rng.below(4)];
      a[i][j] = mu;
      ai[i][j] = -mu;
    }
    A[k] = detail::dense_square(labels, a);
    Ainv[k] = detail::dense_square(labels, ai);
  }

  out.D = std::make_shared<NormedComplex>("D", ubckit::Direction::Chain, ubckit::NormFlavor::L1);
  for (int k = lo; k <= hi; ++k) out.D->set_basis(k, S.basis(k));
  for (int k = lo + 1; k <= hi; ++k) out.D->set_differential(k, A[k - 1] * S.differential(k) * Ainv[k]);

  for (int k = lo; k <= hi; ++k) {
    SparseMat incl(S.basis(k), C.basis(k)), proj(C.basis(k), S.basis(k));
    for (const auto& l : C.basis(k)) {
      incl.set(l, l, 1);
      proj.set(l, l, 1);
    }
    out.f[k] = A[k] * incl;
    out.g[k] = proj * Ainv[k];
    SparseMat hs(S.basis(k + 1), S.basis(k));
    if (k == d - 1) hs.set("x", "y", 1 / lambda);
    out.h[k] = k + 1 <= hi ? A[k + 1] * hs * Ainv[k] : SparseMat(S.basis(k + 1), S.basis(k));
  }
  return out;
}


/// Triangulated annulus: the cylinder over a 3-edge circle with the prism
/// of the circle's fundamental cycle, scaled. Ends 0 and 1 are marked glued
/// or free as requested.
inline ubckit::GluePiece annulus_piece(const std::string& name, const Rational& scale, bool glue_bottom,
                                       bool glue_top) {
  const SimplicialComplex circle({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const SparseVec fundamental{{"a.b", Rational(1)}, {"b.c", Rational(1)}, {"a.c", Rational(-1)}};
  const auto pr = ubckit::prism(fundamental, 2, circle);
  ubckit::GluePiece p;
  p.name = name;
  p.complex = pr.target;
  p.cycle = pr.chain.scaled(scale);
  for (const auto& e : {"a.b", "b.c", "a.c"}) {
    const SparseVec one{{e, Rational(1)}};
    const std::string bottom = ubckit::end_inclusion(circle, one, 0).begin()->first;
    const std::string top = ubckit::end_inclusion(circle, one, 1).begin()->first;
    (glue_bottom ? p.glue_faces : p.free_faces).insert(bottom);
    (glue_top ? p.glue_faces : p.free_faces).insert(top);
  }
  return p;
}

/// Two annuli glued along their bottom circles, edge to matching edge.
inline ubckit::GlueingInstance annulus_pair(const Rational& scale_b = 1) {
  ubckit::GlueingInstance inst;
  inst.degree = 2;
  inst.pieces = {annulus_piece("A", 1, true, false), annulus_piece("B", scale_b, true, false)};
  for (const auto& f : inst.pieces[0].glue_faces) inst.identifications.push_back({"A", f, "B", f});
  return inst;
}

}  // namespace gen
