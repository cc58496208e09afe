// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "generators.hpp"
#include "oracles.hpp"

#include "ubckit/complex.hpp"
#include "ubckit/finitegroup.hpp"
#include "ubckit/freegroup.hpp"
#include "ubckit/glue.hpp"
#include "ubckit/lp.hpp"
#include "ubckit/nerve.hpp"
#include "ubckit/simplicial.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ubckit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

Rational max_row_sum(const SparseMat& M) {
  Rational best = 0;
  for (const auto& row : M.dense()) {
    Rational s = 0;
    for (const auto& v : row) s += abs_value(v);
    if (s > best) best = s;
  }
  return best;
}

bool is_identity(const SparseMat& M, const std::vector<std::string>& labels) {
  return M == SparseMat::identity(labels);
}

// 1. Exact LP against basic-solution enumeration.
Outcome lp_oracle() {
  Outcome out;
  const auto start = Clock::now();
  XorShift64Star rng(1001);
  int feasible = 0;
  for (int i = 0; i < 100; ++i) {
    const int rows = static_cast<int>(rng.between(1, 6)), cols = static_cast<int>(rng.between(1, 8));
    const SparseMat D = oracle::random_matrix(rng, rows, cols, 3);
    const SparseVec b = oracle::random_rhs(rng, D, 3);
    const FillResult r = solve_min_l1(D, b);
    const auto brute = oracle::brute_force_min_l1(D, b);
    out.require(r.optimal() == brute.has_value(), "feasibility disagrees on instance " + std::to_string(i));
    if (r.optimal() && brute) {
      ++feasible;
      out.require(r.objective == *brute, "objective differs on instance " + std::to_string(i));
    }
    out.require(verify_fill(D, b, r, FillNorm::L1), "certificate fails on instance " + std::to_string(i));
  }
  const double t = seconds_since(start);
  out.require(t < 10, "took too long");
  std::ostringstream d;
  d << "100 instances, " << feasible << " feasible, " << t << " s";
  if (out.pass) out.detail = d.str();
  return out;
}

// 2. UBC of the bounded cochains of Z/2 and Z/3.
Outcome amenable_ubc() {
  Outcome out;
  const auto start = Clock::now();
  std::ostringstream d;
  for (int m : {2, 3}) {
    const NormedComplex C = finite_group_bounded_cochains(FiniteGroupData::cyclic(m), 2);
    for (int k : {1, 2}) {
      UbcOptions o;
      o.mode = UbcMode::Auto;
      const ConstantEstimate est = ubc_constant(C, k, o);
      const std::string tag = "Z/" + std::to_string(m) + " k=" + std::to_string(k);
      out.require(est.value <= 1, tag + " constant exceeds 1");
      if (image_dimension(C, k) <= kExactImageDimensionCap)
        out.require(est.mode == EstimateMode::ExactOnFiniteComplex, tag + " not exact");
      d << tag << ": " << to_string(est.value) << (est.mode == EstimateMode::ExactOnFiniteComplex ? " exact" : " sampled")
        << "; ";
    }
  }
  const double t = seconds_since(start);
  out.require(t < 60, "took too long");
  d << t << " s";
  if (out.pass) out.detail = d.str();
  return out;
}

// 3. Shapiro maps, checked by direct matrix products.
Outcome shapiro() {
  Outcome out;
  const auto Z4 = FiniteGroupData::cyclic(4);
  const auto S3 = FiniteGroupData::symmetric(3);
  const std::vector<std::pair<FiniteGroupData, std::vector<int>>> cases{
      {Z4, Z4.generated({Z4.index_of("2")})}, {S3, S3.generated({S3.index_of("120")})}};
  for (const auto& [G, H] : cases) {
    const ShapiroMaps m = shapiro_maps(G, H, 3);
    const NormedComplex& L = *m.large;
    const std::string tag = "|G|=" + std::to_string(G.order()) + " |H|=" + std::to_string(H.size());
    out.require(H.size() == 2 || H.size() == 3, tag + " wrong subgroup");
    for (int k = 0; k <= 3; ++k) {
      const std::string deg = tag + " k=" + std::to_string(k);
      out.require(is_identity(m.psi.component(k) * m.phi.component(k), m.small->basis(k)), deg + " psi*phi != id");
      SparseMat dh_hd = m.homotopy.component(k + 1) * L.differential(k);
      if (k >= 1) dh_hd = dh_hd + L.differential(k - 1) * m.homotopy.component(k);
      out.require(dh_hd == m.phi.component(k) * m.psi.component(k) - SparseMat::identity(L.basis(k)),
                  deg + " homotopy identity fails");
      out.require(max_row_sum(m.phi.component(k)) <= 1, deg + " |phi| > 1");
      out.require(max_row_sum(m.psi.component(k)) <= 1, deg + " |psi| > 1");
      out.require(max_row_sum(m.homotopy.component(k)) <= k, deg + " |h| > k");
    }
    out.require(m.phi.commutes() && m.psi.commutes(), tag + " maps do not commute with differentials");
  }
  if (out.pass) out.detail = "(Z/4, Z/2) and (S3, Z/3), degrees 0..3";
  return out;
}

// 4. Prism identity and norm growth.
SparseVec prism_defect(const SimplicialComplex& X, const NormedComplex& cyl, const SparseVec& c, int n) {
  SparseVec lhs = cyl.differential(n).apply(prism_chain(c, n, X));
  if (n >= 2) lhs += prism_chain(X.chain_complex("x").differential(n - 1).apply(c), n - 1, X);
  return lhs - (end_inclusion(X, c, 1) - end_inclusion(X, c, 0));
}

Outcome prism_identity() {
  Outcome out;
  int singles = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> vs;
    for (int v = 0; v < n; ++v) vs.push_back("w" + std::to_string(v));
    const SimplicialComplex X(vs, {vs});
    const SimplicialComplex cyl = cylinder(X);
    const NormedComplex target = cyl.chain_complex("cyl");
    for (const auto& s : X.simplices_of_dimension(n - 1)) {
      const SparseVec c{{X.label(s), Rational(1)}};
      const SparseVec Pc = prism_chain(c, n, X);
      out.require(prism_defect(X, target, c, n).is_zero(), "identity fails on a single simplex, n=" + std::to_string(n));
      out.require(Pc.l1_norm() <= n * c.l1_norm(), "norm bound fails on a single simplex");
      out.require(static_cast<int>(Pc.size()) == n, "prism does not have n simplices");
      out.require(static_cast<int>(cyl.simplices_of_dimension(n).size()) == n, "cylinder does not have n top simplices");
      ++singles;
    }
  }
  // Every face of a 4-simplex, prism taken in the larger cylinder.
  {
    const std::vector<std::string> vs{"w0", "w1", "w2", "w3", "w4"};
    const SimplicialComplex X(vs, {vs});
    const NormedComplex target = cylinder(X).chain_complex("cyl");
    for (const auto& s : X.simplices()) {
      const int n = static_cast<int>(s.size());
      if (n > 4) continue;
      const SparseVec c{{X.label(s), Rational(1)}};
      const SparseVec Pc = prism_chain(c, n, X);
      out.require(prism_defect(X, target, c, n).is_zero(), "identity fails on face " + X.label(s));
      out.require(static_cast<int>(Pc.size()) == n && Pc.l1_norm() == n, "prism of face " + X.label(s) + " is not n simplices");
      ++singles;
    }
  }
  XorShift64Star rng(4);
  int chains = 0;
  while (chains < 50) {
    const SimplicialComplex X = gen::random_simplicial(rng, 6, 3, 3);
    const NormedComplex target = cylinder(X).chain_complex("cyl");
    const int d = static_cast<int>(rng.between(0, X.dimension()));
    const SparseVec c = gen::random_chain(rng, X, d, 5);
    out.require(prism_defect(X, target, c, d + 1).is_zero(), "identity fails on a random chain");
    out.require(prism_chain(c, d + 1, X).l1_norm() <= (d + 1) * c.l1_norm(), "norm bound fails on a random chain");
    ++chains;
  }
  if (out.pass) out.detail = std::to_string(singles) + " single simplices, " + std::to_string(chains) + " random chains";
  return out;
}

// 5. Nerve pairs.
std::string h(int i) { return "h" + std::to_string(((i % 6) + 6) % 6); }

Outcome nerve_pairs() {
  Outcome out;
  std::vector<std::string> vs;
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < 6; ++i) {
    vs.push_back(h(i));
    edges.push_back({h(i), h(i + 1)});
  }
  const SimplicialComplex hex(vs, edges);
  const CoverData arcs(hex, {}, {{"U0", {h(0), h(1), h(2)}}, {"U1", {h(2), h(3), h(4)}}, {"U2", {h(4), h(5), h(0)}}});
  const NervePair np = nerve_pair(arcs);
  out.require(np.nerve.vertices().size() == 3, "nerve should have 3 vertices");
  out.require(np.nerve.simplices_of_dimension(1).size() == 3, "nerve should have 3 edges");
  out.require(np.nerve.simplices_of_dimension(2).empty(), "nerve should have no triangle");
  out.require(np.mult == 2, "mult should be 2");
  out.require(np.dimension() == np.mult - 1, "dim != mult - 1");

  std::vector<std::pair<std::string, std::vector<std::string>>> members;
  for (int i = 0; i < 6; ++i) {
    std::vector<std::string> m;
    for (int j : {i - 1, i, i + 1}) {
      m.push_back(h(j) + "_0");
      m.push_back(h(j) + "_1");
    }
    members.push_back({"V" + std::to_string(i), m});
  }
  std::vector<std::string> top;
  for (int i = 0; i < 6; ++i) top.push_back(h(i) + "_1");
  const CoverData collar(cylinder(hex), top, members);
  const NervePair cp = nerve_pair(collar);
  bool all_meet = true;
  for (const auto& s : cp.nerve.simplices()) {
    const std::set<int> common = collar.intersection(s);
    bool meets = false;
    for (int v : common) meets = meets || collar.subspace().count(v) > 0;
    all_meet = all_meet && meets;
  }
  out.require(all_meet, "collar cover has an intersection missing A");
  out.require(cp.mult_A == 0, "relative multiplicity should be 0");
  if (out.pass)
    out.detail = "arcs: mult 2, nerve = boundary of a triangle; collar cover: mult " + std::to_string(cp.mult) +
                 ", mult_A 0";
  return out;
}

// 6. Glueing arithmetic.
Outcome glue_arithmetic() {
  Outcome out;
  out.require(glue_upper_bound(1, 3, {3, 3}) == 30, "bound for two genus-2 handlebodies should be 30");
  out.require(glue_upper_bound(1, 3, {0, 0}) == 0, "zero volumes should give 0");
  out.require(glue_upper_bound(7, 5, {0, 0, 0}) == 0, "zero volumes should give 0");
  if (out.pass) out.detail = "(1, 3, [3, 3]) -> 30; zero volumes -> 0";
  return out;
}

// 7. Constructive glueing of two annuli.
Outcome constructive_glue() {
  Outcome out;
  const GlueingInstance inst = gen::annulus_pair();
  const GlueResult r = glue_cycle(inst, 0);
  out.require(r.optimal(), "matched annuli should glue");
  // ∂z recomputed piece by piece, glue faces folded with sign −1.
  SparseVec boundary;
  for (const auto& p : inst.pieces) {
    SparseVec zi;
    const std::string prefix = p.name + ":";
    for (const auto& [label, v] : r.z)
      if (label.rfind(prefix, 0) == 0) zi.set(label.substr(prefix.size()), v);
    for (const auto& [face, v] : p.complex.out_of(2).apply(zi)) {
      std::string key = prefix + face;
      Rational sign = 1;
      for (const auto& id : inst.identifications)
        if (id.piece_b == p.name && id.label_b == face) {
          key = id.piece_a + ":" + id.label_a;
          sign = -1;
        }
      boundary.add(key, sign * v);
    }
  }
  for (const auto& [label, v] : boundary) {
    const auto colon = label.find(':');
    out.require(inst.piece(label.substr(0, colon)).free_faces.count(label.substr(colon + 1)) > 0,
                "boundary of z touches " + label);
  }
  UbcOptions exact;
  exact.mode = UbcMode::Exact;
  const ConstantEstimate K_N = ubc_constant(glue_locus(inst), 1, exact);
  Rational sum = 0;
  for (const auto& p : inst.pieces) sum += p.cycle.l1_norm();
  out.require(K_N.mode == EstimateMode::ExactOnFiniteComplex, "K_N not exact");
  out.require(r.filler.l1_norm() <= K_N.value * 3 * sum, "|c| exceeds K_N (n+1) sum |z_i|");
  out.require(r.relative_cycle, "glue_cycle does not report a relative cycle");
  if (out.pass)
    out.detail = "|c| = " + to_string(r.filler.l1_norm()) + " <= " + to_string(K_N.value) + "*3*" + to_string(sum);
  return out;
}

// 8. Homotopy-inheritance bound.
Outcome homotopy_inheritance() {
  Outcome out;
  XorShift64Star rng(8888);
  int checks = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const gen::HomotopyPair P = gen::random_homotopy_pair(rng);
    for (int k = P.D->min_degree(); k <= P.D->max_degree(); ++k) {
      SparseMat homotopy = P.D->differential(k + 1) * P.h.at(k);
      if (P.h.count(k - 1)) homotopy = homotopy + P.h.at(k - 1) * P.D->differential(k);
      out.require(SparseMat::identity(P.D->basis(k)) - P.f.at(k) * P.g.at(k) == homotopy, "pair is not a homotopy equivalence");
    }
    for (int k = P.D->min_degree(); k < P.D->max_degree(); ++k) {
      const Rational K = ubc_constant(*P.C, k).value;
      const Rational bound = operator_norm(P.f.at(k + 1), OperatorNormKind::L1toL1) *
                                 operator_norm(P.g.at(k), OperatorNormKind::L1toL1) * K +
                             operator_norm(P.h.at(k), OperatorNormKind::L1toL1);
      const Rational measured = ubc_constant(*P.D, k).value;
      out.require(measured <= bound, "trial " + std::to_string(trial) + " degree " + std::to_string(k) + ": " +
                                         to_string(measured) + " > " + to_string(bound));
      ++checks;
    }
  }
  if (out.pass) out.detail = "20 pairs, " + std::to_string(checks) + " degree checks";
  return out;
}

// 9. F2 experiment: determinism and certificates.
Outcome f2_determinism() {
  Outcome out;
  const auto start = Clock::now();
  const ExperimentConfig config;  // seed 0, k 2, L_cycle 2, L_fill 3, 50 trials
  const auto first = f2_experiment(config);
  const auto second = f2_experiment(config);
  std::ostringstream a, b;
  write_experiment_csv(a, first);
  write_experiment_csv(b, second);
  out.require(a.str() == b.str(), "CSV differs between runs");
  out.require(first.size() == 50, "wrong number of records");
  const SparseMat D = bar_complex(config.rank, config.k, config.l_fill).differential(config.k);
  int optimal = 0;
  for (const auto& rec : first) {
    if (rec.status != FillStatus::Optimal) continue;
    ++optimal;
    const std::string tag = "trial " + std::to_string(rec.trial);
    out.require(D.apply(rec.filler) == rec.boundary, tag + ": filler does not fill");
    out.require(rec.filler.l1_norm() == *rec.fill_norm, tag + ": filler norm mismatch");
    out.require(rec.boundary.l1_norm() == rec.boundary_norm, tag + ": boundary norm mismatch");
    Rational pairing = 0;
    for (const auto& [label, v] : rec.certificate) pairing += v * rec.boundary.get(label);
    out.require(pairing == *rec.fill_norm, tag + ": dual objective differs");
    const auto y = to_dense(rec.certificate, D.row_labels());
    for (const auto& v : D.apply_transpose(y)) out.require(abs_value(v) <= 1, tag + ": dual infeasible");
  }
  const double t = seconds_since(start);
  out.require(t < 300, "took too long");
  std::ostringstream d;
  d << optimal << "/50 optimal, certificates re-verified, " << t << " s for two runs";
  if (out.pass) out.detail = d.str();
  return out;
}

// 10. Bounded product of three cochain complexes.
Outcome bounded_product_dims() {
  Outcome out;
  const std::vector<NormedComplex> family{
      dual_complex(SimplicialComplex({"a", "b", "c"}, {{"a", "b", "c"}}).chain_complex("disk")),
      dual_complex(SimplicialComplex({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}).chain_complex("circle")),
      dual_complex(SimplicialComplex({"p", "q"}, {}).chain_complex("points"))};
  const NormedComplex P = bounded_product(family, 2);
  std::ostringstream d;
  for (int k = 0; k <= 2; ++k) {
    int sum = 0;
    for (const auto& C : family) sum += homology_dimension(C, k);
    const int prod = homology_dimension(P, k);
    out.require(prod == sum, "degree " + std::to_string(k) + ": " + std::to_string(prod) + " != " + std::to_string(sum));
    d << "H^" << k << " = " << prod << "; ";
  }
  if (out.pass) out.detail = d.str();
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"LP oracle equivalence", lp_oracle},
      {"Amenable UBC prediction", amenable_ubc},
      {"Shapiro norms", shapiro},
      {"Prism identity", prism_identity},
      {"Nerve pair", nerve_pairs},
      {"Glueing arithmetic", glue_arithmetic},
      {"Constructive glueing", constructive_glue},
      {"Homotopy-inheritance bound", homotopy_inheritance},
      {"F2 experiment determinism and certification", f2_determinism},
      {"Bounded product", bounded_product_dims},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ". " << criteria[i].first << " -- " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
