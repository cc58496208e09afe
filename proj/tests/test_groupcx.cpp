#include "ubckit/complex.hpp"
#include "ubckit/errors.hpp"
#include "ubckit/finitegroup.hpp"
#include "ubckit/freegroup.hpp"
#include "ubckit/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>

using namespace ubckit;

namespace {

std::size_t ball_count(int r, int L) {
  std::size_t total = 1, layer = 2 * static_cast<std::size_t>(r);
  for (int m = 1; m <= L; ++m) {
    total += layer;
    layer *= 2 * static_cast<std::size_t>(r) - 1;
  }
  return total;
}

// b ∈ im D by comparing ranks, without the LP.
bool in_image(const SparseMat& D, const SparseVec& b) {
  std::vector<std::string> cols = D.col_labels();
  cols.push_back("__rhs");
  SparseMat aug(D.row_labels(), cols);
  for (int j = 0; j < D.cols(); ++j)
    for (const auto& e : D.column(j)) aug.set(e.row, j, e.value);
  for (const auto& [label, value] : b) aug.set(*aug.row_index(label), D.cols(), value);
  return rank(aug) == rank(D);
}

bool is_identity(const SparseMat& M) {
  return M.row_labels() == M.col_labels() && M == SparseMat::identity(M.row_labels());
}

}  // namespace

TEST_CASE("words are freely reduced and ordered shortlex", "[groupcx][freegroup]") {
  const Word a = Word::parse("a"), B = Word::parse("B");
  CHECK((a * a.inverse()).is_identity());
  CHECK((Word::parse("ab") * Word::parse("Ba")).str() == "aa");
  CHECK(Word::parse("1").str() == "1");
  CHECK(a < Word::parse("A"));
  CHECK(Word::parse("A") < Word::parse("b"));
  CHECK(B < Word::parse("aa"));
  CHECK_THROWS_AS(Word::parse("aA"), InputError);
  CHECK_THROWS_AS(Word::parse("a1"), InputError);
}

TEST_CASE("balls in free groups", "[groupcx][freegroup]") {
  CHECK(ball(2, 0).size() == 1);
  CHECK(ball(2, 1).size() == 5);
  CHECK(ball(2, 2).size() == 17);
  for (int r = 1; r <= 3; ++r)
    for (int L = 0; L <= 4; ++L) {
      const auto words = ball(r, L);
      CHECK(words.size() == ball_count(r, L));
      CHECK(std::is_sorted(words.begin(), words.end()));
      CHECK(std::set<std::string>([&] {
              std::set<std::string> s;
              for (const auto& w : words) s.insert(w.str());
              return s;
            }()).size() == words.size());
    }
}

TEST_CASE("bar faces and small bar complexes", "[groupcx][bar]") {
  const BarTuple ab{Word::parse("a"), Word::parse("b")};
  const auto faces = bar_faces(ab);
  REQUIRE(faces.size() == 3);
  CHECK(bar_label(faces[0].first) == "b");
  CHECK(faces[0].second == 1);
  CHECK(bar_label(faces[1].first) == "ab");
  CHECK(faces[1].second == -1);
  CHECK(bar_label(faces[2].first) == "a");
  CHECK(faces[2].second == 1);
  // (a|A): the middle face is the identity and drops out.
  CHECK(bar_faces(BarTuple{Word::parse("a"), Word::parse("A")}).size() == 2);

  const NormedComplex C = bar_complex(2, 1, 1);
  CHECK(C.dimension(1) == 4);
  CHECK(C.basis(0) == std::vector<std::string>{"1"});
  CHECK(C.differential(1).is_zero());
  CHECK_NOTHROW(bar_complex(2, 3, 2));
  CHECK_THROWS_AS(bar_complex(2, 0, 2), InputError);
}

TEST_CASE("bar boundary squares to zero on every truncated basis", "[groupcx][bar][property]") {
  for (int r = 1; r <= 3; ++r)
    for (int L = 1; L <= 3; ++L) {
      std::set<BarTuple> lower;
      for (int k = 0; k <= 4; ++k) {
        const auto basis = bar_basis(r, k, L);
        bool closed = true, squares_to_zero = true;
        for (const auto& t : basis) {
          std::map<BarTuple, int> twice;
          for (const auto& [face, s] : bar_faces(t)) {
            if (!lower.count(face)) closed = false;
            for (const auto& [ff, s2] : bar_faces(face)) twice[ff] += s * s2;
          }
          for (const auto& [ff, v] : twice)
            if (v != 0) squares_to_zero = false;
        }
        INFO("rank " << r << " radius " << L << " degree " << k);
        CHECK(closed);
        CHECK(squares_to_zero);
        lower = std::set<BarTuple>(basis.begin(), basis.end());
      }
      // Matrix form, where the bases are of moderate size.
      if (bar_basis(r, 4, L).size() < 40000) CHECK_NOTHROW(validate_complex(bar_complex(r, 4, L)));
    }
}

TEST_CASE("a commutator 2-cycle fills or is certified infeasible", "[groupcx][bar]") {
  const NormedComplex C = bar_complex(2, 3, 2);
  // ∂[(a|b) + (ab|B) − (b|B)] = 0.
  const SparseVec z{{"a|b", 1}, {"ab|B", 1}, {"b|B", -1}};
  CHECK(C.out_of(2).apply(z).is_zero());
  const FillResult r = fill_norm(C, 2, z);
  CHECK(r.optimal() == in_image(C.into(2), z));
  CHECK(verify_fill(C.into(2), z, r, FillNorm::L1));
}

TEST_CASE("f2 experiment is deterministic and certified", "[groupcx][f2]") {
  ExperimentConfig cfg;
  cfg.seed = 3;
  cfg.k = 2;
  cfg.l_cycle = 1;
  cfg.l_fill = 2;
  cfg.trials = 6;
  const auto first = f2_experiment(cfg);
  std::ostringstream a, b, c;
  write_experiment_csv(a, first);
  write_experiment_csv(b, f2_experiment(cfg));
  cfg.threads = 2;
  write_experiment_csv(c, f2_experiment(cfg));
  CHECK(a.str() == b.str());
  CHECK(a.str() == c.str());
  CHECK(a.str().rfind(std::string(kExperimentCsvHeader) + "\n", 0) == 0);
  for (const auto& rec : first) {
    CHECK(rec.certificate_ok);
    CHECK(rec.ratio.has_value() == (rec.status == FillStatus::Optimal));
  }

  // A single basis tuple t is itself a filler of ∂t, so fill(∂t) ≤ 1.
  const NormedComplex C = bar_complex(2, 2, 2);
  for (const auto& t : bar_basis(2, 2, 1)) {
    const SparseVec b = C.out_of(2).apply(SparseVec{{bar_label(t), 1}});
    const FillResult f = fill_norm(C, 1, b);
    REQUIRE(f.optimal());
    CHECK(f.objective <= 1);
  }

  ExperimentConfig bad;
  bad.k = 1;
  CHECK_THROWS_AS(f2_experiment(bad), InputError);
  bad.k = 2;
  bad.l_fill = 1;
  CHECK_THROWS_AS(f2_experiment(bad), InputError);
}

TEST_CASE("zero boundary draws record fill 0 and ratio 0", "[groupcx][f2]") {
  // In rank 1 at radius 1 the only 2-tuples are (a|a) and (A|A), whose boundaries
  // are nonzero; use the csv writer directly on a synthetic zero record instead.
  ExperimentRecord rec;
  rec.boundary_norm = 0;
  rec.fill_norm = Rational(0);
  rec.ratio = Rational(0);
  std::ostringstream out;
  write_experiment_csv(out, {rec});
  CHECK(out.str() == std::string(kExperimentCsvHeader) + "\n0,0,0,0,0,0,0,0,Optimal\n");
}

TEST_CASE("finite groups are validated", "[groupcx][finite]") {
  const auto Z4 = FiniteGroupData::cyclic(4);
  CHECK(Z4.mul(3, 2) == 1);
  CHECK(Z4.inverse(1) == 3);
  const auto S3 = FiniteGroupData::symmetric(3);
  CHECK(S3.order() == 6);
  CHECK(S3.names()[S3.identity()] == "012");
  CHECK(S3.generated({S3.index_of("120")}).size() == 3);
  CHECK_THROWS_AS(S3.check_subgroup({S3.identity(), S3.index_of("120")}), InputError);
  CHECK_NOTHROW(S3.check_subgroup(S3.generated({S3.index_of("102")})));
  CHECK_THROWS_AS(FiniteGroupData({"e", "x"}, {{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroupData({"e", "x"}, {{0, 1}, {1, 2}}), InputError);
}

TEST_CASE("bounded cochains of finite groups", "[groupcx][finite]") {
  const NormedComplex T = finite_group_bounded_cochains(FiniteGroupData::cyclic(1), 3);
  for (int k = 0; k <= 3; ++k) CHECK(T.dimension(k) == 1);
  CHECK(homology_dimension(T, 0) == 1);
  for (int k = 1; k <= 3; ++k) CHECK(homology_dimension(T, k) == 0);
  CHECK_NOTHROW(validate_complex(T));

  const NormedComplex Z2 = finite_group_bounded_cochains(FiniteGroupData::cyclic(2), 3);
  CHECK(Z2.dimension(1) == 2);
  CHECK(Z2.basis(1) == std::vector<std::string>{"0.0", "0.1"});
  CHECK_NOTHROW(validate_complex(Z2));
  CHECK(homology_dimension(Z2, 0) == 1);
  for (int k = 1; k <= 3; ++k) CHECK(homology_dimension(Z2, k) == 0);

  const NormedComplex S3 = finite_group_bounded_cochains(FiniteGroupData::symmetric(3), 2);
  CHECK_NOTHROW(validate_complex(S3));
  CHECK(S3.dimension(2) == 36);
  for (int k = 1; k <= 2; ++k) CHECK(homology_dimension(S3, k) == 0);
}

TEST_CASE("UBC constants of finite cyclic groups are at most one", "[groupcx][finite][ubc]") {
  for (int m : {2, 3, 4}) {
    const NormedComplex C = finite_group_bounded_cochains(FiniteGroupData::cyclic(m), 2);
    for (int k : {1, 2}) {
      UbcOptions opt;
      opt.mode = UbcMode::Auto;
      const ConstantEstimate est = ubc_constant(C, k, opt);
      INFO("Z/" << m << " degree " << k);
      CHECK(est.value <= 1);
      // δ⁰ vanishes on invariant 0-cochains (constants); δ¹ does not.
      CHECK((est.value > 0) == (k == 2));
    }
  }
}

TEST_CASE("Shapiro maps", "[groupcx][shapiro]") {
  struct Case {
    FiniteGroupData G;
    std::vector<int> H;
  };
  const auto Z4 = FiniteGroupData::cyclic(4);
  const auto S3 = FiniteGroupData::symmetric(3);
  std::vector<Case> cases{{Z4, {0, 2}}, {S3, S3.generated({S3.index_of("120")})}, {Z4, {0, 1, 2, 3}}};
  for (const auto& [G, H] : cases) {
    const ShapiroMaps m = shapiro_maps(G, H, 3);
    INFO("|G| = " << G.order() << ", |H| = " << H.size());
    CHECK(m.coset_representatives.size() * H.size() == static_cast<std::size_t>(G.order()));
    CHECK(m.coset_representatives.front() == G.identity());
    CHECK(m.phi.commutes());
    CHECK(m.psi.commutes());
    for (int k = 0; k <= 3; ++k) {
      CHECK(is_identity(m.psi.component(k) * m.phi.component(k)));
      SparseMat dh_hd = m.homotopy.component(k + 1) * m.large->differential(k);
      if (k >= 1) dh_hd = dh_hd + m.large->differential(k - 1) * m.homotopy.component(k);
      const SparseMat phipsi = m.phi.component(k) * m.psi.component(k);
      CHECK(dh_hd == phipsi - SparseMat::identity(m.large->basis(k)));
      CHECK(m.phi.measured_norm(k) <= 1);
      CHECK(m.psi.measured_norm(k) <= 1);
      CHECK(m.homotopy.measured_norm(k) <= k);
    }
    CHECK(m.phi.within_declared_bounds());
    CHECK(m.psi.within_declared_bounds());
    CHECK(m.homotopy.within_declared_bounds());
    if (static_cast<int>(H.size()) == G.order()) {
      for (int k = 0; k <= 3; ++k) {
        CHECK(is_identity(m.phi.component(k) * m.psi.component(k)));
        // h repeats entries rather than vanishing, and is null: δh + hδ = 0.
        SparseMat dh_hd = m.homotopy.component(k + 1) * m.large->differential(k);
        if (k >= 1) dh_hd = dh_hd + m.large->differential(k - 1) * m.homotopy.component(k);
        CHECK(dh_hd.is_zero());
      }
    }
  }
  CHECK_THROWS_AS(shapiro_maps(S3, {S3.identity(), S3.index_of("120")}, 2), InputError);
}

TEST_CASE("alternating projection", "[groupcx][alt]") {
  const CochainMap id0 = alternating_projection(3, 0);
  CHECK(is_identity(id0.component(0)));

  const CochainMap two = alternating_projection(2, 1);
  const SparseMat& a1 = two.components.at(1);
  for (const std::string diag : {"s0.s0", "s1.s1"}) {
    const int r = *a1.row_index(diag);
    for (int j = 0; j < a1.cols(); ++j) CHECK(a1.at(r, j) == 0);
  }

  for (int S = 1; S <= 4; ++S)
    for (int k = 0; k <= 2; ++k) {
      const CochainMap alt = alternating_projection(S, k);
      CHECK(alt.commutes());
      CHECK(alt.within_declared_bounds());
      const SparseMat& P = alt.components.at(k);
      CHECK(P * P == P);
      // Alternating functions are determined by their values on strictly
      // increasing tuples: C(S, k+1) of them.
      std::size_t increasing = 0;
      for (const auto& label : alt.source->basis(k)) {
        std::vector<int> t;
        std::size_t start = 0;
        while (start <= label.size()) {
          const std::size_t dot = label.find('.', start);
          t.push_back(std::stoi(label.substr(start + 1, dot - start - 1)));
          if (dot == std::string::npos) break;
          start = dot + 1;
        }
        if (std::adjacent_find(t.begin(), t.end(), std::greater_equal<int>()) == t.end()) ++increasing;
      }
      INFO("S = " << S << ", k = " << k);
      CHECK(rank(P) == static_cast<int>(increasing));
    }
}
