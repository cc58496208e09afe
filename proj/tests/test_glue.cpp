#include "generators.hpp"

#include "ubckit/errors.hpp"
#include "ubckit/glue.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ubckit;

TEST_CASE("glueing calculators", "[glue]") {
  CHECK(glue_upper_bound(1, 3, {3, 3}) == 30);
  CHECK(glue_upper_bound(5, 4, {0, 0, 0}) == 0);
  CHECK(glue_upper_bound(0, 2, {Rational(1, 2), Rational(2, 3)}) == Rational(7, 6));
  CHECK(glue_upper_bound(2, 1, {}) == 0);
  CHECK(interior_bound(1, 2, 4) == 16);
  CHECK(interior_bound(7, 3, 0) == 0);
  CHECK(interior_bound(0, 5, Rational(3, 7)) == Rational(3, 7));
  CHECK_THROWS_AS(glue_upper_bound(-1, 3, {1}), InputError);
  CHECK_THROWS_AS(glue_upper_bound(1, 0, {1}), InputError);
  CHECK_THROWS_AS(glue_upper_bound(1, 3, {1, -1}), InputError);
  CHECK_THROWS_AS(interior_bound(1, 3, -1), InputError);
}

TEST_CASE("calculators are monotone", "[glue][property]") {
  XorShift64Star rng(5);
  auto q = [&] { return Rational(static_cast<long>(rng.below(20)), static_cast<long>(rng.between(1, 6))); };
  for (int trial = 0; trial < 200; ++trial) {
    const Rational K = q(), dK = q(), v = q(), dv = q();
    const int n = static_cast<int>(rng.between(1, 6));
    std::vector<Rational> vols{q(), v};
    std::vector<Rational> bigger{vols[0], v + dv};
    CHECK(glue_upper_bound(K, n, vols) <= glue_upper_bound(K + dK, n, vols));
    CHECK(glue_upper_bound(K, n, vols) <= glue_upper_bound(K, n + 1, vols));
    CHECK(glue_upper_bound(K, n, vols) <= glue_upper_bound(K, n, bigger));
    CHECK(interior_bound(K, n, v) <= interior_bound(K + dK, n, v));
    CHECK(interior_bound(K, n, v) <= interior_bound(K, n + 1, v));
    CHECK(interior_bound(K, n, v) <= interior_bound(K, n, v + dv));
    CHECK(glue_upper_bound(K, n, {0, 0}) == 0);
  }
}

TEST_CASE("single piece glues to itself", "[glue]") {
  GlueingInstance inst;
  inst.degree = 2;
  inst.pieces = {gen::annulus_piece("A", 1, false, false)};
  const GlueResult r = glue_cycle(inst, 0);
  REQUIRE(r.optimal());
  CHECK(r.filler.is_zero());
  CHECK(r.b.is_zero());
  CHECK(r.z.size() == inst.pieces[0].cycle.size());
  for (const auto& [label, v] : inst.pieces[0].cycle) CHECK(r.z.get("A:" + label) == v);
  CHECK(r.relative_cycle);
}

TEST_CASE("matched annuli cancel along the circle", "[glue]") {
  const GlueingInstance inst = gen::annulus_pair();
  const NormedComplex N = glue_locus(inst);
  CHECK(N.dimension(2) == 0);
  CHECK(N.dimension(1) == 3);
  CHECK(N.dimension(0) == 3);
  const ConstantEstimate K_N = ubc_constant(N, 1);
  CHECK(K_N.value == 0);

  const GlueResult r = glue_cycle(inst, 1);
  REQUIRE(r.optimal());
  CHECK(r.b.is_zero());
  CHECK(r.filler.is_zero());
  CHECK(r.certificate_ok);
  CHECK(r.relative_cycle);
  CHECK(r.boundary_chain_ok);
  CHECK(r.measured_bound_ok);
  CHECK(r.declared_bound_ok);
  CHECK(r.within(K_N.value, inst.degree));
  CHECK(r.sum_cycle_norms == 12);
  CHECK(r.z.l1_norm() == 12);
}

TEST_CASE("mismatched scaling is reported with a Farkas vector", "[glue]") {
  const GlueingInstance inst = gen::annulus_pair(2);
  const GlueResult r = glue_cycle(inst, 1);
  CHECK_FALSE(r.optimal());
  CHECK(r.certificate_ok);
  CHECK_FALSE(r.relative_cycle);
  CHECK(r.b.l1_norm() == 3);
  CHECK_FALSE(r.farkas.is_zero());
  // uᵀb ≠ 0 while N has nothing in the top degree.
  Rational pairing = 0;
  for (const auto& [label, v] : r.farkas) pairing += v * r.b.get(label);
  CHECK(pairing != 0);
}

TEST_CASE("annulus scalings: feasible exactly when they agree", "[glue][property]") {
  XorShift64Star rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const Rational a(static_cast<long>(rng.between(1, 4)), static_cast<long>(rng.between(1, 3)));
    const Rational b = rng.below(2) ? a : Rational(static_cast<long>(rng.between(1, 4)));
    GlueingInstance inst = gen::annulus_pair(b);
    inst.pieces[0].cycle = inst.pieces[0].cycle.scaled(a);
    const GlueResult r = glue_cycle(inst, 0);
    CHECK(r.optimal() == (a == b));
    CHECK(r.certificate_ok);
    CHECK(r.b.l1_norm() == 3 * abs_value(a - b));
    CHECK(r.relative_cycle == (a == b));
    CHECK(r.boundary_chain_ok);
  }
}

TEST_CASE("three annuli in a row", "[glue]") {
  GlueingInstance inst;
  inst.degree = 2;
  inst.pieces = {gen::annulus_piece("A", 1, true, false), gen::annulus_piece("B", 1, true, true),
                 gen::annulus_piece("C", 1, false, true)};
  for (const auto& e : {"a", "b", "c"})
    for (const auto& f : {"b", "c"})
      if (std::string(e) < f) {
        const std::string lo = std::string(e) + "_0." + f + "_0", hi = std::string(e) + "_1." + f + "_1";
        inst.identifications.push_back({"A", lo, "B", lo});
        inst.identifications.push_back({"B", hi, "C", hi});
      }
  const GlueResult r = glue_cycle(inst, 0);
  REQUIRE(r.optimal());
  CHECK(r.b.is_zero());
  CHECK(r.relative_cycle);
  CHECK(glue_locus(inst).dimension(1) == 6);
}

TEST_CASE("instance validation", "[glue]") {
  GlueingInstance self = gen::annulus_pair();
  self.identifications[0].piece_b = "A";
  self.identifications[0].label_b = self.identifications[0].label_a;
  CHECK_THROWS_AS(glue_cycle(self, 1), InputError);

  GlueingInstance missing = gen::annulus_pair();
  missing.identifications.pop_back();
  CHECK_THROWS_AS(glue_cycle(missing, 1), InputError);

  GlueingInstance twice = gen::annulus_pair();
  twice.identifications[1].label_b = twice.identifications[0].label_b;
  CHECK_THROWS_AS(glue_cycle(twice, 1), InputError);

  GlueingInstance not_relative = gen::annulus_pair();
  not_relative.pieces[0].free_faces.clear();
  CHECK_THROWS_AS(validate_instance(not_relative), InputError);

  GlueingInstance bad_degree = gen::annulus_pair();
  bad_degree.degree = 3;
  CHECK_THROWS_AS(validate_instance(bad_degree), InputError);

  CHECK_THROWS_AS(glue_cycle(gen::annulus_pair(), -1), InputError);
}
