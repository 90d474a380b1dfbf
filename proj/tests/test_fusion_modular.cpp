#include <cmath>

#include "doctest.h"
#include "mtcforge/catalog.hpp"
#include "mtcforge/families.hpp"
#include "support.hpp"

using namespace mtcforge;
using M = Matrix<double>;
using Fuse = std::vector<std::pair<Label, int>>;

namespace {

M su2_s_matrix(int k) {
  const auto s = oracle::su2_s(k);
  M m(k + 1, k + 1);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) m(a, b) = s[a][b];
  return m;
}

FusionRing ising_ring() { return catalog_ising().ring; }

}  // namespace

TEST_CASE("fuse examples") {
  const auto ising = ising_ring();
  CHECK(fuse(ising, 1, 1) == Fuse{{0, 1}, {2, 1}});
  for (Label j = 0; j < 3; ++j) CHECK(fuse(ising, 0, j) == Fuse{{j, 1}});
  CHECK(fuse(su2_ring(1), 1, 1) == Fuse{{0, 1}});
  CHECK(fuse(su2_ring(4), 2, 2) == Fuse{{0, 1}, {2, 1}, {4, 1}});
  CHECK_THROWS_AS(fuse(ising, 0, 3), DomainError);
  CHECK_THROWS_AS(fuse(ising, -1, 0), DomainError);
}

TEST_CASE("Ising ring matches the brute-force Verlinde sum of SU(2)_2") {
  const auto s = oracle::su2_s(2);
  const auto ising = ising_ring();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(ising.N(i, j, k) == std::lround(oracle::verlinde(s, i, j, k)));
}

TEST_CASE("verify_ring passes on valid rings") {
  CHECK(verify_ring(FusionRing::trivial(), {}).status == Status::pass);
  CHECK(verify_ring(ising_ring(), {}).status == Status::pass);
  for (int k = 1; k <= 6; ++k) CHECK(verify_ring(su2_ring(k), {}).status == Status::pass);
}

TEST_CASE("verify_ring flags a non-associative corruption with its triple") {
  // sigma x sigma = 1 only: (sigma sigma) psi = psi but sigma (sigma psi) = 1.
  const auto bad = ising_ring().with_multiplicity(1, 1, 2, 0);
  const auto sec = verify_ring(bad, {});
  CHECK(sec.status == Status::fail);
  bool assoc_failed = false;
  for (const auto& c : sec.checks)
    if (c.name == "associativity") {
      assoc_failed = !c.pass;
      CHECK(c.worst.size() == 4);
    }
  CHECK(assoc_failed);
}

TEST_CASE("N^sigma_{sigma sigma} = 1 on Ising gives the Rep(S3) ring") {
  // This corruption is still associative, so the ring suite cannot see it;
  // paired with the Ising S-matrix the modular suite does.
  const auto bad = ising_ring().with_multiplicity(1, 1, 1, 1);
  CHECK(verify_ring(bad, {}).status == Status::pass);
  auto md = *catalog_ising().modular;
  md.ring = bad;
  const auto sec = verify_modular(md, {});
  CHECK(sec.status == Status::fail);
  for (const auto& c : sec.checks)
    if (c.name == "verlinde_matches_ring") CHECK_FALSE(c.pass);
}

TEST_CASE("validate_structure names the invariant") {
  const auto ising = ising_ring();
  try {
    ising.with_multiplicity(1, 1, 0, 2).validate_structure();
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "vacuum channel multiplicity");
  }
  try {
    ising.with_multiplicity(0, 1, 1, 0).validate_structure();
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "unit law");
  }
  CHECK_THROWS_AS(FusionRing({"a", "b"}, {0}, {1, 0, 0, 1, 0, 1, 1, 0}), Error);
}

TEST_CASE("verlinde_fusion examples") {
  const Tolerance tol;
  const auto triv = verlinde_fusion(M{{1}}, tol);
  CHECK(triv.size() == 1);
  CHECK(triv.N(0, 0, 0) == 1);

  const double s = 1 / std::sqrt(2.0);
  const auto su1 = verlinde_fusion(M{{s, s}, {s, -s}}, tol);
  CHECK(su1.N(1, 1, 0) == 1);
  CHECK(su1.N(0, 1, 1) == 1);
  CHECK(su1.N(1, 1, 1) == 0);

  const auto su2 = verlinde_fusion(su2_s_matrix(2), tol, {"1", "sigma", "psi"});
  CHECK(su2 == ising_ring());
}

TEST_CASE("Verlinde fusion of SU(2)_k equals truncated Clebsch-Gordan") {
  for (int k = 1; k <= 8; ++k) {
    const auto ring = verlinde_fusion(su2_s_matrix(k), {});
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) CHECK(ring.N(a, b, c) == oracle::su2_cg(k, a, b, c));
  }
}

TEST_CASE("verlinde_fusion errors") {
  CHECK_THROWS_AS(verlinde_fusion(M{{1, 1}, {0, 1}}, {}), PreconditionError);
  // Unitary but not modular: the Verlinde sums are not integers.
  const double c = std::cos(0.3), s = std::sin(0.3);
  try {
    verlinde_fusion(M{{c, s}, {s, -c}}, {});
    FAIL("expected NotModularError");
  } catch (const NotModularError& e) {
    CHECK(e.deviation() > 1e-3);
  }
}

TEST_CASE("quantum_dims examples") {
  CHECK(quantum_dims(M{{1}}) == std::vector<double>{1});
  const auto d2 = quantum_dims(su2_s_matrix(2));
  REQUIRE(d2.size() == 3);
  CHECK(d2[0] == doctest::Approx(1));
  CHECK(d2[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(d2[2] == doctest::Approx(1));
  const auto d1 = quantum_dims(su2_s_matrix(1));
  CHECK(d1[1] == doctest::Approx(1));
  for (int k = 1; k <= 8; ++k) {
    const auto d = quantum_dims(su2_s_matrix(k));
    for (int a = 0; a <= k; ++a) CHECK(std::abs(d[a] - oracle::su2_dim(k, a)) < 1e-12);
  }
  // Negative S_{0i}/S_{00}: a non-unitary labelling.
  const double s = 1 / std::sqrt(2.0);
  CHECK_THROWS_AS(quantum_dims(M{{s, -s}, {-s, -s}}), NotUnitaryModularError);
}

TEST_CASE("verify_modular") {
  CHECK(verify_modular(*catalog_trivial().modular, {}).status == Status::pass);
  const auto su3 = *catalog_su2(3).modular;
  const auto sec = verify_modular(su3, {});
  CHECK(sec.status == Status::pass);
  REQUIRE(sec.details.contains("lambda"));
  const auto lam = sec.details["lambda"];
  CHECK(std::hypot(lam[0].get<double>(), lam[1].get<double>()) == doctest::Approx(1).epsilon(1e-12));

  auto bad = *catalog_su2(2).modular;
  // A phase on T_{sigma sigma} alone is invisible to (ST)^3 because S_{sigma sigma} = 0.
  bad.T(2, 2) *= std::polar(1.0, 0.4);
  const auto fail = verify_modular(bad, {});
  CHECK(fail.status == Status::fail);
  for (const auto& c : fail.checks)
    if (c.name == "st_cubed") CHECK_FALSE(c.pass);
}

TEST_CASE("modular anomaly equals exp(2 pi i c / 8) for SU(2)_k") {
  for (int k = 1; k <= 5; ++k) {
    const auto md = *catalog_su2(k).modular;
    const auto lam = modular_anomaly(md.S, md.T);
    // The c/24 shift in T cancels the anomaly.
    CHECK(std::abs(lam - std::complex<double>(1, 0)) < 1e-10);
  }
}
