#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "mtcforge/families.hpp"
#include "support.hpp"

using namespace mtcforge;

TEST_CASE("central_charge") {
  CHECK(central_charge(2) == 0.0);
  CHECK(central_charge(3) == 0.5);
  CHECK(central_charge(4) == doctest::Approx(0.7).epsilon(1e-15));
  for (int m = 2; m <= 12; ++m) CHECK(central_charge(m) == 1.0 - 6.0 / (m * (m + 1.0)));
  CHECK_THROWS_AS(central_charge(1), DomainError);
}

TEST_CASE("kac_weight against the printed formula") {
  CHECK(kac_weight(3, 1, 1) == 0.0);
  CHECK(kac_weight(3, 2, 2) == doctest::Approx(1.0 / 16));
  // ((4 - 6)^2 - 1) / 48 = 1/16; (1,2) and (2,2) are the same Kac class.
  CHECK(kac_weight(3, 1, 2) == doctest::Approx(1.0 / 16));
  CHECK(kac_weight(3, 2, 1) == doctest::Approx(0.5));
  for (int m = 2; m <= 9; ++m)
    for (int r = 1; r < m; ++r)
      for (int s = 1; s <= m; ++s) {
        CHECK(std::abs(kac_weight(m, r, s) - oracle::kac_h(m, r, s)) < 1e-15);
        CHECK(kac_weight(m, r, s) == kac_weight(m, m - r, m + 1 - s));
      }
  CHECK_THROWS_AS(kac_weight(3, 0, 1), DomainError);
  CHECK_THROWS_AS(kac_weight(3, 3, 1), DomainError);
  CHECK_THROWS_AS(kac_weight(3, 1, 4), DomainError);
}

TEST_CASE("minimal_model examples") {
  const auto m3 = minimal_model<double>(3);
  REQUIRE(m3.modular.size() == 3);
  auto w = m3.modular.weights;
  std::sort(w.begin(), w.end());
  CHECK(w[0] == 0.0);
  CHECK(w[1] == doctest::Approx(1.0 / 16));
  CHECK(w[2] == doctest::Approx(0.5));
  // d in label order: vacuum, 1/16, 1/2.
  CHECK(m3.modular.d[0] == doctest::Approx(1));
  CHECK(m3.modular.d[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(m3.modular.d[2] == doctest::Approx(1));

  const auto m4 = minimal_model<double>(4);
  CHECK(m4.modular.size() == 6);
  auto has = [&](double h) {
    return std::any_of(m4.modular.weights.begin(), m4.modular.weights.end(),
                       [&](double x) { return std::abs(x - h) < 1e-14; });
  };
  CHECK(has(1.5));
  CHECK(has(7.0 / 16));

  const auto m2 = minimal_model<double>(2);
  CHECK(m2.modular.size() == 1);
  CHECK(m2.modular.central_charge == 0.0);
  CHECK_THROWS_AS(minimal_model<double>(1), DomainError);
}

TEST_CASE("minimal models are modular and match the fusion oracle") {
  for (int m = 3; m <= 7; ++m) {
    const auto mm = minimal_model<double>(m);
    CHECK(verify_modular(mm.modular, {}).status == Status::pass);
    const oracle::MinimalOracle bpz(m, mm.modular.weights);
    const int n = mm.modular.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) CHECK(mm.modular.ring.N(a, b, c) == bpz.N(a, b, c));
    CHECK(bpz_fusion(mm.kac) == mm.modular.ring);
  }
}

TEST_CASE("M(4,5) has the tricritical Ising fusion of the 3/2 field") {
  const auto mm = minimal_model<double>(4);
  const auto& w = mm.modular.weights;
  auto label = [&](double h) {
    return static_cast<Label>(std::find_if(w.begin(), w.end(), [&](double x) { return std::abs(x - h) < 1e-14; }) -
                              w.begin());
  };
  const Label eps2 = label(1.5);
  CHECK(fuse(mm.modular.ring, eps2, eps2) == std::vector<std::pair<Label, int>>{{0, 1}});
}

TEST_CASE("su2_data examples") {
  const auto k1 = su2_data<double>(1);
  CHECK(k1.skeletal.size() == 2);
  CHECK(fuse(k1.skeletal.ring(), 1, 1) == std::vector<std::pair<Label, int>>{{0, 1}});
  CHECK(k1.modular.d[1] == doctest::Approx(1));

  const auto k2 = su2_data<double>(2);
  CHECK(k2.modular.d[1] == doctest::Approx(std::sqrt(2.0)));
  const auto& b = k2.skeletal.block(1, 1, 1, 1);
  REQUIRE(b.rows == std::vector<Label>{0, 2});
  const double s = 1 / std::sqrt(2.0);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(std::abs(b.m(r, c)) == doctest::Approx(s));
  // The sign pattern is fixed up to gauge; the determinant is -1 either way.
  const auto det = b.m(0, 0) * b.m(1, 1) - b.m(0, 1) * b.m(1, 0);
  CHECK(std::abs(det + 1.0) < 1e-14);

  CHECK(fuse(su2_ring(4), 2, 2) == std::vector<std::pair<Label, int>>{{0, 1}, {2, 1}, {4, 1}});
  CHECK_THROWS_AS(su2_data<double>(0), DomainError);
}

TEST_CASE("su2 ring against truncated Clebsch-Gordan") {
  for (int k = 1; k <= 7; ++k) {
    const auto ring = su2_ring(k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) {
          CHECK(ring.N(a, b, c) == oracle::su2_cg(k, a, b, c));
          CHECK(su2_admissible(k, a, b, c) == (oracle::su2_cg(k, a, b, c) == 1));
        }
  }
}

TEST_CASE("q6j examples") {
  for (int k = 1; k <= 4; ++k) CHECK(q6j<double>(k, 0, 0, 0, 0, 0, 0) == doctest::Approx(1));
  CHECK(q6j<double>(2, 1, 1, 0, 0, 1, 1) == 0.0);  // (a, b, e) = (1, 1, 1) has odd sum
  const double s = 1 / std::sqrt(2.0);
  for (int e : {0, 2})
    for (int f : {0, 2}) CHECK(std::abs(q6j<double>(2, 1, 1, 1, 1, e, f)) == doctest::Approx(s));
  CHECK_THROWS_AS(q6j<double>(2, 3, 0, 0, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(q6j<double>(2, -1, 0, 0, 0, 0, 0), DomainError);
}

TEST_CASE("q-numbers") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(q_number<double>(k, 0) == doctest::Approx(0));
    CHECK(q_number<double>(k, 1) == doctest::Approx(1));
    CHECK(std::abs(q_number<double>(k, k + 2)) < 1e-14);
    for (int n = 1; n <= k + 1; ++n) CHECK(q_number<double>(k, n) == doctest::Approx(oracle::su2_dim(k, n - 1)));
  }
}

TEST_CASE("q6j symbols satisfy the pentagon and unitarity through level 7") {
  for (int k = 1; k <= 7; ++k) {
    const auto fd = su2_data<double>(k);
    const auto p = verify_pentagon(fd.skeletal, {}, 2);
    CHECK(p.status == Status::pass);
    for (const auto& c : p.checks) CHECK(c.residual < 1e-12);
    CHECK(verify_hexagon(fd.skeletal, {}, 2).status == Status::pass);
  }
}

TEST_CASE("SU(2)_k modular data") {
  for (int k = 1; k <= 6; ++k) {
    const auto fd = su2_data<double>(k);
    CHECK(fd.modular.central_charge == doctest::Approx(3.0 * k / (k + 2)));
    for (int a = 0; a <= k; ++a) {
      CHECK(fd.modular.weights[a] == doctest::Approx(a * (a + 2) / (4.0 * (k + 2))));
      CHECK(std::abs(fd.modular.theta[a] - std::polar(1.0, 2 * oracle::pi * a * (a + 2) / (4.0 * (k + 2)))) < 1e-14);
    }
    const auto s = oracle::su2_s(k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) CHECK(std::abs(fd.modular.S(a, b) - s[a][b]) < 1e-14);
  }
}

TEST_CASE("Ising data matches the standard values") {
  const auto is = ising_data<double>();
  const auto& sk = is.skeletal;
  const double s = 1 / std::sqrt(2.0);
  CHECK(std::abs(sk.F(1, 1, 1, 1, 0, 0) - s) < 1e-15);
  CHECK(std::abs(sk.F(1, 1, 1, 1, 2, 2) + s) < 1e-15);
  CHECK(std::abs(sk.F(1, 2, 1, 2, 1, 1) + 1.0) < 1e-15);
  CHECK(std::abs(sk.F(2, 1, 2, 1, 1, 1) + 1.0) < 1e-15);
  CHECK(std::abs(sk.R(1, 1, 0) - std::polar(1.0, -oracle::pi / 8)) < 1e-15);
  CHECK(std::abs(sk.R(1, 1, 2) - std::polar(1.0, 3 * oracle::pi / 8)) < 1e-15);
  CHECK(std::abs(sk.R(1, 2, 1) - std::complex<double>(0, -1)) < 1e-15);
  CHECK(std::abs(sk.R(2, 2, 0) + 1.0) < 1e-15);
  CHECK(is.modular.central_charge == 0.5);
}
