#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "mtcforge/algebra.hpp"

using namespace mtcforge;
using M = Matrix<double>;
using cd = std::complex<double>;

namespace {

M random_matrix(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g;
  M m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = {g(rng), g(rng)};
  return m;
}

M random_hermitian(std::mt19937& rng, std::size_t n) {
  const M a = random_matrix(rng, n);
  M h = a + a.adjoint();
  h *= 0.5;
  return h;
}

// Determinant by plain Gaussian elimination, kept apart from the library LU.
cd det_oracle(M a) {
  const std::size_t n = a.rows();
  cd det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
    if (std::abs(a(p, c)) == 0) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const cd f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

// Unitary from Gram-Schmidt on the columns of a random matrix.
M random_unitary(std::mt19937& rng, std::size_t n) {
  M q = random_matrix(rng, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      cd dot = 0;
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, p)) * q(r, c);
      for (std::size_t r = 0; r < n; ++r) q(r, c) -= dot * q(r, p);
    }
    double norm = 0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, c));
    for (std::size_t r = 0; r < n; ++r) q(r, c) /= std::sqrt(norm);
  }
  return q;
}

}  // namespace

TEST_CASE("is_unitary examples") {
  const Tolerance tol;
  auto v = is_unitary(M::identity(2), tol);
  CHECK(v.unitary);
  CHECK(v.max_residual == 0.0);
  CHECK_FALSE(is_unitary(M{{1, 1}, {0, 1}}, tol).unitary);
  const double s = 1 / std::sqrt(2.0);
  v = is_unitary(M{{s, s}, {s, -s}}, tol);
  CHECK(v.unitary);
  CHECK(v.max_residual < 1e-15);
  CHECK_THROWS_AS(is_unitary(M(2, 3), tol), DimensionError);
}

TEST_CASE("is_hermitian_pd examples") {
  const Tolerance tol;
  auto v = is_hermitian_pd(M{{1}}, tol);
  CHECK(v.hermitian);
  CHECK(v.positive_definite);
  CHECK(v.min_eigenvalue == doctest::Approx(1));

  v = is_hermitian_pd(M{{0, 1}, {1, 0}}, tol);
  CHECK(v.hermitian);
  CHECK_FALSE(v.positive_definite);
  CHECK(v.min_eigenvalue == doctest::Approx(-1));

  v = is_hermitian_pd(M{{2, -1}, {-1, 2}}, tol);
  CHECK(v.positive_definite);
  CHECK(v.min_eigenvalue == doctest::Approx(1).epsilon(1e-14));
  CHECK(v.cholesky_checked);
  CHECK(v.certificates_agree);

  CHECK_FALSE(is_hermitian_pd(M{{1, cd(0, 1)}, {cd(0, 1), 1}}, tol).hermitian);
  CHECK_THROWS_AS(is_hermitian_pd(M(1, 2), tol), DimensionError);
}

TEST_CASE("eigenvalues are roots of the characteristic polynomial") {
  std::mt19937 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u}) {
    const M h = random_hermitian(rng, n);
    const auto ev = hermitian_eigenvalues(h);
    REQUIRE(ev.size() == n);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
    double trace = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) trace += h(i, i).real();
    for (double l : ev) sum += l;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-12));
    for (double l : ev) {
      M shifted = h - M::diagonal(std::vector<cd>(n, l));
      CHECK(std::abs(det_oracle(shifted)) < 1e-9 * std::pow(1 + h.max_abs(), static_cast<double>(n)));
    }
  }
}

TEST_CASE("eigenvalues agree with Eigen") {
  std::mt19937 rng(13);
  for (std::size_t n : {2u, 4u, 7u, 12u, 20u}) {
    const M h = random_hermitian(rng, n);
    Eigen::MatrixXcd e(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) e(r, c) = h(r, c);
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(e).eigenvalues();
    const auto ev = hermitian_eigenvalues(h);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ev[i] - ref(i)) < 1e-11);
    CHECK(is_hermitian_pd(h, {}).positive_definite == (ref(0) > 1e-9));
  }
}

TEST_CASE("eigensolver reports its sweep count") {
  const M h{{1, 2}, {2, 1}};
  try {
    hermitian_eigenvalues(h, 0);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(e.iterations() == 0);
  }
}

TEST_CASE("PD verdict is invariant under permutation similarity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const M h = random_hermitian(rng, n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    M p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
    const M ph = p * h * p.transpose();
    const auto a = is_hermitian_pd(h, {});
    const auto b = is_hermitian_pd(ph, {});
    CHECK(a.positive_definite == b.positive_definite);
    CHECK(a.min_eigenvalue == doctest::Approx(b.min_eigenvalue).epsilon(1e-10));
  }
}

TEST_CASE("sum of PD matrices is PD") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const M a = random_matrix(rng, n), b = random_matrix(rng, n);
    const M pa = a.adjoint() * a + M::identity(n);
    const M pb = b.adjoint() * b + M::identity(n);
    REQUIRE(is_hermitian_pd(pa, {}).positive_definite);
    REQUIRE(is_hermitian_pd(pb, {}).positive_definite);
    const auto v = is_hermitian_pd(pa + pb, {});
    CHECK(v.positive_definite);
    CHECK(v.certificates_agree);
  }
}

TEST_CASE("adjoint of a unitary is unitary") {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const M u = random_unitary(rng, n);
    CHECK(is_unitary(u, {}).unitary);
    CHECK(is_unitary(u.adjoint(), {}).unitary);
    CHECK(max_abs_diff(inverse(u), u.adjoint()) < 1e-12);
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937 rng(9);
  const M a = random_matrix(rng, 4);
  CHECK(max_abs_diff(a * inverse(a), M::identity(4)) < 1e-12);
  const M b = random_matrix(rng, 4);
  CHECK(max_abs_diff(a * solve(a, b), b) < 1e-12);
  CHECK_THROWS_AS(inverse(M{{1, 2}, {2, 4}}), DataError);
  CHECK_THROWS_AS(inverse(M(2, 3)), DimensionError);
}

TEST_CASE("kronecker product of unitaries is unitary") {
  const double s = 1 / std::sqrt(2.0);
  const M h{{s, s}, {s, -s}};
  const M k = kronecker(h, M{{0, 1}, {1, 0}});
  CHECK(k.rows() == 4);
  CHECK(is_unitary(k, {}).unitary);
  CHECK(k(0, 1) == cd(s));
  CHECK(k(3, 2) == cd(-s));
}

TEST_CASE("Cholesky agrees with the eigenvalue sign") {
  CHECK(pivoted_cholesky(M{{2, -1}, {-1, 2}}, 0).success);
  CHECK_FALSE(pivoted_cholesky(M{{0, 1}, {1, 0}}, 0).success);
  CHECK_FALSE(pivoted_cholesky(M{{1, 0}, {0, 0}}, 0).success);
}

TEST_CASE("extended precision instantiation") {
  using L = Matrix<long double>;
  const L m{{2, -1}, {-1, 2}};
  const auto v = is_hermitian_pd(m, {});
  CHECK(v.positive_definite);
  CHECK(v.min_eigenvalue == doctest::Approx(1).epsilon(1e-15));
}

TEST_CASE("tolerance validation") {
  CHECK_NOTHROW(validate_tolerance({1e-9, 1e-9}));
  CHECK_THROWS(validate_tolerance({-1, 1e-9}));
  CHECK_THROWS(validate_tolerance({std::nan(""), 1e-9}));
  CHECK(parse_precision("extended") == Precision::extended);
  CHECK_THROWS(parse_precision("quad"));
}
