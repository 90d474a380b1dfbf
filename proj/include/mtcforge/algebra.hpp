#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mtcforge/errors.hpp"

namespace mtcforge {

template <typename Real>
using Complex = std::complex<Real>;

enum class Precision { standard, extended };

const char* precision_name(Precision p);
Precision parse_precision(const std::string& s);

struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  // |x - y| <= abs_eps + rel_eps * max(|x|, |y|)
  bool close(double x, double y) const {
    return std::abs(x - y) <= abs_eps + rel_eps * std::max(std::abs(x), std::abs(y));
  }
  // Admissible residual when the compared quantities have magnitude `scale`.
  double threshold(double scale = 1.0) const { return abs_eps + rel_eps * scale; }
  bool accepts(double residual, double scale = 1.0) const {
    return residual <= threshold(scale);
  }
};

void validate_tolerance(const Tolerance& tol);

template <typename Real>
class Matrix {
 public:
  using value_type = Complex<Real>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<value_type>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<value_type>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return a_.empty(); }

  value_type& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<value_type>& entries() const { return a_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;
  Real max_abs() const;
  bool finite() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(value_type s);

  template <typename Other>
  Matrix<Other> cast() const {
    Matrix<Other> m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        m(r, c) = Complex<Other>(static_cast<Other>((*this)(r, c).real()),
                                 static_cast<Other>((*this)(r, c).imag()));
    return m;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> a_;
};

template <typename Real>
Matrix<Real> operator*(const Matrix<Real>& x, const Matrix<Real>& y);
template <typename Real>
Matrix<Real> operator+(Matrix<Real> x, const Matrix<Real>& y) { return x += y; }
template <typename Real>
Matrix<Real> operator-(Matrix<Real> x, const Matrix<Real>& y) { return x -= y; }
template <typename Real>
Matrix<Real> operator*(Complex<Real> s, Matrix<Real> x) { return x *= s; }

// Max-norm of x - y; dimension error on shape mismatch.
template <typename Real>
Real max_abs_diff(const Matrix<Real>& x, const Matrix<Real>& y);

// LU with partial pivoting. Throws DataError when a pivot vanishes.
template <typename Real>
Matrix<Real> inverse(const Matrix<Real>& m);
template <typename Real>
Matrix<Real> solve(const Matrix<Real>& a, const Matrix<Real>& b);

template <typename Real>
Matrix<Real> kronecker(const Matrix<Real>& x, const Matrix<Real>& y);

struct UnitaryVerdict {
  bool unitary = false;
  double max_residual = 0.0;
};

template <typename Real>
UnitaryVerdict is_unitary(const Matrix<Real>& m, const Tolerance& tol);

template <typename Real>
double hermitian_residual(const Matrix<Real>& m);

// Eigenvalues (ascending) of a Hermitian matrix by cyclic complex Jacobi.
template <typename Real>
std::vector<Real> hermitian_eigenvalues(const Matrix<Real>& m, int max_sweeps = 100);

struct CholeskyResult {
  bool success = false;
  double min_pivot = 0.0;
};

// Diagonally pivoted Cholesky; succeeds iff every pivot exceeds `floor`.
template <typename Real>
CholeskyResult pivoted_cholesky(const Matrix<Real>& m, double floor);

struct HermitianPdVerdict {
  bool hermitian = false;
  bool positive_definite = false;
  double min_eigenvalue = 0.0;
  double hermitian_residual = 0.0;
  bool cholesky_checked = false;
  bool certificates_agree = true;
};

inline constexpr std::size_t kCholeskyCrossCheckLimit = 64;

template <typename Real>
HermitianPdVerdict is_hermitian_pd(const Matrix<Real>& m, const Tolerance& tol);

}  // namespace mtcforge
