#include "mtcforge/algebra.hpp"

#include <limits>
#include <numeric>

namespace mtcforge {

const char* precision_name(Precision p) {
  return p == Precision::extended ? "extended" : "double";
}

Precision parse_precision(const std::string& s) {
  if (s == "double") return Precision::standard;
  if (s == "extended") return Precision::extended;
  throw DomainError("unknown precision '" + s + "' (expected double or extended)");
}

void validate_tolerance(const Tolerance& tol) {
  if (!(tol.abs_eps >= 0.0) || !(tol.rel_eps >= 0.0) || !std::isfinite(tol.abs_eps) ||
      !std::isfinite(tol.rel_eps))
    throw DomainError("tolerance epsilons must be finite and nonnegative");
}

template <typename Real>
Matrix<Real>::Matrix(std::initializer_list<std::initializer_list<value_type>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

template <typename Real>
Matrix<Real> Matrix<Real>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename Real>
Matrix<Real> Matrix<Real>::diagonal(const std::vector<value_type>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <typename Real>
Matrix<Real> Matrix<Real>::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

template <typename Real>
Matrix<Real> Matrix<Real>::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

template <typename Real>
Matrix<Real> Matrix<Real>::conj() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = std::conj(x);
  return m;
}

template <typename Real>
Real Matrix<Real>::max_abs() const {
  Real best = 0;
  for (const auto& x : a_) {
    Real v = std::abs(x);
    if (std::isnan(v)) return std::numeric_limits<Real>::infinity();
    best = std::max(best, v);
  }
  return best;
}

template <typename Real>
bool Matrix<Real>::finite() const {
  return std::all_of(a_.begin(), a_.end(), [](const value_type& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

template <typename Real>
Matrix<Real>& Matrix<Real>::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

template <typename Real>
Matrix<Real>& Matrix<Real>::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

template <typename Real>
Matrix<Real>& Matrix<Real>::operator*=(value_type s) {
  for (auto& x : a_) x *= s;
  return *this;
}

template <typename Real>
Matrix<Real> operator*(const Matrix<Real>& x, const Matrix<Real>& y) {
  if (x.cols() != y.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix<Real> m(x.rows(), y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const auto a = x(r, k);
      if (a == Complex<Real>(0)) continue;
      for (std::size_t c = 0; c < y.cols(); ++c) m(r, c) += a * y(k, c);
    }
  return m;
}

template <typename Real>
Real max_abs_diff(const Matrix<Real>& x, const Matrix<Real>& y) {
  return (x - y).max_abs();
}

namespace {

template <typename Real>
struct Lu {
  Matrix<Real> lu;
  std::vector<std::size_t> perm;
};

template <typename Real>
Lu<Real> lu_decompose(const Matrix<Real>& m) {
  if (!m.square()) throw DimensionError("LU of a non-square matrix");
  const std::size_t n = m.rows();
  Lu<Real> out{m, std::vector<std::size_t>(n)};
  std::iota(out.perm.begin(), out.perm.end(), 0);
  auto& a = out.lu;
  const Real scale = std::max<Real>(m.max_abs(), 1);
  const Real tiny = scale * std::numeric_limits<Real>::epsilon() * 16;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > std::abs(a(piv, k))) piv = r;
    if (!(std::abs(a(piv, k)) > tiny)) throw DataError("singular matrix in LU factorization");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      std::swap(out.perm[k], out.perm[piv]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      a(r, k) /= a(k, k);
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= a(r, k) * a(k, c);
    }
  }
  return out;
}

}  // namespace

template <typename Real>
Matrix<Real> solve(const Matrix<Real>& a, const Matrix<Real>& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: right-hand side has wrong row count");
  const auto f = lu_decompose(a);
  const std::size_t n = a.rows();
  Matrix<Real> x(n, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    std::vector<Complex<Real>> y(n);
    for (std::size_t r = 0; r < n; ++r) {
      Complex<Real> s = b(f.perm[r], col);
      for (std::size_t c = 0; c < r; ++c) s -= f.lu(r, c) * y[c];
      y[r] = s;
    }
    for (std::size_t r = n; r-- > 0;) {
      Complex<Real> s = y[r];
      for (std::size_t c = r + 1; c < n; ++c) s -= f.lu(r, c) * x(c, col);
      x(r, col) = s / f.lu(r, r);
    }
  }
  return x;
}

template <typename Real>
Matrix<Real> inverse(const Matrix<Real>& m) {
  return solve(m, Matrix<Real>::identity(m.rows()));
}

template <typename Real>
Matrix<Real> kronecker(const Matrix<Real>& x, const Matrix<Real>& y) {
  Matrix<Real> m(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < x.cols(); ++b)
      for (std::size_t c = 0; c < y.rows(); ++c)
        for (std::size_t d = 0; d < y.cols(); ++d)
          m(a * y.rows() + c, b * y.cols() + d) = x(a, b) * y(c, d);
  return m;
}

template <typename Real>
UnitaryVerdict is_unitary(const Matrix<Real>& m, const Tolerance& tol) {
  if (!m.square()) throw DimensionError("is_unitary: matrix is not square");
  const Real res = max_abs_diff(m.adjoint() * m, Matrix<Real>::identity(m.rows()));
  UnitaryVerdict v;
  v.max_residual = static_cast<double>(res);
  v.unitary = tol.accepts(v.max_residual);
  return v;
}

template <typename Real>
double hermitian_residual(const Matrix<Real>& m) {
  if (!m.square()) throw DimensionError("hermitian check on a non-square matrix");
  return static_cast<double>(max_abs_diff(m, m.adjoint()));
}

template <typename Real>
std::vector<Real> hermitian_eigenvalues(const Matrix<Real>& m, int max_sweeps) {
  if (!m.square()) throw DimensionError("eigenvalues of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Real> a = m;
  // Work on the Hermitian part so tiny asymmetries do not stall the sweep.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto h = (a(i, j) + std::conj(a(j, i))) / Real(2);
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  auto off = [&] {
    Real s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return s;
  };
  Real total = 0;
  for (const auto& x : a.entries()) total += std::norm(x);
  const Real eps = std::numeric_limits<Real>::epsilon();
  int sweep = 0;
  while (off() > eps * eps * total) {
    if (!std::isfinite(static_cast<double>(total)))
      throw NumericError("Jacobi eigensolver met a non-finite entry", sweep);
    if (sweep == max_sweeps) throw NumericError("Jacobi eigensolver did not converge", sweep);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real b = std::abs(a(p, q));
        if (b == 0) continue;
        const Complex<Real> ph = a(p, q) / b;
        const Real app = a(p, p).real(), aqq = a(q, q).real();
        const Real theta = (aqq - app) / (2 * b);
        Real t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Real c = 1 / std::sqrt(t * t + 1);
        const Real s = t * c;
        // U = diag(1, conj(ph)) * [[c, s], [-s, c]]
        const Complex<Real> upp = c, upq = s, uqp = -s * std::conj(ph), uqq = c * std::conj(ph);
        for (std::size_t k = 0; k < n; ++k) {
          const auto x = a(k, p), y = a(k, q);
          a(k, p) = x * upp + y * uqp;
          a(k, q) = x * upq + y * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const auto x = a(p, k), y = a(q, k);
          a(p, k) = std::conj(upp) * x + std::conj(uqp) * y;
          a(q, k) = std::conj(upq) * x + std::conj(uqq) * y;
        }
        a(p, q) = a(q, p) = 0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
  }
  std::vector<Real> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

template <typename Real>
CholeskyResult pivoted_cholesky(const Matrix<Real>& m, double floor) {
  if (!m.square()) throw DimensionError("Cholesky of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Real> a = m;
  CholeskyResult out{true, n ? std::numeric_limits<double>::infinity() : 0.0};
  std::vector<std::size_t> rest(n);
  std::iota(rest.begin(), rest.end(), 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = step;
    for (std::size_t r = step + 1; r < n; ++r)
      if (a(rest[r], rest[r]).real() > a(rest[best], rest[best]).real()) best = r;
    std::swap(rest[step], rest[best]);
    const std::size_t k = rest[step];
    const Real pivot = a(k, k).real();
    out.min_pivot = std::min(out.min_pivot, static_cast<double>(pivot));
    if (!(pivot > floor)) {
      out.success = false;
      return out;
    }
    for (std::size_t r = step + 1; r < n; ++r)
      for (std::size_t c = step + 1; c < n; ++c) {
        const std::size_t i = rest[r], j = rest[c];
        a(i, j) -= a(i, k) * std::conj(a(j, k)) / pivot;
      }
  }
  return out;
}

template <typename Real>
HermitianPdVerdict is_hermitian_pd(const Matrix<Real>& m, const Tolerance& tol) {
  if (!m.square()) throw DimensionError("is_hermitian_pd: matrix is not square");
  HermitianPdVerdict v;
  v.hermitian_residual = hermitian_residual(m);
  v.hermitian = tol.accepts(v.hermitian_residual, static_cast<double>(m.max_abs()));
  if (!v.hermitian) return v;
  if (m.rows() == 0) {
    v.positive_definite = true;
    return v;
  }
  const auto ev = hermitian_eigenvalues(m);
  v.min_eigenvalue = static_cast<double>(ev.front());
  const bool eig_pd = v.min_eigenvalue > tol.abs_eps;
  if (m.rows() <= kCholeskyCrossCheckLimit) {
    v.cholesky_checked = true;
    const auto chol = pivoted_cholesky(m, 0.0);
    v.certificates_agree = !(eig_pd && !chol.success);
  }
  v.positive_definite = eig_pd && v.certificates_agree;
  return v;
}

#define MTCFORGE_INSTANTIATE(R)                                                        \
  template class Matrix<R>;                                                            \
  template Matrix<R> operator*(const Matrix<R>&, const Matrix<R>&);                    \
  template R max_abs_diff(const Matrix<R>&, const Matrix<R>&);                         \
  template Matrix<R> inverse(const Matrix<R>&);                                        \
  template Matrix<R> solve(const Matrix<R>&, const Matrix<R>&);                        \
  template Matrix<R> kronecker(const Matrix<R>&, const Matrix<R>&);                    \
  template UnitaryVerdict is_unitary(const Matrix<R>&, const Tolerance&);              \
  template double hermitian_residual(const Matrix<R>&);                                \
  template std::vector<R> hermitian_eigenvalues(const Matrix<R>&, int);                \
  template CholeskyResult pivoted_cholesky(const Matrix<R>&, double);                  \
  template HermitianPdVerdict is_hermitian_pd(const Matrix<R>&, const Tolerance&);

MTCFORGE_INSTANTIATE(double)
MTCFORGE_INSTANTIATE(long double)

}  // namespace mtcforge
