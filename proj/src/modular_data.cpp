#include "mtcforge/modular_data.hpp"

#include <cmath>

namespace mtcforge {

namespace {

template <typename Real>
void require_square(const Matrix<Real>& S, const char* what) {
  if (!S.square() || S.rows() == 0) throw DimensionError(std::string(what) + ": S must be square and nonempty");
}

double to_d(long double x) { return static_cast<double>(x); }

}  // namespace

template <typename Real>
std::vector<Complex<Real>> verlinde_sums(const Matrix<Real>& S) {
  require_square(S, "verlinde");
  const std::size_t n = S.rows();
  for (std::size_t m = 0; m < n; ++m)
    if (S(0, m) == Complex<Real>(0)) throw PreconditionError("verlinde: S_0m vanishes for m = " + std::to_string(m));
  std::vector<Complex<Real>> out(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Complex<Real> s = 0;
        for (std::size_t m = 0; m < n; ++m) s += S(i, m) * S(j, m) * std::conj(S(k, m)) / S(0, m);
        out[(i * n + j) * n + k] = s;
      }
  return out;
}

template <typename Real>
VerlindeIntegrality verlinde_integrality(const Matrix<Real>& S) {
  const auto sums = verlinde_sums(S);
  const int n = static_cast<int>(S.rows());
  VerlindeIntegrality out;
  Worst w;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto v = sums[(static_cast<std::size_t>(i) * n + j) * n + k];
        const double dev = to_d(std::abs(v - Complex<Real>(std::round(v.real()))));
        w.absorb(dev, {i, j, k});
      }
  out.max_deviation = w.residual;
  out.worst = {w.tuple[0], w.tuple[1], w.tuple[2]};
  return out;
}

template <typename Real>
FusionRing verlinde_fusion(const Matrix<Real>& S, const Tolerance& tol, std::vector<std::string> names) {
  require_square(S, "verlinde_fusion");
  const auto unit = is_unitary(S, tol);
  if (!unit.unitary)
    throw PreconditionError("verlinde_fusion: S is not unitary (residual " + std::to_string(unit.max_residual) + ")");
  const int n = static_cast<int>(S.rows());
  const auto sums = verlinde_sums(S);
  const double limit = 10.0 * tol.abs_eps;
  std::vector<int> mult(sums.size());
  Worst bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::size_t idx = (static_cast<std::size_t>(i) * n + j) * n + k;
        const Real r = std::round(sums[idx].real());
        const double dev = to_d(std::abs(sums[idx] - Complex<Real>(r)));
        if (dev > limit || r < 0) bad.absorb(r < 0 ? std::max(dev, 1.0) : dev, {i, j, k});
        mult[idx] = static_cast<int>(r);
      }
  if (!bad.tuple.empty())
    throw NotModularError("Verlinde output is not a nonnegative integer at (" + std::to_string(bad.tuple[0]) + "," +
                              std::to_string(bad.tuple[1]) + "," + std::to_string(bad.tuple[2]) + ")",
                          {bad.tuple[0], bad.tuple[1], bad.tuple[2]}, bad.residual);
  std::vector<Label> dual(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mult[(static_cast<std::size_t>(i) * n + j) * n] == 1) {
        if (dual[i] != -1) throw NotModularError("label has two duals", {i, j, 0}, 1.0);
        dual[i] = j;
      }
  for (int i = 0; i < n; ++i)
    if (dual[i] == -1) throw NotModularError("label without a dual", {i, i, 0}, 1.0);
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (static_cast<int>(names.size()) != n) throw DimensionError("verlinde_fusion: wrong number of label names");
  FusionRing ring(std::move(names), std::move(dual), std::move(mult));
  ring.validate_structure();
  return ring;
}

template <typename Real>
std::vector<Real> quantum_dims(const Matrix<Real>& S, const Tolerance& tol) {
  require_square(S, "quantum_dims");
  if (S(0, 0) == Complex<Real>(0)) throw PreconditionError("quantum_dims: S_00 vanishes");
  std::vector<Real> d;
  for (std::size_t i = 0; i < S.rows(); ++i) {
    const auto r = S(0, i) / S(0, 0);
    if (!tol.accepts(to_d(std::abs(r.imag())), to_d(std::abs(r))))
      throw NotUnitaryModularError("quantum dimension " + std::to_string(i) + " is not real");
    if (to_d(r.real()) < 1.0 - tol.threshold())
      throw NotUnitaryModularError("quantum dimension " + std::to_string(i) + " is below 1");
    d.push_back(r.real());
  }
  return d;
}

template <typename Real>
Complex<Real> modular_anomaly(const Matrix<Real>& S, const Matrix<Real>& T) {
  const auto st = S * T;
  const auto lhs = st * st * st;
  const auto s2 = S * S;
  Complex<Real> num = 0;
  Real den = 0;
  for (std::size_t i = 0; i < s2.entries().size(); ++i) {
    num += std::conj(s2.entries()[i]) * lhs.entries()[i];
    den += std::norm(s2.entries()[i]);
  }
  return den > 0 ? num / den : Complex<Real>(0);
}

template <typename Real>
Section verify_modular(const ModularData<Real>& md, const Tolerance& tol) {
  Section sec;
  sec.name = "modular";
  const int n = md.size();
  const auto& S = md.S;
  if (static_cast<int>(S.rows()) != n || static_cast<int>(md.T.rows()) != n || !S.square() || !md.T.square() ||
      static_cast<int>(md.d.size()) != n || static_cast<int>(md.theta.size()) != n)
    throw DimensionError("modular data dimensions disagree with the label count");
  const double thr = tol.threshold();

  sec.add(make_check("s_symmetric", to_d(max_abs_diff(S, S.transpose())), thr));
  sec.add(make_check("s_unitary", is_unitary(S, tol).max_residual, thr));
  Matrix<Real> C(n, n);
  for (int i = 0; i < n; ++i) C(i, md.ring.dual(i)) = 1;
  sec.add(make_check("s_squared_is_conjugation", to_d(max_abs_diff(S * S, C)), thr));

  Real off = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off = std::max(off, std::abs(md.T(i, j)));
  sec.add(make_check("t_diagonal", to_d(off), thr));
  sec.add(make_check("t_unit_modulus", [&] {
    double r = 0;
    for (int i = 0; i < n; ++i) r = std::max(r, to_d(std::abs(std::abs(md.T(i, i)) - 1)));
    return r;
  }(), thr));

  const auto lambda = modular_anomaly(S, md.T);
  const auto st = S * md.T;
  sec.add(make_check("st_cubed", to_d(max_abs_diff(st * st * st, Complex<Real>(lambda) * (S * S))), thr));
  sec.add(make_check("anomaly_unit_modulus", to_d(std::abs(std::abs(lambda) - 1)), thr));
  sec.details["lambda"] = {to_d(lambda.real()), to_d(lambda.imag())};

  try {
    const auto sums = verlinde_sums(S);
    Worst w;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          w.absorb(to_d(std::abs(sums[(static_cast<std::size_t>(i) * n + j) * n + k] -
                                 Complex<Real>(md.ring.N(i, j, k)))),
                   {i, j, k});
    sec.add(make_check("verlinde_matches_ring", w, 10.0 * tol.abs_eps));
  } catch (const Error& e) {
    sec.add(make_flag("verlinde_matches_ring", false, e.what()));
  }

  Worst ratio, hom, dual, floor;
  for (int i = 0; i < n; ++i) {
    const auto r = S(0, i) / S(0, 0);
    ratio.absorb(to_d(std::abs(r - Complex<Real>(md.d[i]))), {i});
    dual.absorb(to_d(std::abs(md.d[i] - md.d[md.ring.dual(i)])), {i});
    floor.absorb(to_d(std::max<Real>(0, 1 - md.d[i])), {i});
    for (int j = 0; j < n; ++j) {
      Real s = 0;
      for (int k = 0; k < n; ++k) s += md.ring.N(i, j, k) * md.d[k];
      hom.absorb(to_d(std::abs(md.d[i] * md.d[j] - s)), {i, j});
    }
  }
  Real dmax = 1;
  for (Real x : md.d) dmax = std::max(dmax, x);
  sec.add(make_check("dims_match_s_ratio", ratio, thr));
  sec.add(make_check("dims_at_least_one", floor, thr));
  sec.add(make_check("dims_dual_symmetric", dual, thr));
  sec.add(make_check("dims_homomorphism", hom, tol.threshold(to_d(dmax * dmax))));
  sec.add(make_check("vacuum_dim", to_d(std::abs(md.d[0] - 1)), thr));

  Worst twist;
  for (int i = 0; i < n; ++i) twist.absorb(to_d(std::abs(std::abs(md.theta[i]) - 1)), {i});
  sec.add(make_check("twist_unit_modulus", twist, thr));
  sec.add(make_check("vacuum_twist", to_d(std::abs(md.theta[0] - Complex<Real>(1))), thr));
  sec.details["central_charge"] = to_d(md.central_charge);
  sec.finalize();
  return sec;
}

#define MTCFORGE_INSTANTIATE(R)                                                                     \
  template std::vector<Complex<R>> verlinde_sums(const Matrix<R>&);                                \
  template VerlindeIntegrality verlinde_integrality(const Matrix<R>&);                             \
  template FusionRing verlinde_fusion(const Matrix<R>&, const Tolerance&, std::vector<std::string>); \
  template std::vector<R> quantum_dims(const Matrix<R>&, const Tolerance&);                        \
  template Complex<R> modular_anomaly(const Matrix<R>&, const Matrix<R>&);                         \
  template Section verify_modular(const ModularData<R>&, const Tolerance&);

MTCFORGE_INSTANTIATE(double)
MTCFORGE_INSTANTIATE(long double)

}  // namespace mtcforge
