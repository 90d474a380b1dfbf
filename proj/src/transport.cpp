#include "mtcforge/transport.hpp"

#include <algorithm>
#include <limits>

#include "mtcforge/parallel.hpp"

namespace mtcforge {

namespace {

double to_d(long double x) { return static_cast<double>(x); }

template <typename Real>
Matrix<Real> scalar(Complex<Real> v) {
  Matrix<Real> m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

const char* route_name(TransportRoute r) {
  switch (r) {
    case TransportRoute::f_move: return "f_move";
    case TransportRoute::gram: return "gram";
    case TransportRoute::braided: return "braided";
  }
  return "f_move";
}

template <typename Real>
TransportMatrix<Real> transport_matrix(const SkeletalData<Real>& data, Label i, Label j, Label k, Complex<Real> mu) {
  const auto& ring = data.ring();
  ring.require(i);
  ring.require(j);
  ring.require(k);
  TransportMatrix<Real> out{i, j, k, {}, TransportRoute::f_move, mu};
  if (!ring.admissible(i, j, k)) return out;
  const Label ib = ring.dual(i);
  const auto& blk = data.block(ib, i, j, j);  // rows: channels of ibar x i, cols: channels of i x j
  const auto inv = inverse(blk.m);
  const int e0 = blk.row_of(0), fk = blk.col_of(k);
  const auto D = dagger_coefficient(data, i, j, k);
  if (D == Complex<Real>(0)) throw DataError("dagger map vanishes on a basis vector");
  out.lambda = scalar<Real>(mu * ev_left(data, i) * inv(fk, e0) / D);
  return out;
}

template <typename Real>
TransportMatrix<Real> transport_matrix(const SkeletalData<Real>& data, Label i, Label j, Label k) {
  return transport_matrix(data, i, j, k, Complex<Real>(data.mu(i)));
}

template <typename Real>
TransportMatrix<Real> transport_matrix_gram(const SkeletalData<Real>& data, Label i, Label j, Label k,
                                            Complex<Real> mu) {
  TransportMatrix<Real> out{i, j, k, {}, TransportRoute::gram, mu};
  const auto g = hom_gram(data, i, j, k);
  if (g.empty()) return out;
  if (g(0, 0) == Complex<Real>(0)) throw DataError("singular Gram matrix");
  out.lambda = scalar<Real>(mu / g(0, 0));
  return out;
}

template <typename Real>
TransportMatrix<Real> transport_matrix_gram(const SkeletalData<Real>& data, Label i, Label j, Label k) {
  return transport_matrix_gram(data, i, j, k, Complex<Real>(data.mu(i)));
}

template <typename Real>
std::vector<TransportMatrix<Real>> transport_matrices_braided(const SkeletalData<Real>& data, Label i, Label j) {
  const auto& ring = data.ring();
  ring.require(i);
  ring.require(j);
  const int n = data.size();
  const Label ib = ring.dual(i);
  const auto ks = ring.channels(i, j);
  std::vector<Label> ms;
  for (Label m : ring.channels(ib, i))
    if (ring.admissible(j, m, j)) ms.push_back(m);
  if (ks.empty()) return {};
  if (ms.size() != ks.size()) throw DataError("braided transport system is not square");

  // Expand mu_i (id_j x ev_{ibar,i}) over <j (ibar i)_m| by moving j past ibar and i:
  //   <ibar (i j)_k| (id x sigma_{j,i}) = R^{ji}_k <ibar (j i)_k|
  //   <ibar (j i)_k| = sum_n F^{ibar j i}_j[n,k] <(ibar j)_n i|
  //   <(ibar j)_n i| (sigma_{j,ibar} x id) = R^{j ibar}_n <(j ibar)_n i|
  //   <(j ibar)_n i| = sum_m (F^{j ibar i}_j)^{-1}[m,n] <j (ibar i)_m|
  const auto& blk = data.block(j, ib, i, j);
  const auto inv = inverse(blk.m);
  Matrix<Real> A(ms.size(), ks.size()), rhs(ms.size(), 1);
  for (std::size_t mi = 0; mi < ms.size(); ++mi)
    if (ms[mi] == 0) rhs(mi, 0) = Complex<Real>(data.mu(i)) * ev_left(data, i);
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    const Label k = ks[ki];
    const auto pre = dagger_coefficient(data, i, j, k) * data.R(j, i, k);
    for (Label nn = 0; nn < n; ++nn) {
      if (!ring.admissible(ib, j, nn) || !ring.admissible(nn, i, j)) continue;
      const auto mid = pre * data.F(ib, j, i, j, nn, k) * data.R(j, ib, nn);
      const int nr = blk.row_of(nn);
      for (std::size_t mi = 0; mi < ms.size(); ++mi) A(mi, ki) += mid * inv(blk.col_of(ms[mi]), nr);
    }
  }
  const auto x = solve(A, rhs);
  std::vector<TransportMatrix<Real>> out;
  for (std::size_t ki = 0; ki < ks.size(); ++ki)
    out.push_back({i, j, ks[ki], scalar<Real>(x(ki, 0)), TransportRoute::braided, Complex<Real>(data.mu(i))});
  return out;
}

template <typename Real>
std::vector<PositivityCertificate> verify_positivity(const SkeletalData<Real>& data, Label i, Label j,
                                                     const Tolerance& tol) {
  std::vector<PositivityCertificate> out;
  const auto braided = transport_matrices_braided(data, i, j);
  for (const auto& b : braided) {
    const Label k = b.k;
    const auto f = transport_matrix(data, i, j, k);
    const auto g = transport_matrix_gram(data, i, j, k);
    PositivityCertificate c{i, j, k};
    const auto pd = is_hermitian_pd(f.lambda, tol);
    c.hermitian_residual = pd.hermitian_residual;
    c.min_eigenvalue = pd.hermitian ? pd.min_eigenvalue : -std::numeric_limits<double>::infinity();
    c.route_agreement_residual =
        std::max(to_d(max_abs_diff(f.lambda, g.lambda)), to_d(max_abs_diff(f.lambda, b.lambda)));
    if (std::isnan(c.route_agreement_residual)) c.route_agreement_residual = std::numeric_limits<double>::infinity();
    const double scale = to_d(f.lambda.max_abs());
    c.verdict = pd.positive_definite && tol.accepts(c.hermitian_residual, scale) &&
                tol.accepts(c.route_agreement_residual, scale);
    out.push_back(c);
  }
  return out;
}

template <typename Real>
Section verify_transport(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs) {
  Section sec;
  sec.name = "transport";
  const int n = data.size();
  const auto per_pair = parallel_map<std::vector<PositivityCertificate>>(
      static_cast<std::size_t>(n) * n, jobs,
      [&](std::size_t t) { return verify_positivity(data, static_cast<Label>(t / n), static_cast<Label>(t % n), tol); });
  Worst failing, herm, route;
  double min_eig = std::numeric_limits<double>::infinity();
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& list : per_pair)
    for (const auto& c : list) {
      const std::vector<int> t{c.i, c.j, c.k};
      failing.absorb(c.verdict ? 0.0 : 1.0, t);
      herm.absorb(c.hermitian_residual, t);
      route.absorb(c.route_agreement_residual, t);
      min_eig = std::min(min_eig, c.min_eigenvalue);
      certs.push_back({{"triple", t},
                       {"min_eigenvalue", std::isfinite(c.min_eigenvalue) ? nlohmann::json(c.min_eigenvalue)
                                                                         : nlohmann::json(nullptr)},
                       {"hermitian_residual", c.hermitian_residual},
                       {"route_agreement_residual", c.route_agreement_residual},
                       {"verdict", c.verdict}});
    }
  sec.add(make_check("certificates", failing, 0.0, "1 marks a failed certificate"));
  sec.add(make_check("hermitian", herm, tol.threshold()));
  sec.add(make_check("route_agreement", route, tol.threshold()));
  sec.add(make_check("min_eigenvalue_margin", min_eig > tol.abs_eps ? 0.0 : tol.abs_eps - min_eig, 0.0,
                     failing.tuple, "min eigenvalue must exceed abs_eps"));
  sec.details["certificates"] = std::move(certs);
  sec.details["min_eigenvalue"] = std::isfinite(min_eig) ? nlohmann::json(min_eig) : nlohmann::json(nullptr);
  sec.finalize();
  return sec;
}

template <typename Real>
std::vector<Real> rigidity_dims(const SkeletalData<Real>& data) {
  std::vector<Real> d;
  for (Label i = 0; i < data.size(); ++i) d.push_back(std::norm(ev_right(data, i)));
  return d;
}

template <typename Real>
RigidityResult verify_rigidity(const SkeletalData<Real>& data, Label i, const Tolerance&,
                               const ModularData<Real>* md) {
  const auto& ring = data.ring();
  ring.require(i);
  const Label ib = ring.dual(i);
  RigidityResult r;
  r.label = i;
  const auto x = ev_left(data, i), xp = ev_right(data, i);
  const auto& blk = data.block(i, ib, i, i);
  const auto f00 = blk.m(blk.row_of(0), blk.col_of(0));
  const auto inv = inverse(blk.m);
  const auto finv00 = inv(blk.col_of(0), blk.row_of(0));
  // (id_i x ev_{ibar,i})(coev_{i,ibar} x id_i) = id_i and the mirror zig-zag.
  r.zigzag_left = to_d(std::abs(std::conj(xp) * x * f00 - Complex<Real>(1)));
  r.zigzag_right = to_d(std::abs(xp * std::conj(x) * finv00 - Complex<Real>(1)));
  const Real d = std::norm(xp);
  r.d_value = to_d(d);
  r.dual_residual = to_d(std::abs(d - std::norm(ev_right(data, ib))));
  const auto vac = dagger_coefficient(data, ib, i, 0);
  r.vacuum_norm_residual = to_d(std::abs(d * std::norm(vac) - 1));
  if (md) {
    if (md->size() != data.size()) throw DomainError("modular data and skeletal data have different label sets");
    r.modular_residual = to_d(std::abs(Complex<Real>(d) - md->S(0, i) / md->S(0, 0)));
  }
  return r;
}

template <typename Real>
Section verify_rigidity_all(const SkeletalData<Real>& data, const Tolerance& tol, const ModularData<Real>* md) {
  Section sec;
  sec.name = "rigidity";
  Worst zl, zr, dual, vac, mod;
  nlohmann::json dims = nlohmann::json::array();
  double dmax = 1;
  for (Label i = 0; i < data.size(); ++i) {
    const auto r = verify_rigidity(data, i, tol, md);
    zl.absorb(r.zigzag_left, {i});
    zr.absorb(r.zigzag_right, {i});
    dual.absorb(r.dual_residual, {i});
    vac.absorb(r.vacuum_norm_residual, {i});
    if (r.modular_residual) mod.absorb(*r.modular_residual, {i});
    dims.push_back(r.d_value);
    dmax = std::max(dmax, r.d_value);
  }
  sec.add(make_check("zigzag_left", zl, tol.threshold()));
  sec.add(make_check("zigzag_right", zr, tol.threshold()));
  sec.add(make_check("dual_dimension", dual, tol.threshold(dmax)));
  sec.add(make_check("vacuum_norm", vac, tol.threshold()));
  if (md) sec.add(make_check("dims_match_s_ratio", mod, tol.threshold(dmax)));
  sec.details["d"] = std::move(dims);
  sec.finalize();
  return sec;
}

template <typename Real>
Section verify_twist_compat(const SkeletalData<Real>& data, const ModularData<Real>& md, const Tolerance& tol) {
  if (md.size() != data.size() || md.ring.names() != data.ring().names())
    throw DomainError("twist check needs matching label sets");
  Section sec;
  sec.name = "twist";
  const auto& ring = data.ring();
  const int n = data.size();
  Worst left, right, ribbon;
  for (Label i = 0; i < n; ++i) {
    const Label ib = ring.dual(i);
    const auto x = ev_left(data, i), xp = ev_right(data, i);
    const auto r0 = data.R(i, ib, 0);
    // ev_{i,ibar} = ev_{ibar,i} o sigma_{i,ibar} o (theta_i x id)
    left.absorb(to_d(std::abs(xp - x * md.theta[i] * r0)), {i});
    right.absorb(to_d(std::abs(std::conj(xp) - std::conj(x) / (md.theta[ib] * r0))), {i});
    for (Label j = 0; j < n; ++j)
      for (Label k : ring.channels(i, j))
        ribbon.absorb(to_d(std::abs(data.R(i, j, k) * data.R(j, i, k) - md.theta[k] / (md.theta[i] * md.theta[j]))),
                      {i, j, k});
  }
  const double dmax = to_d(*std::max_element(md.d.begin(), md.d.end()));
  sec.add(make_check("twist_left", left, tol.threshold(dmax)));
  sec.add(make_check("twist_right", right, tol.threshold(dmax)));
  sec.add(make_check("ribbon", ribbon, tol.threshold()));
  sec.finalize();
  return sec;
}

template <typename Real>
Section reflection_positivity_check(const SkeletalData<Real>& data, const Tolerance& tol) {
  Section sec;
  sec.name = "reflection";
  const auto& ring = data.ring();
  const int n = data.size();
  const auto d = rigidity_dims(data);
  Worst w, bij;
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j)
      for (Label k : ring.channels(i, j)) {
        const auto D = dagger_coefficient(data, i, j, k);
        bij.absorb(D == Complex<Real>(0) ? 1.0 : 0.0, {i, j, k});
        // Gram(C alpha) with C alpha = alpha* in Hom(ibar x k, j).
        const auto lhs = std::norm(D) * hom_gram(data, ring.dual(i), k, j)(0, 0);
        const auto rhs = (d[k] / d[j]) * hom_gram(data, i, j, k)(0, 0);
        w.absorb(to_d(std::abs(lhs - rhs)), {i, j, k});
      }
  const double dmax = to_d(*std::max_element(d.begin(), d.end()));
  sec.add(make_check("gram_ratio", w, tol.threshold(dmax)));
  sec.add(make_check("dagger_bijective", bij, 0.0));
  sec.finalize();
  return sec;
}

template <typename Real>
FullFieldGram<Real> full_field_gram(const SkeletalData<Real>& data, const Tolerance& tol) {
  const auto& ring = data.ring();
  const int n = data.size();
  const auto d = rigidity_dims(data);
  FullFieldGram<Real> out;
  std::size_t dim = 0;
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j)
      for (Label k : ring.channels(i, j)) {
        const auto g = hom_gram(data, i, j, k);
        const auto gb = hom_gram(data, ring.dual(i), ring.dual(j), ring.dual(k));
        auto blk = kronecker(g, gb.conj());
        blk *= Complex<Real>(1 / d[i]);
        dim += blk.rows();
        out.blocks.push_back({i, j, k, std::move(blk)});
      }
  Matrix<Real> all(dim, dim);
  std::size_t off = 0;
  for (const auto& b : out.blocks) {
    for (std::size_t r = 0; r < b.gram.rows(); ++r)
      for (std::size_t c = 0; c < b.gram.cols(); ++c) all(off + r, off + c) = b.gram(r, c);
    off += b.gram.rows();
  }
  const auto v = is_hermitian_pd(all, tol);
  out.positive_definite = v.positive_definite;
  out.min_eigenvalue = v.min_eigenvalue;
  out.hermitian_residual = v.hermitian_residual;
  return out;
}

template <typename Real>
Section verify_full_field(const SkeletalData<Real>& data, const Tolerance& tol) {
  Section sec;
  sec.name = "fullfield";
  const auto g = full_field_gram(data, tol);
  Worst herm, pos;
  for (const auto& b : g.blocks) {
    const auto v = is_hermitian_pd(b.gram, tol);
    herm.absorb(v.hermitian_residual, {b.i, b.j, b.k});
    pos.absorb(v.positive_definite ? 0.0 : 1.0, {b.i, b.j, b.k});
  }
  sec.add(make_check("block_hermitian", herm, tol.threshold()));
  sec.add(make_check("block_positive", pos, 0.0));
  sec.add(make_flag("global_positive_definite", g.positive_definite));
  sec.details["min_eigenvalue"] = g.min_eigenvalue;
  sec.details["blocks"] = g.blocks.size();
  sec.finalize();
  return sec;
}

#define MTCFORGE_INSTANTIATE(R)                                                                              \
  template TransportMatrix<R> transport_matrix(const SkeletalData<R>&, Label, Label, Label);                \
  template TransportMatrix<R> transport_matrix(const SkeletalData<R>&, Label, Label, Label, Complex<R>);    \
  template TransportMatrix<R> transport_matrix_gram(const SkeletalData<R>&, Label, Label, Label);           \
  template TransportMatrix<R> transport_matrix_gram(const SkeletalData<R>&, Label, Label, Label, Complex<R>); \
  template std::vector<TransportMatrix<R>> transport_matrices_braided(const SkeletalData<R>&, Label, Label); \
  template std::vector<PositivityCertificate> verify_positivity(const SkeletalData<R>&, Label, Label,       \
                                                                const Tolerance&);                          \
  template Section verify_transport(const SkeletalData<R>&, const Tolerance&, unsigned);                    \
  template std::vector<R> rigidity_dims(const SkeletalData<R>&);                                            \
  template RigidityResult verify_rigidity(const SkeletalData<R>&, Label, const Tolerance&,                  \
                                          const ModularData<R>*);                                           \
  template Section verify_rigidity_all(const SkeletalData<R>&, const Tolerance&, const ModularData<R>*);    \
  template Section verify_twist_compat(const SkeletalData<R>&, const ModularData<R>&, const Tolerance&);    \
  template Section reflection_positivity_check(const SkeletalData<R>&, const Tolerance&);                   \
  template FullFieldGram<R> full_field_gram(const SkeletalData<R>&, const Tolerance&);                      \
  template Section verify_full_field(const SkeletalData<R>&, const Tolerance&);

MTCFORGE_INSTANTIATE(double)
MTCFORGE_INSTANTIATE(long double)

}  // namespace mtcforge
