#include "mtcforge/category.hpp"

#include <algorithm>
#include <limits>

#include "mtcforge/parallel.hpp"

namespace mtcforge {

namespace {

double to_d(long double x) { return static_cast<double>(x); }

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

template <typename Real>
int FBlock<Real>::row_of(Label e) const {
  auto it = std::find(rows.begin(), rows.end(), e);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

template <typename Real>
int FBlock<Real>::col_of(Label f) const {
  auto it = std::find(cols.begin(), cols.end(), f);
  return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

template <typename Real>
SkeletalData<Real>::SkeletalData(FusionRing ring) : ring_(std::move(ring)) {
  if (!ring_.multiplicity_free())
    throw UnsupportedDataError("F/R data supports multiplicity-free fusion rings only");
  const int n = size();
  f_.resize(static_cast<std::size_t>(n) * n * n * n);
  r_.assign(static_cast<std::size_t>(n) * n * n, Complex<Real>(0));
  mu_.assign(n, Real(1));
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d) {
          auto& blk = f_[index4(a, b, c, d)];
          for (Label e = 0; e < n; ++e)
            if (ring_.admissible(a, b, e) && ring_.admissible(e, c, d)) blk.rows.push_back(e);
          for (Label f = 0; f < n; ++f)
            if (ring_.admissible(b, c, f) && ring_.admissible(a, f, d)) blk.cols.push_back(f);
          blk.m = Matrix<Real>(blk.rows.size(), blk.cols.size());
        }
}

template <typename Real>
const FBlock<Real>& SkeletalData<Real>::block(Label a, Label b, Label c, Label d) const {
  ring_.require(a);
  ring_.require(b);
  ring_.require(c);
  ring_.require(d);
  return f_[index4(a, b, c, d)];
}

template <typename Real>
void SkeletalData<Real>::set_block(Label a, Label b, Label c, Label d, Matrix<Real> m) {
  auto& blk = const_cast<FBlock<Real>&>(block(a, b, c, d));
  if (m.rows() != blk.rows.size() || m.cols() != blk.cols.size())
    throw DimensionError("F-block (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ";" +
                         std::to_string(d) + ") must be " + std::to_string(blk.rows.size()) + "x" +
                         std::to_string(blk.cols.size()));
  blk.m = std::move(m);
}

template <typename Real>
void SkeletalData<Real>::set_F(Label a, Label b, Label c, Label d, Label e, Label f, Complex<Real> v) {
  auto& blk = const_cast<FBlock<Real>&>(block(a, b, c, d));
  const int r = blk.row_of(e), s = blk.col_of(f);
  if (r < 0 || s < 0) throw DomainError("F entry outside the admissible block");
  blk.m(r, s) = v;
}

template <typename Real>
Complex<Real> SkeletalData<Real>::F(Label a, Label b, Label c, Label d, Label e, Label f) const {
  const auto& blk = f_[index4(a, b, c, d)];
  const int r = blk.row_of(e);
  if (r < 0) return 0;
  const int s = blk.col_of(f);
  if (s < 0) return 0;
  return blk.m(r, s);
}

template <typename Real>
void SkeletalData<Real>::set_R(Label a, Label b, Label c, Complex<Real> v) {
  ring_.require(a);
  ring_.require(b);
  ring_.require(c);
  if (!ring_.admissible(a, b, c)) throw DomainError("R-symbol on an inadmissible channel");
  r_[index3(a, b, c)] = v;
}

template <typename Real>
void SkeletalData<Real>::set_mu(Label i, Real v) {
  ring_.require(i);
  if (!(v > 0)) throw DomainError("ev norm must be positive");
  mu_[i] = v;
}

template <typename Real>
std::vector<std::array<Label, 4>> SkeletalData<Real>::block_keys() const {
  std::vector<std::array<Label, 4>> out;
  const int n = size();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d)
          if (!f_[index4(a, b, c, d)].empty()) out.push_back({a, b, c, d});
  return out;
}

template <typename Real>
bool SkeletalData<Real>::finite() const {
  for (const auto& blk : f_)
    if (!blk.m.finite()) return false;
  for (const auto& r : r_)
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) return false;
  for (Real m : mu_)
    if (!std::isfinite(m)) return false;
  return true;
}

template <typename Real>
SkeletalData<Real> gauge_transform(const SkeletalData<Real>& data, const Gauge<Real>& u) {
  const int n = data.size();
  const auto& ring = data.ring();
  if (u.size() != static_cast<std::size_t>(n) * n * n) throw DimensionError("gauge needs n^3 scalars");
  auto g = [&](Label a, Label b, Label c) { return u[(static_cast<std::size_t>(a) * n + b) * n + c]; };
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        if (ring.admissible(a, b, c) && g(a, b, c) == Complex<Real>(0))
          throw DomainError("zero gauge scalar at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
  SkeletalData<Real> out = data;
  for (const auto& key : data.block_keys()) {
    const auto [a, b, c, d] = key;
    const auto& blk = data.block(a, b, c, d);
    Matrix<Real> m = blk.m;
    for (std::size_t r = 0; r < blk.rows.size(); ++r)
      for (std::size_t s = 0; s < blk.cols.size(); ++s) {
        const Label e = blk.rows[r], f = blk.cols[s];
        m(r, s) *= g(a, b, e) * g(e, c, d) / (g(b, c, f) * g(a, f, d));
      }
    out.set_block(a, b, c, d, std::move(m));
  }
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        if (ring.admissible(a, b, c)) out.set_R(a, b, c, data.R(a, b, c) * g(a, b, c) / g(b, a, c));
  return out;
}

template <typename Real>
Section verify_pentagon(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs) {
  Section sec;
  sec.name = "pentagon";
  const auto& ring = data.ring();
  const int n = data.size();
  auto adm = [&](Label x, Label y, Label z) { return ring.admissible(x, y, z); };

  // [F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}
  auto parts = parallel_map<Worst>(static_cast<std::size_t>(n) * n, jobs, [&](std::size_t task) {
    Worst w;
    const Label a = static_cast<Label>(task / n), b = static_cast<Label>(task % n);
    for (Label f : ring.channels(a, b))
      for (Label c = 0; c < n; ++c)
        for (Label g : ring.channels(f, c))
          for (Label d = 0; d < n; ++d) {
            const auto ls = ring.channels(c, d);
            for (Label e : ring.channels(g, d))
              for (Label l : ls)
                for (Label k : ring.channels(b, l)) {
                  if (!adm(a, k, e)) continue;
                  const auto lhs = data.F(f, c, d, e, g, l) * data.F(a, b, l, e, f, k);
                  Complex<Real> rhs = 0;
                  for (Label h : ring.channels(b, c))
                    rhs += data.F(a, b, c, g, f, h) * data.F(a, h, d, e, g, k) * data.F(b, c, d, k, h, l);
                  w.absorb(to_d(std::abs(lhs - rhs)), {a, b, c, d, e, f, g, l, k});
                }
          }
    return w;
  });
  Worst pent;
  for (const auto& p : parts) pent.merge(p);
  sec.add(make_check("pentagon", pent, tol.threshold(), "tuple (a,b,c,d,e,f,g,l,k)"));

  Worst unitary, unit_gauge;
  for (const auto& key : data.block_keys()) {
    const auto [a, b, c, d] = key;
    const auto& blk = data.block(a, b, c, d);
    std::vector<int> t{a, b, c, d};
    if (blk.rows.size() != blk.cols.size()) {
      unitary.absorb(kInf, t);
      continue;
    }
    unitary.absorb(is_unitary(blk.m, tol).max_residual, t);
    if (a == 0 || b == 0 || c == 0)
      unit_gauge.absorb(to_d(max_abs_diff(blk.m, Matrix<Real>::identity(blk.rows.size()))), t);
  }
  sec.add(make_check("f_unitary", unitary, tol.threshold(), "block (a,b,c,d)"));
  sec.add(make_check("unit_gauge", unit_gauge, tol.threshold(), "block (a,b,c,d)"));
  sec.details["blocks"] = data.block_keys().size();
  sec.finalize();
  return sec;
}

template <typename Real>
Section verify_hexagon(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs) {
  Section sec;
  sec.name = "hexagon";
  const auto& ring = data.ring();
  const int n = data.size();

  // R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g], and the
  // same with every R replaced by the inverse of its transpose.
  struct Pair {
    Worst plus, minus;
  };
  auto parts = parallel_map<Pair>(static_cast<std::size_t>(n) * n, jobs, [&](std::size_t task) {
    Pair p;
    const Label a = static_cast<Label>(task / n), b = static_cast<Label>(task % n);
    const auto fs = ring.channels(a, b);
    for (Label c = 0; c < n; ++c)
      for (Label e : ring.channels(a, c))
        for (Label g : ring.channels(c, b))
          for (Label d : ring.channels(e, b)) {
            if (!ring.admissible(a, g, d)) continue;
            const auto fm = data.F(a, c, b, d, e, g);
            const auto lhs_p = data.R(c, a, e) * fm * data.R(c, b, g);
            const auto lhs_m = fm / (data.R(a, c, e) * data.R(b, c, g));
            Complex<Real> rhs_p = 0, rhs_m = 0;
            for (Label f : fs) {
              if (!ring.admissible(c, f, d)) continue;
              const auto x = data.F(c, a, b, d, e, f), y = data.F(a, b, c, d, f, g);
              rhs_p += x * data.R(c, f, d) * y;
              rhs_m += x / data.R(f, c, d) * y;
            }
            const std::vector<int> t{a, b, c, d, e, g};
            p.plus.absorb(to_d(std::abs(lhs_p - rhs_p)), t);
            p.minus.absorb(to_d(std::abs(lhs_m - rhs_m)), t);
          }
    return p;
  });
  Worst plus, minus;
  for (const auto& p : parts) {
    plus.merge(p.plus);
    minus.merge(p.minus);
  }
  sec.add(make_check("hexagon_plus", plus, tol.threshold(), "tuple (a,b,c,d,e,g)"));
  sec.add(make_check("hexagon_minus", minus, tol.threshold(), "tuple (a,b,c,d,e,g)"));

  Worst unit, modulus;
  for (Label a = 0; a < n; ++a) {
    unit.absorb(to_d(std::abs(data.R(0, a, a) - Complex<Real>(1))), {0, a, a});
    unit.absorb(to_d(std::abs(data.R(a, 0, a) - Complex<Real>(1))), {a, 0, a});
    for (Label b = 0; b < n; ++b)
      for (Label c : ring.channels(a, b)) modulus.absorb(to_d(std::abs(std::abs(data.R(a, b, c)) - 1)), {a, b, c});
  }
  sec.add(make_check("r_unit_gauge", unit, tol.threshold()));
  sec.add(make_check("r_unit_modulus", modulus, tol.threshold()));
  sec.finalize();
  return sec;
}

namespace {

template <typename Real>
Complex<Real> vacuum_f(const SkeletalData<Real>& data, Label c) {
  const Label cb = data.ring().dual(c);
  const auto f00 = data.F(c, cb, c, c, 0, 0);
  if (f00 == Complex<Real>(0))
    throw DataError("F^{" + std::to_string(c) + " " + std::to_string(cb) + " " + std::to_string(c) +
                    "}[0,0] vanishes; label is not rigid in this data");
  return f00;
}

}  // namespace

template <typename Real>
Complex<Real> ev_left(const SkeletalData<Real>& data, Label a) {
  const Label ab = data.ring().dual(a);
  const Label c = std::min(a, ab);
  const auto f00 = vacuum_f(data, c);
  const Real x = std::sqrt(1 / std::abs(f00));
  return a == c ? Complex<Real>(x) : x * (f00 / std::abs(f00));
}

template <typename Real>
Complex<Real> ev_right(const SkeletalData<Real>& data, Label a) {
  const Label ab = data.ring().dual(a);
  const Label c = std::min(a, ab);
  const auto f00 = vacuum_f(data, c);
  const Real x = std::sqrt(1 / std::abs(f00));
  return a == c ? x * (f00 / std::abs(f00)) : Complex<Real>(x);
}

template <typename Real>
Complex<Real> dagger_coefficient(const SkeletalData<Real>& data, Label i, Label j, Label k) {
  const auto& ring = data.ring();
  if (!ring.admissible(i, j, k)) return 0;
  return ev_left(data, i) * std::conj(data.F(ring.dual(i), i, j, j, 0, k));
}

template <typename Real>
Matrix<Real> dagger_map(const SkeletalData<Real>& data, Label i, Label j, Label k) {
  const auto& ring = data.ring();
  ring.require(i);
  ring.require(j);
  ring.require(k);
  if (!ring.admissible(i, j, k)) return {};
  Matrix<Real> m(1, 1);
  m(0, 0) = dagger_coefficient(data, i, j, k);
  return m;
}

template <typename Real>
Matrix<Real> hom_gram(const SkeletalData<Real>& data, Label i, Label j, Label k) {
  const auto& ring = data.ring();
  ring.require(i);
  ring.require(j);
  ring.require(k);
  if (!ring.admissible(i, j, k)) return {};
  Matrix<Real> g(1, 1);
  g(0, 0) = std::conj(ev_right(data, i)) * dagger_coefficient(data, i, j, k) *
            data.F(i, ring.dual(i), k, k, 0, j);
  return g;
}

template <typename Real>
const BraidBlock<Real>* BraidMatrix<Real>::find(Label s, Label t) const {
  for (const auto& b : blocks)
    if (b.source == s && b.target == t) return &b;
  return nullptr;
}

template <typename Real>
Matrix<Real> BraidMatrix<Real>::assembled() const {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.m.rows();
    c += b.m.cols();
  }
  Matrix<Real> out(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t x = 0; x < b.m.rows(); ++x)
      for (std::size_t y = 0; y < b.m.cols(); ++y) out(r0 + x, c0 + y) = b.m(x, y);
    r0 += b.m.rows();
    c0 += b.m.cols();
  }
  return out;
}

template <typename Real>
BraidBlock<Real> braid_block(const SkeletalData<Real>& data, Label i, Label j, Label s, Label t, BraidSign sign) {
  const auto& ring = data.ring();
  const int n = data.size();
  BraidBlock<Real> out;
  out.source = s;
  out.target = t;
  for (Label u = 0; u < n; ++u)
    if (ring.admissible(j, s, u) && ring.admissible(i, u, t)) out.rows.push_back(u);
  for (Label v = 0; v < n; ++v)
    if (ring.admissible(i, s, v) && ring.admissible(j, v, t)) out.cols.push_back(v);
  if (out.rows.empty() && out.cols.empty()) return out;
  if (out.rows.size() != out.cols.size()) throw DataError("braid block is not square; fusion ring inconsistent");

  // <j (i s)_v| sigma = sum_u M[v,u] <i (j s)_u|; B = M^{-1}.
  const auto& fb = data.block(i, j, s, t);  // rows w (i x j), cols u (j x s)
  const auto fb_inv = inverse(fb.m);
  Matrix<Real> M(out.cols.size(), out.rows.size());
  for (std::size_t vi = 0; vi < out.cols.size(); ++vi)
    for (std::size_t ui = 0; ui < out.rows.size(); ++ui) {
      Complex<Real> acc = 0;
      const int uc = fb.col_of(out.rows[ui]);
      for (std::size_t wi = 0; wi < fb.rows.size(); ++wi) {
        const Label w = fb.rows[wi];
        const Complex<Real> r = sign == BraidSign::plus ? data.R(i, j, w) : Complex<Real>(1) / data.R(j, i, w);
        acc += data.F(j, i, s, t, w, out.cols[vi]) * r * fb_inv(uc, wi);
      }
      M(vi, ui) = acc;
    }
  out.m = inverse(M);
  return out;
}

template <typename Real>
BraidMatrix<Real> braid_matrix(const SkeletalData<Real>& data, Label i, Label j, BraidSign sign) {
  const int n = data.size();
  data.ring().require(i);
  data.ring().require(j);
  BraidMatrix<Real> out{i, j, sign, {}};
  for (Label s = 0; s < n; ++s)
    for (Label t = 0; t < n; ++t) {
      auto b = braid_block(data, i, j, s, t, sign);
      if (!b.rows.empty()) out.blocks.push_back(std::move(b));
    }
  return out;
}

template <typename Real>
Section verify_braid_relations(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs) {
  Section sec;
  sec.name = "braid";
  const auto& ring = data.ring();
  const int n = data.size();
  const std::size_t n4 = static_cast<std::size_t>(n) * n * n * n;
  auto key = [&](Label i, Label j, Label s, Label t, BraidSign sg) {
    return ((((static_cast<std::size_t>(sg == BraidSign::minus) * n + i) * n + j) * n + s) * n + t);
  };
  const auto blocks = parallel_map<BraidBlock<Real>>(2 * n4, jobs, [&](std::size_t idx) {
    const BraidSign sg = idx >= n4 ? BraidSign::minus : BraidSign::plus;
    std::size_t r = idx % n4;
    const Label t = r % n, s = (r / n) % n, j = (r / n / n) % n, i = static_cast<Label>(r / n / n / n);
    return braid_block(data, i, j, s, t, sg);
  });
  auto get = [&](Label i, Label j, Label s, Label t, BraidSign sg) -> const BraidBlock<Real>& {
    return blocks[key(i, j, s, t, sg)];
  };
  auto entry = [](const BraidBlock<Real>& b, Label r, Label c) -> Complex<Real> {
    auto ri = std::find(b.rows.begin(), b.rows.end(), r);
    auto ci = std::find(b.cols.begin(), b.cols.end(), c);
    if (ri == b.rows.end() || ci == b.cols.end())
      return {std::numeric_limits<Real>::quiet_NaN(), 0};
    return b.m(ri - b.rows.begin(), ci - b.cols.begin());
  };
  auto dag = [&](Label i, Label j, Label k) { return dagger_coefficient(data, i, j, k); };
  auto flip = [](BraidSign s) { return s == BraidSign::plus ? BraidSign::minus : BraidSign::plus; };

  Worst inv, unit, conj_w, swap_w, dual_w, fus, ortho;
  for (BraidSign sg : {BraidSign::plus, BraidSign::minus})
    for (Label i = 0; i < n; ++i)
      for (Label j = 0; j < n; ++j) {
        const Label ib = ring.dual(i), jb = ring.dual(j);
        for (Label s = 0; s < n; ++s)
          for (Label t = 0; t < n; ++t) {
            const auto& B = get(i, j, s, t, sg);
            if (B.rows.empty()) continue;
            const int sgn = sg == BraidSign::plus ? 1 : -1;
            const std::vector<int> tup{sgn, i, j, s, t};
            const auto& Bi = get(j, i, s, t, flip(sg));
            inv.absorb(to_d(max_abs_diff(B.m * Bi.m, Matrix<Real>::identity(B.rows.size()))), tup);
            unit.absorb(is_unitary(B.m, tol).max_residual, tup);
            const auto& Ba = get(jb, ib, t, s, flip(sg));
            const auto& B2 = get(ib, jb, t, s, sg);
            for (Label u : B.rows)
              for (Label v : B.cols) {
                const auto val = entry(B, u, v);
                const std::vector<int> tv{sgn, i, j, s, t, u, v};
                const auto ra = dag(j, s, u) * dag(i, u, t) * entry(Ba, u, v) / (dag(i, s, v) * dag(j, v, t));
                conj_w.absorb(to_d(std::abs(std::conj(val) - ra)), tv);
                const auto& B1 = get(j, ib, v, u, flip(sg));
                const auto rb1 = dag(i, s, v) * entry(B1, s, t) / dag(i, u, t);
                swap_w.absorb(to_d(std::abs(val - rb1)), tv);
                const auto rb2 = dag(i, s, v) * dag(j, v, t) * entry(B2, v, u) / (dag(j, s, u) * dag(i, u, t));
                dual_w.absorb(to_d(std::abs(val - rb2)), tv);
              }
          }
      }

  // F^{ijk}_t[u,s] = B+_{(i,k), j -> t}[s,u] R^{uk}_t / R^{jk}_s
  for (Label i = 0; i < n; ++i)
    for (Label k = 0; k < n; ++k)
      for (Label j = 0; j < n; ++j)
        for (Label t = 0; t < n; ++t) {
          const auto& B = get(i, k, j, t, BraidSign::plus);
          for (Label s : B.rows)
            for (Label u : B.cols) {
              const auto rhs = entry(B, s, u) * data.R(u, k, t) / data.R(j, k, s);
              fus.absorb(to_d(std::abs(data.F(i, j, k, t, u, s) - rhs)), {i, j, k, t, u, s});
            }
        }

  // A braided basis vector of Hom(i x j, k) stays normalised in Hom(j x i, k).
  for (BraidSign sg : {BraidSign::plus, BraidSign::minus})
    for (Label i = 0; i < n; ++i)
      for (Label j = 0; j < n; ++j)
        for (Label k : ring.channels(i, j)) {
          const auto b = entry(get(i, j, 0, k, sg), j, i);
          const auto gij = hom_gram(data, i, j, k)(0, 0);
          const auto gji = hom_gram(data, j, i, k)(0, 0);
          ortho.absorb(to_d(std::abs(std::norm(b) * gji - gij)), {sg == BraidSign::plus ? 1 : -1, i, j, k});
        }

  const double thr = tol.threshold();
  sec.add(make_check("inverse", inv, thr, "(sign,i,j,s,t)"));
  sec.add(make_check("unitary", unit, thr, "(sign,i,j,s,t)"));
  sec.add(make_check("conjugation", conj_w, thr, "(sign,i,j,s,t,u,v)"));
  sec.add(make_check("adjoint_swap", swap_w, thr, "(sign,i,j,s,t,u,v)"));
  sec.add(make_check("adjoint_dual", dual_w, thr, "(sign,i,j,s,t,u,v)"));
  sec.add(make_check("fusion_from_braid", fus, thr, "(i,j,k,t,u,s)"));
  sec.add(make_check("orthonormal_images", ortho, thr, "(sign,i,j,k)"));
  sec.finalize();
  return sec;
}

#define MTCFORGE_INSTANTIATE(R)                                                                          \
  template struct FBlock<R>;                                                                              \
  template class SkeletalData<R>;                                                                         \
  template struct BraidMatrix<R>;                                                                         \
  template SkeletalData<R> gauge_transform(const SkeletalData<R>&, const Gauge<R>&);                     \
  template Section verify_pentagon(const SkeletalData<R>&, const Tolerance&, unsigned);                  \
  template Section verify_hexagon(const SkeletalData<R>&, const Tolerance&, unsigned);                   \
  template Complex<R> ev_left(const SkeletalData<R>&, Label);                                            \
  template Complex<R> ev_right(const SkeletalData<R>&, Label);                                           \
  template Complex<R> dagger_coefficient(const SkeletalData<R>&, Label, Label, Label);                   \
  template Matrix<R> dagger_map(const SkeletalData<R>&, Label, Label, Label);                            \
  template Matrix<R> hom_gram(const SkeletalData<R>&, Label, Label, Label);                              \
  template BraidBlock<R> braid_block(const SkeletalData<R>&, Label, Label, Label, Label, BraidSign);     \
  template BraidMatrix<R> braid_matrix(const SkeletalData<R>&, Label, Label, BraidSign);                 \
  template Section verify_braid_relations(const SkeletalData<R>&, const Tolerance&, unsigned);

MTCFORGE_INSTANTIATE(double)
MTCFORGE_INSTANTIATE(long double)

}  // namespace mtcforge
