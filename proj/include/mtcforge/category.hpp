#pragma once

#include <array>
#include <string>
#include <vector>

#include "mtcforge/algebra.hpp"
#include "mtcforge/fusion_ring.hpp"
#include "mtcforge/report.hpp"

namespace mtcforge {

// Basis conventions (multiplicity-free):
//   splitting trees  |(ab)_e c; d> = sum_f [F^{abc}_d]_{ef} |a(bc)_f; d>
//   braiding         sigma_{a,b} psi^{ab}_c = R^{ab}_c psi^{ba}_c
// An F-block has rows e (channels of a x b) and columns f (channels of b x c).
template <typename Real>
struct FBlock {
  std::vector<Label> rows;
  std::vector<Label> cols;
  Matrix<Real> m;

  int row_of(Label e) const;
  int col_of(Label f) const;
  bool empty() const { return rows.empty(); }
  friend bool operator==(const FBlock&, const FBlock&) = default;
};

template <typename Real>
class SkeletalData {
 public:
  SkeletalData() = default;
  // Allocates zero blocks of the right shapes. Rings with N > 1 are rejected.
  explicit SkeletalData(FusionRing ring);

  const FusionRing& ring() const { return ring_; }
  int size() const { return ring_.size(); }

  const FBlock<Real>& block(Label a, Label b, Label c, Label d) const;
  void set_block(Label a, Label b, Label c, Label d, Matrix<Real> m);
  void set_F(Label a, Label b, Label c, Label d, Label e, Label f, Complex<Real> v);
  // Zero when the tree is not admissible.
  Complex<Real> F(Label a, Label b, Label c, Label d, Label e, Label f) const;

  Complex<Real> R(Label a, Label b, Label c) const { return r_[index3(a, b, c)]; }
  void set_R(Label a, Label b, Label c, Complex<Real> v);

  Real mu(Label i) const { return mu_[i]; }
  const std::vector<Real>& ev_norms() const { return mu_; }
  void set_mu(Label i, Real v);

  // Nonempty blocks as (a, b, c, d) in lexicographic order.
  std::vector<std::array<Label, 4>> block_keys() const;
  bool finite() const;

  template <typename Other>
  SkeletalData<Other> cast() const {
    SkeletalData<Other> o(ring_);
    for (const auto& key : block_keys())
      o.set_block(key[0], key[1], key[2], key[3], block(key[0], key[1], key[2], key[3]).m.template cast<Other>());
    const int n = size();
    for (Label a = 0; a < n; ++a)
      for (Label b = 0; b < n; ++b)
        for (Label c = 0; c < n; ++c)
          if (ring_.admissible(a, b, c)) {
            auto v = R(a, b, c);
            o.set_R(a, b, c, Complex<Other>(static_cast<Other>(v.real()), static_cast<Other>(v.imag())));
          }
    for (Label i = 0; i < n; ++i) o.set_mu(i, static_cast<Other>(mu_[i]));
    return o;
  }

  friend bool operator==(const SkeletalData&, const SkeletalData&) = default;

 private:
  std::size_t index3(Label a, Label b, Label c) const {
    return (static_cast<std::size_t>(a) * size() + b) * size() + c;
  }
  std::size_t index4(Label a, Label b, Label c, Label d) const { return index3(a, b, c) * size() + d; }

  FusionRing ring_;
  std::vector<FBlock<Real>> f_;
  std::vector<Complex<Real>> r_;
  std::vector<Real> mu_;
};

// Flat per-triple gauge scalars u^{ab}_c at index (a*n + b)*n + c.
template <typename Real>
using Gauge = std::vector<Complex<Real>>;

// psi' = u psi:  F' = F u^{ab}_e u^{ec}_d / (u^{bc}_f u^{af}_d),  R' = R u^{ab}_c / u^{ba}_c.
template <typename Real>
SkeletalData<Real> gauge_transform(const SkeletalData<Real>& data, const Gauge<Real>& u);

template <typename Real>
Section verify_pentagon(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs = 1);

template <typename Real>
Section verify_hexagon(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs = 1);

// Evaluation maps. For each dual pair a canonical member c = min(c, cbar) is
// chosen; ev_{cbar,c} gets the positive coefficient sqrt(1/|F^{c cbar c}_c[0,0]|)
// and ev_{c,cbar} the same modulus times the phase of F^{c cbar c}_c[0,0].
// ev_left(a) is the coefficient of ev_{abar,a}, ev_right(a) that of ev_{a,abar}.
template <typename Real>
Complex<Real> ev_left(const SkeletalData<Real>& data, Label a);
template <typename Real>
Complex<Real> ev_right(const SkeletalData<Real>& data, Label a);

// Coefficient D of alpha -> alpha* for the unique basis vector of Hom(i x j, k),
// alpha* in Hom(ibar x k, j). Returned as a 1x1 matrix, or 0x0 when N^k_{ij} = 0.
template <typename Real>
Matrix<Real> dagger_map(const SkeletalData<Real>& data, Label i, Label j, Label k);
// Scalar form; zero for inadmissible triples.
template <typename Real>
Complex<Real> dagger_coefficient(const SkeletalData<Real>& data, Label i, Label j, Label k);

// Gram matrix of the Hom(i x j, k) basis under alpha o alpha^dagger = G id_k.
template <typename Real>
Matrix<Real> hom_gram(const SkeletalData<Real>& data, Label i, Label j, Label k);

enum class BraidSign { plus, minus };

// One (source s, target t) block: rows are intermediate channels u of the chain
// i(j s)_u -> t, columns the channels v of j(i s)_v -> t.
template <typename Real>
struct BraidBlock {
  Label source = 0;
  Label target = 0;
  std::vector<Label> rows;
  std::vector<Label> cols;
  Matrix<Real> m;
};

template <typename Real>
struct BraidMatrix {
  Label i = 0;
  Label j = 0;
  BraidSign sign = BraidSign::plus;
  std::vector<BraidBlock<Real>> blocks;

  const BraidBlock<Real>* find(Label s, Label t) const;
  // Block-diagonal aggregate over all (s, t), in the order of `blocks`.
  Matrix<Real> assembled() const;
};

// B+ is built from R, B- from R^{-1}.
template <typename Real>
BraidBlock<Real> braid_block(const SkeletalData<Real>& data, Label i, Label j, Label s, Label t, BraidSign sign);

template <typename Real>
BraidMatrix<Real> braid_matrix(const SkeletalData<Real>& data, Label i, Label j, BraidSign sign);

template <typename Real>
Section verify_braid_relations(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs = 1);

}  // namespace mtcforge
