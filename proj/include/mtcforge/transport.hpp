#pragma once

#include <optional>
#include <vector>

#include "mtcforge/category.hpp"
#include "mtcforge/modular_data.hpp"

namespace mtcforge {

// f_move: slice of the inverse F-block F[ibar, i, j; j] pushed through the dagger map.
// gram:   mu_i times the inverse Gram matrix of Hom(i x j, k).
// braided: solves the braided form of the expansion, which also involves R.
enum class TransportRoute { f_move, gram, braided };

const char* route_name(TransportRoute r);

template <typename Real>
struct TransportMatrix {
  Label i = 0, j = 0, k = 0;
  Matrix<Real> lambda;  // 0x0 when N^k_{ij} = 0
  TransportRoute route = TransportRoute::f_move;
  Complex<Real> mu = 1;
};

template <typename Real>
TransportMatrix<Real> transport_matrix(const SkeletalData<Real>& data, Label i, Label j, Label k);
template <typename Real>
TransportMatrix<Real> transport_matrix(const SkeletalData<Real>& data, Label i, Label j, Label k, Complex<Real> mu);

template <typename Real>
TransportMatrix<Real> transport_matrix_gram(const SkeletalData<Real>& data, Label i, Label j, Label k);
template <typename Real>
TransportMatrix<Real> transport_matrix_gram(const SkeletalData<Real>& data, Label i, Label j, Label k,
                                            Complex<Real> mu);

// One matrix per channel k of i x j, in ascending k.
template <typename Real>
std::vector<TransportMatrix<Real>> transport_matrices_braided(const SkeletalData<Real>& data, Label i, Label j);

struct PositivityCertificate {
  Label i = 0, j = 0, k = 0;
  double min_eigenvalue = 0.0;
  double hermitian_residual = 0.0;
  double route_agreement_residual = 0.0;  // max over the gram and braided routes
  bool verdict = false;
};

template <typename Real>
std::vector<PositivityCertificate> verify_positivity(const SkeletalData<Real>& data, Label i, Label j,
                                                     const Tolerance& tol);

// Whole-catalog sweep over (i, j); section "transport".
template <typename Real>
Section verify_transport(const SkeletalData<Real>& data, const Tolerance& tol, unsigned jobs = 1);

struct RigidityResult {
  Label label = 0;
  double zigzag_left = 0.0;
  double zigzag_right = 0.0;
  double d_value = 0.0;
  double dual_residual = 0.0;     // |d_i - d_ibar|
  double vacuum_norm_residual = 0.0;
  std::optional<double> modular_residual;  // |d_i - S_0i/S_00| when S is known
};

// d_i = ev o coev read off the skeletal data.
template <typename Real>
std::vector<Real> rigidity_dims(const SkeletalData<Real>& data);

template <typename Real>
RigidityResult verify_rigidity(const SkeletalData<Real>& data, Label i, const Tolerance& tol,
                               const ModularData<Real>* md = nullptr);

template <typename Real>
Section verify_rigidity_all(const SkeletalData<Real>& data, const Tolerance& tol,
                            const ModularData<Real>* md = nullptr);

template <typename Real>
Section verify_twist_compat(const SkeletalData<Real>& data, const ModularData<Real>& md, const Tolerance& tol);

template <typename Real>
Section reflection_positivity_check(const SkeletalData<Real>& data, const Tolerance& tol);

template <typename Real>
struct FullFieldBlock {
  Label i = 0, j = 0, k = 0;
  Matrix<Real> gram;
};

template <typename Real>
struct FullFieldGram {
  std::vector<FullFieldBlock<Real>> blocks;
  bool positive_definite = false;
  double min_eigenvalue = 0.0;
  double hermitian_residual = 0.0;
};

// Block (i,j,k) = d_i^{-1} G_{ijk} (x) conj(G_{ibar jbar kbar}).
template <typename Real>
FullFieldGram<Real> full_field_gram(const SkeletalData<Real>& data, const Tolerance& tol);

template <typename Real>
Section verify_full_field(const SkeletalData<Real>& data, const Tolerance& tol);

}  // namespace mtcforge
