#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mtcforge/algebra.hpp"
#include "mtcforge/fusion_ring.hpp"
#include "mtcforge/report.hpp"

namespace mtcforge {

// S and T with the fusion ring they are paired with. Conventions:
// theta_i = exp(2 pi i h_i), T_ii = exp(2 pi i (h_i - c/24)).
template <typename Real>
struct ModularData {
  FusionRing ring;
  Matrix<Real> S;
  Matrix<Real> T;
  std::vector<Real> d;
  std::vector<Complex<Real>> theta;
  Real central_charge = 0;
  std::vector<Real> weights;  // conformal weights h_i when known, else empty

  int size() const { return ring.size(); }

  template <typename Other>
  ModularData<Other> cast() const {
    ModularData<Other> o;
    o.ring = ring;
    o.S = S.template cast<Other>();
    o.T = T.template cast<Other>();
    for (Real x : d) o.d.push_back(static_cast<Other>(x));
    for (auto t : theta) o.theta.emplace_back(static_cast<Other>(t.real()), static_cast<Other>(t.imag()));
    o.central_charge = static_cast<Other>(central_charge);
    for (Real h : weights) o.weights.push_back(static_cast<Other>(h));
    return o;
  }

  friend bool operator==(const ModularData&, const ModularData&) = default;
};

// Raw Verlinde sums N^k_{ij} before rounding, flat (i*n + j)*n + k.
template <typename Real>
std::vector<Complex<Real>> verlinde_sums(const Matrix<Real>& S);

struct VerlindeIntegrality {
  double max_deviation = 0.0;  // max |sum - round(sum)| including imaginary parts
  std::array<int, 3> worst{0, 0, 0};
};

template <typename Real>
VerlindeIntegrality verlinde_integrality(const Matrix<Real>& S);

// Rounding threshold is 10 * tol.abs_eps.
template <typename Real>
FusionRing verlinde_fusion(const Matrix<Real>& S, const Tolerance& tol,
                           std::vector<std::string> names = {});

template <typename Real>
std::vector<Real> quantum_dims(const Matrix<Real>& S, const Tolerance& tol = {});

// Complex lambda minimising |(ST)^3 - lambda S^2| in the Frobenius norm.
template <typename Real>
Complex<Real> modular_anomaly(const Matrix<Real>& S, const Matrix<Real>& T);

template <typename Real>
Section verify_modular(const ModularData<Real>& md, const Tolerance& tol);

}  // namespace mtcforge
