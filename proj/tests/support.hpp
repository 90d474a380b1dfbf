#pragma once

// Independent oracles and catalog perturbations shared by the unit tests and
// the acceptance binary. Nothing here calls into the code it is checking.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtcforge/catalog.hpp"

namespace oracle {

using cd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

// S-matrix of SU(2)_k straight from the sine formula.
inline std::vector<std::vector<double>> su2_s(int k) {
  const int n = k + 1;
  std::vector<std::vector<double>> s(n, std::vector<double>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s[a][b] = std::sqrt(2.0 / (k + 2)) * std::sin(pi * (a + 1) * (b + 1) / (k + 2));
  return s;
}

inline double su2_dim(int k, int a) { return std::sin(pi * (a + 1) / (k + 2)) / std::sin(pi / (k + 2)); }

// Truncated Clebsch-Gordan rule at level k.
inline int su2_cg(int k, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a > k || b > k || c > k) return 0;
  if ((a + b + c) % 2) return 0;
  return (std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b)) ? 1 : 0;
}

// Brute-force Verlinde sum for a real symmetric S.
inline double verlinde(const std::vector<std::vector<double>>& s, int i, int j, int k) {
  double acc = 0;
  for (std::size_t m = 0; m < s.size(); ++m) acc += s[i][m] * s[j][m] * s[k][m] / s[0][m];
  return acc;
}

inline double kac_h(int m, int r, int s) {
  const double x = (m + 1.0) * r - m * s;
  return (x * x - 1.0) / (4.0 * m * (m + 1.0));
}

// Fusion of M(m, m+1) built as su(2)_{m-2} x su(2)_{m-1} fusion on one
// representative of each factor, summed over both representatives of the
// result. Classes are told apart by conformal weight alone.
struct MinimalOracle {
  int m;
  std::vector<std::pair<int, int>> reps;  // one (r,s) per class, indexed like `weights`
  std::vector<double> weights;

  explicit MinimalOracle(int m_, const std::vector<double>& lib_weights) : m(m_), weights(lib_weights) {
    for (double h : weights) {
      std::pair<int, int> found{0, 0};
      for (int r = 1; r < m && !found.first; ++r)
        for (int s = 1; s <= m; ++s)
          if (std::abs(kac_h(m, r, s) - h) < 1e-12) {
            found = {r, s};
            break;
          }
      reps.push_back(found);
    }
  }

  int N(int a, int b, int c) const {
    const auto [r1, s1] = reps[a];
    const auto [r2, s2] = reps[b];
    const auto [r3, s3] = reps[c];
    return su2_cg(m - 2, r1 - 1, r2 - 1, r3 - 1) * su2_cg(m - 1, s1 - 1, s2 - 1, s3 - 1) +
           su2_cg(m - 2, r1 - 1, r2 - 1, m - r3 - 1) * su2_cg(m - 1, s1 - 1, s2 - 1, m - s3);
  }
};

}  // namespace oracle

namespace perturb {

using mtcforge::Catalog;
using mtcforge::Label;

// Negates the first entry of the first 2x2 F-block.
inline Catalog negate_f_entry(Catalog c) {
  auto& sk = *c.skeletal;
  for (const auto& key : sk.block_keys()) {
    const auto& b = sk.block(key[0], key[1], key[2], key[3]);
    if (b.rows.size() == 2) {
      sk.set_F(key[0], key[1], key[2], key[3], b.rows[0], b.cols[0], -b.m(0, 0));
      return c;
    }
  }
  throw std::runtime_error("no 2x2 F-block");
}

// Conjugates the first R-symbol with a nonzero imaginary part.
inline Catalog conjugate_r(Catalog c) {
  auto& sk = *c.skeletal;
  const int n = sk.size();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label x = 0; x < n; ++x)
        if (sk.ring().admissible(a, b, x) && std::abs(sk.R(a, b, x).imag()) > 1e-3) {
          sk.set_R(a, b, x, std::conj(sk.R(a, b, x)));
          return c;
        }
  throw std::runtime_error("no complex R-symbol");
}

// Sets N^k_{ij} (and the mirrored entry), drops the F/R data whose shapes
// would no longer match, and round-trips through the JSON loader so the
// corruption is something a user could ship.
inline Catalog corrupt_fusion(const Catalog& c, Label i, Label j, Label k, int value, bool keep_modular = false) {
  Catalog r;
  r.name = c.name + "_corrupt";
  r.generator = c.generator;
  r.ring = c.ring.with_multiplicity(i, j, k, value).with_multiplicity(j, i, k, value);
  if (keep_modular) {
    r.modular = c.modular;
    r.modular->ring = r.ring;
  }
  return mtcforge::load_catalog(mtcforge::save_catalog(r));
}

// Replaces theta_i by 1 while leaving T untouched.
inline Catalog unit_twist(Catalog c, Label i) {
  c.modular->theta[i] = 1.0;
  return c;
}

}  // namespace perturb
