#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mtcforge/category.hpp"
#include "mtcforge/modular_data.hpp"

namespace mtcforge {

// Virasoro minimal models M(m, m+1).
double central_charge(int m);
double kac_weight(int m, int r, int s);

struct KacClass {
  int r = 1;
  int s = 1;  // canonical representative: the smaller of (r,s) and (m-r, m+1-s)
  double h = 0;
};

struct KacTable {
  int m = 2;
  double c = 0;
  std::map<std::pair<int, int>, double> entries;  // every (r,s) in range
  std::vector<KacClass> classes;                  // label order: by (h, r, s); vacuum first

  Label label_of(int r, int s) const;
  std::vector<std::string> names() const;
};

KacTable kac_table(int m);

// Fusion multiplicity of classes a x b -> c from the truncated su(2)-type rules
// in r and s separately, summed over both Kac representatives of c.
int bpz_multiplicity(int m, const KacClass& a, const KacClass& b, const KacClass& c);
FusionRing bpz_fusion(const KacTable& table);

template <typename Real>
struct MinimalModel {
  ModularData<Real> modular;
  KacTable kac;
};

// Throws GenerationError when Verlinde fusion disagrees with bpz_fusion.
template <typename Real>
MinimalModel<Real> minimal_model(int m, const Tolerance& tol = {});

// SU(2)_k with twice-spin labels 0..k.
template <typename Real>
struct FamilyData {
  SkeletalData<Real> skeletal;
  ModularData<Real> modular;
};

bool su2_admissible(int k, int a, int b, int c);
FusionRing su2_ring(int k);

template <typename Real>
Real q_number(int k, int n);

// Unitary-gauge [F^{abc}_d]_{ef}: (-1)^{(a+b+c+d)/2} sqrt([e+1][f+1]) times the
// Racah q-6j symbol {a/2 b/2 e/2; c/2 d/2 f/2}, q = exp(i pi/(k+2)).
template <typename Real>
Real q6j(int k, int a, int b, int c, int d, int e, int f);

template <typename Real>
Complex<Real> su2_r_symbol(int k, int a, int b, int c);

// Throws GenerationError if pentagon, hexagon or Verlinde self-checks fail.
template <typename Real>
FamilyData<Real> su2_data(int k, const Tolerance& tol = {});

// Ising category: labels 1, sigma, psi.
template <typename Real>
FamilyData<Real> ising_data(const Tolerance& tol = {});

}  // namespace mtcforge
