#include "mtcforge/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mtcforge {

namespace {

void require_m(int m) {
  if (m < 2) throw DomainError("minimal model needs m >= 2, got " + std::to_string(m));
}

template <typename Real>
Complex<Real> phase(Real turns) {
  const Real a = 2 * std::numbers::pi_v<Real> * turns;
  return {std::cos(a), std::sin(a)};
}

template <typename Real>
ModularData<Real> modular_from(FusionRing ring, Matrix<Real> S, std::vector<Real> h, Real c) {
  ModularData<Real> md;
  const int n = ring.size();
  md.ring = std::move(ring);
  md.S = std::move(S);
  md.T = Matrix<Real>(n, n);
  for (int i = 0; i < n; ++i) {
    md.theta.push_back(phase<Real>(h[i]));
    md.T(i, i) = phase<Real>(h[i] - c / 24);
  }
  for (int i = 0; i < n; ++i) md.d.push_back((md.S(0, i) / md.S(0, 0)).real());
  md.central_charge = c;
  md.weights = std::move(h);
  return md;
}

template <typename Real>
void self_check(const SkeletalData<Real>& data, const Tolerance& tol, const std::string& what) {
  for (const auto& sec : {verify_pentagon(data, tol), verify_hexagon(data, tol)})
    if (sec.status != Status::pass) {
      std::string msg = what + ": generated data fails " + sec.name;
      for (const auto& c : sec.checks)
        if (!c.pass) msg += " (" + c.name + " residual " + std::to_string(c.residual) + ")";
      throw GenerationError(msg);
    }
}

}  // namespace

double central_charge(int m) {
  require_m(m);
  return 1.0 - 6.0 / (static_cast<double>(m) * (m + 1));
}

double kac_weight(int m, int r, int s) {
  require_m(m);
  if (r < 1 || r > m - 1 || s < 1 || s > m)
    throw DomainError("Kac label (" + std::to_string(r) + "," + std::to_string(s) + ") out of range for m=" +
                      std::to_string(m));
  const double x = static_cast<double>((m + 1) * r - m * s);
  return (x * x - 1.0) / (4.0 * m * (m + 1));
}

Label KacTable::label_of(int r, int s) const {
  const std::pair<int, int> a{r, s}, b{m - r, m + 1 - s};
  const auto key = std::min(a, b);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].r == key.first && classes[i].s == key.second) return static_cast<Label>(i);
  throw DomainError("no Kac class (" + std::to_string(r) + "," + std::to_string(s) + ")");
}

std::vector<std::string> KacTable::names() const {
  std::vector<std::string> out;
  for (const auto& c : classes) out.push_back("(" + std::to_string(c.r) + "," + std::to_string(c.s) + ")");
  return out;
}

KacTable kac_table(int m) {
  KacTable t;
  t.m = m;
  t.c = central_charge(m);
  std::vector<std::pair<int, int>> reps;
  for (int r = 1; r <= m - 1; ++r)
    for (int s = 1; s <= m; ++s) {
      t.entries[{r, s}] = kac_weight(m, r, s);
      const auto key = std::min(std::pair{r, s}, std::pair{m - r, m + 1 - s});
      if (std::find(reps.begin(), reps.end(), key) == reps.end()) reps.push_back(key);
    }
  for (auto [r, s] : reps) t.classes.push_back({r, s, kac_weight(m, r, s)});
  std::sort(t.classes.begin(), t.classes.end(), [](const KacClass& x, const KacClass& y) {
    return std::tie(x.h, x.r, x.s) < std::tie(y.h, y.r, y.s);
  });
  return t;
}

namespace {

// Truncated su(2)-type rule with labels 1..p-1.
int trunc_rule(int a, int b, int c, int p) {
  return std::abs(a - b) + 1 <= c && c <= std::min(a + b - 1, 2 * p - a - b - 1) && (a + b + c) % 2 == 1;
}

}  // namespace

int bpz_multiplicity(int m, const KacClass& a, const KacClass& b, const KacClass& c) {
  return trunc_rule(a.r, b.r, c.r, m) * trunc_rule(a.s, b.s, c.s, m + 1) +
         trunc_rule(a.r, b.r, m - c.r, m) * trunc_rule(a.s, b.s, m + 1 - c.s, m + 1);
}

FusionRing bpz_fusion(const KacTable& table) {
  const int n = static_cast<int>(table.classes.size());
  std::vector<int> mult(static_cast<std::size_t>(n) * n * n);
  std::vector<Label> dual(n);
  for (int i = 0; i < n; ++i) {
    dual[i] = i;  // every Virasoro minimal-model class is self-conjugate
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        mult[(static_cast<std::size_t>(i) * n + j) * n + k] =
            bpz_multiplicity(table.m, table.classes[i], table.classes[j], table.classes[k]);
  }
  return FusionRing(table.names(), dual, mult);
}

template <typename Real>
MinimalModel<Real> minimal_model(int m, const Tolerance& tol) {
  require_m(m);
  MinimalModel<Real> out;
  out.kac = kac_table(m);
  const auto& cls = out.kac.classes;
  const int n = static_cast<int>(cls.size());
  const Real pi = std::numbers::pi_v<Real>;
  const Real pre = 2 * std::sqrt(Real(2) / (Real(m) * (m + 1)));
  Matrix<Real> S(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int r = cls[a].r, s = cls[a].s, rho = cls[b].r, sig = cls[b].s;
      const Real sign = ((1 + s * rho + r * sig) % 2 == 0) ? 1 : -1;
      S(a, b) = pre * sign * std::sin(pi * Real(m + 1) / m * r * rho) * std::sin(pi * Real(m) / (m + 1) * s * sig);
    }
  if (S(0, 0).real() < 0) S *= Complex<Real>(-1);
  FusionRing ring;
  try {
    ring = verlinde_fusion(S, tol, out.kac.names());
  } catch (const Error& e) {
    throw GenerationError(std::string("minimal model S convention is inconsistent: ") + e.what());
  }
  if (!(ring == bpz_fusion(out.kac)))
    throw GenerationError("minimal model Verlinde fusion disagrees with the BPZ rules at m=" + std::to_string(m));
  std::vector<Real> h;
  for (const auto& c : cls) h.push_back(static_cast<Real>(kac_weight(m, c.r, c.s)));
  const Real c = 1 - Real(6) / (Real(m) * (m + 1));
  out.modular = modular_from(std::move(ring), std::move(S), std::move(h), c);
  return out;
}

bool su2_admissible(int k, int a, int b, int c) {
  return std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) && (a + b + c) % 2 == 0;
}

FusionRing su2_ring(int k) {
  if (k < 1) throw DomainError("SU(2)_k needs k >= 1");
  const int n = k + 1;
  std::vector<std::string> names;
  std::vector<Label> dual;
  std::vector<int> mult(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    dual.push_back(a);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) mult[(static_cast<std::size_t>(a) * n + b) * n + c] = su2_admissible(k, a, b, c);
  }
  return FusionRing(names, dual, mult);
}

template <typename Real>
Real q_number(int k, int n) {
  const Real x = std::numbers::pi_v<Real> / (k + 2);
  return std::sin(n * x) / std::sin(x);
}

namespace {

template <typename Real>
Real q_factorial(int k, int n) {
  Real r = 1;
  for (int t = 2; t <= n; ++t) r *= q_number<Real>(k, t);
  return r;
}

// Triangle coefficient in twice-spin labels.
template <typename Real>
Real delta(int k, int a, int b, int c) {
  return std::sqrt(q_factorial<Real>(k, (a + b - c) / 2) * q_factorial<Real>(k, (a - b + c) / 2) *
                   q_factorial<Real>(k, (-a + b + c) / 2) / q_factorial<Real>(k, (a + b + c) / 2 + 1));
}

}  // namespace

template <typename Real>
Real q6j(int k, int a, int b, int c, int d, int e, int f) {
  if (k < 1) throw DomainError("q6j needs k >= 1");
  for (int x : {a, b, c, d, e, f})
    if (x < 0 || x > k) throw DomainError("q6j label " + std::to_string(x) + " outside 0.." + std::to_string(k));
  if (!(su2_admissible(k, a, b, e) && su2_admissible(k, e, c, d) && su2_admissible(k, b, c, f) &&
        su2_admissible(k, a, f, d)))
    return 0;
  // Racah sum over z with triads (a,b,e), (e,c,d), (b,c,f), (a,f,d); all quantities doubled.
  const int t1 = a + b + e, t2 = e + c + d, t3 = b + c + f, t4 = a + f + d;
  const int q1 = a + b + c + d, q2 = a + e + c + f, q3 = b + e + d + f;
  const int lo = std::max({t1, t2, t3, t4}) / 2, hi = std::min({q1, q2, q3}) / 2;
  Real sum = 0;
  for (int z = lo; z <= hi; ++z) {
    const Real num = q_factorial<Real>(k, z + 1);
    const Real den = q_factorial<Real>(k, z - t1 / 2) * q_factorial<Real>(k, z - t2 / 2) *
                     q_factorial<Real>(k, z - t3 / 2) * q_factorial<Real>(k, z - t4 / 2) *
                     q_factorial<Real>(k, q1 / 2 - z) * q_factorial<Real>(k, q2 / 2 - z) *
                     q_factorial<Real>(k, q3 / 2 - z);
    sum += (z % 2 ? -num : num) / den;
  }
  const Real racah = delta<Real>(k, a, b, e) * delta<Real>(k, e, c, d) * delta<Real>(k, b, c, f) *
                     delta<Real>(k, a, f, d) * sum;
  const Real sign = ((a + b + c + d) / 2) % 2 ? -1 : 1;
  return sign * std::sqrt(q_number<Real>(k, e + 1) * q_number<Real>(k, f + 1)) * racah;
}

template <typename Real>
Complex<Real> su2_r_symbol(int k, int a, int b, int c) {
  if (!su2_admissible(k, a, b, c)) return 0;
  const Real sign = ((a + b - c) / 2) % 2 ? -1 : 1;
  const Real turns = Real(c * (c + 2) - a * (a + 2) - b * (b + 2)) / (8 * (k + 2));
  return sign * phase<Real>(turns);
}

template <typename Real>
FamilyData<Real> su2_data(int k, const Tolerance& tol) {
  const auto ring = su2_ring(k);
  const int n = k + 1;
  SkeletalData<Real> sk(ring);
  for (const auto& key : sk.block_keys()) {
    const auto [a, b, c, d] = key;
    const auto& blk = sk.block(a, b, c, d);
    Matrix<Real> m(blk.rows.size(), blk.cols.size());
    for (std::size_t r = 0; r < blk.rows.size(); ++r)
      for (std::size_t s = 0; s < blk.cols.size(); ++s) m(r, s) = q6j<Real>(k, a, b, c, d, blk.rows[r], blk.cols[s]);
    sk.set_block(a, b, c, d, std::move(m));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : ring.channels(a, b)) sk.set_R(a, b, c, su2_r_symbol<Real>(k, a, b, c));
  self_check(sk, tol, "su2_data(" + std::to_string(k) + ")");

  const Real pre = std::sqrt(Real(2) / (k + 2));
  Matrix<Real> S(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) S(a, b) = pre * std::sin(std::numbers::pi_v<Real> * (a + 1) * (b + 1) / (k + 2));
  std::vector<Real> h;
  for (int a = 0; a < n; ++a) h.push_back(Real(a * (a + 2)) / (4 * (k + 2)));
  const Real c = Real(3 * k) / (k + 2);
  if (!(verlinde_fusion(S, tol, ring.names()) == ring))
    throw GenerationError("su2_data: Verlinde fusion differs from the truncated Clebsch-Gordan rule");
  return {std::move(sk), modular_from(ring, std::move(S), std::move(h), c)};
}

template <typename Real>
FamilyData<Real> ising_data(const Tolerance& tol) {
  // 0 = 1, 1 = sigma, 2 = psi
  std::vector<int> mult(27, 0);
  auto set = [&](int a, int b, int c) { mult[(a * 3 + b) * 3 + c] = 1; };
  set(0, 0, 0), set(0, 1, 1), set(0, 2, 2), set(1, 0, 1), set(2, 0, 2);
  set(1, 1, 0), set(1, 1, 2), set(1, 2, 1), set(2, 1, 1), set(2, 2, 0);
  FusionRing ring({"1", "sigma", "psi"}, {0, 1, 2}, mult);
  SkeletalData<Real> sk(ring);
  const Real s = 1 / std::sqrt(Real(2));
  for (const auto& key : sk.block_keys()) {
    const auto [a, b, c, d] = key;
    const auto& blk = sk.block(a, b, c, d);
    Matrix<Real> m(blk.rows.size(), blk.cols.size());
    if (key == std::array<Label, 4>{1, 1, 1, 1}) {
      m = Matrix<Real>{{s, s}, {s, -s}};
    } else {
      const bool minus = key == std::array<Label, 4>{1, 2, 1, 2} || key == std::array<Label, 4>{2, 1, 2, 1};
      m(0, 0) = minus ? -1 : 1;
    }
    sk.set_block(a, b, c, d, std::move(m));
  }
  const Real pi = std::numbers::pi_v<Real>;
  for (int a = 0; a < 3; ++a)
    for (int c : ring.channels(0, a)) sk.set_R(0, a, c, 1), sk.set_R(a, 0, c, 1);
  sk.set_R(1, 1, 0, std::polar<Real>(1, -pi / 8));
  sk.set_R(1, 1, 2, std::polar<Real>(1, 3 * pi / 8));
  sk.set_R(1, 2, 1, Complex<Real>(0, -1));
  sk.set_R(2, 1, 1, Complex<Real>(0, -1));
  sk.set_R(2, 2, 0, -1);
  self_check(sk, tol, "ising_data");

  const Real r2 = std::sqrt(Real(2));
  Matrix<Real> S{{1, r2, 1}, {r2, 0, -r2}, {1, -r2, 1}};
  S *= Complex<Real>(Real(0.5));
  return {std::move(sk), modular_from(ring, std::move(S), std::vector<Real>{0, Real(1) / 16, Real(1) / 2}, Real(1) / 2)};
}

#define MTCFORGE_INSTANTIATE(R)                                                 \
  template MinimalModel<R> minimal_model(int, const Tolerance&);              \
  template R q_number<R>(int, int);                                            \
  template R q6j<R>(int, int, int, int, int, int, int);                        \
  template Complex<R> su2_r_symbol<R>(int, int, int, int);                     \
  template FamilyData<R> su2_data(int, const Tolerance&);                      \
  template FamilyData<R> ising_data(const Tolerance&);

MTCFORGE_INSTANTIATE(double)
MTCFORGE_INSTANTIATE(long double)

}  // namespace mtcforge
