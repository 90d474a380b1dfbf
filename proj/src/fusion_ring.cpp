#include "mtcforge/fusion_ring.hpp"

#include <cstdlib>

namespace mtcforge {

FusionRing::FusionRing(std::vector<std::string> names, std::vector<Label> dual, std::vector<int> mult)
    : names_(std::move(names)), dual_(std::move(dual)), mult_(std::move(mult)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DimensionError("fusion ring needs at least the unit label");
  if (dual_.size() != n) throw DimensionError("dual table length differs from label count");
  if (mult_.size() != n * n * n) throw DimensionError("fusion tensor must have n^3 entries");
  for (Label d : dual_)
    if (d < 0 || d >= static_cast<Label>(n)) throw DomainError("dual maps outside the label set");
  for (int m : mult_)
    if (m < 0) throw DomainError("negative fusion multiplicity");
}

FusionRing FusionRing::trivial() { return FusionRing({"0"}, {0}, {1}); }

const std::string& FusionRing::name(Label i) const {
  require(i);
  return names_[i];
}

Label FusionRing::dual(Label i) const {
  require(i);
  return dual_[i];
}

void FusionRing::require(Label i) const {
  if (!valid(i))
    throw DomainError("label " + std::to_string(i) + " outside 0.." + std::to_string(size() - 1));
}

std::vector<Label> FusionRing::channels(Label i, Label j) const {
  std::vector<Label> out;
  for (Label k = 0; k < size(); ++k)
    if (N(i, j, k) > 0) out.push_back(k);
  return out;
}

bool FusionRing::multiplicity_free() const {
  for (int m : mult_)
    if (m > 1) return false;
  return true;
}

FusionRing FusionRing::with_multiplicity(Label i, Label j, Label k, int value) const {
  require(i);
  require(j);
  require(k);
  FusionRing r = *this;
  r.mult_[(static_cast<std::size_t>(i) * size() + j) * size() + k] = value;
  return r;
}

void FusionRing::validate_structure() const {
  const int n = size();
  if (dual_[0] != 0) throw ValidationError("duality", "dual(0) must be 0");
  for (Label i = 0; i < n; ++i)
    if (dual_[dual_[i]] != i)
      throw ValidationError("duality", "dual is not an involution at label " + std::to_string(i));
  for (Label j = 0; j < n; ++j)
    for (Label k = 0; k < n; ++k) {
      const int want = j == k ? 1 : 0;
      if (N(0, j, k) != want || N(j, 0, k) != want)
        throw ValidationError("unit law", "N^" + std::to_string(k) + "_{0," + std::to_string(j) +
                                              "} differs from the identity");
    }
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j) {
      const int want = j == dual_[i] ? 1 : 0;
      if (N(i, j, 0) != want)
        throw ValidationError("vacuum channel multiplicity",
                              "N^0_{" + std::to_string(i) + "," + std::to_string(j) + "} = " +
                                  std::to_string(N(i, j, 0)) + ", expected " + std::to_string(want));
    }
}

std::vector<std::pair<Label, int>> fuse(const FusionRing& ring, Label i, Label j) {
  ring.require(i);
  ring.require(j);
  std::vector<std::pair<Label, int>> out;
  for (Label k = 0; k < ring.size(); ++k)
    if (int m = ring.N(i, j, k); m > 0) out.emplace_back(k, m);
  return out;
}

Section verify_ring(const FusionRing& ring, const Tolerance&) {
  Section sec;
  sec.name = "ring";
  const int n = ring.size();

  Worst unit, duality, vacuum, assoc, frob, comm;
  duality.absorb(ring.dual(0) == 0 ? 0.0 : 1.0, {0});
  for (Label i = 0; i < n; ++i) duality.absorb(ring.dual(ring.dual(i)) == i ? 0.0 : 1.0, {i});
  for (Label j = 0; j < n; ++j)
    for (Label k = 0; k < n; ++k) {
      const int d = j == k ? 1 : 0;
      unit.absorb(std::abs(ring.N(0, j, k) - d) + std::abs(ring.N(j, 0, k) - d), {j, k});
    }
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j)
      vacuum.absorb(std::abs(ring.N(i, j, 0) - (j == ring.dual(i) ? 1 : 0)), {i, j});
  for (Label i = 0; i < n; ++i)
    for (Label j = 0; j < n; ++j)
      for (Label k = 0; k < n; ++k) {
        frob.absorb(std::abs(ring.N(i, j, k) - ring.N(ring.dual(j), ring.dual(i), ring.dual(k))),
                    {i, j, k});
        comm.absorb(std::abs(ring.N(i, j, k) - ring.N(j, i, k)), {i, j, k});
        for (Label l = 0; l < n; ++l) {
          long lhs = 0, rhs = 0;
          for (Label s = 0; s < n; ++s) {
            lhs += static_cast<long>(ring.N(i, j, s)) * ring.N(s, k, l);
            rhs += static_cast<long>(ring.N(i, s, l)) * ring.N(j, k, s);
          }
          assoc.absorb(static_cast<double>(std::labs(lhs - rhs)), {i, j, k, l});
        }
      }
  // Integer identities: any nonzero discrepancy fails.
  sec.add(make_check("unit_law", unit, 0.0));
  sec.add(make_check("duality_involution", duality, 0.0));
  sec.add(make_check("vacuum_channel", vacuum, 0.0));
  sec.add(make_check("associativity", assoc, 0.0));
  sec.add(make_check("frobenius", frob, 0.0));
  sec.add(make_check("commutativity", comm, 0.0));
  sec.details["labels"] = n;
  sec.details["multiplicity_free"] = ring.multiplicity_free();
  sec.finalize();
  return sec;
}

}  // namespace mtcforge
