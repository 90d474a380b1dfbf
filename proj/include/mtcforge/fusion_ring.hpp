#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mtcforge/algebra.hpp"
#include "mtcforge/report.hpp"

namespace mtcforge {

// Dense label id; 0 is the unit object.
using Label = int;

class FusionRing {
 public:
  FusionRing() = default;
  // n = names.size(); mult is the flat tensor with mult[(i*n + j)*n + k] = N^k_{ij}.
  // Only shapes and ranges are checked here; see validate_structure().
  FusionRing(std::vector<std::string> names, std::vector<Label> dual, std::vector<int> mult);

  static FusionRing trivial();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Label i) const;
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Label>& duals() const { return dual_; }
  const std::vector<int>& multiplicities() const { return mult_; }

  Label dual(Label i) const;
  int N(Label i, Label j, Label k) const {
    return mult_[(static_cast<std::size_t>(i) * size() + j) * size() + k];
  }
  bool admissible(Label i, Label j, Label k) const { return N(i, j, k) > 0; }
  // Labels k with N^k_{ij} > 0, ascending.
  std::vector<Label> channels(Label i, Label j) const;
  bool multiplicity_free() const;
  bool valid(Label i) const { return i >= 0 && i < size(); }
  void require(Label i) const;

  // Copy with one multiplicity replaced (used to build perturbed catalogs).
  FusionRing with_multiplicity(Label i, Label j, Label k, int value) const;

  // Throws ValidationError naming the invariant: duality involution, unit law,
  // vacuum channel multiplicity.
  void validate_structure() const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Label> dual_;
  std::vector<int> mult_;
};

// Exact decomposition of i x j as (k, N^k_{ij}) pairs.
std::vector<std::pair<Label, int>> fuse(const FusionRing& ring, Label i, Label j);

Section verify_ring(const FusionRing& ring, const Tolerance& tol);

}  // namespace mtcforge
