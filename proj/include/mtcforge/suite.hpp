#pragma once

#include <string>
#include <vector>

#include "mtcforge/catalog.hpp"

namespace mtcforge {

enum class Suite { ring, modular, pentagon, hexagon, braid, transport, rigidity, twist, reflection, fullfield };

const std::vector<Suite>& all_suites();
const char* suite_name(Suite s);
// Accepts a suite name or "all".
std::vector<Suite> parse_suite(const std::string& name);

struct VerifyOptions {
  std::vector<Suite> suites = all_suites();
  Tolerance tol;
  // Overrides the catalog's precision when set.
  std::optional<Precision> precision;
  unsigned jobs = 1;
};

// Runs the requested suites in canonical order. Suites whose inputs are absent
// are SKIPPED; a suite that throws is reported as FAIL with the error text.
VerificationReport verify_catalog(const Catalog& c, const VerifyOptions& opt);

}  // namespace mtcforge
