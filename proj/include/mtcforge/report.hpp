#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "mtcforge/algebra.hpp"

namespace mtcforge {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);
Status parse_status(const std::string& s);

// Largest residual seen so far; ties go to the lexicographically smallest tuple
// so that any partition of the work reduces to the same answer.
struct Worst {
  double residual = 0.0;
  std::vector<int> tuple;

  void absorb(double r, const std::vector<int>& t) {
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    if (tuple.empty() || r > residual || (r == residual && t < tuple)) {
      residual = r;
      tuple = t;
    }
  }
  void merge(const Worst& o) {
    if (!o.tuple.empty()) absorb(o.residual, o.tuple);
  }
};

struct Check {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = true;
  std::vector<int> worst;  // empty when nothing was enumerated
  std::string note;

  friend bool operator==(const Check&, const Check&) = default;
};

Check make_check(std::string name, double residual, double threshold, std::vector<int> worst = {},
                 std::string note = {});
Check make_check(std::string name, const Worst& w, double threshold, std::string note = {});
// A boolean condition reported as a check with residual 0 or 1.
Check make_flag(std::string name, bool ok, std::string note = {});

struct Section {
  std::string name;
  Status status = Status::pass;
  std::vector<Check> checks;
  nlohmann::json details = nlohmann::json::object();
  std::string error;       // set when the section aborted with an exception
  double wall_ms = 0.0;    // text reports only

  void add(Check c) { checks.push_back(std::move(c)); }
  // Status from the checks: FAIL if any check fails or an error was recorded.
  void finalize();
  bool passed() const { return status != Status::fail; }
};

struct VerificationReport {
  std::string catalog_name;
  std::string content_hash;
  Tolerance tol;
  Precision precision = Precision::standard;
  std::vector<Section> sections;

  // AND over sections; skipped sections are neutral.
  bool overall() const;
  const Section* find(const std::string& name) const;
};

}  // namespace mtcforge
