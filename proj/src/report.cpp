#include "mtcforge/report.hpp"

namespace mtcforge {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
  }
  return "FAIL";
}

Status parse_status(const std::string& s) {
  if (s == "PASS") return Status::pass;
  if (s == "FAIL") return Status::fail;
  if (s == "SKIPPED") return Status::skipped;
  throw DomainError("unknown status '" + s + "'");
}

Check make_check(std::string name, double residual, double threshold, std::vector<int> worst,
                 std::string note) {
  Check c;
  c.name = std::move(name);
  c.residual = std::isnan(residual) ? std::numeric_limits<double>::infinity() : residual;
  c.threshold = threshold;
  c.pass = c.residual <= threshold;
  c.worst = std::move(worst);
  c.note = std::move(note);
  return c;
}

Check make_check(std::string name, const Worst& w, double threshold, std::string note) {
  return make_check(std::move(name), w.residual, threshold, w.tuple, std::move(note));
}

Check make_flag(std::string name, bool ok, std::string note) {
  return make_check(std::move(name), ok ? 0.0 : 1.0, 0.5, {}, std::move(note));
}

void Section::finalize() {
  if (status == Status::skipped) return;
  bool ok = error.empty();
  for (const auto& c : checks) ok = ok && c.pass;
  status = ok ? Status::pass : Status::fail;
}

bool VerificationReport::overall() const {
  for (const auto& s : sections)
    if (s.status == Status::fail) return false;
  return true;
}

const Section* VerificationReport::find(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace mtcforge
