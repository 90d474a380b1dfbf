#include "mtcforge/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "mtcforge/transport.hpp"

namespace mtcforge {

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> v{Suite::ring,      Suite::modular,  Suite::pentagon, Suite::hexagon,
                                    Suite::braid,     Suite::transport, Suite::rigidity, Suite::twist,
                                    Suite::reflection, Suite::fullfield};
  return v;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::ring: return "ring";
    case Suite::modular: return "modular";
    case Suite::pentagon: return "pentagon";
    case Suite::hexagon: return "hexagon";
    case Suite::braid: return "braid";
    case Suite::transport: return "transport";
    case Suite::rigidity: return "rigidity";
    case Suite::twist: return "twist";
    case Suite::reflection: return "reflection";
    case Suite::fullfield: return "fullfield";
  }
  return "ring";
}

std::vector<Suite> parse_suite(const std::string& name) {
  if (name == "all") return all_suites();
  for (Suite s : all_suites())
    if (name == suite_name(s)) return {s};
  throw DomainError("unknown suite '" + name + "'");
}

namespace {

template <typename Real>
VerificationReport run(const Catalog& c, const VerifyOptions& opt, Precision precision) {
  VerificationReport rep;
  rep.catalog_name = c.name;
  rep.content_hash = content_hash(c);
  rep.tol = opt.tol;
  rep.precision = precision;

  std::optional<ModularData<Real>> md;
  std::optional<SkeletalData<Real>> sk;
  if (c.modular) md = c.modular->template cast<Real>();
  if (c.skeletal) sk = c.skeletal->template cast<Real>();
  const auto& tol = opt.tol;
  const unsigned jobs = opt.jobs;

  auto section = [&](Suite s, bool available, const std::function<Section()>& body) {
    Section sec;
    sec.name = suite_name(s);
    if (!available) {
      sec.status = Status::skipped;
      rep.sections.push_back(std::move(sec));
      return;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      sec = body();
    } catch (const std::exception& e) {
      sec.name = suite_name(s);
      sec.error = e.what();
    }
    sec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    sec.finalize();
    rep.sections.push_back(std::move(sec));
  };

  for (Suite s : all_suites()) {
    if (std::find(opt.suites.begin(), opt.suites.end(), s) == opt.suites.end()) continue;
    switch (s) {
      case Suite::ring:
        section(s, true, [&] { return verify_ring(c.ring, tol); });
        break;
      case Suite::modular:
        section(s, md.has_value(), [&] { return verify_modular(*md, tol); });
        break;
      case Suite::pentagon:
        section(s, sk.has_value(), [&] { return verify_pentagon(*sk, tol, jobs); });
        break;
      case Suite::hexagon:
        section(s, sk.has_value(), [&] { return verify_hexagon(*sk, tol, jobs); });
        break;
      case Suite::braid:
        section(s, sk.has_value(), [&] { return verify_braid_relations(*sk, tol, jobs); });
        break;
      case Suite::transport:
        section(s, sk.has_value(), [&] { return verify_transport(*sk, tol, jobs); });
        break;
      case Suite::rigidity:
        section(s, sk.has_value(), [&] { return verify_rigidity_all(*sk, tol, md ? &*md : nullptr); });
        break;
      case Suite::twist:
        section(s, sk.has_value() && md.has_value(), [&] { return verify_twist_compat(*sk, *md, tol); });
        break;
      case Suite::reflection:
        section(s, sk.has_value(), [&] { return reflection_positivity_check(*sk, tol); });
        break;
      case Suite::fullfield:
        section(s, sk.has_value(), [&] { return verify_full_field(*sk, tol); });
        break;
    }
  }
  return rep;
}

}  // namespace

VerificationReport verify_catalog(const Catalog& c, const VerifyOptions& opt) {
  validate_tolerance(opt.tol);
  const Precision p = opt.precision.value_or(c.precision);
  return p == Precision::extended ? run<long double>(c, opt, p) : run<double>(c, opt, p);
}

}  // namespace mtcforge
