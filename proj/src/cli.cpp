#include "mtcforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mtcforge/suite.hpp"

namespace mtcforge {

namespace {

bool write_output(const std::string& path, const std::string& bytes, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << bytes;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << bytes)) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("MTC_FORGE_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and verify modular tensor category catalogs", "mtc-forge"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a family catalog");
  gen->require_subcommand(1);
  gen->fallthrough();
  std::string out_path;
  gen->add_option("--out", out_path, "output file (default stdout)");
  int level = 0, m = 0;
  auto* g_su2 = gen->add_subcommand("su2", "SU(2)_k with F and R data");
  g_su2->add_option("--level", level, "level k >= 1")->required();
  auto* g_min = gen->add_subcommand("minimal", "Virasoro minimal model M(m, m+1), modular data only");
  g_min->add_option("--m", m, "m >= 2")->required();
  auto* g_triv = gen->add_subcommand("trivial", "the trivial category");
  auto* g_ising = gen->add_subcommand("ising", "the Ising category");
  for (auto* s : {g_su2, g_min, g_triv, g_ising}) s->fallthrough();

  auto* ver = app.add_subcommand("verify", "run verification suites on a catalog");
  std::string catalog_path;
  ver->add_option("path", catalog_path, "catalog JSON")->required();
  std::vector<std::string> suites;
  ver->add_option("--suite", suites, "suite name or 'all' (repeatable)");
  std::optional<double> tol_eps;
  ver->add_option("--tol", tol_eps, "absolute and relative epsilon (> 0)");
  std::string precision;
  ver->add_option("--precision", precision, "double or extended")->check(CLI::IsMember({"double", "extended"}));
  unsigned jobs = default_jobs();
  ver->add_option("--jobs", jobs, "worker threads, 0 = auto (default $MTC_FORGE_JOBS)");
  std::string format = "text";
  ver->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (gen->parsed()) {
    Catalog c;
    try {
      if (g_su2->parsed()) {
        if (level < 1) throw DomainError("--level must be >= 1");
        c = catalog_su2(level);
      } else if (g_min->parsed()) {
        if (m < 2) throw DomainError("--m must be >= 2");
        c = catalog_minimal(m);
      } else if (g_triv->parsed()) {
        c = catalog_trivial();
      } else {
        c = catalog_ising();
      }
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "generation failed: " << e.what() << "\n";
      return kExitFail;
    }
    return write_output(out_path, save_catalog(c), out, err) ? kExitOk : kExitUsage;
  }

  VerifyOptions opt;
  try {
    if (!suites.empty()) {
      opt.suites.clear();
      for (const auto& s : suites)
        for (Suite x : parse_suite(s))
          if (std::find(opt.suites.begin(), opt.suites.end(), x) == opt.suites.end()) opt.suites.push_back(x);
    }
    if (tol_eps) {
      if (!(*tol_eps > 0)) throw DomainError("--tol must be > 0");
      opt.tol = {*tol_eps, *tol_eps};
    }
    if (!precision.empty()) opt.precision = parse_precision(precision);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  opt.jobs = jobs;

  Catalog c;
  try {
    c = load_catalog_file(catalog_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto report = verify_catalog(c, opt);
  const auto bytes = emit_report(report, format == "json" ? ReportFormat::json : ReportFormat::text);
  if (!write_output(out_path, bytes, out, err)) return kExitUsage;
  for (const auto& s : report.sections)
    if (s.status == Status::fail) {
      err << "FAIL " << s.name;
      for (const auto& ck : s.checks)
        if (!ck.pass) {
          err << "  " << ck.name << " residual " << ck.residual;
          if (!ck.worst.empty()) {
            err << " worst (";
            for (std::size_t i = 0; i < ck.worst.size(); ++i) err << (i ? "," : "") << ck.worst[i];
            err << ")";
          }
        }
      if (!s.error.empty()) err << "  " << s.error;
      err << "\n";
    }
  return report.overall() ? kExitOk : kExitFail;
}

}  // namespace mtcforge
