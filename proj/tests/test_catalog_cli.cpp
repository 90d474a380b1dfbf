#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mtcforge/catalog.hpp"
#include "mtcforge/cli.hpp"
#include "mtcforge/suite.hpp"
#include "support.hpp"

using namespace mtcforge;

namespace {

std::string fixture(const std::string& name) { return std::string(MTC_FIXTURE_DIR) + "/" + name; }
std::string scratch(const std::string& name) { return std::string(MTC_BUILD_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bundled fixtures load and equal the generators") {
  const auto ising = load_catalog_file(fixture("ising.json"));
  CHECK(ising.ring.size() == 3);
  CHECK(ising.ring.names() == std::vector<std::string>{"1", "sigma", "psi"});
  CHECK(ising == catalog_ising());
  CHECK(load_catalog_file(fixture("trivial.json")) == catalog_trivial());
  CHECK(slurp(fixture("ising.json")) == save_catalog(catalog_ising()));
}

TEST_CASE("save then load is the identity") {
  for (const auto& c : {catalog_trivial(), catalog_ising(), catalog_su2(2), catalog_su2(5), catalog_minimal(4)}) {
    const auto bytes = save_catalog(c);
    const auto back = load_catalog(bytes);
    CHECK(back == c);
    CHECK(save_catalog(back) == bytes);
    CHECK(content_hash(back) == content_hash(c));
  }
}

TEST_CASE("distinct catalogs serialize differently") {
  std::vector<std::string> seen;
  for (int k = 1; k <= 4; ++k) seen.push_back(save_catalog(catalog_su2(k)));
  seen.push_back(save_catalog(perturb::negate_f_entry(catalog_su2(2))));
  seen.push_back(save_catalog(perturb::unit_twist(catalog_ising(), 1)));
  seen.push_back(save_catalog(catalog_ising()));
  for (std::size_t a = 0; a < seen.size(); ++a)
    for (std::size_t b = a + 1; b < seen.size(); ++b) CHECK(seen[a] != seen[b]);
}

TEST_CASE("sha256 of known input") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(content_hash(catalog_ising()).size() == 64);
}

TEST_CASE("save refuses non-finite values") {
  auto c = catalog_su2(2);
  c.modular->S(0, 0) = std::nan("");
  CHECK_THROWS_AS(save_catalog(c), FinitenessError);
  auto d = catalog_ising();
  d.skeletal->set_R(1, 1, 0, {INFINITY, 0});
  CHECK_THROWS_AS(save_catalog(d), FinitenessError);
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(load_catalog(""), ParseError);
  CHECK_THROWS_AS(load_catalog("{"), ParseError);
  CHECK_THROWS_AS(load_catalog("[]"), ParseError);

  auto j = nlohmann::json::parse(slurp(fixture("ising.json")));
  auto bad = j;
  bad["ring"]["labels"] = 3;
  try {
    load_catalog(bad.dump());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.path() == "$.ring.labels");
  }

  bad = j;
  for (auto& t : bad["ring"]["fusion"])
    if (t[0] == 1 && t[1] == 1 && t[2] == 0) t[3] = 2;
  try {
    load_catalog(bad.dump());
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "vacuum channel multiplicity");
  }

  bad = j;
  bad["skeletal"]["ev_norms"][1] = -1.0;
  CHECK_THROWS_AS(load_catalog(bad.dump()), ValidationError);

  bad = j;
  bad["schema_version"] = "99";
  CHECK_THROWS_AS(load_catalog(bad.dump()), ParseError);

  CHECK_THROWS_AS(load_catalog_file(scratch("does_not_exist.json")), Error);
}

TEST_CASE("report JSON round trip and text contract") {
  VerifyOptions opt;
  const auto rep = verify_catalog(catalog_ising(), opt);
  CHECK(rep.overall());
  const auto j = report_to_json(rep);
  CHECK_FALSE(j.dump().find("wall") != std::string::npos);
  const auto back = report_from_json(j);
  CHECK(report_to_json(back) == j);
  CHECK(emit_report(rep, ReportFormat::text).find("OVERALL: PASS") != std::string::npos);

  const auto bad = verify_catalog(perturb::negate_f_entry(catalog_su2(2)), opt);
  CHECK_FALSE(bad.overall());
  const auto text = emit_report(bad, ReportFormat::text);
  CHECK(text.find("OVERALL: FAIL") != std::string::npos);
  CHECK(text.find("worst (") != std::string::npos);
}

TEST_CASE("suites without inputs are skipped") {
  const auto rep = verify_catalog(catalog_minimal(4), {});
  CHECK(rep.overall());
  CHECK(rep.find("modular")->status == Status::pass);
  CHECK(rep.find("pentagon")->status == Status::skipped);
  CHECK(rep.find("twist")->status == Status::skipped);
}

TEST_CASE("extended precision verification") {
  VerifyOptions opt;
  opt.precision = Precision::extended;
  opt.tol = {1e-12, 1e-12};
  const auto rep = verify_catalog(catalog_su2(3), opt);
  CHECK(rep.precision == Precision::extended);
  CHECK(rep.overall());
}

TEST_CASE("negative controls fail their own suite first") {
  struct Case {
    Catalog cat;
    std::string target;
  };
  const auto ising = catalog_ising();
  for (const auto& [cat, target] :
       {Case{perturb::negate_f_entry(catalog_su2(2)), "pentagon"}, Case{perturb::conjugate_r(catalog_su2(3)), "hexagon"},
        Case{perturb::corrupt_fusion(ising, 1, 1, 2, 0), "ring"}, Case{perturb::unit_twist(ising, 1), "twist"}}) {
    const auto rep = verify_catalog(cat, {});
    for (const auto& s : rep.sections) {
      if (s.name == target) {
        CHECK(s.status == Status::fail);
        break;
      }
      CHECK_MESSAGE(s.status == Status::pass, target << " control: " << s.name);
    }
  }
  // The twist perturbation leaves every other suite green.
  const auto rep = verify_catalog(perturb::unit_twist(ising, 1), {});
  for (const auto& s : rep.sections) CHECK((s.name == "twist") == (s.status == Status::fail));
}

TEST_CASE("cli generate and verify") {
  const auto path = scratch("su2_2.json");
  auto r = cli({"generate", "su2", "--level", "2", "--out", path});
  CHECK(r.code == 0);
  CHECK(load_catalog_file(path) == catalog_su2(2));

  r = cli({"verify", path, "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("OVERALL: PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = cli({"verify", path, "--suite", "ring", "--suite", "pentagon", "--format", "json", "--jobs", "3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sections"].size() == 2);

  const auto bad = scratch("corrupted.json");
  std::ofstream(bad) << save_catalog(perturb::negate_f_entry(catalog_su2(2)));
  r = cli({"verify", bad, "--suite", "pentagon"});
  CHECK(r.code == 1);
  CHECK(r.err.find("FAIL pentagon") != std::string::npos);
  CHECK(r.err.find("worst (") != std::string::npos);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"verify", fixture("ising.json"), "--bogus"}).code == 2);
  CHECK(cli({"verify", fixture("ising.json"), "--suite", "nope"}).code == 2);
  CHECK(cli({"verify", fixture("ising.json"), "--tol", "-1"}).code == 2);
  CHECK(cli({"verify", fixture("ising.json"), "--precision", "quad"}).code == 2);
  CHECK(cli({"verify", scratch("missing.json")}).code == 2);
  CHECK(cli({"generate", "su2", "--level", "0"}).code == 2);
  CHECK(cli({"generate", "minimal", "--m", "1"}).code == 2);
  const auto h = cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("generate") != std::string::npos);
}

TEST_CASE("cli writes the catalog to stdout without --out") {
  const auto r = cli({"generate", "trivial"});
  CHECK(r.code == 0);
  CHECK(r.out == save_catalog(catalog_trivial()));
}
