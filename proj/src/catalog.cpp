#include "mtcforge/catalog.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace mtcforge {

using nlohmann::json;

namespace {

// A JSON value together with its path, for error messages.
struct Node {
  const json& j;
  std::string path;

  Node at(const std::string& key) const {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing field");
    return {*it, path + "." + key};
  }
  std::optional<Node> maybe(const std::string& key) const {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return Node{*it, path + "." + key};
  }
  Node at(std::size_t i) const { return {j.at(i), path + "[" + std::to_string(i) + "]"}; }
  std::size_t array_size() const {
    if (!j.is_array()) throw ParseError(path, "expected an array");
    return j.size();
  }
  std::size_t array_size(std::size_t want) const {
    const auto n = array_size();
    if (n != want) throw ParseError(path, "expected " + std::to_string(want) + " elements, found " + std::to_string(n));
    return n;
  }
  double number() const {
    if (!j.is_number()) throw ParseError(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(path, "non-finite number");
    return v;
  }
  int integer() const {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<int>();
  }
  std::string string() const {
    if (!j.is_string()) throw ParseError(path, "expected a string");
    return j.get<std::string>();
  }
  Complex<double> complex() const {
    array_size(2);
    return {at(std::size_t{0}).number(), at(std::size_t{1}).number()};
  }
  Matrix<double> matrix(std::size_t rows, std::size_t cols) const {
    array_size(rows);
    Matrix<double> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const auto row = at(r);
      row.array_size(cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row.at(c).complex();
    }
    return m;
  }
};

void require_finite(double v, const std::string& where) {
  if (!std::isfinite(v)) throw FinitenessError("non-finite value in " + where);
}

json complex_json(Complex<double> v, const std::string& where) {
  require_finite(v.real(), where);
  require_finite(v.imag(), where);
  return json::array({v.real(), v.imag()});
}

json matrix_json(const Matrix<double>& m, const std::string& where) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c), where));
    rows.push_back(std::move(row));
  }
  return rows;
}

FusionRing parse_ring(const Node& node) {
  const auto labels = node.at("labels");
  const std::size_t n = labels.array_size();
  if (n == 0) throw ParseError(labels.path, "at least one label required");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(labels.at(i).string());
  const auto dual_node = node.at("dual");
  dual_node.array_size(n);
  std::vector<Label> dual;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = dual_node.at(i).integer();
    if (d < 0 || d >= static_cast<int>(n)) throw ParseError(dual_node.at(i).path, "label id out of range");
    dual.push_back(d);
  }
  std::vector<int> mult(n * n * n, 0);
  const auto fusion = node.at("fusion");
  for (std::size_t e = 0; e < fusion.array_size(); ++e) {
    const auto entry = fusion.at(e);
    entry.array_size(4);
    int v[4];
    for (std::size_t t = 0; t < 4; ++t) v[t] = entry.at(t).integer();
    for (std::size_t t = 0; t < 3; ++t)
      if (v[t] < 0 || v[t] >= static_cast<int>(n)) throw ParseError(entry.at(t).path, "label id out of range");
    if (v[3] <= 0) throw ParseError(entry.at(std::size_t{3}).path, "listed multiplicities must be positive");
    auto& slot = mult[(static_cast<std::size_t>(v[0]) * n + v[1]) * n + v[2]];
    if (slot != 0) throw ParseError(entry.path, "duplicate fusion entry");
    slot = v[3];
  }
  FusionRing ring(names, dual, mult);
  ring.validate_structure();
  return ring;
}

json ring_json(const FusionRing& ring) {
  json fusion = json::array();
  const int n = ring.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (int m = ring.N(i, j, k)) fusion.push_back({i, j, k, m});
  return {{"labels", ring.names()}, {"dual", ring.duals()}, {"fusion", std::move(fusion)}};
}

ModularData<double> parse_modular(const Node& node, const FusionRing& ring) {
  const std::size_t n = ring.size();
  ModularData<double> md;
  md.ring = ring;
  md.S = node.at("S").matrix(n, n);
  md.T = node.at("T").matrix(n, n);
  const auto d = node.at("d");
  d.array_size(n);
  for (std::size_t i = 0; i < n; ++i) md.d.push_back(d.at(i).number());
  const auto th = node.at("theta");
  th.array_size(n);
  for (std::size_t i = 0; i < n; ++i) md.theta.push_back(th.at(i).complex());
  md.central_charge = node.at("central_charge").number();
  if (auto w = node.maybe("weights")) {
    w->array_size(n);
    for (std::size_t i = 0; i < n; ++i) md.weights.push_back(w->at(i).number());
  }
  return md;
}

json modular_json(const ModularData<double>& md) {
  json theta = json::array();
  for (auto t : md.theta) theta.push_back(complex_json(t, "modular.theta"));
  for (double x : md.d) require_finite(x, "modular.d");
  for (double x : md.weights) require_finite(x, "modular.weights");
  require_finite(md.central_charge, "modular.central_charge");
  json out = {{"S", matrix_json(md.S, "modular.S")},
              {"T", matrix_json(md.T, "modular.T")},
              {"d", md.d},
              {"theta", std::move(theta)},
              {"central_charge", md.central_charge}};
  if (!md.weights.empty()) out["weights"] = md.weights;
  return out;
}

SkeletalData<double> parse_skeletal(const Node& node, const FusionRing& ring) {
  SkeletalData<double> sk(ring);
  const int n = ring.size();
  std::vector<char> seen(static_cast<std::size_t>(n) * n * n * n, 0);
  const auto fs = node.at("F");
  for (std::size_t e = 0; e < fs.array_size(); ++e) {
    const auto entry = fs.at(e);
    const auto lab = entry.at("labels");
    lab.array_size(4);
    int v[4];
    for (std::size_t t = 0; t < 4; ++t) {
      v[t] = lab.at(t).integer();
      if (v[t] < 0 || v[t] >= n) throw ParseError(lab.at(t).path, "label id out of range");
    }
    const auto& blk = sk.block(v[0], v[1], v[2], v[3]);
    auto read_list = [](const Node& l) {
      std::vector<Label> out;
      for (std::size_t t = 0; t < l.array_size(); ++t) out.push_back(l.at(t).integer());
      return out;
    };
    if (read_list(entry.at("rows")) != blk.rows || read_list(entry.at("cols")) != blk.cols)
      throw ValidationError("F-block shape", "channels of block at " + entry.path +
                                                 " differ from the admissible channels of the ring");
    auto& flag = seen[((static_cast<std::size_t>(v[0]) * n + v[1]) * n + v[2]) * n + v[3]];
    if (flag) throw ParseError(entry.path, "duplicate F-block");
    flag = 1;
    sk.set_block(v[0], v[1], v[2], v[3], entry.at("matrix").matrix(blk.rows.size(), blk.cols.size()));
  }
  for (const auto& key : sk.block_keys())
    if (!seen[((static_cast<std::size_t>(key[0]) * n + key[1]) * n + key[2]) * n + key[3]])
      throw ValidationError("F-block coverage", "missing F-block (" + std::to_string(key[0]) + "," +
                                                    std::to_string(key[1]) + "," + std::to_string(key[2]) + ";" +
                                                    std::to_string(key[3]) + ")");
  std::vector<char> rseen(static_cast<std::size_t>(n) * n * n, 0);
  const auto rs = node.at("R");
  for (std::size_t e = 0; e < rs.array_size(); ++e) {
    const auto entry = rs.at(e);
    const auto lab = entry.at("labels");
    lab.array_size(3);
    int v[3];
    for (std::size_t t = 0; t < 3; ++t) {
      v[t] = lab.at(t).integer();
      if (v[t] < 0 || v[t] >= n) throw ParseError(lab.at(t).path, "label id out of range");
    }
    if (!ring.admissible(v[0], v[1], v[2]))
      throw ValidationError("R-symbol channel", "R-symbol at " + entry.path + " on an inadmissible channel");
    auto& flag = rseen[(static_cast<std::size_t>(v[0]) * n + v[1]) * n + v[2]];
    if (flag) throw ParseError(entry.path, "duplicate R-symbol");
    flag = 1;
    sk.set_R(v[0], v[1], v[2], entry.at("value").complex());
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : ring.channels(a, b))
        if (!rseen[(static_cast<std::size_t>(a) * n + b) * n + c])
          throw ValidationError("R-symbol coverage", "missing R^{" + std::to_string(a) + "," + std::to_string(b) +
                                                         "}_" + std::to_string(c));
  const auto mu = node.at("ev_norms");
  mu.array_size(n);
  for (int i = 0; i < n; ++i) {
    const double v = mu.at(i).number();
    if (!(v > 0)) throw ValidationError("ev norm positivity", "ev_norms[" + std::to_string(i) + "] must be > 0");
    sk.set_mu(i, v);
  }
  return sk;
}

json skeletal_json(const SkeletalData<double>& sk) {
  json fs = json::array();
  for (const auto& key : sk.block_keys()) {
    const auto& blk = sk.block(key[0], key[1], key[2], key[3]);
    fs.push_back({{"labels", key}, {"rows", blk.rows}, {"cols", blk.cols}, {"matrix", matrix_json(blk.m, "skeletal.F")}});
  }
  json rs = json::array();
  const int n = sk.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : sk.ring().channels(a, b))
        rs.push_back({{"labels", {a, b, c}}, {"value", complex_json(sk.R(a, b, c), "skeletal.R")}});
  for (double m : sk.ev_norms()) require_finite(m, "skeletal.ev_norms");
  return {{"F", std::move(fs)}, {"R", std::move(rs)}, {"ev_norms", sk.ev_norms()}};
}

}  // namespace

Catalog load_catalog(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError("$", e.what());
  }
  const Node root{doc, "$"};
  if (!doc.is_object()) throw ParseError("$", "expected an object");
  const auto version = root.at("schema_version").string();
  if (version != kSchemaVersion) throw ParseError("$.schema_version", "unsupported schema version '" + version + "'");
  Catalog c;
  c.name = root.at("name").string();
  const auto gen = root.at("generator");
  c.generator.family = gen.at("family").string();
  if (auto p = gen.maybe("params")) {
    if (!p->j.is_object()) throw ParseError(p->path, "expected an object");
    c.generator.params = p->j;
  }
  try {
    c.precision = parse_precision(root.at("precision").string());
  } catch (const DomainError& e) {
    throw ParseError("$.precision", e.what());
  }
  c.ring = parse_ring(root.at("ring"));
  if (auto m = root.maybe("modular")) c.modular = parse_modular(*m, c.ring);
  if (auto s = root.maybe("skeletal")) c.skeletal = parse_skeletal(*s, c.ring);
  return c;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_catalog(ss.str());
}

std::string save_catalog(const Catalog& c) {
  json doc = {{"schema_version", kSchemaVersion},
              {"name", c.name},
              {"generator", {{"family", c.generator.family}, {"params", c.generator.params}}},
              {"precision", precision_name(c.precision)},
              {"ring", ring_json(c.ring)}};
  if (c.modular) doc["modular"] = modular_json(*c.modular);
  if (c.skeletal) doc["skeletal"] = skeletal_json(*c.skeletal);
  return doc.dump(1) + "\n";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error("SHA-256 computation failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string content_hash(const Catalog& c) { return sha256_hex(save_catalog(c)); }

Catalog catalog_trivial() {
  Catalog c;
  c.name = "trivial";
  c.generator.family = "trivial";
  c.ring = FusionRing::trivial();
  ModularData<double> md;
  md.ring = c.ring;
  md.S = Matrix<double>::identity(1);
  md.T = Matrix<double>::identity(1);
  md.d = {1.0};
  md.theta = {1.0};
  md.central_charge = 0.0;
  md.weights = {0.0};
  c.modular = md;
  SkeletalData<double> sk(c.ring);
  sk.set_block(0, 0, 0, 0, Matrix<double>::identity(1));
  sk.set_R(0, 0, 0, 1.0);
  c.skeletal = sk;
  return c;
}

Catalog catalog_ising() {
  Catalog c;
  c.name = "ising";
  c.generator.family = "ising";
  auto data = ising_data<double>();
  c.ring = data.skeletal.ring();
  c.modular = std::move(data.modular);
  c.skeletal = std::move(data.skeletal);
  return c;
}

Catalog catalog_su2(int k) {
  Catalog c;
  c.name = "su2_" + std::to_string(k);
  c.generator.family = "su2";
  c.generator.params = {{"level", k}};
  auto data = su2_data<double>(k);
  c.ring = data.skeletal.ring();
  c.modular = std::move(data.modular);
  c.skeletal = std::move(data.skeletal);
  return c;
}

Catalog catalog_minimal(int m) {
  Catalog c;
  c.name = "minimal_" + std::to_string(m);
  c.generator.family = "minimal";
  c.generator.params = {{"m", m}};
  auto mm = minimal_model<double>(m);
  c.ring = mm.modular.ring;
  c.modular = std::move(mm.modular);
  return c;
}

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::string sci(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

json report_to_json(const VerificationReport& r) {
  json sections = json::array();
  for (const auto& s : r.sections) {
    json checks = json::array();
    for (const auto& c : s.checks)
      checks.push_back({{"name", c.name},
                        {"residual", number_or_null(c.residual)},
                        {"threshold", number_or_null(c.threshold)},
                        {"pass", c.pass},
                        {"worst", c.worst},
                        {"note", c.note}});
    sections.push_back({{"name", s.name},
                        {"status", status_name(s.status)},
                        {"error", s.error},
                        {"details", s.details},
                        {"checks", std::move(checks)}});
  }
  return {{"catalog", r.catalog_name},
          {"content_hash", r.content_hash},
          {"tolerance", {{"abs_eps", r.tol.abs_eps}, {"rel_eps", r.tol.rel_eps}}},
          {"precision", precision_name(r.precision)},
          {"overall", r.overall() ? "PASS" : "FAIL"},
          {"sections", std::move(sections)}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.catalog_name = j.at("catalog").get<std::string>();
  r.content_hash = j.at("content_hash").get<std::string>();
  r.tol.abs_eps = j.at("tolerance").at("abs_eps").get<double>();
  r.tol.rel_eps = j.at("tolerance").at("rel_eps").get<double>();
  r.precision = parse_precision(j.at("precision").get<std::string>());
  for (const auto& s : j.at("sections")) {
    Section sec;
    sec.name = s.at("name").get<std::string>();
    sec.status = parse_status(s.at("status").get<std::string>());
    sec.error = s.at("error").get<std::string>();
    sec.details = s.at("details");
    for (const auto& c : s.at("checks")) {
      Check ck;
      ck.name = c.at("name").get<std::string>();
      ck.residual = number_from(c.at("residual"));
      ck.threshold = number_from(c.at("threshold"));
      ck.pass = c.at("pass").get<bool>();
      ck.worst = c.at("worst").get<std::vector<int>>();
      ck.note = c.at("note").get<std::string>();
      sec.checks.push_back(std::move(ck));
    }
    r.sections.push_back(std::move(sec));
  }
  return r;
}

std::string emit_report(const VerificationReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(r).dump(1) + "\n";
  std::ostringstream out;
  out << "catalog    " << r.catalog_name << "  sha256 " << r.content_hash << "\n";
  out << "tolerance  abs " << sci(r.tol.abs_eps) << "  rel " << sci(r.tol.rel_eps) << "  precision "
      << precision_name(r.precision) << "\n\n";
  for (const auto& s : r.sections) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f ms", s.wall_ms);
    out << "[" << status_name(s.status) << "] " << s.name;
    if (s.status != Status::skipped) out << "  (" << ms << ")";
    out << "\n";
    if (!s.error.empty()) out << "    error: " << s.error << "\n";
    for (const auto& c : s.checks) {
      out << "    " << std::left << std::setw(28) << c.name << std::right << std::setw(10) << sci(c.residual)
          << (c.pass ? " <= " : " >  ") << std::setw(10) << sci(c.threshold) << (c.pass ? "" : "  FAIL");
      if (!c.pass && !c.worst.empty()) out << "  worst " << tuple_text(c.worst);
      if (!c.pass && !c.note.empty()) out << "  " << c.note;
      out << "\n";
    }
  }
  out << "\nOVERALL: " << (r.overall() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace mtcforge
