#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mtcforge/category.hpp"
#include "mtcforge/families.hpp"
#include "mtcforge/modular_data.hpp"
#include "mtcforge/report.hpp"

namespace mtcforge {

inline constexpr const char* kSchemaVersion = "1";

struct Provenance {
  std::string family = "external";  // su2, minimal, ising, trivial or external
  nlohmann::json params = nlohmann::json::object();
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Values are held in double; extended-precision runs widen them at verify time.
struct Catalog {
  std::string name;
  Provenance generator;
  FusionRing ring;
  std::optional<ModularData<double>> modular;
  std::optional<SkeletalData<double>> skeletal;
  Precision precision = Precision::standard;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

// Throws ParseError (with a JSON path) on schema violations and ValidationError
// naming the invariant on structural violations.
Catalog load_catalog(std::string_view bytes);
Catalog load_catalog_file(const std::string& path);

// Canonical JSON: sorted keys, shortest round-trip floats, complex as [re, im].
// Throws FinitenessError on NaN or Inf.
std::string save_catalog(const Catalog& c);

// SHA-256 of the canonical bytes, hex encoded.
std::string content_hash(const Catalog& c);
std::string sha256_hex(std::string_view bytes);

Catalog catalog_trivial();
Catalog catalog_ising();
Catalog catalog_su2(int k);
Catalog catalog_minimal(int m);

enum class ReportFormat { json, text };

std::string emit_report(const VerificationReport& r, ReportFormat format);
nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace mtcforge
