#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ratarc/census.hpp"
#include "ratarc/config.hpp"
#include "ratarc/siegel.hpp"

namespace ratarc {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { Csv, Json };

ReportFormat parse_format(std::string_view text);

/// Everything one run emits. Arrays keep insertion order; object keys are sorted.
struct Report {
  Json config_echo = Json::object();
  Json records = Json::array();
  Json curves = Json::array();
  Json certificates = Json::array();
  Json checks = Json::array();
  std::uint64_t seed = 0;

  void echo(const RunConfig& cfg);
  void add_check(const std::string& name, bool passed, Json detail = Json::object());
  bool all_passed() const;

  std::string json_text() const;
  /// One row per curve grid point: T, A_U, mode, arc_id, r, seed.
  std::string csv_text() const;

  static Report from_json_text(std::string_view text);
};

Json to_json(const CensusRecord& rec);
Json to_json(const CensusCurve& curve);
Json to_json(const AuxSectionCert& cert);

/// Writes the report; "-" means standard output. Returns 0, or 2 when the
/// path cannot be written.
int emit_report(const Report& report, ReportFormat format, const std::string& path);

/// Shortest round-trip text of a double.
std::string format_double(double x);

}  // namespace ratarc
