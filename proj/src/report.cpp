#include "ratarc/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "ratarc/errors.hpp"

namespace ratarc {

ReportFormat parse_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw ConfigError("format must be 'csv' or 'json', got '" + std::string(text) + "'");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{}", x);
}

void Report::echo(const RunConfig& cfg) {
  for (const auto& [k, v] : cfg.values()) config_echo[k] = v;
}

void Report::add_check(const std::string& name, bool passed, Json detail) {
  Json c = Json::object();
  c["name"] = name;
  c["passed"] = passed;
  c["detail"] = std::move(detail);
  checks.push_back(std::move(c));
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.at("passed").get<bool>()) return false;
  return true;
}

std::string Report::json_text() const {
  // Root keys in schema order; nested objects keep sorted keys.
  nlohmann::ordered_json root;
  root["schema_version"] = kSchemaVersion;
  root["config_echo"] = nlohmann::ordered_json::parse(config_echo.dump());
  root["records"] = nlohmann::ordered_json::parse(records.dump());
  root["curves"] = nlohmann::ordered_json::parse(curves.dump());
  root["certificates"] = nlohmann::ordered_json::parse(certificates.dump());
  root["checks"] = nlohmann::ordered_json::parse(checks.dump());
  return root.dump(2) + "\n";
}

std::string Report::csv_text() const {
  std::string out = "T,A_U,mode,arc_id,r,seed\n";
  for (const auto& c : curves) {
    const auto& T = c.at("T");
    const auto& lower = c.at("lower");
    const auto& upper = c.at("upper");
    for (std::size_t i = 0; i < T.size(); ++i) {
      const long lo = lower[i].get<long>(), hi = upper[i].get<long>();
      const std::string count = lo == hi ? std::to_string(lo) : fmt::format("{}..{}", lo, hi);
      out += fmt::format("{},{},{},{},{},{}\n", format_double(T[i].get<double>()), count,
                         c.at("mode").get<std::string>(), c.at("arc_id").get<std::string>(),
                         c.at("r").get<std::string>(), seed);
    }
  }
  return out;
}

Report Report::from_json_text(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("report: invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("schema_version") || root["schema_version"] != kSchemaVersion)
    throw ConfigError("report: unsupported or missing schema_version");
  Report r;
  for (const char* key : {"config_echo", "records", "curves", "certificates", "checks"})
    if (!root.contains(key)) throw ConfigError(std::string("report: missing '") + key + "'");
  r.config_echo = root["config_echo"];
  r.records = root["records"];
  r.curves = root["curves"];
  r.certificates = root["certificates"];
  r.checks = root["checks"];
  if (r.config_echo.contains("seed")) r.seed = std::stoull(r.config_echo["seed"].get<std::string>());
  return r;
}

Json to_json(const CensusRecord& rec) {
  Json j = Json::object();
  j["parameter"] = rec.parameter;
  j["z"] = Json::array({format_double(rec.z_value.real()), format_double(rec.z_value.imag())});
  if (rec.point) {
    j["point"] = rec.point->to_string();
    j["height"] = rec.height;
  }
  j["status"] = rec.indeterminate ? "indeterminate" : "rational";
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

Json to_json(const CensusCurve& curve) {
  Json j = Json::object();
  j["arc_id"] = curve.arc_id;
  j["r"] = to_string(curve.r);
  j["mode"] = to_string(curve.mode);
  Json T = Json::array(), labels = Json::array(), lower = Json::array(), upper = Json::array();
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    T.push_back(curve.grid[i].T());
    labels.push_back(curve.grid[i].label());
    lower.push_back(curve.lower[i]);
    upper.push_back(curve.upper[i]);
  }
  j["T"] = T;
  j["T_label"] = labels;
  j["lower"] = lower;
  j["upper"] = upper;
  return j;
}

Json to_json(const AuxSectionCert& cert) {
  Json j = Json::object();
  j["section"] = cert.section.to_string();
  j["n"] = cert.section.dimension();
  j["degree"] = cert.section.degree();
  j["log_max_coeff"] = cert.log_max_coeff;
  j["point_count"] = cert.point_count;
  j["h0"] = cert.h0;
  j["max_height"] = cert.max_height;
  return j;
}

int emit_report(const Report& report, ReportFormat format, const std::string& path) {
  const std::string text = format == ReportFormat::Json ? report.json_text() : report.csv_text();
  if (path == "-") {
    std::cout << text;
    return std::cout ? 0 : 2;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return 2;
  out << text;
  out.close();
  return out ? 0 : 2;
}

}  // namespace ratarc
