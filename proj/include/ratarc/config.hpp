#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratarc/arc.hpp"
#include "ratarc/foliage.hpp"
#include "ratarc/projective.hpp"

namespace ratarc {

/// Flat "key = value" configuration with '#' comments. Unknown keys and
/// duplicate keys are rejected at parse time.
class RunConfig {
 public:
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  const std::map<std::string, std::string>& values() const { return values_; }
  void set(const std::string& key, std::string value);

  std::string text(const std::string& key, std::optional<std::string> fallback = std::nullopt) const;
  BigRational rational(const std::string& key, std::optional<BigRational> fallback = std::nullopt) const;
  double real(const std::string& key, std::optional<double> fallback = std::nullopt) const;
  long integer(const std::string& key, std::optional<long> fallback = std::nullopt) const;
  std::vector<BigRational> rational_list(const std::string& key) const;
  std::vector<HeightBudget> budget_list(const std::string& key) const;

  static const std::vector<std::string>& known_keys();

 private:
  std::map<std::string, std::string> values_;
};

/// Splits on a separator and trims whitespace; empty pieces are dropped.
std::vector<std::string> split_list(std::string_view text, char sep);

struct ArcSetup {
  AnalyticArc arc;
  std::optional<VectorFieldQ> field;
  std::optional<FormalLeaf> leaf;
};

/// Builds the arc described by the arc.* keys.
ArcSetup make_arc(const RunConfig& cfg);

}  // namespace ratarc
