#include "ratarc/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "ratarc/errors.hpp"

namespace ratarc {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

const std::vector<std::string>& RunConfig::known_keys() {
  static const std::vector<std::string> keys{
      "seed", "jobs", "quad",
      "arc.family", "arc.degree", "arc.lambda", "arc.coeffs", "arc.radius", "arc.field", "arc.point",
      "arc.order", "arc.values",
      "domain.r", "domain.R",
      "census.mode", "census.t_grid", "census.oracle_points",
      "bp.degree", "bp.epsilon", "bp.c1", "bp.c2", "bp.subset",
      "rare.gamma", "rare.epsilon", "rare.A",
      "auxpoly.points", "auxpoly.n", "auxpoly.degree", "auxpoly.T", "auxpoly.epsilon",
      "zeros.poly", "zeros.r", "zeros.R",
      "liouville.section", "liouville.point", "liouville.corpus_height", "liouville.corpus_degree",
      "liouville.corpus_coeff",
      "bloch.mode", "bloch.roots", "bloch.H", "bloch.samples", "bloch.poly", "bloch.r", "bloch.eta",
      "leaf.poly", "leaf.d_max", "leaf.coeff_height", "leaf.order", "leaf.n_max", "leaf.ell",
      "scan.B", "scan.a", "scan.d_max", "scan.coeff_height",
  };
  return keys;
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  const auto& keys = known_keys();
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (cfg.values_.count(key)) throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    cfg.values_[key] = value;
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void RunConfig::set(const std::string& key, std::string value) {
  const auto& keys = known_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown key '" + key + "'");
  values_[key] = std::move(value);
}

std::string RunConfig::text(const std::string& key, std::optional<std::string> fallback) const {
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  if (fallback) return *fallback;
  throw ConfigError("missing config key '" + key + "'");
}

BigRational RunConfig::rational(const std::string& key, std::optional<BigRational> fallback) const {
  if (auto it = values_.find(key); it != values_.end()) {
    try {
      return parse_rational(it->second);
    } catch (const ConfigError& e) {
      throw ConfigError("key '" + key + "': " + e.what());
    }
  }
  if (fallback) return *fallback;
  throw ConfigError("missing config key '" + key + "'");
}

double RunConfig::real(const std::string& key, std::optional<double> fallback) const {
  if (has(key)) {
    if (text(key) == "inf") return std::numeric_limits<double>::infinity();
    return to_double(rational(key));
  }
  if (fallback) return *fallback;
  throw ConfigError("missing config key '" + key + "'");
}

long RunConfig::integer(const std::string& key, std::optional<long> fallback) const {
  if (has(key)) {
    const BigRational q = rational(key);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw ConfigError("key '" + key + "' must be an integer");
    return q.get_num().get_si();
  }
  if (fallback) return *fallback;
  throw ConfigError("missing config key '" + key + "'");
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      if (auto t = trim(cur); !t.empty()) out.push_back(t);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (auto t = trim(cur); !t.empty()) out.push_back(t);
  return out;
}

std::vector<BigRational> RunConfig::rational_list(const std::string& key) const {
  std::vector<BigRational> out;
  for (const auto& piece : split_list(text(key), ',')) out.push_back(parse_rational(piece));
  return out;
}

std::vector<HeightBudget> RunConfig::budget_list(const std::string& key) const {
  std::vector<HeightBudget> out;
  for (const auto& piece : split_list(text(key), ',')) out.push_back(HeightBudget::parse(piece));
  if (out.empty()) throw ConfigError("key '" + key + "' must list at least one height");
  return out;
}

ArcSetup make_arc(const RunConfig& cfg) {
  const std::string family = cfg.text("arc.family");
  const double radius = cfg.real("arc.radius", kEntire);
  if (family == "moment") {
    return {moment_arc(static_cast<int>(cfg.integer("arc.degree", 2)), radius), {}, {}};
  }
  if (family == "exp") {
    return {exp_arc(cfg.rational("arc.lambda", BigRational(1)), radius), {}, {}};
  }
  if (family == "poly-graph") {
    return {polynomial_graph_arc(cfg.rational_list("arc.coeffs"), radius), {}, {}};
  }
  if (family == "series-graph") {
    if (!std::isfinite(radius)) throw ConfigError("series-graph arcs need a finite arc.radius");
    return {series_graph_arc(TruncatedSeries(cfg.rational_list("arc.coeffs")), radius), {}, {}};
  }
  if (family == "constant") {
    return {constant_arc(cfg.rational_list("arc.values")), {}, {}};
  }
  if (family == "leaf") {
    if (!std::isfinite(radius)) throw ConfigError("leaf arcs need a finite arc.radius");
    VectorFieldQ field = VectorFieldQ::parse(cfg.text("arc.field"));
    const auto p = cfg.rational_list("arc.point");
    const int N = static_cast<int>(cfg.integer("arc.order", 80));
    FormalLeaf leaf = leaf_series(field, p, N);
    AnalyticArc arc = leaf_arc(field, leaf, radius);
    return {std::move(arc), std::move(field), std::move(leaf)};
  }
  throw ConfigError("unknown arc.family '" + family + "' (moment | exp | poly-graph | series-graph | leaf | constant)");
}

}  // namespace ratarc
