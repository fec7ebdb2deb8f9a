#include "ratarc/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "ratarc/degree_bound.hpp"
#include "ratarc/errors.hpp"

namespace ratarc {

std::string to_string(CensusMode m) { return m == CensusMode::Parametric ? "parametric" : "oracle"; }

CensusMode parse_census_mode(std::string_view text) {
  if (text == "parametric") return CensusMode::Parametric;
  if (text == "oracle") return CensusMode::Oracle;
  throw ConfigError("census mode must be 'parametric' or 'oracle', got '" + std::string(text) + "'");
}

std::vector<OraclePoint> load_oracle_points(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read oracle point file '" + path + "'");
  std::vector<OraclePoint> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> fields;
    for (std::string f; ss >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    if (static_cast<int>(fields.size()) != n + 4)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected label re im and " + std::to_string(n + 1) +
                        " coordinates");
    std::vector<BigRational> coords;
    for (int i = 0; i <= n; ++i) coords.push_back(parse_rational(fields[3 + i]));
    out.push_back({fields[0], Complex(to_double(parse_rational(fields[1])), to_double(parse_rational(fields[2]))),
                   ProjectivePoint::normalize(std::span<const BigRational>(coords))});
  }
  return out;
}

namespace {

BigInt affine_height_bound(const BigRational& q) {
  const BigInt num = abs(q.get_num());
  const BigInt den = q.get_den();
  return num > den ? num : den;
}

CensusRecord decide_candidate(const AnalyticArc& arc, const BigRational& z, const BigRational& u,
                              const HeightBudget& budget) {
  CensusRecord rec;
  rec.parameter = to_string(z);
  rec.z = z;
  rec.z_value = to_double(z);
  rec.candidate_bound = affine_height_bound(u);
  std::vector<BigRational> coords{BigRational(1)};
  for (const auto& c : arc.components()) {
    const RationalDecision dec = c.decide(z, budget.bound());
    if (dec.kind == RationalDecision::Kind::NotRational) {
      rec.note = "not-rational";
      return rec;
    }
    if (dec.kind == RationalDecision::Kind::Indeterminate) {
      rec.indeterminate = true;
      rec.note = dec.note;
      return rec;
    }
    coords.push_back(dec.value);
  }
  ProjectivePoint p = ProjectivePoint::normalize(std::span<const BigRational>(coords));
  if (!height_at_most(p, budget.bound())) {
    rec.note = "height";
    return rec;
  }
  rec.height = height(p).value;
  rec.point = std::move(p);
  return rec;
}

}  // namespace

CensusResult census(const AnalyticArc& arc, const BigRational& r, const HeightBudget& budget, CensusMode mode,
                    const std::vector<OraclePoint>& oracle, int jobs) {
  if (sgn(r) <= 0) throw PreconditionError("census: r must be positive");
  if (!(to_double(r) <= arc.radius())) throw PreconditionError("census: r exceeds the arc domain");
  CensusResult res;
  res.arc_id = arc.id();
  res.r = r;
  res.budget = budget;
  res.mode = mode;
  const BigRational r2 = r * r;

  if (mode == CensusMode::Oracle) {
    const double rd = to_double(r);
    for (const auto& op : oracle) {
      if (op.point.dimension() != arc.dimension()) throw PreconditionError("census: oracle point dimension mismatch");
      if (!(std::abs(op.z) < rd)) continue;
      if (!height_at_most(op.point, budget.bound())) continue;
      CensusRecord rec;
      rec.parameter = op.label;
      rec.z_value = op.z;
      rec.point = op.point;
      rec.height = height(op.point).value;
      res.records.push_back(std::move(rec));
    }
    std::sort(res.records.begin(), res.records.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.parameter < b.parameter; });
    res.lower = static_cast<long>(res.records.size());
    return res;
  }

  if (!arc.graph_type())
    throw PreconditionError("parametric census requires a graph-type arc (first coordinate affine in z)");
  // Component 1 is offset + z, so a point of height <= T has an affine
  // parameter u = offset + z of height <= T.
  const RationalDecision off = arc.components().front().decide(BigRational(0), BigInt(1));
  if (off.kind != RationalDecision::Kind::Rational) throw PreconditionError("census: non-rational offset");
  const BigRational offset = off.value;

  std::vector<std::pair<BigRational, BigRational>> candidates;  // (z, u)
  for (const auto& u : enumerate_rationals(budget)) {
    const BigRational z = u - offset;
    if (z * z < r2) candidates.emplace_back(z, u);
  }
  std::vector<CensusRecord> decided(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();)
      decided[i] = decide_candidate(arc, candidates[i].first, candidates[i].second, budget);
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<CensusRecord> pending;
  for (auto& rec : decided) {
    if (rec.point) {
      res.records.push_back(std::move(rec));
    } else if (rec.indeterminate) {
      pending.push_back(std::move(rec));
    }
  }
  res.lower = static_cast<long>(res.records.size());
  res.indeterminate = static_cast<long>(pending.size());
  for (auto& rec : pending) res.records.push_back(std::move(rec));
  return res;
}

bool CensusCurve::monotone() const {
  for (std::size_t i = 1; i < lower.size(); ++i)
    if (lower[i] < lower[i - 1] || upper[i] < upper[i - 1]) return false;
  return true;
}

CensusCurve census_curve(const CensusResult& top, const std::vector<HeightBudget>& grid) {
  CensusCurve curve;
  curve.arc_id = top.arc_id;
  curve.r = top.r;
  curve.mode = top.mode;
  curve.grid = grid;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i].bound() < grid[i - 1].bound() || grid[i].T() < grid[i - 1].T())
      throw PreconditionError("census_curve: T grid must be ascending");
  for (const auto& b : grid) {
    if (b.bound() > top.budget.bound()) throw PreconditionError("census_curve: grid exceeds the census budget");
    long lo = 0, und = 0;
    for (const auto& rec : top.records) {
      if (rec.point) {
        if (height_at_most(*rec.point, b.bound())) ++lo;
      } else if (rec.indeterminate && rec.candidate_bound <= b.bound()) {
        ++und;
      }
    }
    curve.lower.push_back(lo);
    curve.upper.push_back(lo + und);
  }
  return curve;
}

BPReport bombieri_pila_experiment(const AnalyticArc& arc, const CensusResult& cen, const BPOptions& opt) {
  const int n = arc.dimension();
  const int d = opt.degree;
  if (d < 1) throw PreconditionError("bp-experiment: degree must be >= 1");
  BPReport rep;
  rep.degree = d;
  rep.epsilon = opt.epsilon;
  const double T = cen.budget.T();
  rep.diameter = opt.c1 * std::exp(-opt.c2 * T / std::pow(static_cast<double>(d), n - 1));
  const double r = to_double(cen.r);
  const double side = rep.diameter / std::sqrt(2.0);
  const long per_axis = static_cast<long>(std::ceil(2.0 * r / side));
  rep.cells_total = per_axis * per_axis;

  std::map<std::pair<long, long>, std::vector<const CensusRecord*>> cells;
  for (const auto& rec : cen.records) {
    if (!rec.point) continue;
    const long ix = static_cast<long>(std::floor((rec.z_value.real() + r) / side));
    const long iy = static_cast<long>(std::floor((rec.z_value.imag() + r) / side));
    cells[{ix, iy}].push_back(&rec);
  }

  const std::size_t h0 = section_space_dimension(n, d);
  const DiskDomain domain(r, to_double(opt.R));
  std::vector<Complex> W{0.0};
  for (int k = 0; k < 4; ++k) W.push_back(std::polar(0.5 * r, 2.0 * std::numbers::pi * (k + 0.125) / 4));
  std::optional<double> b1;

  for (auto& [key, recs] : cells) {
    BPCell cell;
    cell.ix = key.first;
    cell.iy = key.second;
    cell.points = static_cast<int>(recs.size());
    std::stable_sort(recs.begin(), recs.end(), [](const CensusRecord* a, const CensusRecord* b) {
      if (a->point->max_abs() != b->point->max_abs()) return a->point->max_abs() < b->point->max_abs();
      return *a->point < *b->point;
    });
    std::vector<ProjectivePoint> all;
    for (const auto* rec : recs)
      if (std::find(all.begin(), all.end(), *rec->point) == all.end()) all.push_back(*rec->point);
    std::vector<ProjectivePoint> used = all;
    if (opt.use_all_points) {
      if (all.size() >= h0) {
        cell.error = "cell has " + std::to_string(all.size()) + " points, at least h0 = " + std::to_string(h0) +
                     "; increase the degree";
        rep.all_vanish = false;
        rep.cells.push_back(std::move(cell));
        continue;
      }
    } else {
      const auto A = static_cast<std::size_t>(std::floor((1.0 - opt.epsilon) * static_cast<double>(h0)));
      if (used.size() > A) used.erase(used.begin() + static_cast<long>(A), used.end());
    }
    cell.used = static_cast<int>(used.size());
    try {
      cell.cert = vanish_section(used, n, d);
    } catch (const PreconditionError& e) {
      cell.error = e.what();
      rep.all_vanish = false;
      rep.cells.push_back(std::move(cell));
      continue;
    }
    cell.vanishes_on_cell = vanishes_on(cell.cert->section, all);
    rep.all_vanish = rep.all_vanish && cell.vanishes_on_cell;
    rep.max_log_coeff = std::max(rep.max_log_coeff, cell.cert->log_max_coeff);
    if (!b1) b1 = uniform_characteristic(arc, domain, W);
    const DegreeBoundReport db = degree_bound_check(cell.cert->section, arc, domain, W, b1);
    cell.identically_zero_on_arc = db.identically_zero;
    if (!db.identically_zero) {
      cell.zeros_in_u = db.degree_u;
      cell.zero_bound = std::isfinite(db.rhs) ? static_cast<int>(std::floor(db.rhs)) : -1;
      rep.max_zero_bound = std::max(rep.max_zero_bound, cell.zero_bound);
    }
    rep.cells.push_back(std::move(cell));
  }
  rep.final_bound = static_cast<long>(rep.cells.size()) * rep.max_zero_bound;
  return rep;
}

RareScan rare_interval_scan(const CensusCurve& curve, int n, double gamma, double epsilon, double A) {
  if (!(A > 1.0)) throw PreconditionError("rare_interval_scan: A must exceed 1");
  if (!(epsilon > 0.0)) throw PreconditionError("rare_interval_scan: epsilon must be positive");
  RareScan scan;
  scan.gamma = gamma;
  scan.epsilon = epsilon;
  scan.A = A;
  scan.gamma_hypothesis = n >= 2 && gamma > static_cast<double>(n) / (n - 1);
  const std::size_t m = curve.grid.size();
  std::size_t i = 0;
  while (i < m) {
    auto ok = [&](std::size_t k) {
      const double T = curve.grid[k].T();
      return static_cast<double>(curve.upper[k]) <= epsilon * std::pow(T, gamma);
    };
    if (!ok(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < m && ok(j + 1)) ++j;
    RareInterval iv;
    iv.i_start = i;
    iv.i_end = j;
    iv.t_start = curve.grid[i].T();
    iv.t_end = curve.grid[j].T();
    iv.geometrically_wider = iv.t_end > 0.0 && iv.t_end >= A * iv.t_start;
    scan.intervals.push_back(iv);
    i = j + 1;
  }
  return scan;
}

}  // namespace ratarc
