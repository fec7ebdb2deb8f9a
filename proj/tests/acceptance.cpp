// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "ratarc/bloch_cartan.hpp"
#include "ratarc/census.hpp"
#include "ratarc/config.hpp"
#include "ratarc/contour.hpp"
#include "ratarc/degree_bound.hpp"
#include "ratarc/diophantine.hpp"
#include "ratarc/foliage.hpp"
#include "ratarc/siegel.hpp"

using namespace ratarc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------- 1

Outcome liouville_exactness() {
  const auto rep = liouville_corpus_scan(20, 3, 10);
  // Spot check with arbitrary-precision evaluation on a seeded sample.
  std::mt19937_64 rng(1);
  const auto pts = p1_points(20);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  std::uniform_int_distribution<long> coef(-10, 10);
  std::uniform_int_distribution<int> deg(0, 3);
  long spot = 0, spot_bad = 0;
  while (spot < 2000) {
    const int d = deg(rng);
    std::vector<BigInt> c;
    bool zero = true;
    for (int k = 0; k <= d; ++k) {
      c.emplace_back(coef(rng));
      zero = zero && c.back() == 0;
    }
    if (zero) continue;
    const auto s = SectionPoly::from_coefficients(1, d, c);
    const auto& p = pts[pick(rng)];
    if (s.evaluate(std::span<const BigInt>(p.coords())) == 0) continue;
    const auto r = liouville_check(s, p);
    if (!r.holds || !r.exact) ++spot_bad;
    ++spot;
  }
  const bool pass = rep.violations == 0 && rep.exact_violations == 0 && spot_bad == 0 && rep.points > 0;
  return {pass, fmt::format("{} points x {} sections, {} nonvanishing pairs, violations {}, exact violations {}, "
                            "min margin {:.3g}, bignum spot checks {}/{} ok",
                            rep.points, rep.sections, rep.evaluations, rep.violations, rep.exact_violations,
                            rep.min_margin, spot - spot_bad, spot)};
}

// ---------------------------------------------------------------- 2

Outcome zero_counting() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> rad(0.2, 3.0);
  int cases = 0, mismatches = 0;
  double worst_jensen = 0.0;
  while (cases < 50) {
    const auto p = oracle::random_int_poly(rng, 8, 12);
    double r = rad(rng);
    while (oracle::distance_to_circle(p.roots, r) < 1e-3) r = rad(rng);
    const auto f = Holomorphic::polynomial(oracle::to_complex(p.coeffs));
    const int expect = oracle::count_inside(p.roots, r);
    if (count_zeros(f, r).count != expect) ++mismatches;
    std::vector<Complex> inside;
    for (const auto& a : p.roots)
      if (std::abs(a) < r) inside.push_back(a);
    worst_jensen = std::max(worst_jensen, jensen_residual(f, inside, r));
    ++cases;
  }
  return {mismatches == 0 && worst_jensen < 1e-6,
          fmt::format("{} polynomials, count mismatches {}, max Jensen residual {:.2e} (< 1e-6)", cases, mismatches,
                      worst_jensen)};
}

// ---------------------------------------------------------------- 3

Outcome degree_bound() {
  struct ArcCase {
    AnalyticArc arc;
    std::vector<DiskDomain> domains;
  };
  const std::vector<ArcCase> arcs{
      {moment_arc(1), {DiskDomain(0.5, 1.0), DiskDomain(0.3, 0.9), DiskDomain(1.0, 2.0)}},
      {moment_arc(2), {DiskDomain(0.5, 1.0), DiskDomain(0.8, 1.5)}},
      {exp_arc(), {DiskDomain(0.5, 1.0), DiskDomain(0.9, 2.0)}},
      {polynomial_graph_arc({0, BigRational(-1, 2), 0, 1}), {DiskDomain(0.5, 1.0), DiskDomain(0.7, 1.2)}},
  };
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-4, 4);
  int cases = 0, violations = 0, skipped = 0, with_zeros = 0;
  double tightest = 1e300;
  for (const auto& ac : arcs) {
    const int n = ac.arc.dimension();
    for (const auto& dom : ac.domains) {
      const std::vector<Complex> W{Complex(0.3 * dom.r, 0.1 * dom.r), Complex(-0.5 * dom.r, 0.0)};
      const double b1 = uniform_characteristic(ac.arc, dom, W);
      for (int trial = 0; trial < 12; ++trial) {
        const int d = 1 + trial % 3;
        std::vector<BigInt> c;
        bool zero = true;
        for (std::size_t k = 0; k < section_space_dimension(n, d); ++k) {
          c.emplace_back(coef(rng));
          zero = zero && c.back() == 0;
        }
        if (zero) c.back() = 1;
        const auto s = SectionPoly::from_coefficients(n, d, c);
        const auto rep = degree_bound_check(s, ac.arc, dom, W, b1);
        if (rep.identically_zero) {
          ++skipped;
          continue;
        }
        ++cases;
        if (rep.degree_u > 0) ++with_zeros;
        if (!rep.holds) ++violations;
        tightest = std::min(tightest, rep.rhs - rep.degree_u);
      }
      // Powers of a coordinate section: deg = d exactly.
      for (int d = 1; d <= 3; ++d) {
        Exponent e(static_cast<std::size_t>(n + 1), 0);
        e[1] = d;
        SectionPoly::Terms t;
        t[e] = 1;
        const auto rep = degree_bound_check(SectionPoly(n, d, t), ac.arc, dom, W, b1);
        ++cases;
        if (rep.degree_u > 0) ++with_zeros;
        if (!rep.holds) ++violations;
        tightest = std::min(tightest, rep.rhs - rep.degree_u);
      }
    }
  }
  return {violations == 0 && cases >= 100,
          fmt::format("{} cases ({} with zeros in U, {} identically zero skipped), violations {}, smallest slack {:.3f}",
                      cases, with_zeros, skipped, violations, tightest)};
}

// ---------------------------------------------------------------- 4

Outcome bloch_cartan() {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> count(1, 10);
  std::uniform_real_distribution<double> u(0.0, 1.0), hd(0.1, 2.0);
  int violations = 0;
  double worst_z = -1e300;
  for (int i = 0; i < 200; ++i) {
    RootConfig cfg;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) cfg.roots.emplace_back(u(rng), u(rng));
    cfg.H = hd(rng);
    const auto est = exceptional_area(cfg, enclosing_box(cfg), 100000, 4000 + i);
    if (!(est.value <= est.bound + 3 * est.stderr_)) ++violations;
    worst_z = std::max(worst_z, (est.value - est.bound) / std::max(est.stderr_, 1e-300));
  }
  int single_bad = 0;
  double worst_dev = 0.0;
  std::uniform_real_distribution<double> pos(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    RootConfig cfg{{Complex(pos(rng), pos(rng))}, hd(rng)};
    const auto est = exceptional_area(cfg, enclosing_box(cfg), 100000, 9000 + i);
    const double exact = kPi * cfg.H * cfg.H / (4 * kE * kE);
    const double dev = std::abs(est.value - exact) / est.stderr_;
    worst_dev = std::max(worst_dev, dev);
    if (dev > 3.0) ++single_bad;
  }
  return {violations == 0 && single_bad == 0,
          fmt::format("200 configurations at 1e5 samples, violations {}; single root: {}/20 outside 3 stderr "
                      "(max deviation {:.2f} stderr)",
                      violations, single_bad, worst_dev)};
}

// ---------------------------------------------------------------- 5

Outcome small_norm() {
  std::mt19937_64 rng(5);
  int evaluations = 0, violations = 0;
  double max_fill = 0.0;
  int nonempty = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int i = 0; i < 100; ++i) {
    const auto f = [&] {
      if (i % 2 == 0) return Holomorphic::polynomial(oracle::to_complex(oracle::random_int_poly(rng, 8, 9).coeffs));
      // Roots clustered near the origin (none at 0) with a random scale, so the sets are not empty.
      std::vector<Complex> roots;
      const int n = deg(rng);
      for (int k = 0; k < n; ++k) roots.push_back(std::polar(0.01 + 0.5 * u(rng), 2 * kPi * u(rng)));
      return Holomorphic::from_roots(roots, std::pow(10.0, 3 * u(rng)));
    }();
    for (double eta : {0.5, 0.1})
      for (double r : {0.05, 0.1, 0.2}) {
        const auto est = small_norm_area(f, r, eta, 100000, 5000 + evaluations);
        ++evaluations;
        if (!(est.value <= est.bound + 3 * est.stderr_)) ++violations;
        if (est.value > 0) ++nonempty;
        max_fill = std::max(max_fill, est.value / est.bound);
      }
  }
  return {violations == 0,
          fmt::format("{} estimates at 1e5 samples ({} with a nonempty set), violations {}, max area / bound {:.3f}",
                      evaluations, nonempty, violations, max_fill)};
}

// ---------------------------------------------------------------- 6

Outcome siegel() {
  int certs = 0, nonvanishing = 0;
  auto record = [&](const AuxSectionCert& c, const std::vector<ProjectivePoint>& pts) {
    ++certs;
    if (!vanishes_on(c.section, pts)) ++nonvanishing;
  };
  const std::vector<ProjectivePoint> axes{ProjectivePoint::normalize({1, 0}), ProjectivePoint::normalize({0, 1})};
  const std::vector<ProjectivePoint> pair{ProjectivePoint::normalize({1, 1}), ProjectivePoint::normalize({1, 2})};
  const std::vector<ProjectivePoint> diag{ProjectivePoint::normalize({1, 1, 1})};
  const auto xy = vanish_section(axes, 1, 2);
  const auto conic = vanish_section(pair, 1, 2);
  const auto lin = vanish_section(diag, 2, 1);
  record(xy, axes);
  record(conic, pair);
  record(lin, diag);
  const bool fixtures = xy.section == SectionPoly::parse("X0*X1", 1) &&
                        conic.section == SectionPoly::parse("2*X0^2 - 3*X0*X1 + X1^2", 1) &&
                        lin.log_max_coeff == 0.0 && lin.section.terms().size() == 2;

  // Regression corpus: P^1, d = 8, A in {5, 6}, coordinates up to 25..50.
  std::mt19937_64 rng(6);
  SiegelRegression reg;
  for (int set = 0; set < 50; ++set) {
    const int A = 5 + set % 2;
    const long bound = 25 + set % 26;
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<ProjectivePoint> pts;
    pts.push_back(ProjectivePoint::normalize({bound, c(rng)}));
    while (static_cast<int>(pts.size()) < A) {
      const long a = c(rng), b = c(rng);
      if (a == 0 && b == 0) continue;
      auto p = ProjectivePoint::normalize({a, b});
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const auto cert = vanish_section(pts, 1, 8);
    record(cert, pts);
    reg.add(siegel_bound_report(cert, cert.max_height, 0.25).ratio);
  }
  double lo = 1e300, hi = 0.0;
  for (double r : reg.ratios()) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const bool gate = reg.within(2.0);
  return {fixtures && nonvanishing == 0 && gate,
          fmt::format("fixtures {}, {} certificates, {} not vanishing exactly; regression median {:.3f}, range "
                      "[{:.3f}, {:.3f}], within 2x of median: {}",
                      fixtures ? "reproduced" : "MISMATCH", certs, nonvanishing, reg.median(), lo, hi,
                      gate ? "yes" : "no")};
}

// ---------------------------------------------------------------- 7

Outcome census_fixtures() {
  const auto conic = census(moment_arc(2), 1, HeightBudget::log_of(4), CensusMode::Parametric);
  const auto ex = census(exp_arc(1, 0.9), BigRational(9, 10), HeightBudget::log_of(100), CensusMode::Parametric);
  bool monotone = true;
  int curves = 0;
  for (const char* name : {"census_moment.conf", "census_exp.conf", "rare_moment.conf", "bp_moment.conf"}) {
    const auto cfg = RunConfig::load(std::string(RATARC_CONFIGS) + "/" + name);
    const auto setup = make_arc(cfg);
    const auto grid = cfg.budget_list("census.t_grid");
    const auto top = census(setup.arc, cfg.rational("domain.r"), grid.back(), CensusMode::Parametric);
    monotone = monotone && census_curve(top, grid).monotone();
    ++curves;
  }
  const bool pass = conic.lower == 3 && conic.indeterminate == 0 && ex.lower == 1 && ex.indeterminate == 0 && monotone;
  return {pass, fmt::format("conic A = {} (expect 3); exponential A = {} with {} indeterminate (expect 1, 0); "
                            "{} emitted curves monotone: {}",
                            conic.lower, ex.lower, ex.indeterminate, curves, monotone ? "yes" : "no")};
}

// ---------------------------------------------------------------- 8

Outcome foliation() {
  using Q = BigRational;
  const std::vector<std::pair<std::string, std::vector<Q>>> fixtures{
      {"1; y", {0, 1}}, {"1; 2*x", {0, 0}}, {"1; y^2", {0, 1}}, {"y; -x", {1, 0}}, {"1 + x*y; x - y^2", {1, 2}}};
  int residual_bad = 0;
  for (const auto& [text, p] : fixtures) {
    const auto F = VectorFieldQ::parse(text);
    if (!ode_residual_zero(F, leaf_series(F, p, 80))) ++residual_bad;
  }
  const auto F = VectorFieldQ::parse("1; y");
  const std::vector<Q> p{0, 1};
  const auto leaf = leaf_series(F, p, 80);
  const auto L = AffinePoly::parse("y - 1 - x", 2);
  const auto ord = ord_along_leaf(L, leaf);
  const auto y1 = AffinePoly::parse("y - 1", 2);
  const auto x = AffinePoly::parse("x", 2);
  const int o_y1 = ord_along_leaf(y1, leaf).order, o_x = ord_along_leaf(x, leaf).order;
  const bool mult = ord_along_leaf(L * y1, leaf).order == ord.order + o_y1 &&
                    ord_along_leaf(L * L * x, leaf).order == 2 * ord.order + o_x &&
                    ord_along_leaf(y1 * y1 * y1, leaf).order == 3 * o_y1;
  const bool ord_ok = ord.order == 2 && ord.leading == Q(1, 2);
  const auto zl = zero_lemma_scan(F, p, 6, 3, 80);
  std::string orders;
  for (const auto& d : zl.degrees) orders += (orders.empty() ? "" : ",") + std::to_string(d.max_order);
  return {residual_bad == 0 && ord_ok && mult && zl.slope <= 2.5,
          fmt::format("ODE residual zero on {}/{} fixtures at N = 80; ord(y - 1 - x) = {} with c = {}; "
                      "multiplicativity {}; zero-lemma max orders [{}], slope {:.3f} (<= 2.5)",
                      fixtures.size() - residual_bad, fixtures.size(), ord.order, to_string(ord.leading),
                      mult ? "exact" : "BROKEN", orders, zl.slope)};
}

// ---------------------------------------------------------------- 9

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome reproducibility() {
  struct Run {
    std::string sub, conf, format, extra_a, extra_b;
  };
  const std::vector<Run> runs{
      {"census", "census_moment.conf", "json", "", ""},
      {"census", "census_moment.conf", "csv", "", ""},
      {"census", "census_exp.conf", "json", "", ""},
      {"bloch-cartan", "bloch_exceptional.conf", "json", "--jobs 1", "--jobs 3"},
      {"bloch-cartan", "bloch_small_norm.conf", "csv", "--seed 99", "--seed 99 --jobs 2"},
      {"bp-experiment", "bp_moment.conf", "json", "", ""},
  };
  int identical = 0, failures = 0;
  std::string hashes;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    std::string files[2];
    bool ok = true;
    for (int k = 0; k < 2; ++k) {
      files[k] = fmt::format("/tmp/ratarc_accept_{}_{}.{}", i, k, r.format);
      std::remove(files[k].c_str());
      const std::string cmd = fmt::format("{} {} --config {}/{} --format {} --out {} {} >/dev/null 2>&1", RATARC_CLI,
                                          r.sub, RATARC_CONFIGS, r.conf, r.format, files[k],
                                          k == 0 ? r.extra_a : r.extra_b);
      const int status = std::system(cmd.c_str());
      ok = ok && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    }
    const std::string a = slurp(files[0]), b = slurp(files[1]);
    const std::uint64_t ha = fnv1a(a), hb = fnv1a(b);
    if (ok && !a.empty() && ha == hb && a == b)
      ++identical;
    else
      ++failures;
    if (i < 2) hashes += fmt::format("{}{:016x}", hashes.empty() ? "" : " ", ha);
    for (const auto& f : files) std::remove(f.c_str());
  }
  return {failures == 0, fmt::format("{}/{} paired CLI runs byte-identical (fnv1a {} ...)", identical, runs.size(),
                                     hashes)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Liouville exactness", liouville_exactness},
      {"zero counting", zero_counting},
      {"degree bound", degree_bound},
      {"Bloch-Cartan area", bloch_cartan},
      {"small-norm area", small_norm},
      {"Siegel construction", siegel},
      {"census fixtures", census_fixtures},
      {"foliation", foliation},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failed;
    std::cout << fmt::format("{} criterion {}: {} | {} [{:.1f}s]", out.pass ? "PASS" : "FAIL", i + 1,
                             criteria[i].first, out.detail, secs)
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failed, criteria.size()) << std::endl;
  return failed == 0 ? 0 : 1;
}
