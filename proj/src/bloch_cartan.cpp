#include "ratarc/bloch_cartan.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

#include "ratarc/contour.hpp"
#include "ratarc/errors.hpp"
#include "ratarc/estimates.hpp"

namespace ratarc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counts indices k in [0, samples) with hit(k), split across jobs.
long parallel_count(long samples, int jobs, const std::function<bool(long)>& hit) {
  jobs = std::max(1, jobs);
  std::vector<long> partial(jobs, 0);
  auto work = [&](int j) {
    const long lo = samples * j / jobs, hi = samples * (j + 1) / jobs;
    long c = 0;
    for (long k = lo; k < hi; ++k) c += hit(k) ? 1 : 0;
    partial[j] = c;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  long total = 0;
  for (long c : partial) total += c;
  return total;
}

AreaEstimate monte_carlo(double region_area, long hits, long samples, std::uint64_t seed, double bound) {
  AreaEstimate est;
  const double p = static_cast<double>(hits) / samples;
  est.value = region_area * p;
  est.stderr_ = region_area * std::sqrt(p * (1.0 - p) / samples);
  est.method = AreaMethod::MonteCarlo;
  est.seed = seed;
  est.samples = samples;
  est.bound = bound;
  est.holds = est.value - 3.0 * est.stderr_ <= bound;
  return est;
}

AreaEstimate disk_sublevel_mc(const Holomorphic& f, double r, double tau, double bound, long samples,
                              std::uint64_t seed, int jobs) {
  if (samples < 1) throw PreconditionError("small_norm_area: samples must be positive");
  const CounterRng rng(seed);
  const long hits = parallel_count(samples, jobs, [&](long k) {
    const double u = rng.uniform(2 * static_cast<std::uint64_t>(k));
    const double v = rng.uniform(2 * static_cast<std::uint64_t>(k) + 1);
    const Complex z = std::polar(r * std::sqrt(u), 2.0 * kPi * v);
    return std::log(std::abs(f(z))) < tau;
  });
  return monte_carlo(kPi * r * r, hits, samples, seed, bound);
}

void check_small_norm_args(double r, double eta) {
  if (!(r > 0.0 && r < 1.0 / 3.0)) throw PreconditionError("small_norm_area: need 0 < r < 1/3");
  if (!(eta > 0.0 && eta < 1.0)) throw PreconditionError("small_norm_area: need 0 < eta < 1");
}

double eta_factor(double eta) { return 2.0 + std::log(1.0 / eta) / std::log(1.5); }

double sup_log_on(const Holomorphic& f, double radius) {
  return circle_max([&](Complex z) { return std::log(std::abs(f(z))); }, radius, 1 << 14);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t counter) const { return splitmix64(splitmix64(seed_) ^ counter); }

double CounterRng::uniform(std::uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

std::string to_string(AreaMethod m) { return m == AreaMethod::Grid ? "grid" : "monte-carlo"; }

Box enclosing_box(const RootConfig& cfg) {
  if (cfg.roots.empty()) throw PreconditionError("root configuration must be nonempty");
  Box b{cfg.roots[0].real(), cfg.roots[0].real(), cfg.roots[0].imag(), cfg.roots[0].imag()};
  for (const auto& a : cfg.roots) {
    b.x0 = std::min(b.x0, a.real());
    b.x1 = std::max(b.x1, a.real());
    b.y0 = std::min(b.y0, a.imag());
    b.y1 = std::max(b.y1, a.imag());
  }
  b.x0 -= cfg.H;
  b.x1 += cfg.H;
  b.y0 -= cfg.H;
  b.y1 += cfg.H;
  return b;
}

AreaEstimate exceptional_area(const RootConfig& cfg, const Box& bbox, long samples, std::uint64_t seed, int jobs) {
  if (cfg.roots.empty()) throw PreconditionError("root configuration must be nonempty");
  if (!(cfg.H > 0.0)) throw PreconditionError("exceptional_area: H must be positive");
  if (samples < 10000) throw PreconditionError("exceptional_area: samples must be >= 10^4");
  const Box need = enclosing_box(cfg);
  if (bbox.x0 > need.x0 || bbox.x1 < need.x1 || bbox.y0 > need.y0 || bbox.y1 < need.y1)
    throw PreconditionError("exceptional_area: bounding box too small");
  const double n = static_cast<double>(cfg.roots.size());
  const double level = std::pow(cfg.H / (2.0 * kE), 2.0 * n);
  const CounterRng rng(seed);
  const long hits = parallel_count(samples, jobs, [&](long k) {
    const double x = bbox.x0 + (bbox.x1 - bbox.x0) * rng.uniform(2 * static_cast<std::uint64_t>(k));
    const double y = bbox.y0 + (bbox.y1 - bbox.y0) * rng.uniform(2 * static_cast<std::uint64_t>(k) + 1);
    const Complex z(x, y);
    double prod = 1.0;
    for (const auto& a : cfg.roots) prod *= std::norm(z - a);
    return prod <= level;
  });
  return monte_carlo(bbox.area(), hits, samples, seed, kPi * cfg.H * cfg.H);
}

SmallNormThreshold small_norm_threshold(const Holomorphic& f, double r, double eta) {
  SmallNormThreshold t;
  t.sup_log = sup_log_on(f, 3.0 * r);
  t.value = -eta_factor(eta) * t.sup_log + 3.0 * std::log(std::abs(f(0.0)));
  return t;
}

AreaEstimate small_norm_area(const Holomorphic& f, double r, double eta, long samples, std::uint64_t seed, int jobs) {
  check_small_norm_args(r, eta);
  if (std::abs(f(0.0)) == 0.0)
    throw PreconditionError("small_norm_area: f(0) = 0; use small_norm_area_vanishing");
  const double tau = small_norm_threshold(f, r, eta).value;
  return disk_sublevel_mc(f, r, tau, 4.0 * kPi * kE * kE * eta * eta, samples, seed, jobs);
}

AreaEstimate small_norm_area_grid(const Holomorphic& f, double r, double eta, int grid) {
  check_small_norm_args(r, eta);
  if (grid < 2) throw PreconditionError("small_norm_area_grid: grid must be >= 2");
  if (std::abs(f(0.0)) == 0.0)
    throw PreconditionError("small_norm_area: f(0) = 0; use small_norm_area_vanishing");
  const double tau = small_norm_threshold(f, r, eta).value;
  const double h = 2.0 * r / grid;
  long hits = 0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Complex z(-r + (i + 0.5) * h, -r + (j + 0.5) * h);
      if (std::abs(z) >= r) continue;
      if (std::log(std::abs(f(z))) < tau) ++hits;
    }
  AreaEstimate est;
  est.value = hits * h * h;
  est.method = AreaMethod::Grid;
  est.samples = static_cast<long>(grid) * grid;
  est.bound = 4.0 * kPi * kE * kE * eta * eta;
  est.holds = est.value <= est.bound;
  return est;
}

VanishingSplit split_vanishing(const Holomorphic& f, double r, std::optional<int> order) {
  VanishingSplit out;
  const auto& taylor = f.taylor();
  if (order) {
    out.order = *order;
  } else if (taylor) {
    std::size_t k = 0;
    while (k < taylor->size() && (*taylor)[k] == 0.0) ++k;
    if (k == taylor->size()) throw PreconditionError("vanishing order exceeds the series truncation");
    out.order = static_cast<int>(k);
  } else {
    out.order = count_zeros(f, r / 10.0).count;
  }
  if (out.order < 0) throw PreconditionError("vanishing order must be nonnegative");
  if (taylor && static_cast<std::size_t>(out.order) < taylor->size()) {
    out.h0 = (*taylor)[out.order];
  } else {
    const double rho = r / 20.0;
    constexpr int kPoints = 256;
    Complex acc = 0.0;
    for (int k = 0; k < kPoints; ++k) {
      const Complex z = std::polar(rho, 2.0 * kPi * k / kPoints);
      acc += f(z) / std::pow(z, out.order);
    }
    out.h0 = acc / static_cast<double>(kPoints);
  }
  if (std::abs(out.h0) == 0.0) throw PreconditionError("h(0) vanishes; order of vanishing was underestimated");
  return out;
}

AreaEstimate small_norm_area_vanishing(const Holomorphic& f, double r, double eta, long samples, std::uint64_t seed,
                                       std::optional<int> order, int jobs) {
  check_small_norm_args(r, eta);
  const VanishingSplit split = split_vanishing(f, r, order);
  const double sup_log = sup_log_on(f, 3.0 * r);
  const double tau =
      -eta_factor(eta) * sup_log + 3.0 * (std::log(std::abs(split.h0)) + split.order * std::log(3.0 * r));
  return disk_sublevel_mc(f, r, tau, 4.0 * kPi * kE * kE * eta * eta, samples, seed, jobs);
}

}  // namespace ratarc
