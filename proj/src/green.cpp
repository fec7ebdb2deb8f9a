#include "ratarc/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ratarc/errors.hpp"

namespace ratarc {

DiskDomain::DiskDomain(double inner, double ambient) : r(inner), R(ambient) {
  if (!(inner > 0.0) || !(inner < ambient)) throw PreconditionError("disk domain requires 0 < r < R");
}

double green_disk(Complex z, Complex w, double R) {
  if (!(std::abs(z) < R) || !(std::abs(w) < R)) throw DomainError("green_disk: points must lie inside the disk");
  if (z == w) throw DomainError("diagonal singularity");
  return std::log(std::abs(R * R - std::conj(w) * z)) - std::log(R * std::abs(z - w));
}

double green_distance_combination(Complex z, Complex w, double R) {
  if (!(std::abs(z) < R) || !(std::abs(w) < R)) throw DomainError("green_distance: points must lie inside the disk");
  return std::log(std::abs(R * R - std::conj(w) * z)) - std::log(R);
}

GreenDefect green_distance_defect(const DiskDomain& domain, int grid) {
  if (grid < 8) throw PreconditionError("green_distance_defect: grid must be >= 8");
  std::vector<Complex> pts;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Complex z(-domain.r + (2.0 * i + 1.0) * domain.r / grid, -domain.r + (2.0 * j + 1.0) * domain.r / grid);
      if (std::abs(z) < domain.r) pts.push_back(z);
    }
  GreenDefect out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0};
  for (const auto& z : pts)
    for (const auto& w : pts) {
      const double v = z == w ? green_distance_combination(z, w, domain.R)
                              : std::log(std::abs(z - w)) + green_disk(z, w, domain.R);
      out.min = std::min(out.min, v);
      out.max = std::max(out.max, v);
      ++out.pairs;
    }
  return out;
}

double green_minimum(const DiskDomain& domain) {
  const double r = domain.r;
  auto g = [&](double theta) { return green_disk(Complex(r, 0.0), std::polar(r, theta), domain.R); };
  // theta = 0 is the pole; scan the open interval then golden-section refine.
  constexpr int kScan = 720;
  double best_theta = std::numbers::pi;
  double best = g(best_theta);
  for (int k = 1; k < kScan; ++k) {
    const double t = 2.0 * std::numbers::pi * k / kScan;
    const double v = g(t);
    if (v < best) {
      best = v;
      best_theta = t;
    }
  }
  double a = best_theta - 2.0 * std::numbers::pi / kScan;
  double b = best_theta + 2.0 * std::numbers::pi / kScan;
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = g(d);
    }
  }
  return std::min({best, fc, fd});
}

}  // namespace ratarc
