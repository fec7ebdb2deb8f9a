#include "ratarc/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ratarc/contour.hpp"
#include "ratarc/errors.hpp"

namespace ratarc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double golden_max(const std::function<double(double)>& g, double a, double b) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + phi * (b - a);
      gd = g(d);
    }
  }
  return std::max(gc, gd);
}

}  // namespace

double circle_max(const std::function<double(Complex)>& g, double r, int samples) {
  if (samples < 8) throw PreconditionError("circle_max: samples must be >= 8");
  std::vector<std::pair<double, int>> values(samples);
  for (int k = 0; k < samples; ++k) values[k] = {g(std::polar(r, kTwoPi * k / samples)), k};
  std::partial_sort(values.begin(), values.begin() + std::min(4, samples), values.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
  double best = values.front().first;
  const double step = kTwoPi / samples;
  for (int j = 0; j < std::min(4, samples); ++j) {
    const double theta = step * values[j].second;
    best = std::max(best, golden_max([&](double t) { return g(std::polar(r, t)); }, theta - step, theta + step));
  }
  return best;
}

BoundCheck borel_caratheodory_check(const Holomorphic& f, double r, double R) {
  if (!(0.0 < r && r < R)) throw PreconditionError("borel_caratheodory_check: need 0 < r < R");
  const Complex f0 = f(0.0);
  const double A = circle_max([&](Complex z) { return f(z).real(); }, R);
  BoundCheck out;
  out.lhs = circle_max([&](Complex z) { return std::abs(f(z)); }, r);
  out.rhs = (A - f0.real()) * 2.0 * r / (R - r) + std::abs(f0);
  out.margin = out.rhs - out.lhs;
  out.holds = out.margin >= -1e-9;
  return out;
}

BoundCheck nonvanishing_lower_check(const Holomorphic& f, double r, double R, int grid) {
  if (!(0.0 < r && r < R)) throw PreconditionError("nonvanishing_lower_check: need 0 < r < R");
  if (grid < 2) throw PreconditionError("nonvanishing_lower_check: grid must be >= 2");
  if (count_zeros(f, R).count != 0) throw PreconditionError("nonvanishing_lower_check: f has a zero in the R-disk");
  const double log_f0 = std::log(std::abs(f(0.0)));
  const double sup_log = circle_max([&](Complex z) { return std::log(std::abs(f(z))); }, R);
  BoundCheck out;
  out.rhs = -(2.0 * r / (R - r)) * sup_log + ((R + r) / (R - r)) * log_f0;
  double lowest = log_f0;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= grid; ++j) {
      const Complex z(-r + 2.0 * r * i / grid, -r + 2.0 * r * j / grid);
      if (std::abs(z) > r) continue;
      lowest = std::min(lowest, std::log(std::abs(f(z))));
    }
  lowest = std::min(lowest, -circle_max([&](Complex z) { return -std::log(std::abs(f(z))); }, r));
  out.lhs = lowest;
  out.margin = out.lhs - out.rhs;
  out.holds = out.margin >= -1e-9;
  return out;
}

}  // namespace ratarc
