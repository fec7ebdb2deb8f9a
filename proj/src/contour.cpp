#include "ratarc/contour.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "ratarc/errors.hpp"

namespace ratarc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::optional<ZeroCountReport> count_at(const Holomorphic& f, double r) {
  Complex previous;
  bool have_previous = false;
  for (int n = 64; n <= (1 << 17); n *= 2) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex z = std::polar(r, kTwoPi * k / n);
      const Complex fz = f(z);
      if (std::abs(fz) == 0.0 || !std::isfinite(std::abs(fz))) return std::nullopt;
      acc += z * f.derivative(z) / fz;
    }
    acc /= static_cast<double>(n);
    if (have_previous && std::abs(acc - previous) < 1e-9) {
      const double rounded = std::round(acc.real());
      ZeroCountReport rep;
      rep.count = static_cast<int>(rounded);
      rep.residual = std::abs(acc - Complex(rounded, 0.0));
      rep.radius = r;
      rep.quad_points = n;
      if (rep.residual >= 0.5 || rep.count < 0) return std::nullopt;
      return rep;
    }
    previous = acc;
    have_previous = true;
  }
  return std::nullopt;
}

}  // namespace

ZeroCountReport count_zeros(const Holomorphic& f, double r) {
  if (!(r > 0.0)) throw PreconditionError("count_zeros: radius must be positive");
  for (double radius : {r, r * (1.0 + 1e-3), r * (1.0 - 1e-3)}) {
    if (auto rep = count_at(f, radius)) return *rep;
  }
  throw ContourError("contour too close to a zero; retry with perturbed radius");
}

PeriodicMean circle_mean(const std::function<double(Complex)>& g, double r, double tol, int start_points,
                         int max_points) {
  PeriodicMean out;
  // Reuse the previous level's samples: the doubled grid adds the midpoints.
  int n = start_points;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += g(std::polar(r, kTwoPi * k / n));
  double previous = sum / n;
  while (n < max_points) {
    double mid = 0.0;
    for (int k = 0; k < n; ++k) mid += g(std::polar(r, kTwoPi * (k + 0.5) / n));
    sum += mid;
    n *= 2;
    const double current = sum / n;
    if (std::abs(current - previous) < tol) {
      out.value = current;
      out.points = n;
      out.converged = true;
      return out;
    }
    previous = current;
  }
  out.value = previous;
  out.points = n;
  return out;
}

double jensen_residual(const Holomorphic& f, std::span<const Complex> zeros, double r) {
  const Complex f0 = f(0.0);
  if (std::abs(f0) == 0.0) throw PreconditionError("jensen_residual: f(0) = 0; factor out z^i first");
  const auto mean = circle_mean([&](Complex z) { return std::log(std::abs(f(z))); }, r);
  double zero_sum = 0.0;
  for (const auto& a : zeros)
    if (std::abs(a) < r) zero_sum += std::log(r / std::abs(a));
  return std::abs(std::log(std::abs(f0)) - mean.value + zero_sum);
}

Complex poisson_reconstruct(const Holomorphic& f, double R, Complex z, int quad_points) {
  if (quad_points < 16) throw PreconditionError("poisson_reconstruct: quad_points must be >= 16");
  if (!(std::abs(z) < R)) throw DomainError("poisson_reconstruct: |z| must be < R");
  Complex acc = 0.0;
  for (int k = 0; k < quad_points; ++k) {
    const Complex zeta = std::polar(R, kTwoPi * k / quad_points);
    acc += f(zeta).real() * (zeta + z) / (zeta - z);
  }
  acc /= static_cast<double>(quad_points);
  return acc + Complex(0.0, f(0.0).imag());
}

namespace {

// Phase increment of f along [a, b], subdividing until each step turns less
// than pi/4. Returns nullopt when |f| vanishes (to working precision) on the path.
std::optional<double> phase_along(const Holomorphic& f, Complex a, Complex fa, Complex b, Complex fb, int depth,
                                  double scale) {
  const double tiny = 1e-13 * scale;
  if (std::abs(fa) <= tiny || std::abs(fb) <= tiny) return std::nullopt;
  const double delta = std::arg(fb / fa);
  const Complex m = 0.5 * (a + b);
  const Complex fm = f(m);
  // Besides a small turn, ask f to be close to linear on the step: a multiple
  // zero passing near the segment can turn the phase by a full 2 pi between
  // samples without showing up in arg(fb / fa).
  const bool linear = std::abs(fm - 0.5 * (fa + fb)) < 0.25 * std::min(std::abs(fa), std::abs(fb));
  if (std::abs(delta) < std::numbers::pi / 4 && linear && depth > 0) return delta;
  if (depth > 48) return std::nullopt;
  auto left = phase_along(f, a, fa, m, fm, depth + 1, scale);
  if (!left) return std::nullopt;
  auto right = phase_along(f, m, fm, b, fb, depth + 1, scale);
  if (!right) return std::nullopt;
  return *left + *right;
}

}  // namespace

namespace {

struct Rect {
  double x0, x1, y0, y1;
  Complex center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  double width() const { return std::max(x1 - x0, y1 - y0); }
};

int rect_zero_count(const Holomorphic& f, const Rect& rc) {
  const std::array<Complex, 4> corners{Complex(rc.x1, rc.y0), Complex(rc.x1, rc.y1), Complex(rc.x0, rc.y1),
                                       Complex(rc.x0, rc.y0)};
  std::array<Complex, 4> values;
  double scale = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    values[i] = f(corners[i]);
    scale = std::max(scale, std::abs(values[i]));
  }
  scale = std::max(scale, 1e-300);
  double total = 0.0;
  constexpr int kPieces = 8;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    Complex a = corners[i], fa = values[i];
    for (int p = 1; p <= kPieces; ++p) {
      const Complex b = corners[i] + (corners[j] - corners[i]) * (static_cast<double>(p) / kPieces);
      const Complex fb = p == kPieces ? values[j] : f(b);
      auto d = phase_along(f, a, fa, b, fb, 0, scale);
      if (!d) return -1;
      total += *d;
      a = b;
      fa = fb;
    }
  }
  const double winding = total / kTwoPi;
  const double rounded = std::round(winding);
  if (std::abs(winding - rounded) > 0.1 || rounded < 0) return -1;
  return static_cast<int>(rounded);
}

void refine(const Holomorphic& f, const Rect& rc, int count, double box, int level, std::vector<LocatedZero>& out) {
  if (count == 0) return;
  if (rc.width() <= box) {
    out.push_back({rc.center(), count});
    return;
  }
  static constexpr std::array<double, 5> kOffsets{0.0137, -0.0211, 0.0371, -0.0443, 0.0617};
  const Complex c = rc.center();
  for (double offset : kOffsets) {
    const double sgn = level % 2 == 0 ? 1.0 : -1.0;
    const double sx = c.real() + sgn * offset * (rc.x1 - rc.x0);
    const double sy = c.imag() - sgn * 0.7 * offset * (rc.y1 - rc.y0);
    const std::array<Rect, 4> kids{Rect{rc.x0, sx, rc.y0, sy}, Rect{sx, rc.x1, rc.y0, sy}, Rect{rc.x0, sx, sy, rc.y1},
                                   Rect{sx, rc.x1, sy, rc.y1}};
    std::array<int, 4> counts{};
    int total = 0;
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
      counts[i] = rect_zero_count(f, kids[i]);
      if (counts[i] < 0) {
        ok = false;
        break;
      }
      total += counts[i];
    }
    if (!ok || total != count) continue;
    for (std::size_t i = 0; i < 4; ++i) refine(f, kids[i], counts[i], box, level + 1, out);
    return;
  }
  out.push_back({c, count});
}

}  // namespace

int square_zero_count(const Holomorphic& f, Complex center, double half_side) {
  return rect_zero_count(f, Rect{center.real() - half_side, center.real() + half_side, center.imag() - half_side,
                                 center.imag() + half_side});
}

std::vector<LocatedZero> locate_zeros(const Holomorphic& f, double r, double box) {
  const Complex center(0.0071 * r, -0.0053 * r);
  double half = 1.0137 * r;
  int count = square_zero_count(f, center, half);
  if (count < 0) {
    half *= 1.001;
    count = square_zero_count(f, center, half);
  }
  if (count < 0) throw ContourError("locate_zeros: outer square passes through a zero");
  std::vector<LocatedZero> all;
  refine(f, Rect{center.real() - half, center.real() + half, center.imag() - half, center.imag() + half}, count, box,
         0, all);
  std::vector<LocatedZero> inside;
  for (const auto& z : all)
    if (std::abs(z.z) < r) inside.push_back(z);
  return inside;
}

}  // namespace ratarc
