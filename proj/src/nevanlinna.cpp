#include "ratarc/nevanlinna.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "ratarc/contour.hpp"
#include "ratarc/errors.hpp"
#include "ratarc/holomorphic.hpp"

namespace ratarc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm2(const std::vector<Complex>& x) {
  double acc = 0.0;
  for (const auto& v : x) acc += std::norm(v);
  return acc;
}

// Integral over |zeta| < R of log(R/|zeta|) * density(zeta).
template <class Density>
double weighted_disk_integral(Density&& density, double R, int quad) {
  if (quad < 8) throw PreconditionError("characteristic: quad must be >= 8");
  auto radial = [&](double rho) {
    if (rho <= 0.0 || rho >= R) return 0.0;
    double ring = 0.0;
    for (int k = 0; k < quad; ++k) ring += density(std::polar(rho, kTwoPi * (k + 0.5) / quad));
    ring *= kTwoPi / quad;
    return rho * std::log(R / rho) * ring;
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(radial, 0.0, R, 1e-10);
}

}  // namespace

double chern_density(const AnalyticArc& arc, Complex z) {
  const auto x = arc.eval(z);
  const auto dx = arc.eval_derivative(z);
  const double xx = norm2(x);
  const double dd = norm2(dx);
  Complex inner = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) inner += dx[i] * std::conj(x[i]);
  const double num = std::max(0.0, xx * dd - std::norm(inner));
  return num / (std::numbers::pi * xx * xx);
}

double characteristic(const AnalyticArc& arc, double r, int quad) { return characteristic_at(arc, r, 0.0, quad); }

double characteristic_at(const AnalyticArc& arc, double R, Complex w0, int quad) {
  if (!(R > 0.0)) throw PreconditionError("characteristic: radius must be positive");
  if (!(std::abs(w0) < R)) throw DomainError("characteristic: base point outside the disk");
  if (arc.dimension() >= 1 && R >= arc.radius()) throw DomainError("characteristic: radius exceeds arc domain");
  const Complex cw = std::conj(w0);
  const double R2 = R * R;
  auto density = [&](Complex zeta) {
    const Complex denom = R2 + cw * zeta;
    const Complex w = R2 * (zeta + w0) / denom;
    const Complex dw = R2 * (R2 - std::norm(w0)) / (denom * denom);
    return chern_density(arc, w) * std::norm(dw);
  };
  return std::max(0.0, weighted_disk_integral(density, R, quad));
}

double characteristic_boundary(const AnalyticArc& arc, double r) {
  const double center = 0.5 * std::log(norm2(arc.eval(0.0)));
  const auto mean = circle_mean([&](Complex z) { return 0.5 * std::log(norm2(arc.eval(z))); }, r);
  return mean.value - center;
}

FMTReport fmt_residual(const SectionPoly& s, const AnalyticArc& arc, double r, int quad, double jet_constant) {
  const Holomorphic f = pullback(s, arc);
  const double d = s.degree();
  FMTReport rep;
  rep.jet_constant = jet_constant;

  // Settle the radius first so every term uses the same circle.
  const ZeroCountReport zc = count_zeros(f, r);
  rep.radius = zc.radius;
  const double rr = zc.radius;

  const auto zeros = locate_zeros(f, rr);
  const double center_tol = 1e-6 * rr;
  double nearest = rr;
  for (const auto& z : zeros) {
    const double m = std::abs(z.z);
    if (m <= center_tol) {
      rep.jet_order += z.multiplicity;
    } else {
      rep.interior += z.multiplicity * std::log(rr / m);
      nearest = std::min(nearest, m);
    }
  }

  rep.characteristic = d * characteristic(arc, rr, quad);
  rep.boundary = circle_mean(
                     [&](Complex z) {
                       const auto x = arc.eval(z);
                       return std::log(std::abs(s.evaluate(x))) - 0.5 * d * std::log(norm2(x));
                     },
                     rr, 1e-11)
                     .value;

  const auto x0 = arc.eval(0.0);
  double log_h0 = 0.0;
  if (rep.jet_order == 0) {
    log_h0 = std::log(std::abs(f(0.0)));
  } else {
    // h(0) = f^{(i)}(0) / i! by a Cauchy integral on a circle free of other zeros.
    const double rho = 0.5 * nearest;
    constexpr int kPoints = 256;
    Complex acc = 0.0;
    for (int k = 0; k < kPoints; ++k) {
      const Complex z = std::polar(rho, kTwoPi * k / kPoints);
      acc += f(z) / std::pow(z, rep.jet_order);
    }
    log_h0 = std::log(std::abs(acc / static_cast<double>(kPoints)));
  }
  rep.point = log_h0 - 0.5 * d * std::log(norm2(x0)) + rep.jet_order * jet_constant;
  rep.residual = std::abs(rep.characteristic + rep.boundary - rep.interior - rep.point);
  return rep;
}

double calibrate_jet_constant(double r, int quad) {
  const AnalyticArc line = moment_arc(1);
  const SectionPoly s = SectionPoly::from_coefficients(1, 1, {0, 1});
  const FMTReport rep = fmt_residual(s, line, r, quad, 0.0);
  // With jet_constant = 0 the defect is exactly jet_order * C.
  return (rep.characteristic + rep.boundary - rep.interior - rep.point) / rep.jet_order;
}

}  // namespace ratarc
