#include "ratarc/degree_bound.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ratarc/contour.hpp"
#include "ratarc/errors.hpp"
#include "ratarc/holomorphic.hpp"
#include "ratarc/nevanlinna.hpp"

namespace ratarc {

std::vector<Complex> base_points(const DiskDomain& domain, std::span<const Complex> W, int count) {
  std::vector<Complex> pts;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k)
    pts.push_back(std::polar(domain.r * std::sqrt((k + 0.5) / count), golden_angle * k));
  pts.insert(pts.end(), W.begin(), W.end());
  return pts;
}

double uniform_characteristic(const AnalyticArc& arc, const DiskDomain& domain, std::span<const Complex> W, int count,
                              int quad) {
  double best = 0.0;
  for (const auto& w0 : base_points(domain, W, count))
    best = std::max(best, characteristic_at(arc, domain.R, w0, quad));
  return best;
}

DegreeBoundReport degree_bound_check(const SectionPoly& s, const AnalyticArc& arc, const DiskDomain& domain,
                                     std::span<const Complex> W, std::optional<double> b1, int sup_samples) {
  if (W.empty()) throw PreconditionError("degree_bound_check: W must be nonempty");
  for (const auto& w : W)
    if (!(std::abs(w) < domain.r)) throw DomainError("degree_bound_check: W must lie in U");
  DegreeBoundReport rep;
  const Holomorphic f = pullback(s, arc);
  const double d = s.degree();

  auto log_norm = [&](Complex z) { return std::log(pullback_norm(s, arc, z, Metric::FubiniStudy)); };

  // Identically zero on the arc: tiny compared to the coefficient scale at
  // every probe point.
  bool all_tiny = true;
  for (int k = 0; k < 16 && all_tiny; ++k) {
    const Complex z = std::polar(0.5 * domain.r, 2.0 * std::numbers::pi * (k + 0.31) / 16);
    const auto x = arc.eval(z);
    double scale = 0.0;
    for (const auto& [e, c] : s.terms()) {
      double m = std::abs(c.get_d());
      for (std::size_t i = 0; i < x.size(); ++i) m *= std::pow(std::abs(x[i]), e[i]);
      scale += m;
    }
    all_tiny = std::abs(f(z)) <= 1e-12 * scale;
  }
  if (all_tiny) {
    rep.identically_zero = true;
    rep.holds = true;
    return rep;
  }

  const ZeroCountReport zc = count_zeros(f, domain.r);
  rep.degree_u = zc.count;
  rep.radius = zc.radius;
  rep.a = green_minimum(DiskDomain(zc.radius, domain.R));
  rep.b1 = b1 ? *b1 : uniform_characteristic(arc, domain, W);

  rep.log_w = -std::numeric_limits<double>::infinity();
  for (const auto& w : W) rep.log_w = std::max(rep.log_w, log_norm(w));

  double log_sup = std::log(sup_norm(s, Metric::FubiniStudy, sup_samples));
  constexpr int kBoundary = 1024;
  for (int k = 0; k < kBoundary; ++k)
    log_sup = std::max(log_sup, log_norm(std::polar(domain.R, 2.0 * std::numbers::pi * k / kBoundary)));
  rep.log_sup = std::max(log_sup, rep.log_w);

  rep.rhs = (rep.b1 * d + rep.log_sup - rep.log_w) / rep.a;
  rep.holds = rep.degree_u <= rep.rhs;
  return rep;
}

}  // namespace ratarc
