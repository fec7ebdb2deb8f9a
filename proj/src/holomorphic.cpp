#include "ratarc/holomorphic.hpp"

#include <numbers>

#include "ratarc/errors.hpp"

namespace ratarc {

Holomorphic::Holomorphic(Fn f) : f_(std::move(f)) {}

Holomorphic::Holomorphic(Fn f, Fn derivative) : f_(std::move(f)), df_(std::move(derivative)) {}

Holomorphic Holomorphic::polynomial(std::vector<Complex> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  auto value = [c = coefficients](Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  auto deriv = [c = coefficients](Complex z) {
    Complex acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
  };
  Holomorphic h(value, deriv);
  h.taylor_ = std::move(coefficients);
  return h;
}

Holomorphic Holomorphic::from_roots(const std::vector<Complex>& roots, Complex leading) {
  std::vector<Complex> c{leading};
  for (const auto& a : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= a * c[k];
    }
    c = std::move(next);
  }
  return polynomial(std::move(c));
}

Holomorphic Holomorphic::constant(Complex c) { return polynomial({c}); }

Complex Holomorphic::derivative(Complex z) const {
  if (df_) return df_(z);
  constexpr int M = 16;
  constexpr double h = 1e-3;
  Complex acc = 0.0;
  for (int k = 0; k < M; ++k) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * k / M);
    acc += f_(z + h * w) / w;
  }
  return acc / (static_cast<double>(M) * h);
}

std::vector<Complex> section_gradient(const SectionPoly& s, std::span<const Complex> x) {
  std::vector<Complex> grad(x.size(), 0.0);
  for (const auto& [e, c] : s.terms()) {
    const double coeff = c.get_d();
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (e[j] == 0) continue;
      Complex term = coeff * static_cast<double>(e[j]);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const int power = i == j ? e[i] - 1 : e[i];
        for (int k = 0; k < power; ++k) term *= x[i];
      }
      grad[j] += term;
    }
  }
  return grad;
}

Holomorphic pullback(const SectionPoly& s, const AnalyticArc& arc) {
  if (s.dimension() != arc.dimension()) throw PreconditionError("section and arc live in different P^n");
  auto value = [s, arc](Complex z) {
    const auto x = arc.eval(z);
    return s.evaluate(x);
  };
  auto deriv = [s, arc](Complex z) {
    const auto x = arc.eval(z);
    const auto dx = arc.eval_derivative(z);
    const auto g = section_gradient(s, x);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += g[i] * dx[i];
    return acc;
  };
  return Holomorphic(value, deriv);
}

}  // namespace ratarc
