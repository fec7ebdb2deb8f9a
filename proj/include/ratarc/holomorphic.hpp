#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "ratarc/arc.hpp"
#include "ratarc/section.hpp"

namespace ratarc {

/// A holomorphic function on a disk, given as an evaluator. Polynomials keep
/// their coefficients so leading-order information is available exactly.
class Holomorphic {
 public:
  using Fn = std::function<Complex(Complex)>;

  explicit Holomorphic(Fn f);
  Holomorphic(Fn f, Fn derivative);

  /// Coefficients in ascending order.
  static Holomorphic polynomial(std::vector<Complex> coefficients);
  static Holomorphic from_roots(const std::vector<Complex>& roots, Complex leading = 1.0);
  static Holomorphic constant(Complex c);

  Complex operator()(Complex z) const { return f_(z); }
  /// Exact for polynomials and explicit derivatives, otherwise a 16-point
  /// Cauchy-integral stencil of radius 1e-3.
  Complex derivative(Complex z) const;

  const std::optional<std::vector<Complex>>& taylor() const { return taylor_; }

 private:
  Fn f_;
  Fn df_;
  std::optional<std::vector<Complex>> taylor_;
};

/// z -> s(phi(z)) in the trivialization x_0 = 1.
Holomorphic pullback(const SectionPoly& s, const AnalyticArc& arc);

/// Gradient of s at a complex point.
std::vector<Complex> section_gradient(const SectionPoly& s, std::span<const Complex> x);

}  // namespace ratarc
