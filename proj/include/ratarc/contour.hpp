#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ratarc/holomorphic.hpp"

namespace ratarc {

struct ZeroCountReport {
  int count = 0;
  double residual = 0.0;  // distance of the contour integral from the integer count
  double radius = 0.0;    // radius actually used (perturbed on retry)
  int quad_points = 0;
};

/// Number of zeros of f in |z| < r by the argument principle,
/// (1/2 pi i) closed integral of f'/f, composite trapezoid with the point count
/// doubled until successive values agree to 1e-9. Retries at r(1 +- 1e-3)
/// before throwing ContourError.
ZeroCountReport count_zeros(const Holomorphic& f, double r);

struct PeriodicMean {
  double value = 0.0;
  int points = 0;
  bool converged = false;
};

/// (1/2 pi) integral over theta of g(r e^{i theta}), trapezoid doubled until two
/// successive values agree to tol.
PeriodicMean circle_mean(const std::function<double(Complex)>& g, double r, double tol = 1e-12,
                         int start_points = 64, int max_points = 1 << 18);

/// |log|f(0)| - mean log|f(r e^{i theta})| + sum_{|a|<r} log(r/|a|)| for the
/// supplied zeros (with repetition for multiplicity).
double jensen_residual(const Holomorphic& f, std::span<const Complex> zeros, double r);

/// Poisson-Schwarz reconstruction of f(z) from Re f on |zeta| = R plus i Im f(0).
Complex poisson_reconstruct(const Holomorphic& f, double R, Complex z, int quad_points);

struct LocatedZero {
  Complex z;
  int multiplicity = 1;
};

/// Zeros of f in |z| < r located by quadtree subdivision with an
/// argument-principle count per square, refined to boxes of side <= box.
std::vector<LocatedZero> locate_zeros(const Holomorphic& f, double r, double box = 1e-8);

/// Argument-principle count inside an axis-aligned square by tracking the
/// phase of f along its boundary. Returns -1 when the boundary passes too
/// close to a zero.
int square_zero_count(const Holomorphic& f, Complex center, double half_side);

}  // namespace ratarc
