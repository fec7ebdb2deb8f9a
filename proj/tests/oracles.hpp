#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance gate. None of these call into the library's numerical code.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// Roots of an integer polynomial (ascending coefficients) from the
// eigenvalues of its companion matrix.
inline std::vector<Complex> companion_roots(const std::vector<long>& c) {
  std::size_t deg = c.size() - 1;
  while (deg > 0 && c[deg] == 0) --deg;
  if (deg == 0) return {};
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) M(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) M(i, deg - 1) = -static_cast<double>(c[i]) / c[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

inline int count_inside(const std::vector<Complex>& roots, double r) {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](Complex z) { return std::abs(z) < r; }));
}

inline double distance_to_circle(const std::vector<Complex>& roots, double r) {
  double best = 1e300;
  for (const auto& z : roots) best = std::min(best, std::abs(std::abs(z) - r));
  return best;
}

struct IntPoly {
  std::vector<long> coeffs;  // ascending, leading nonzero
  std::vector<Complex> roots;
};

// Random integer polynomial with degree in [1, max_degree], coefficients in
// [-bound, bound], nonzero constant term and nonzero leading coefficient.
inline IntPoly random_int_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg_dist(1, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  IntPoly p;
  const int deg = deg_dist(rng);
  for (int k = 0; k <= deg; ++k) p.coeffs.push_back(coef(rng));
  while (p.coeffs.front() == 0) p.coeffs.front() = coef(rng);
  while (p.coeffs.back() == 0) p.coeffs.back() = coef(rng);
  p.roots = companion_roots(p.coeffs);
  return p;
}

inline Complex horner(const std::vector<long>& c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + static_cast<double>(*it);
  return acc;
}

inline std::vector<Complex> to_complex(const std::vector<long>& c) {
  return std::vector<Complex>(c.begin(), c.end());
}

// Jensen's formula evaluated from the roots alone:
// mean log|f(r e^{it})| = log|lead| + sum max(log|a|, log r).
inline double jensen_circle_mean(const IntPoly& p, double r) {
  double acc = std::log(std::abs(static_cast<double>(p.coeffs.back())));
  for (const auto& a : p.roots) acc += std::max(std::log(std::abs(a)), std::log(r));
  return acc;
}

}  // namespace oracle
