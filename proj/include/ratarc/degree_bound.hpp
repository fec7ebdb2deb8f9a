#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratarc/arc.hpp"
#include "ratarc/green.hpp"
#include "ratarc/section.hpp"

namespace ratarc {

struct DegreeBoundReport {
  bool identically_zero = false;  // phi^* s vanishes on U; nothing to check
  int degree_u = 0;               // zeros of phi^* s in U
  double radius = 0.0;            // inner radius actually used by the zero count
  double a = 0.0;                 // min of g_V over U x U
  double b1 = 0.0;                // measured sup of the characteristic over base points
  double log_sup = 0.0;
  double log_w = 0.0;
  double rhs = 0.0;               // (b1 d + log_sup - log_w) / a
  bool holds = false;
};

/// Vogel-spiral base points in U, followed by the W points.
std::vector<Complex> base_points(const DiskDomain& domain, std::span<const Complex> W, int count = 32);

/// max over base points w0 of the characteristic of O(1) on V with base w0.
double uniform_characteristic(const AnalyticArc& arc, const DiskDomain& domain, std::span<const Complex> W,
                              int count = 32, int quad = 48);

/// deg_U(s) <= (B1 d + log ||s||_sup - log ||s||_W) / a for the Fubini-Study
/// metric. B1 may be supplied to share it across sections on the same arc.
DegreeBoundReport degree_bound_check(const SectionPoly& s, const AnalyticArc& arc, const DiskDomain& domain,
                                     std::span<const Complex> W, std::optional<double> b1 = std::nullopt,
                                     int sup_samples = 512);

}  // namespace ratarc
