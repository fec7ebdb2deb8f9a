#pragma once

#include <functional>

#include "ratarc/holomorphic.hpp"

namespace ratarc {

struct BoundCheck {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs for upper bounds, lhs - rhs for lower bounds
};

/// Max of g over the circle |z| = r: samples points, then golden-section
/// refinement around the best few.
double circle_max(const std::function<double(Complex)>& g, double r, int samples = 4096);

/// sup over |z| < r of |f| <= (A_R(f) - Re f(0)) * 2r/(R - r) + |f(0)|,
/// with A_R(f) = sup over |z| = R of Re f.
BoundCheck borel_caratheodory_check(const Holomorphic& f, double r, double R);

/// For f without zeros in the closed R-disk:
/// ln|f(z)| >= -(2r/(R-r)) sup_{|w|<R} ln|f| + ((R+r)/(R-r)) ln|f(0)| on |z| <= r,
/// checked on a grid x grid lattice of the r-disk plus its boundary circle.
BoundCheck nonvanishing_lower_check(const Holomorphic& f, double r, double R, int grid = 64);

}  // namespace ratarc
