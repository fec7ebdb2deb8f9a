#pragma once

#include <complex>

namespace ratarc {

using Complex = std::complex<double>;

/// Concentric disks U = {|z| < r} inside V = {|z| < R}.
struct DiskDomain {
  double r;
  double R;
  DiskDomain(double inner, double ambient);
};

/// Green function of the disk of radius R with pole at w:
/// g(z, w) = log|R^2 - conj(w) z| - log(R |z - w|). Symmetric, positive inside,
/// zero on the boundary.
double green_disk(Complex z, Complex w, double R);

/// log|z - w| + g_V(z, w) = log|R^2 - conj(w) z| - log R, the continuous
/// extension across the diagonal.
double green_distance_combination(Complex z, Complex w, double R);

struct GreenDefect {
  double min;
  double max;
  long pairs;
};

/// Extremes of log|z - w| + g_V(z, w) over a grid x grid lattice of U x U,
/// including diagonal pairs through the continuous extension. grid >= 8.
GreenDefect green_distance_defect(const DiskDomain& domain, int grid);

/// min over the closure of U x U of g_V, found by reducing to |z| = |w| = r
/// (minimum principle and rotation invariance) and a bounded 1-d search.
double green_minimum(const DiskDomain& domain);

}  // namespace ratarc
