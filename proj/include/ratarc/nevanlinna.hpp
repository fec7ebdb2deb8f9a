#pragma once

#include <complex>

#include "ratarc/arc.hpp"
#include "ratarc/section.hpp"

namespace ratarc {

/// Density of the pulled-back Fubini-Study Chern form of O(1) with respect to
/// Lebesgue measure: (|x|^2 |x'|^2 - |<x', x>|^2) / (pi |x|^4).
double chern_density(const AnalyticArc& arc, Complex z);

/// Nevanlinna characteristic of O(1) (Fubini-Study) on the disk of radius r with
/// base point 0: integral over |w| < r of log(r/|w|) times the Chern density.
/// Radial tanh-sinh quadrature, angular trapezoid with quad points.
double characteristic(const AnalyticArc& arc, double r, int quad = 64);

/// Characteristic on the disk of radius R with base point w0 (|w0| < R): the
/// integral of g_R(w0, w) times the Chern density, computed by pulling back
/// through the disk automorphism sending 0 to w0.
double characteristic_at(const AnalyticArc& arc, double R, Complex w0, int quad = 64);

/// Independent route for base point 0: mean over |z| = r of log|x(z)| - log|x(0)|.
double characteristic_boundary(const AnalyticArc& arc, double r);

struct FMTReport {
  double characteristic = 0.0;  // d * T(r)
  double boundary = 0.0;        // mean over |z| = r of log ||phi^* s||
  double interior = 0.0;        // sum over zeros 0 < |a| < r of log(r / |a|)
  double point = 0.0;           // log ||s||(phi(0)), or the jet term when s vanishes there
  double residual = 0.0;
  int jet_order = 0;
  double jet_constant = 0.0;
  double radius = 0.0;
};

/// First Main Theorem on the disk of radius r with base point 0 and the
/// Fubini-Study metric. When phi^* s vanishes to order i at 0 the point term is
/// log|h(0)| - d log|x(0)| + i * jet_constant, where phi^* s = z^i h.
FMTReport fmt_residual(const SectionPoly& s, const AnalyticArc& arc, double r, int quad = 64,
                       double jet_constant = 0.0);

/// Solves the First Main Theorem for the jet constant on s = X1, arc (1 : z).
double calibrate_jet_constant(double r, int quad = 64);

}  // namespace ratarc
