#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratarc/arc.hpp"
#include "ratarc/projective.hpp"
#include "ratarc/section.hpp"

namespace ratarc {

struct LiouvilleReport {
  ProjectivePoint point;
  int degree = 0;
  BigInt value;             // s at the canonical coordinates, nonzero
  double log_norm = 0.0;    // log |value| - d h(p)   (Max metric)
  double log_sup = 0.0;     // log ||s||_sup (Max metric)
  double bound = 0.0;       // -h(p) (log+ ||s||_sup + d)
  double margin = 0.0;      // log_norm - bound = log|value| + h(p) log+ ||s||_sup
  bool exact = true;        // |value| >= 1, i.e. log_norm >= -d h(p)
  bool holds = false;
};

/// Throws PreconditionError("vanishing; Liouville not applicable") when s(p) = 0.
/// log_sup may be supplied; otherwise it is estimated.
LiouvilleReport liouville_check(const SectionPoly& s, const ProjectivePoint& p,
                                std::optional<double> log_sup = std::nullopt);

struct LiouvilleCorpusReport {
  long points = 0;
  long sections = 0;
  long evaluations = 0;  // nonvanishing pairs
  long vanishing = 0;
  long violations = 0;            // margin < 0
  long exact_violations = 0;      // |s(p)| < 1 with s(p) != 0
  double min_margin = 0.0;
};

/// Canonical points of P^1 with max |x_i| <= bound.
std::vector<ProjectivePoint> p1_points(long bound);

/// Every P^1 point of height <= log(height_bound) against every nonzero
/// binary form of degree <= d_max with |coefficients| <= coeff_bound,
/// in 64-bit integer arithmetic.
LiouvilleCorpusReport liouville_corpus_scan(long height_bound, int d_max, long coeff_bound, int jobs = 1);

struct TypeSReport {
  std::vector<Complex> B;
  double a = 0.0;
  int d_max = 0;
  long coeff_height = 0;
  double rho = 0.0;  // max(0, worst ratio)
  std::optional<SectionPoly> witness;
  double witness_log_norm_b = 0.0;
  double witness_log_sup = 0.0;
  long sections_total = 0;    // nonzero sections up to sign in the scan box
  long leaves_evaluated = 0;  // sections not removed by the bound
  long vanishing_excluded = 0;
  std::string statement;
};

/// Worst ratio (-log ||s||_B) / (log+ ||s||_sup + d)^a over nonzero integer
/// sections with degree <= d_max and |coefficients| <= coeff_height (one of
/// each pair s, -s), Max metric, with a branch-and-bound on partial sums.
TypeSReport type_s_scan(const AnalyticArc& arc, const std::vector<Complex>& B, double a, int d_max,
                        long coeff_height, int jobs = 1);

}  // namespace ratarc
