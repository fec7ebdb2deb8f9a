#pragma once

#include <span>
#include <vector>

#include "ratarc/lattice.hpp"
#include "ratarc/projective.hpp"
#include "ratarc/section.hpp"

namespace ratarc {

/// Rows: degree-d monomials (graded lex) evaluated at each point's canonical
/// integer coordinates.
struct EvaluationMatrix {
  int n = 0;
  int d = 0;
  IntMatrix rows;
  std::size_t columns() const { return section_space_dimension(n, d); }
};

EvaluationMatrix evaluation_matrix(std::span<const ProjectivePoint> points, int n, int d);

struct AuxSectionCert {
  SectionPoly section;
  double log_max_coeff = 0.0;
  int point_count = 0;
  std::size_t h0 = 0;
  double max_height = 0.0;
};

/// Short nonzero integer section of degree d vanishing exactly at every point:
/// integer kernel, LLL, then the smallest max-norm vector among the reduced
/// basis, pairwise sums and differences, and the unreduced basis.
AuxSectionCert vanish_section(std::span<const ProjectivePoint> points, int n, int d);

/// True when s(p) = 0 exactly for every point.
bool vanishes_on(const SectionPoly& s, std::span<const ProjectivePoint> points);

struct SiegelReport {
  double log_max_coeff = 0.0;
  double ratio = 0.0;  // log max |coeff| / (d T)
  bool in_regime = false;  // (1 - 2 eps) h0 <= A <= (1 - eps) h0
};

SiegelReport siegel_bound_report(const AuxSectionCert& cert, double T, double epsilon);

/// Ratio history across a regression corpus.
class SiegelRegression {
 public:
  void add(double ratio) { ratios_.push_back(ratio); }
  double median() const;
  /// Every ratio r satisfies median / factor <= r <= factor * median.
  bool within(double factor) const;
  const std::vector<double>& ratios() const { return ratios_; }

 private:
  std::vector<double> ratios_;
};

/// Number of integer degree-d forms on P^1 (zero included) whose Max-metric
/// sup norm is at most T. d <= 3, 0 <= T <= 10.
long count_small_sections(int d, double T);

/// Max over |x| = |y| = 1 of |sum c_k x^{d-k} y^k|, i.e. the Max-metric sup
/// norm of a binary form, by sampling plus golden-section refinement.
double binary_form_sup(std::span<const long> coefficients);

}  // namespace ratarc
