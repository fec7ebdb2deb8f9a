#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratarc/arc.hpp"
#include "ratarc/projective.hpp"
#include "ratarc/siegel.hpp"

namespace ratarc {

enum class CensusMode { Parametric, Oracle };

std::string to_string(CensusMode m);
CensusMode parse_census_mode(std::string_view text);

/// A user-supplied candidate: a parameter location and the claimed rational image.
struct OraclePoint {
  std::string label;
  Complex z;
  ProjectivePoint point;
};

/// Lines "label re im x0 ... xn" with rational entries; '#' starts a comment.
std::vector<OraclePoint> load_oracle_points(const std::string& path, int n);

struct CensusRecord {
  std::string parameter;  // z as p/q, or the oracle label
  std::optional<BigRational> z;
  Complex z_value;
  std::optional<ProjectivePoint> point;
  double height = 0.0;
  bool indeterminate = false;
  BigInt candidate_bound;  // max(|num|, den) of the affine parameter of the candidate
  std::string note;
};

struct CensusResult {
  std::string arc_id;
  BigRational r;
  HeightBudget budget = HeightBudget::log_of(1);
  CensusMode mode = CensusMode::Parametric;
  std::vector<CensusRecord> records;  // sorted: decided points first by parameter, then indeterminate
  long lower = 0;                     // decided points of height <= T
  long indeterminate = 0;
  long upper() const { return lower + indeterminate; }
};

/// S_U(T) for U = {|z| < r}. Parametric mode runs over rational parameters of
/// bounded height and requires a graph-type arc; oracle mode filters the
/// supplied list.
CensusResult census(const AnalyticArc& arc, const BigRational& r, const HeightBudget& budget, CensusMode mode,
                    const std::vector<OraclePoint>& oracle = {}, int jobs = 1);

struct CensusCurve {
  std::string arc_id;
  BigRational r;
  CensusMode mode = CensusMode::Parametric;
  std::vector<HeightBudget> grid;
  std::vector<long> lower;
  std::vector<long> upper;
  bool monotone() const;
};

/// A_U(T) over an ascending T grid from a single census at the largest T.
CensusCurve census_curve(const CensusResult& top, const std::vector<HeightBudget>& grid);

struct BPCell {
  long ix = 0, iy = 0;
  int points = 0;
  int used = 0;  // points fed to the auxiliary section
  std::optional<AuxSectionCert> cert;
  bool vanishes_on_cell = false;
  bool identically_zero_on_arc = false;
  int zero_bound = 0;  // floor of the degree bound right-hand side
  int zeros_in_u = 0;
  std::string error;
};

struct BPReport {
  int degree = 0;
  double epsilon = 0.0;
  double diameter = 0.0;
  long cells_total = 0;  // cells meeting the square [-r, r]^2
  std::vector<BPCell> cells;  // cells containing census points
  double max_log_coeff = 0.0;
  int max_zero_bound = 0;
  long final_bound = 0;  // occupied cells x max per-section zero bound
  bool all_vanish = true;
};

struct BPOptions {
  int degree = 2;
  double epsilon = 0.25;
  double c1 = 1.0;
  double c2 = 1.0;
  bool use_all_points = false;  // otherwise the floor((1 - eps) h0) lowest-height points
  BigRational R = 1;            // ambient disk for the zero bound
};

BPReport bombieri_pila_experiment(const AnalyticArc& arc, const CensusResult& census, const BPOptions& options);

struct RareInterval {
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t i_start = 0;
  std::size_t i_end = 0;
  bool geometrically_wider = false;  // contains some [t, A t] with t > 0
};

struct RareScan {
  double gamma = 0.0;
  double epsilon = 0.0;
  double A = 0.0;
  bool gamma_hypothesis = false;  // gamma > n / (n - 1)
  std::vector<RareInterval> intervals;
};

/// Maximal runs of the grid where the census upper count is <= epsilon T^gamma.
RareScan rare_interval_scan(const CensusCurve& curve, int n, double gamma, double epsilon, double A);

}  // namespace ratarc
