#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratarc/holomorphic.hpp"

namespace ratarc {

/// Counter-based generator: the k-th draw depends only on (seed, k), so
/// estimates do not depend on how samples are split across threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform in [0, 1).
  double uniform(std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

struct RootConfig {
  std::vector<Complex> roots;
  double H = 1.0;
};

struct Box {
  double x0, x1, y0, y1;
  double area() const { return (x1 - x0) * (y1 - y0); }
};

enum class AreaMethod { Grid, MonteCarlo };

std::string to_string(AreaMethod m);

struct AreaEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  AreaMethod method = AreaMethod::MonteCarlo;
  std::uint64_t seed = 0;
  long samples = 0;
  double bound = 0.0;
  bool holds = false;  // value - 3 stderr <= bound
};

/// Smallest box containing every root inflated by H.
Box enclosing_box(const RootConfig& cfg);

/// Monte Carlo area of {z : prod |z - a_i| <= (H / 2e)^n} against pi H^2.
AreaEstimate exceptional_area(const RootConfig& cfg, const Box& bbox, long samples, std::uint64_t seed, int jobs = 1);

struct SmallNormThreshold {
  double sup_log = 0.0;  // sup over |z| = 3r of ln|f|
  double value = 0.0;
};

/// -(2 + ln(1/eta)/ln(3/2)) sup_{3r} ln|f| + 3 ln|f(0)|.
SmallNormThreshold small_norm_threshold(const Holomorphic& f, double r, double eta);

/// Monte Carlo area of {z in D_r : ln|f(z)| < threshold} against 4 pi e^2 eta^2.
AreaEstimate small_norm_area(const Holomorphic& f, double r, double eta, long samples, std::uint64_t seed,
                             int jobs = 1);

/// Same set measured on a grid x grid cell-centered lattice of the r-disk.
AreaEstimate small_norm_area_grid(const Holomorphic& f, double r, double eta, int grid);

/// f = z^i h with h(0) != 0. i is read from the Taylor coefficients when
/// available, else counted at radius r/10; the threshold offset becomes
/// 3 (ln|h(0)| + i ln(3r)).
AreaEstimate small_norm_area_vanishing(const Holomorphic& f, double r, double eta, long samples, std::uint64_t seed,
                                       std::optional<int> order = std::nullopt, int jobs = 1);

struct VanishingSplit {
  int order = 0;
  Complex h0;
};

/// Order of vanishing at 0 and h(0) for f = z^i h.
VanishingSplit split_vanishing(const Holomorphic& f, double r, std::optional<int> order = std::nullopt);

}  // namespace ratarc
