#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ratarc/rational.hpp"

namespace ratarc {

/// A rational point of P^n in its canonical representative: coprime integer
/// coordinates, not all zero, first nonzero coordinate positive.
class ProjectivePoint {
 public:
  /// Canonical representative of (x_0 : ... : x_n). Throws PreconditionError
  /// ("not a projective point") when every coordinate is zero.
  static ProjectivePoint normalize(std::span<const BigRational> raw);
  static ProjectivePoint normalize(std::span<const BigInt> raw);
  static ProjectivePoint normalize(std::initializer_list<long> raw);

  const std::vector<BigInt>& coords() const { return coords_; }
  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  BigInt max_abs() const;

  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  explicit ProjectivePoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
  std::vector<BigInt> coords_;
};

struct HeightValue {
  double value = 0.0;  // natural-log scale, >= 0
};

/// Naive Weil height log max |x_i| of the canonical representative.
HeightValue height(const ProjectivePoint& p);

/// Exact test h(p) <= log(bound), i.e. max |x_i| <= bound.
bool height_at_most(const ProjectivePoint& p, const BigInt& bound);

/// A height threshold T carried together with its exact integer side
/// floor(e^T). Comparisons against T go through the integer.
class HeightBudget {
 public:
  /// T = log(H) exactly; H >= 1.
  static HeightBudget log_of(const BigInt& H);
  /// Rational T >= 0.
  static HeightBudget from_rational(const BigRational& T);
  /// Parses "log:H" or a rational "p/q".
  static HeightBudget parse(std::string_view text);

  double T() const { return T_; }
  const BigInt& bound() const { return bound_; }
  const std::string& label() const { return label_; }

 private:
  HeightBudget(double T, BigInt bound, std::string label)
      : T_(T), bound_(std::move(bound)), label_(std::move(label)) {}
  double T_;
  BigInt bound_;
  std::string label_;
};

/// All p/q in lowest terms with q >= 1 and max(|p|, q) <= bound, ascending.
std::vector<BigRational> enumerate_rationals(const BigInt& bound);
std::vector<BigRational> enumerate_rationals(const HeightBudget& budget);

}  // namespace ratarc
