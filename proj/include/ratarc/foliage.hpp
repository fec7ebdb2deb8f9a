#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratarc/arc.hpp"
#include "ratarc/lattice.hpp"
#include "ratarc/polynomial_text.hpp"
#include "ratarc/series.hpp"

namespace ratarc {

/// Polynomial in N affine variables with rational coefficients.
class AffinePoly {
 public:
  AffinePoly(int N, RationalTerms terms);
  /// Variables x1..xN; for N <= 3 the names x, y, z are accepted as aliases.
  static AffinePoly parse(std::string_view text, int N);

  int variables() const { return N_; }
  int degree() const;
  const RationalTerms& terms() const { return terms_; }
  BigRational evaluate(const std::vector<BigRational>& x) const;
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  /// Scales every coefficient by a nonzero rational.
  AffinePoly scaled(const BigRational& s) const;
  friend AffinePoly operator*(const AffinePoly& a, const AffinePoly& b);

 private:
  int N_;
  RationalTerms terms_;
};

/// All exponents in N variables of total degree <= d, graded lex, constant last.
std::vector<Exponent> affine_monomials(int N, int d);

/// The polynomial vector field dz/dt = P(z).
struct VectorFieldQ {
  std::vector<AffinePoly> components;
  int dimension() const { return static_cast<int>(components.size()); }
  /// Parses components separated by ';', e.g. "1; y".
  static VectorFieldQ parse(std::string_view text);
  VectorFieldQ scaled(const BigRational& s) const;
};

struct FormalLeaf {
  std::vector<BigRational> base;
  std::vector<TruncatedSeries> series;
  int order() const { return series.empty() ? 0 : series.front().order(); }
};

/// Taylor coefficients of the integral curve through p:
/// c_{k+1} = [t^k] P(z(t)) / (k + 1), exactly. Rejects singular points.
FormalLeaf leaf_series(const VectorFieldQ& field, const std::vector<BigRational>& p, int N);

/// Q composed with the leaf, truncated at the leaf order.
TruncatedSeries compose(const AffinePoly& Q, const FormalLeaf& leaf);

/// True when d/dt z_i - P_i(z) vanishes coefficient by coefficient up to N - 1.
bool ode_residual_zero(const VectorFieldQ& field, const FormalLeaf& leaf);

struct LeafOrderReport {
  int degree = 0;
  int order = 0;
  BigRational leading;
  int truncation = 0;
};

/// Least k with [t^k] Q(z(t)) != 0. Throws PreconditionError("order exceeds
/// truncation N") when every coefficient up to N vanishes.
LeafOrderReport ord_along_leaf(const AffinePoly& Q, const FormalLeaf& leaf);

/// Same, regenerating the leaf with N doubled from N0 up to N_max on overflow.
LeafOrderReport ord_along_field(const AffinePoly& Q, const VectorFieldQ& field, const std::vector<BigRational>& p,
                                int N0 = 80, int N_max = 640);

/// (1 : z_1(t) : ... : z_N(t)) with each component an ODE-leaf series. When
/// P_1 is a nonzero constant c, z_1 = p_1 + c t exactly and the arc is of
/// graph type.
AnalyticArc leaf_arc(const VectorFieldQ& field, const FormalLeaf& leaf, double r_max, std::string id = "leaf");

struct ZeroLemmaDegree {
  int degree = 0;
  int max_order = 0;
  std::optional<AffinePoly> witness;
  bool witness_within_height = false;
  long identically_zero = 0;  // exhaustive: count; lattice: kernel dimension
  std::string mode;
};

struct ZeroLemmaReport {
  std::vector<ZeroLemmaDegree> degrees;
  double slope = 0.0;  // least squares of log max_order against log d
  int truncation = 0;
};

/// For each d <= d_max, the largest order along the leaf of a polynomial of
/// degree <= d that does not vanish identically up to N. Exhaustive over
/// |coefficients| <= coeff_height when the box has at most exhaustive_limit
/// elements; otherwise the rank profile of the coefficient matrix gives the
/// maximum over all rational polynomials, with an LLL-reduced witness.
ZeroLemmaReport zero_lemma_scan(const VectorFieldQ& field, const std::vector<BigRational>& p, int d_max,
                                long coeff_height, int N, long exhaustive_limit = 200000);

struct JetDenominatorReport {
  BigInt C = 1;            // minimal integer with den(c_n) | n! C^n for all n
  int n_max = 0;
  std::vector<BigInt> denominators;  // den(c_n), n = 0..n_max
  bool fully_factored = true;  // false when a cofactor above the trial bound was kept whole
};

JetDenominatorReport jet_denominator_check(const FormalLeaf& leaf, const AffinePoly& Q, int n_max);

}  // namespace ratarc
