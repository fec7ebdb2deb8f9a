#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratarc/polynomial_text.hpp"
#include "ratarc/rational.hpp"

namespace ratarc {

/// Exponent tuples of total degree d in n+1 variables, graded lexicographic
/// (X0^d first, Xn^d last).
std::vector<Exponent> monomials(int n, int d);

/// C(n+d, n), the number of degree-d monomials on P^n.
std::size_t section_space_dimension(int n, int d);

/// Homogeneous integer polynomial of degree d on P^n: a global section of O(d).
class SectionPoly {
 public:
  using Terms = std::map<Exponent, BigInt, GradedLexGreater>;

  SectionPoly(int n, int d, Terms terms);
  /// Coefficients listed in monomials(n, d) order.
  static SectionPoly from_coefficients(int n, int d, std::span<const BigInt> coefficients);
  static SectionPoly from_coefficients(int n, int d, std::initializer_list<long> coefficients);
  /// Parses e.g. "2*X0^2 - 3*X0*X1 + X1^2"; the text must be homogeneous with integer coefficients.
  static SectionPoly parse(std::string_view text, int n);

  int dimension() const { return n_; }
  int degree() const { return d_; }
  const Terms& terms() const { return terms_; }

  std::vector<BigInt> coefficient_vector() const;
  BigInt max_abs_coefficient() const;
  double log_max_coefficient() const;

  BigInt evaluate(std::span<const BigInt> x) const;
  BigRational evaluate(std::span<const BigRational> x) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> x) const;

  std::string to_string() const;

  friend SectionPoly operator*(const SectionPoly& a, const SectionPoly& b);
  friend bool operator==(const SectionPoly& a, const SectionPoly& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  int d_;
  Terms terms_;
  std::vector<std::pair<Exponent, double>> float_terms_;
};

}  // namespace ratarc
