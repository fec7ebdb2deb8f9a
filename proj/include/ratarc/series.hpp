#pragma once

#include <complex>
#include <vector>

#include "ratarc/rational.hpp"

namespace ratarc {

/// Power series truncated at order N: coefficients c_0..c_N, exact rationals.
/// Binary operations truncate at the smaller of the two orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<BigRational> coefficients);

  static TruncatedSeries constant(const BigRational& c, int order);
  /// The series t + c (identity shifted by c).
  static TruncatedSeries variable(int order, const BigRational& shift = 0);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const BigRational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  BigRational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<BigRational>& coefficients() const { return c_; }

  TruncatedSeries truncated(int order) const;
  TruncatedSeries derivative() const;

  /// Index of the first nonzero coefficient, or -1 if all vanish up to N.
  int valuation() const;

  std::complex<double> evaluate(std::complex<double> z) const;
  std::complex<double> evaluate_derivative(std::complex<double> z) const;
  /// Exact value of the truncation at a rational argument.
  BigRational evaluate(const BigRational& z) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const BigRational& s, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<BigRational> c_;
};

}  // namespace ratarc
