#include "ratarc/series.hpp"

#include <algorithm>

#include "ratarc/errors.hpp"

namespace ratarc {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw PreconditionError("series order must be >= 0");
  c_.assign(static_cast<std::size_t>(order) + 1, BigRational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw PreconditionError("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, int order) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order, const BigRational& shift) {
  TruncatedSeries s(order);
  s.c_[0] = shift;
  if (order >= 1) s.c_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  std::vector<BigRational> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(order) + 1));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return TruncatedSeries(0);
  TruncatedSeries d(order() - 1);
  for (int k = 1; k <= order(); ++k) d[k - 1] = c_[static_cast<std::size_t>(k)] * k;
  return d;
}

int TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  return -1;
}

std::complex<double> TruncatedSeries::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

std::complex<double> TruncatedSeries::evaluate_derivative(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 1;) acc = acc * z + to_double(c_[k]) * static_cast<double>(k);
  return acc;
}

BigRational TruncatedSeries::evaluate(const BigRational& z) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int k = 0; k <= s.order(); ++k) s[k] = a[k] - b[k];
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int N = std::min(a.order(), b.order());
  TruncatedSeries s(N);
  for (int i = 0; i <= N; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (sgn(b[j]) == 0) continue;
      s[i + j] += a[i] * b[j];
    }
  }
  return s;
}

TruncatedSeries operator*(const BigRational& s, const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (int k = 0; k <= out.order(); ++k) out[k] *= s;
  return out;
}

}  // namespace ratarc
