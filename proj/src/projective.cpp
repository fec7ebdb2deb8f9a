#include "ratarc/projective.hpp"

#include <algorithm>
#include <cmath>

#include "ratarc/errors.hpp"
#include "ratarc/mp.hpp"

namespace ratarc {

ProjectivePoint ProjectivePoint::normalize(std::span<const BigInt> raw) {
  std::vector<BigInt> x(raw.begin(), raw.end());
  BigInt g = 0;
  for (const auto& v : x) g = gcd(g, v);
  if (sgn(g) == 0) throw PreconditionError("not a projective point");
  const auto first = std::find_if(x.begin(), x.end(), [](const BigInt& v) { return sgn(v) != 0; });
  if (sgn(*first) < 0) g = -g;
  for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return ProjectivePoint(std::move(x));
}

ProjectivePoint ProjectivePoint::normalize(std::span<const BigRational> raw) {
  BigInt common = 1;
  for (const auto& q : raw) common = lcm(common, q.get_den());
  std::vector<BigInt> x;
  x.reserve(raw.size());
  for (const auto& q : raw) {
    BigInt v = q.get_num() * (common / q.get_den());
    x.push_back(std::move(v));
  }
  return normalize(std::span<const BigInt>(x));
}

ProjectivePoint ProjectivePoint::normalize(std::initializer_list<long> raw) {
  std::vector<BigInt> x;
  for (long v : raw) x.emplace_back(v);
  return normalize(std::span<const BigInt>(x));
}

BigInt ProjectivePoint::max_abs() const {
  BigInt m = 0;
  for (const auto& v : coords_) {
    BigInt a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ':';
    out += coords_[i].get_str();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

HeightValue height(const ProjectivePoint& p) { return {log_abs(p.max_abs())}; }

bool height_at_most(const ProjectivePoint& p, const BigInt& bound) { return p.max_abs() <= bound; }

HeightBudget HeightBudget::log_of(const BigInt& H) {
  if (H < 1) throw PreconditionError("height bound must be >= 1");
  return HeightBudget(log_abs(H), H, "log:" + H.get_str());
}

HeightBudget HeightBudget::from_rational(const BigRational& T) {
  if (sgn(T) < 0) throw PreconditionError("height threshold must be >= 0");
  return HeightBudget(to_double(T), floor_exp(T), T.get_str());
}

HeightBudget HeightBudget::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.starts_with("log:")) {
    const BigRational H = parse_rational(text.substr(4));
    if (H.get_den() != 1) throw ConfigError("log:H requires an integer H");
    if (H < 1) throw ConfigError("log:H requires H >= 1");
    return log_of(H.get_num());
  }
  const BigRational T = parse_rational(text);
  if (sgn(T) < 0) throw ConfigError("height threshold must be >= 0");
  return from_rational(T);
}

std::vector<BigRational> enumerate_rationals(const BigInt& bound) {
  std::vector<BigRational> out;
  if (bound < 1) {
    out.emplace_back(0);
    return out;
  }
  // Farey sequence F_bound on [0, 1] by the next-term recurrence.
  std::vector<BigRational> unit;
  BigInt a = 0, b = 1, c = 1, d = bound;
  unit.emplace_back(a, b);
  while (c <= bound) {
    const BigInt k = (bound + b) / d;
    BigInt e = k * c - a;
    BigInt f = k * d - b;
    a = c;
    b = d;
    c = std::move(e);
    d = std::move(f);
    unit.emplace_back(a, b);
  }
  // unit ends at 1/1; values above 1 are reciprocals of unit members in (0, 1).
  std::vector<BigRational> positive;
  for (std::size_t i = 1; i < unit.size(); ++i) positive.push_back(unit[i]);
  for (std::size_t i = unit.size() - 1; i-- > 1;) positive.emplace_back(unit[i].get_den(), unit[i].get_num());
  out.reserve(2 * positive.size() + 1);
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  out.emplace_back(0);
  out.insert(out.end(), positive.begin(), positive.end());
  for (auto& q : out) q.canonicalize();
  return out;
}

std::vector<BigRational> enumerate_rationals(const HeightBudget& budget) { return enumerate_rationals(budget.bound()); }

}  // namespace ratarc
