#include "ratarc/section.hpp"

#include <numeric>

#include "ratarc/errors.hpp"

namespace ratarc {

namespace {

void fill_monomials(int vars_left, int degree_left, Exponent& current, std::vector<Exponent>& out) {
  const auto index = current.size() - static_cast<std::size_t>(vars_left);
  if (vars_left == 1) {
    current[index] = degree_left;
    out.push_back(current);
    return;
  }
  for (int k = degree_left; k >= 0; --k) {
    current[index] = k;
    fill_monomials(vars_left - 1, degree_left - k, current, out);
  }
  current[index] = 0;
}

}  // namespace

std::vector<Exponent> monomials(int n, int d) {
  if (n < 0 || d < 0) throw PreconditionError("monomials: n and d must be >= 0");
  std::vector<Exponent> out;
  Exponent current(static_cast<std::size_t>(n) + 1, 0);
  fill_monomials(n + 1, d, current, out);
  return out;
}

std::size_t section_space_dimension(int n, int d) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + d), static_cast<unsigned long>(n));
  return c.get_ui();
}

SectionPoly::SectionPoly(int n, int d, Terms terms) : n_(n), d_(d), terms_(std::move(terms)) {
  if (n < 0 || d < 0) throw PreconditionError("section: n, d must be >= 0");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (sgn(it->second) == 0) {
      it = terms_.erase(it);
      continue;
    }
    if (it->first.size() != static_cast<std::size_t>(n) + 1 ||
        std::accumulate(it->first.begin(), it->first.end(), 0) != d)
      throw PreconditionError("section: exponent tuple does not match (n, d)");
    ++it;
  }
  if (terms_.empty()) throw PreconditionError("section: at least one nonzero coefficient required");
  for (const auto& [e, c] : terms_) float_terms_.emplace_back(e, c.get_d());
}

SectionPoly SectionPoly::from_coefficients(int n, int d, std::span<const BigInt> coefficients) {
  const auto basis = monomials(n, d);
  if (coefficients.size() != basis.size()) throw PreconditionError("section: coefficient count != C(n+d, n)");
  Terms t;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(coefficients[i]) != 0) t.emplace(basis[i], coefficients[i]);
  return SectionPoly(n, d, std::move(t));
}

SectionPoly SectionPoly::from_coefficients(int n, int d, std::initializer_list<long> coefficients) {
  std::vector<BigInt> c;
  for (long v : coefficients) c.emplace_back(v);
  return from_coefficients(n, d, std::span<const BigInt>(c));
}

SectionPoly SectionPoly::parse(std::string_view text, int n) {
  const auto vars = homogeneous_variables(n);
  const RationalTerms parsed = parse_polynomial(text, vars);
  if (parsed.empty()) throw ConfigError("section '" + std::string(text) + "' is zero");
  const int d = std::accumulate(parsed.begin()->first.begin(), parsed.begin()->first.end(), 0);
  Terms t;
  for (const auto& [e, c] : parsed) {
    if (c.get_den() != 1) throw ConfigError("section coefficients must be integers");
    if (std::accumulate(e.begin(), e.end(), 0) != d) throw ConfigError("section must be homogeneous");
    t.emplace(e, c.get_num());
  }
  return SectionPoly(n, d, std::move(t));
}

std::vector<BigInt> SectionPoly::coefficient_vector() const {
  std::vector<BigInt> out;
  for (const auto& e : monomials(n_, d_)) {
    auto it = terms_.find(e);
    out.push_back(it == terms_.end() ? BigInt(0) : it->second);
  }
  return out;
}

BigInt SectionPoly::max_abs_coefficient() const {
  BigInt m = 0;
  for (const auto& [e, c] : terms_)
    if (abs(c) > m) m = abs(c);
  return m;
}

double SectionPoly::log_max_coefficient() const { return log_abs(max_abs_coefficient()); }

BigInt SectionPoly::evaluate(std::span<const BigInt> x) const {
  if (x.size() != static_cast<std::size_t>(n_) + 1) throw PreconditionError("section: point dimension mismatch");
  BigInt acc = 0;
  BigInt mono;
  BigInt power;
  for (const auto& [e, c] : terms_) {
    mono = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      mono *= power;
    }
    acc += mono;
  }
  return acc;
}

BigRational SectionPoly::evaluate(std::span<const BigRational> x) const {
  if (x.size() != static_cast<std::size_t>(n_) + 1) throw PreconditionError("section: point dimension mismatch");
  BigRational acc = 0;
  for (const auto& [e, c] : terms_) {
    BigRational mono = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) mono *= x[i];
    acc += mono;
  }
  return acc;
}

std::complex<double> SectionPoly::evaluate(std::span<const std::complex<double>> x) const {
  if (x.size() != static_cast<std::size_t>(n_) + 1) throw PreconditionError("section: point dimension mismatch");
  // powers[i][k] = x_i^k
  std::vector<std::vector<std::complex<double>>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(d_) + 1);
    powers[i][0] = 1.0;
    for (int k = 1; k <= d_; ++k) powers[i][k] = powers[i][k - 1] * x[i];
  }
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : float_terms_) {
    std::complex<double> mono = c;
    for (std::size_t i = 0; i < e.size(); ++i) mono *= powers[i][static_cast<std::size_t>(e[i])];
    acc += mono;
  }
  return acc;
}

std::string SectionPoly::to_string() const {
  RationalTerms t;
  for (const auto& [e, c] : terms_) t.emplace(e, BigRational(c));
  return format_polynomial(t, homogeneous_variables(n_));
}

SectionPoly operator*(const SectionPoly& a, const SectionPoly& b) {
  if (a.n_ != b.n_) throw PreconditionError("section product: dimension mismatch");
  SectionPoly::Terms t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      t[e] += ca * cb;
    }
  return SectionPoly(a.n_, a.d_ + b.d_, std::move(t));
}

}  // namespace ratarc
