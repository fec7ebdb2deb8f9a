#include "ratarc/arc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ratarc/errors.hpp"
#include "ratarc/mp.hpp"

namespace ratarc {

RationalDecision reconstruct_rational(const BigRational& approximation, const BigRational& error_bound,
                                      const BigInt& cap) {
  // Convergents h/k of the continued fraction of the approximation, k <= cap.
  BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  BigRational x = approximation;
  BigRational best;
  bool have_best = false;
  for (int iter = 0; iter < 100000; ++iter) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    if (k > cap) break;
    best = BigRational(h, k);
    best.canonicalize();
    have_best = true;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    BigRational frac = x - BigRational(a);
    if (sgn(frac) == 0) break;
    x = 1 / frac;
  }
  RationalDecision out;
  if (have_best && abs(approximation - best) <= error_bound) {
    out.kind = RationalDecision::Kind::Rational;
    out.value = best;
    return out;
  }
  const BigRational ambiguity = BigRational(1) / (2 * BigRational(cap * cap));
  if (error_bound < ambiguity) {
    out.kind = RationalDecision::Kind::NotRational;
    return out;
  }
  out.kind = RationalDecision::Kind::Indeterminate;
  out.note = "working precision too low for denominator cap";
  return out;
}

AnalyticArc::AnalyticArc(std::string id, std::vector<ArcComponent> components, double r_max, bool graph_type)
    : id_(std::move(id)), components_(std::move(components)), r_max_(r_max), graph_type_(graph_type) {
  if (components_.empty()) throw PreconditionError("arc needs dimension >= 1");
  if (!(r_max_ > 0)) throw PreconditionError("arc radius must be positive");
  std::vector<BigRational> at_zero{BigRational(1)};
  const BigInt cap = BigInt("1000000000000000000000000000000");
  for (const auto& c : components_) {
    if (!c.decide) return;
    RationalDecision dec = c.decide(BigRational(0), cap);
    if (dec.kind != RationalDecision::Kind::Rational) return;
    at_zero.push_back(dec.value);
  }
  center_ = ProjectivePoint::normalize(std::span<const BigRational>(at_zero));
}

void AnalyticArc::check_domain(Complex z) const {
  if (!(std::abs(z) < r_max_))
    throw DomainError("arc '" + id_ + "' evaluated outside its disk |z| < " + std::to_string(r_max_));
}

std::vector<Complex> AnalyticArc::eval(Complex z) const {
  check_domain(z);
  std::vector<Complex> x;
  x.reserve(components_.size() + 1);
  x.emplace_back(1.0);
  for (const auto& c : components_) x.push_back(c.value(z));
  return x;
}

std::vector<Complex> AnalyticArc::eval_derivative(Complex z) const {
  check_domain(z);
  std::vector<Complex> x;
  x.reserve(components_.size() + 1);
  x.emplace_back(0.0);
  for (const auto& c : components_) x.push_back(c.derivative(z));
  return x;
}

AnalyticArc AnalyticArc::with_radius(double r_max) const {
  AnalyticArc copy = *this;
  if (!(r_max > 0)) throw PreconditionError("arc radius must be positive");
  copy.r_max_ = r_max;
  return copy;
}

std::vector<Complex> eval_arc(const AnalyticArc& arc, Complex z) { return arc.eval(z); }

ArcComponent polynomial_component(std::vector<BigRational> coefficients) {
  TruncatedSeries p(std::move(coefficients));
  ArcComponent c;
  c.kind = ComponentKind::ClosedForm;
  std::vector<std::string> var{"z"};
  RationalTerms terms;
  for (int k = 0; k <= p.order(); ++k)
    if (sgn(p[k]) != 0) terms.emplace(Exponent{k}, p[k]);
  c.description = format_polynomial(terms, var);
  c.value = [p](Complex z) { return p.evaluate(z); };
  c.derivative = [p](Complex z) { return p.evaluate_derivative(z); };
  c.decide = [p](const BigRational& z, const BigInt&) {
    RationalDecision d;
    d.kind = RationalDecision::Kind::Rational;
    d.value = p.evaluate(z);
    return d;
  };
  return c;
}

namespace {

RationalDecision decide_exp(const BigRational& lambda, const BigRational& z, const BigInt& cap) {
  const BigRational arg = lambda * z;
  RationalDecision out;
  if (sgn(arg) == 0) {
    out.kind = RationalDecision::Kind::Rational;
    out.value = 1;
    return out;
  }
  auto at_digits = [&](int digits) {
    const mpfr_prec_t bits = bits_for_digits(digits);
    MpFloat v = mp_exp(arg, bits);
    const BigRational approx = v.to_rational();
    // Relative error of a correctly rounded exp is below 2^(1-bits).
    BigRational err = abs(approx);
    mpq_div_2exp(err.get_mpq_t(), err.get_mpq_t(), static_cast<mp_bitcnt_t>(bits - 2));
    return reconstruct_rational(approx, err, cap);
  };
  const RationalDecision low = at_digits(200);
  const RationalDecision high = at_digits(400);
  if (low.kind != high.kind || (low.kind == RationalDecision::Kind::Rational && low.value != high.value)) {
    out.kind = RationalDecision::Kind::Indeterminate;
    out.note = "reconstruction unstable under precision doubling";
    return out;
  }
  if (low.kind == RationalDecision::Kind::Rational) {
    // e^q is irrational for rational q != 0 (Lindemann), so a match is spurious.
    out.kind = RationalDecision::Kind::Indeterminate;
    out.note = "reconstruction contradicts closed form";
    return out;
  }
  return low;
}

}  // namespace

ArcComponent exp_component(const BigRational& lambda) {
  ArcComponent c;
  c.kind = ComponentKind::ClosedForm;
  c.description = lambda == 1 ? "exp(z)" : "exp(" + lambda.get_str() + "*z)";
  const double l = to_double(lambda);
  c.value = [l](Complex z) { return std::exp(l * z); };
  c.derivative = [l](Complex z) { return l * std::exp(l * z); };
  c.decide = [lambda](const BigRational& z, const BigInt& cap) { return decide_exp(lambda, z, cap); };
  return c;
}

ArcComponent series_component(TruncatedSeries series, ComponentKind kind) {
  ArcComponent c;
  c.kind = kind;
  c.description = "series(order " + std::to_string(series.order()) + ")";
  c.value = [series](Complex z) { return series.evaluate(z); };
  c.derivative = [series](Complex z) { return series.evaluate_derivative(z); };
  if (kind == ComponentKind::TruncatedSeries) {
    // The component is its truncation, so values at rationals are exact.
    c.decide = [series](const BigRational& z, const BigInt&) {
      RationalDecision d;
      d.kind = RationalDecision::Kind::Rational;
      d.value = series.evaluate(z);
      return d;
    };
  } else {
    // The truncation approximates a transcendental leaf; the tail is estimated
    // from the last two nonzero terms as a geometric remainder.
    c.decide = [series](const BigRational& z, const BigInt& cap) {
      RationalDecision d;
      if (sgn(z) == 0) {
        d.kind = RationalDecision::Kind::Rational;
        d.value = series[0];
        return d;
      }
      const BigRational value = series.evaluate(z);
      const int N = series.order();
      BigRational last = abs(series[N]);
      BigRational zabs = abs(z);
      BigRational zpow = 1;
      for (int k = 0; k <= N; ++k) zpow *= zabs;
      BigRational tail = last * zpow;
      if (N >= 1 && sgn(series[N - 1]) != 0) {
        BigRational ratio = abs(series[N] / series[N - 1]) * zabs;
        if (ratio < BigRational(1, 2)) {
          tail = tail * 2;
        } else {
          d.kind = RationalDecision::Kind::Indeterminate;
          d.note = "series tail not controlled at this parameter";
          return d;
        }
      } else {
        tail = tail * 4 + BigRational(1, BigInt("1000000000000000000000000000000000000000000000000"));
      }
      return reconstruct_rational(value, tail, cap);
    };
  }
  return c;
}

AnalyticArc moment_arc(int n, double r_max) {
  if (n < 1) throw PreconditionError("moment arc needs n >= 1");
  std::vector<ArcComponent> comps;
  for (int k = 1; k <= n; ++k) {
    std::vector<BigRational> c(static_cast<std::size_t>(k) + 1, BigRational(0));
    c.back() = 1;
    comps.push_back(polynomial_component(std::move(c)));
  }
  std::string id = "moment" + std::to_string(n);
  return AnalyticArc(id, std::move(comps), r_max, true);
}

AnalyticArc exp_arc(const BigRational& lambda, double r_max) {
  std::vector<ArcComponent> comps;
  comps.push_back(polynomial_component({BigRational(0), BigRational(1)}));
  comps.push_back(exp_component(lambda));
  return AnalyticArc(lambda == 1 ? "exp" : "exp[" + lambda.get_str() + "]", std::move(comps), r_max, true);
}

AnalyticArc polynomial_graph_arc(std::vector<BigRational> coefficients, double r_max) {
  std::vector<ArcComponent> comps;
  comps.push_back(polynomial_component({BigRational(0), BigRational(1)}));
  comps.push_back(polynomial_component(std::move(coefficients)));
  return AnalyticArc("poly-graph", std::move(comps), r_max, true);
}

AnalyticArc series_graph_arc(TruncatedSeries series, double r_max) {
  std::vector<ArcComponent> comps;
  comps.push_back(polynomial_component({BigRational(0), BigRational(1)}));
  comps.push_back(series_component(std::move(series), ComponentKind::TruncatedSeries));
  return AnalyticArc("series-graph", std::move(comps), r_max, true);
}

AnalyticArc constant_arc(std::vector<BigRational> values) {
  std::vector<ArcComponent> comps;
  for (auto& v : values) comps.push_back(polynomial_component({v}));
  return AnalyticArc("constant", std::move(comps), kEntire, false);
}

double section_norm(const SectionPoly& s, std::span<const Complex> x, Metric metric) {
  const double value = std::abs(s.evaluate(x));
  double scale = 0.0;
  if (metric == Metric::Max) {
    for (const auto& xi : x) scale = std::max(scale, std::abs(xi));
  } else {
    for (const auto& xi : x) scale += std::norm(xi);
    scale = std::sqrt(scale);
  }
  return value / std::pow(scale, s.degree());
}

double pullback_norm(const SectionPoly& s, const AnalyticArc& arc, Complex z, Metric metric) {
  if (s.dimension() != arc.dimension()) throw PreconditionError("section and arc live in different P^n");
  const auto x = arc.eval(z);
  return section_norm(s, x, metric);
}

namespace {

double radical_inverse(unsigned long index, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

constexpr std::array<unsigned, 16> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

/// Maximizes f by compass search with step halving.
template <class F>
double pattern_ascent(F&& f, std::vector<double> x, double step, double min_step) {
  double best = f(x);
  while (step > min_step) {
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double dir : {1.0, -1.0}) {
        const double saved = x[i];
        x[i] = saved + dir * step;
        const double v = f(x);
        if (v > best) {
          best = v;
          improved = true;
        } else {
          x[i] = saved;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

double sup_norm(const SectionPoly& s, Metric metric, int samples) {
  if (samples < 1) throw PreconditionError("sup_norm needs samples >= 1");
  const int n = s.dimension();
  const std::size_t dim = metric == Metric::Max ? static_cast<std::size_t>(n) : 2 * static_cast<std::size_t>(n) + 2;
  if (dim > kPrimes.size()) throw PreconditionError("sup_norm: dimension too large for the sampler");
  if (metric == Metric::Max && n == 0) return std::abs(s.evaluate(std::vector<Complex>{1.0}));

  std::vector<Complex> x(static_cast<std::size_t>(n) + 1);
  auto objective = [&](const std::vector<double>& p) {
    if (metric == Metric::Max) {
      x[0] = 1.0;
      for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i) + 1] = std::polar(1.0, p[static_cast<std::size_t>(i)]);
      return std::abs(s.evaluate(x));
    }
    for (int i = 0; i <= n; ++i)
      x[static_cast<std::size_t>(i)] = Complex(p[2 * static_cast<std::size_t>(i)], p[2 * static_cast<std::size_t>(i) + 1]);
    return section_norm(s, x, Metric::FubiniStudy);
  };

  std::vector<std::pair<double, std::vector<double>>> seeds;
  std::vector<double> p(dim);
  for (int k = 1; k <= samples; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double u = radical_inverse(static_cast<unsigned long>(k), kPrimes[j]);
      if (metric == Metric::Max) {
        p[j] = 2.0 * std::numbers::pi * u;
      } else if (j % 2 == 0) {
        // Box-Muller on consecutive Halton coordinates gives a Gaussian pair.
        const double u2 = radical_inverse(static_cast<unsigned long>(k), kPrimes[j + 1]);
        const double rad = std::sqrt(-2.0 * std::log(u));
        p[j] = rad * std::cos(2.0 * std::numbers::pi * u2);
        p[j + 1] = rad * std::sin(2.0 * std::numbers::pi * u2);
      }
    }
    seeds.emplace_back(objective(p), p);
  }
  std::sort(seeds.begin(), seeds.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  const std::size_t refine = std::min<std::size_t>(seeds.size(), 4);
  double best = seeds.front().first;
  const double step = metric == Metric::Max ? 2.0 * std::numbers::pi / std::pow(samples, 1.0 / std::max(1, n)) : 0.25;
  for (std::size_t i = 0; i < refine; ++i) {
    std::vector<double> start = seeds[i].second;
    if (metric == Metric::FubiniStudy) {
      double norm = 0.0;
      for (double v : start) norm += v * v;
      norm = std::sqrt(norm);
      for (double& v : start) v /= norm;
    }
    best = std::max(best, pattern_ascent(objective, start, step, 1e-11));
  }
  return best;
}

}  // namespace ratarc
