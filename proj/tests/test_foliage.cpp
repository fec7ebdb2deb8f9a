#include <doctest.h>

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <random>

#include "ratarc/errors.hpp"
#include "ratarc/foliage.hpp"

using namespace ratarc;

namespace {

using Series = std::vector<BigRational>;

Series mul(const Series& a, const Series& b) {
  Series out(a.size(), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Composition oracle: sum of coefficient times products of component powers.
Series compose_oracle(const AffinePoly& Q, const FormalLeaf& leaf) {
  const std::size_t len = static_cast<std::size_t>(leaf.order()) + 1;
  Series total(len, BigRational(0));
  for (const auto& [e, c] : Q.terms()) {
    Series term(len, BigRational(0));
    term[0] = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = mul(term, leaf.series[i].coefficients());
    for (std::size_t k = 0; k < len; ++k) total[k] += term[k];
  }
  return total;
}

std::vector<BigRational> pt(std::initializer_list<long> v) { return std::vector<BigRational>(v.begin(), v.end()); }

// Q - Q(p), so the result vanishes at the base point.
AffinePoly centered(const AffinePoly& Q, const std::vector<BigRational>& p) {
  RationalTerms terms = Q.terms();
  const Exponent one(static_cast<std::size_t>(Q.variables()), 0);
  terms[one] -= Q.evaluate(p);
  if (terms[one] == 0) terms.erase(one);
  return AffinePoly(Q.variables(), terms);
}

AffinePoly random_poly(std::mt19937_64& rng, int N, int d, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  RationalTerms terms;
  for (const auto& e : affine_monomials(N, d)) {
    const long v = c(rng);
    if (v != 0) terms[e] = v;
  }
  if (terms.empty()) terms[Exponent(N, 0)] = 1;
  return AffinePoly(N, terms);
}

}  // namespace

TEST_CASE("polynomial and vector field parsing") {
  const auto Q = AffinePoly::parse("y - 1 - x", 2);
  CHECK(Q.degree() == 1);
  CHECK(Q.evaluate(pt({2, 5})) == 2);
  CHECK(AffinePoly::parse("x1*x2^2 - 1/2", 2).degree() == 3);
  CHECK(AffinePoly::parse("x1*x2^2 - 1/2", 2).to_string() == "x*y^2 - 1/2");
  CHECK_THROWS_AS(AffinePoly::parse("w + 1", 2), ConfigError);
  const auto F = VectorFieldQ::parse("1; y");
  CHECK(F.dimension() == 2);
  CHECK(F.components[1].evaluate(pt({0, 3})) == 3);
  CHECK(affine_monomials(2, 1) == std::vector<Exponent>{{1, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("classical leaves") {
  const auto exp_leaf = leaf_series(VectorFieldQ::parse("1; y"), pt({0, 1}), 20);
  BigInt f = 1;
  for (int k = 0; k <= 20; ++k) {
    if (k > 0) f *= k;
    CHECK(exp_leaf.series[1][k] == BigRational(BigInt(1), f));
    CHECK(exp_leaf.series[0][k] == (k == 1 ? 1 : 0));
  }
  const auto parabola = leaf_series(VectorFieldQ::parse("1; 2*x"), pt({0, 0}), 10);
  for (int k = 0; k <= 10; ++k) CHECK(parabola.series[1][k] == (k == 2 ? 1 : 0));
  CHECK_THROWS_WITH_AS(leaf_series(VectorFieldQ::parse("x; y"), pt({0, 0}), 10), "singular leaf not supported",
                       PreconditionError);
}

TEST_CASE("ODE residual is exactly zero on every fixture") {
  std::mt19937_64 rng(10);
  const std::vector<std::pair<std::string, std::vector<BigRational>>> fixtures{
      {"1; y", pt({0, 1})}, {"1; 2*x", pt({0, 0})}, {"1; y^2", pt({0, 1})}, {"y; -x", pt({1, 0})},
      {"1 + x*y; x - y^2", pt({1, 2})}, {"1; y; z + x", pt({0, 1, 2})}};
  for (const auto& [text, p] : fixtures) {
    const auto F = VectorFieldQ::parse(text);
    CHECK(ode_residual_zero(F, leaf_series(F, p, 80)));
  }
  for (int trial = 0; trial < 5; ++trial) {
    VectorFieldQ F{{random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)}};
    const auto p = pt({1, -1});
    if (F.components[0].evaluate(p) == 0 && F.components[1].evaluate(p) == 0) continue;
    CHECK(ode_residual_zero(F, leaf_series(F, p, 40)));
  }
}

TEST_CASE("leaf series agrees with a numeric ODE integration") {
  namespace odeint = boost::numeric::odeint;
  using State = std::vector<double>;
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<long> c(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 20 && checked < 5; ++trial) {
    VectorFieldQ F{{random_poly(rng, 2, 2, 2), random_poly(rng, 2, 2, 2)}};
    const auto p = pt({c(rng), c(rng)});
    if (F.components[0].evaluate(p) == 0 && F.components[1].evaluate(p) == 0) continue;
    const auto leaf = leaf_series(F, p, 60);
    // Float copies of the field for the integrator.
    std::vector<std::vector<std::pair<Exponent, double>>> fd(2);
    for (int i = 0; i < 2; ++i)
      for (const auto& [e, q] : F.components[i].terms()) fd[i].emplace_back(e, to_double(q));
    auto rhs = [&](const State& x, State& dx, double) {
      for (int i = 0; i < 2; ++i) {
        dx[i] = 0.0;
        for (const auto& [e, q] : fd[i]) dx[i] += q * std::pow(x[0], e[0]) * std::pow(x[1], e[1]);
      }
    };
    State x{to_double(p[0]), to_double(p[1])};
    odeint::integrate_adaptive(odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-14, 1e-14), rhs, x, 0.0,
                               0.05, 1e-4);
    for (int i = 0; i < 2; ++i) CHECK(std::abs(leaf.series[i].evaluate(Complex(0.05)).real() - x[i]) < 1e-10);
    ++checked;
  }
  CHECK(checked == 5);
}

TEST_CASE("order along the exponential leaf") {
  const auto F = VectorFieldQ::parse("1; y");
  const auto leaf = leaf_series(F, pt({0, 1}), 80);
  const auto a = ord_along_leaf(AffinePoly::parse("y - 1 - x", 2), leaf);
  CHECK(a.order == 2);
  CHECK(a.leading == BigRational(1, 2));
  CHECK(a.degree == 1);
  CHECK(a.truncation == 80);
  const auto y1 = AffinePoly::parse("y - 1", 2);
  const auto b = ord_along_leaf(y1 * y1 * y1, leaf);
  CHECK(b.order == 3);
  CHECK(b.leading == 1);
  const auto tangent = leaf_series(VectorFieldQ::parse("1; 2*x"), pt({0, 0}), 20);
  CHECK_THROWS_WITH_AS(ord_along_leaf(AffinePoly::parse("y - x^2", 2), tangent), "order exceeds truncation N = 20",
                       PreconditionError);
  // The truncation doubles until the order fits.
  const auto deep = ord_along_field(AffinePoly::parse("y - x^2", 2), VectorFieldQ::parse("1; 2*x + x^100"), pt({0, 0}));
  CHECK(deep.order == 101);
  CHECK(deep.leading == BigRational(1, 101));
  CHECK(deep.truncation == 160);
}

TEST_CASE("orders match the composition oracle and are multiplicative") {
  std::mt19937_64 rng(2);
  const auto F = VectorFieldQ::parse("1 + y; x*y - 1");
  const auto leaf = leaf_series(F, pt({1, 2}), 30);
  const auto twice = leaf_series(F, pt({1, 2}), 60);
  for (int trial = 0; trial < 30; ++trial) {
    auto Q = random_poly(rng, 2, 1 + trial % 3, 3);
    // Shift so the polynomial vanishes at the base point.
    Q = centered(Q, pt({1, 2}));
    if (Q.is_zero()) continue;
    const auto oracle_coeffs = compose_oracle(Q, twice);
    int expect = -1;
    for (std::size_t k = 0; k < oracle_coeffs.size(); ++k)
      if (oracle_coeffs[k] != 0) {
        expect = static_cast<int>(k);
        break;
      }
    REQUIRE(expect >= 0);
    if (expect > 30) continue;
    const auto rep = ord_along_leaf(Q, leaf);
    CHECK(rep.order == expect);
    CHECK(rep.leading == oracle_coeffs[expect]);
    CHECK(compose(Q, leaf).coefficients() == Series(oracle_coeffs.begin(), oracle_coeffs.begin() + 31));

    auto R = random_poly(rng, 2, 2, 2);
    R = centered(R, pt({1, 2}));
    if (R.is_zero()) continue;
    const auto r = ord_along_field(R, F, pt({1, 2}), 30);
    if (rep.order + r.order > 60) continue;
    CHECK(ord_along_leaf(Q * R, twice).order == rep.order + r.order);
  }
}

TEST_CASE("scaling the field keeps the order and rescales the jet") {
  const auto F = VectorFieldQ::parse("1; y");
  const auto Q = AffinePoly::parse("y - 1 - x", 2);
  const auto base = ord_along_leaf(Q, leaf_series(F, pt({0, 1}), 40));
  for (const BigRational& lambda : {BigRational(2), BigRational(-1, 3), BigRational(7, 5)}) {
    const auto rep = ord_along_leaf(Q, leaf_series(F.scaled(lambda), pt({0, 1}), 40));
    CHECK(rep.order == base.order);
    BigRational pw = 1;
    for (int k = 0; k < base.order; ++k) pw *= lambda;
    CHECK(rep.leading == base.leading * pw);
  }
}

TEST_CASE("zero lemma scan") {
  const auto F = VectorFieldQ::parse("1; y");
  const auto rep = zero_lemma_scan(F, pt({0, 1}), 3, 2, 80);
  REQUIRE(rep.degrees.size() == 3);
  CHECK(rep.degrees[0].max_order == 2);
  CHECK(rep.degrees[0].mode == "exhaustive");
  REQUIRE(rep.degrees[0].witness.has_value());
  CHECK(ord_along_leaf(*rep.degrees[0].witness, leaf_series(F, pt({0, 1}), 80)).order == 2);
  for (std::size_t i = 1; i < rep.degrees.size(); ++i)
    CHECK(rep.degrees[i].max_order >= rep.degrees[i - 1].max_order);
  CHECK(rep.slope <= 2.5);

  const auto alg = zero_lemma_scan(VectorFieldQ::parse("1; 2*x"), pt({0, 0}), 2, 1, 40);
  CHECK(alg.degrees[1].identically_zero > 0);  // y - x^2 and its multiples
}

TEST_CASE("jet denominators") {
  const auto e = jet_denominator_check(leaf_series(VectorFieldQ::parse("1; y"), pt({0, 1}), 30),
                                       AffinePoly::parse("y", 2), 30);
  CHECK(e.C == 1);
  BigInt f = 1;
  for (int n = 0; n <= 30; ++n) {
    if (n > 0) f *= n;
    CHECK(e.denominators[n] == f);
  }
  const auto par = jet_denominator_check(leaf_series(VectorFieldQ::parse("1; 2*x"), pt({0, 0}), 30),
                                         AffinePoly::parse("x^2 + 3*y - x*y", 2), 30);
  CHECK(par.C == 1);
  // y' = y^2 through 1 gives 1/(1 - t): all coefficients 1.
  const auto geo = jet_denominator_check(leaf_series(VectorFieldQ::parse("1; y^2"), pt({0, 1}), 20),
                                         AffinePoly::parse("y", 2), 20);
  CHECK(geo.C == 1);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    VectorFieldQ F{{AffinePoly::parse("1", 2), random_poly(rng, 2, 2, 3)}};
    const auto rep = jet_denominator_check(leaf_series(F, pt({0, 1}), 30), random_poly(rng, 2, 2, 3), 30);
    CHECK(rep.C >= 1);
    CHECK(rep.n_max == 30);
    BigInt fact = 1, Cn = 1;
    for (int n = 0; n <= 30; ++n) {
      if (n > 0) {
        fact *= n;
        Cn *= rep.C;
      }
      CHECK(BigInt(fact * Cn) % rep.denominators[n] == 0);
    }
  }
}
