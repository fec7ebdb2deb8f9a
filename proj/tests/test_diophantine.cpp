#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ratarc/diophantine.hpp"
#include "ratarc/errors.hpp"

using namespace ratarc;

TEST_CASE("liouville_check fixture at (1:2)") {
  const auto p = ProjectivePoint::normalize({1, 2});
  const auto rep = liouville_check(SectionPoly::parse("X0 - X1", 1), p);
  const double l2 = std::log(2.0);
  CHECK(rep.value == -1);
  CHECK(rep.log_norm == doctest::Approx(-l2));
  CHECK(rep.log_sup == doctest::Approx(l2).epsilon(1e-9));
  CHECK(rep.bound == doctest::Approx(-l2 * (l2 + 1)).epsilon(1e-9));
  CHECK(rep.bound == doctest::Approx(-1.1736).epsilon(1e-4));
  CHECK(rep.margin == doctest::Approx(l2 * l2).epsilon(1e-9));
  CHECK(rep.holds);
  CHECK(rep.exact);
}

TEST_CASE("liouville_check at height zero and on vanishing sections") {
  const auto p = ProjectivePoint::normalize({1, -1});
  const auto rep = liouville_check(SectionPoly::parse("3*X0^2 + X1^2", 1), p);
  CHECK(rep.log_norm == doctest::Approx(std::log(4.0)));
  CHECK(rep.log_norm >= 0.0);
  CHECK(rep.bound <= 0.0);
  CHECK(rep.holds);
  CHECK_THROWS_WITH_AS(liouville_check(SectionPoly::parse("2*X0 - X1", 1), ProjectivePoint::normalize({1, 2})),
                       "vanishing; Liouville not applicable", PreconditionError);
  CHECK_THROWS_AS(liouville_check(SectionPoly::parse("X0 - 2*X1", 1), ProjectivePoint::normalize({2, 1})),
                  PreconditionError);
}

TEST_CASE("p1_points enumerates canonical points") {
  CHECK(p1_points(1).size() == 4);  // (0:1), (1:-1), (1:0), (1:1)
  for (long B : {2L, 5L, 11L}) {
    const auto pts = p1_points(B);
    long expect = 2;  // (1:0), (0:1)
    for (long x = 1; x <= B; ++x)
      for (long y = -B; y <= B; ++y)
        if (y != 0 && std::gcd(x, std::labs(y)) == 1) ++expect;
    CHECK(static_cast<long>(pts.size()) == expect);
    for (const auto& p : pts) CHECK(height_at_most(p, BigInt(B)));
  }
}

TEST_CASE("corpus scan agrees with pointwise checks on a small box") {
  const auto rep = liouville_corpus_scan(4, 2, 2);
  CHECK(rep.violations == 0);
  CHECK(rep.exact_violations == 0);
  CHECK(rep.min_margin >= 0.0);
  // Pointwise recount with arbitrary-precision evaluation.
  long evals = 0, vanishing = 0, sections = 0;
  const auto pts = p1_points(4);
  for (int d = 0; d <= 2; ++d) {
    const std::size_t m = d + 1;
    std::vector<long> c(m, -2);
    while (true) {
      bool zero = std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
      if (!zero) {
        ++sections;
        std::vector<BigInt> bc(c.begin(), c.end());
        const auto s = SectionPoly::from_coefficients(1, d, bc);
        for (const auto& p : pts) {
          if (s.evaluate(std::span<const BigInt>(p.coords())) == 0) {
            ++vanishing;
            continue;
          }
          ++evals;
        }
      }
      std::size_t k = 0;
      while (k < m && c[k] == 2) c[k++] = -2;
      if (k == m) break;
      ++c[k];
    }
  }
  CHECK(rep.points == static_cast<long>(pts.size()));
  CHECK(rep.sections == sections);
  CHECK(rep.evaluations == evals);
  CHECK(rep.vanishing == vanishing);
}

TEST_CASE("type_s_scan at the rational center") {
  const auto arc = exp_arc();
  const auto rep = type_s_scan(arc, {0.0}, 1.0, 2, 2);
  CHECK(rep.rho <= 0.0);
  CHECK(rep.vanishing_excluded > 0);  // e.g. X1 vanishes at (1:0:1)
  CHECK(rep.statement.find("no violation up to") != std::string::npos);
}

TEST_CASE("type_s_scan reports a finite worst ratio with a witness") {
  const auto arc = exp_arc();
  const std::vector<Complex> B{0.1, 0.2};
  const auto rep = type_s_scan(arc, B, 3.0, 2, 3);
  CHECK(std::isfinite(rep.rho));
  CHECK(rep.rho > 0.0);
  REQUIRE(rep.witness.has_value());
  const double nb = std::max(pullback_norm(*rep.witness, arc, 0.1, Metric::Max),
                             pullback_norm(*rep.witness, arc, 0.2, Metric::Max));
  CHECK(std::log(nb) == doctest::Approx(rep.witness_log_norm_b).epsilon(1e-9));
  const double den = std::max(0.0, rep.witness_log_sup) + rep.witness->degree();
  CHECK(-rep.witness_log_norm_b / std::pow(den, 3.0) == doctest::Approx(rep.rho).epsilon(1e-9));
  CHECK(rep.vanishing_excluded == 0);
}

TEST_CASE("type_s_scan ratio decreases as the exponent grows and ignores the thread split") {
  const auto arc = exp_arc();
  const std::vector<Complex> B{0.1, 0.2};
  double prev = 1e300;
  for (double a : {1.0, 1.5, 2.0, 3.0}) {
    const auto rep = type_s_scan(arc, B, a, 2, 2);
    CHECK(rep.rho <= prev + 1e-12);
    prev = rep.rho;
  }
  const auto one = type_s_scan(arc, B, 2.0, 2, 2, 1), three = type_s_scan(arc, B, 2.0, 2, 2, 3);
  CHECK(one.rho == three.rho);
  REQUIRE(one.witness.has_value());
  CHECK(*one.witness == *three.witness);
  CHECK_THROWS_AS(type_s_scan(arc, {}, 1.0, 1, 1), PreconditionError);
}
