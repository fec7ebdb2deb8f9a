#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ratarc/bloch_cartan.hpp"
#include "ratarc/errors.hpp"

using namespace ratarc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// Brute-force cell-centered grid area of {z in D_r : ln|f(z)| < thr}, with the
// threshold rebuilt from a dense boundary sample.
template <class F>
double grid_small_norm_area(F f, double r, double eta, int grid, double offset) {
  double sup = -1e300;
  const int boundary = 1 << 14;
  for (int k = 0; k < boundary; ++k) sup = std::max(sup, std::log(std::abs(f(std::polar(3 * r, 2 * kPi * k / boundary)))));
  const double thr = -(2.0 + std::log(1.0 / eta) / std::log(1.5)) * sup + offset;
  const double h = 2 * r / grid;
  long hits = 0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Complex z(-r + (i + 0.5) * h, -r + (j + 0.5) * h);
      if (std::abs(z) < r && std::log(std::abs(f(z))) < thr) ++hits;
    }
  return hits * h * h;
}

}  // namespace

TEST_CASE("counter RNG draws depend only on the counter") {
  const CounterRng a(42), b(42), c(43);
  for (std::uint64_t k = 0; k < 1000; ++k) {
    CHECK(a.bits(k) == b.bits(k));
    const double u = a.uniform(k);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(a.bits(7) != c.bits(7));
}

TEST_CASE("single root matches the closed-form disk area") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> pos(-2.0, 2.0), hd(0.2, 3.0);
  for (int i = 0; i < 10; ++i) {
    RootConfig cfg{{Complex(pos(rng), pos(rng))}, hd(rng)};
    const auto est = exceptional_area(cfg, enclosing_box(cfg), 100000, 1000 + i);
    const double exact = kPi * cfg.H * cfg.H / (4 * kE * kE);
    CHECK(std::abs(est.value - exact) <= 3 * est.stderr_);
    CHECK(est.holds);
  }
}

TEST_CASE("repeated roots give the same disk as a single root") {
  RootConfig one{{Complex(0.3, 0.1)}, 1.0};
  RootConfig four{{Complex(0.3, 0.1), Complex(0.3, 0.1), Complex(0.3, 0.1), Complex(0.3, 0.1)}, 1.0};
  const auto a = exceptional_area(one, enclosing_box(one), 200000, 5);
  const auto b = exceptional_area(four, enclosing_box(four), 200000, 5);
  CHECK(a.value == doctest::Approx(b.value));
}

TEST_CASE("three random roots stay below pi H^2") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    RootConfig cfg{{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)), Complex(u(rng), u(rng))}, 0.5};
    const auto est = exceptional_area(cfg, enclosing_box(cfg), 100000, i);
    CHECK(est.holds);
    CHECK(est.bound == doctest::Approx(kPi * 0.25));
  }
}

TEST_CASE("exceptional area is translation equivariant") {
  RootConfig cfg{{Complex(0.1, 0.2), Complex(-0.3, 0.05), Complex(0.2, -0.4)}, 0.8};
  RootConfig moved = cfg;
  for (auto& a : moved.roots) a += Complex(5.0, -3.0);
  const auto a = exceptional_area(cfg, enclosing_box(cfg), 200000, 9);
  const auto b = exceptional_area(moved, enclosing_box(moved), 200000, 10);
  CHECK(std::abs(a.value - b.value) <= 3 * std::hypot(a.stderr_, b.stderr_));
}

TEST_CASE("estimates reproduce exactly and ignore the thread split") {
  RootConfig cfg{{Complex(0.1, 0.2), Complex(-0.3, 0.05)}, 0.8};
  const auto a = exceptional_area(cfg, enclosing_box(cfg), 50000, 123, 1);
  const auto b = exceptional_area(cfg, enclosing_box(cfg), 50000, 123, 4);
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);
  const auto f = Holomorphic::polynomial({0.2, 1.0, -0.5});
  CHECK(small_norm_area(f, 0.2, 0.1, 30000, 8, 1).value == small_norm_area(f, 0.2, 0.1, 30000, 8, 3).value);
}

TEST_CASE("exceptional_area preconditions") {
  RootConfig cfg{{Complex(0.0, 0.0)}, 1.0};
  CHECK_THROWS_AS(exceptional_area(cfg, enclosing_box(cfg), 100, 1), PreconditionError);
  CHECK_THROWS_AS(exceptional_area(cfg, Box{-0.1, 0.1, -0.1, 0.1}, 20000, 1), PreconditionError);
  CHECK_THROWS_AS(exceptional_area(RootConfig{{}, 1.0}, Box{-1, 1, -1, 1}, 20000, 1), PreconditionError);
}

TEST_CASE("small_norm_area fixtures") {
  const auto one = small_norm_area(Holomorphic::constant(1.0), 0.1, 0.5, 20000, 1);
  CHECK(one.value == 0.0);
  CHECK(one.holds);

  const auto f = Holomorphic::polynomial({-0.5, 1.0});
  const auto est = small_norm_area(f, 0.1, 0.5, 100000, 2);
  CHECK(est.holds);
  CHECK(est.bound == doctest::Approx(4 * kPi * kE * kE * 0.25));
  const auto grid = small_norm_area_grid(f, 0.1, 0.5, 1000);
  CHECK(grid.value <= grid.bound);
  CHECK(grid.method == AreaMethod::Grid);
  CHECK(grid.value == doctest::Approx(grid_small_norm_area([](Complex z) { return z - 0.5; }, 0.1, 0.5, 1000, 3 * std::log(0.5)))
                          .epsilon(1e-6));

  CHECK(small_norm_area(f, 0.1, 0.999, 20000, 3).holds);
  CHECK_THROWS_AS(small_norm_area(f, 0.4, 0.5, 20000, 1), PreconditionError);
  CHECK_THROWS_AS(small_norm_area(f, 0.1, 1.0, 20000, 1), PreconditionError);
  CHECK_THROWS_AS(small_norm_area(Holomorphic::polynomial({0, 1}), 0.1, 0.5, 20000, 1), PreconditionError);
}

TEST_CASE("small_norm_area shrinks as eta decreases") {
  // A zero inside the disk so the set is not empty, and a nonnegative log sup on
  // the outer disk so the threshold falls as eta falls.
  const Complex a(0.02, 0.01), b(0.5, 0.3);
  const auto f = Holomorphic::polynomial({100.0 * a * b, -100.0 * (a + b), 100.0});
  double prev = 1e300;
  for (double eta : {0.9, 0.7, 0.5, 0.3, 0.1, 0.05}) {
    const auto est = small_norm_area_grid(f, 0.1, eta, 400);
    CHECK(est.value <= prev);
    prev = est.value;
    // The same seed means the Monte Carlo sets are nested as well.
    CHECK(small_norm_area(f, 0.1, eta, 20000, 4).value <= small_norm_area(f, 0.1, std::min(0.99, eta + 0.05), 20000, 4).value);
  }
}

TEST_CASE("vanishing variant") {
  const auto z = Holomorphic::polynomial({0, 1});
  const auto split = split_vanishing(z, 0.1);
  CHECK(split.order == 1);
  CHECK(std::abs(split.h0 - 1.0) < 1e-12);
  const auto est = small_norm_area_vanishing(z, 0.1, 0.3, 100000, 6);
  CHECK(est.holds);
  CHECK(est.bound == doctest::Approx(4 * kPi * kE * kE * 0.09));

  const auto g = Holomorphic::polynomial({0, 0, 1, 1});
  const auto gs = split_vanishing(g, 0.1);
  CHECK(gs.order == 2);
  CHECK(std::abs(gs.h0 - 1.0) < 1e-12);
  CHECK(small_norm_area_vanishing(g, 0.1, 0.3, 100000, 7).holds);

  // Numerical detection without a Taylor expansion.
  const auto e = Holomorphic([](Complex w) { return w * w * std::exp(w); });
  const auto es = split_vanishing(e, 0.1);
  CHECK(es.order == 2);
  CHECK(std::abs(es.h0 - 1.0) < 1e-8);

  // Order 0 reduces to the plain estimate.
  const auto f = Holomorphic::polynomial({0.2, 1.0, -0.5});
  const auto a = small_norm_area_vanishing(f, 0.2, 0.1, 30000, 8);
  const auto b = small_norm_area(f, 0.2, 0.1, 30000, 8);
  CHECK(a.value == b.value);
  CHECK_THROWS_AS(small_norm_area_vanishing(Holomorphic::polynomial({0, 0, 0}), 0.1, 0.5, 20000, 1), PreconditionError);
}
