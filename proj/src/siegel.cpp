#include "ratarc/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "ratarc/errors.hpp"

namespace ratarc {

EvaluationMatrix evaluation_matrix(std::span<const ProjectivePoint> points, int n, int d) {
  EvaluationMatrix M;
  M.n = n;
  M.d = d;
  const auto mons = monomials(n, d);
  for (const auto& p : points) {
    if (p.dimension() != n) throw PreconditionError("evaluation_matrix: point dimension mismatch");
    IntVector row;
    row.reserve(mons.size());
    for (const auto& e : mons) {
      BigInt v = 1;
      for (int i = 0; i <= n; ++i) {
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), p.coords()[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
        v *= pw;
      }
      row.push_back(v);
    }
    M.rows.push_back(std::move(row));
  }
  return M;
}

bool vanishes_on(const SectionPoly& s, std::span<const ProjectivePoint> points) {
  for (const auto& p : points)
    if (s.evaluate(std::span<const BigInt>(p.coords())) != 0) return false;
  return true;
}

namespace {

bool better(const IntVector& a, const BigInt& ma, const IntVector& b, const BigInt& mb) {
  if (ma != mb) return ma < mb;
  return a < b;
}

}  // namespace

AuxSectionCert vanish_section(std::span<const ProjectivePoint> points, int n, int d) {
  if (n < 1 || d < 0) throw PreconditionError("vanish_section: need n >= 1, d >= 0");
  const EvaluationMatrix M = evaluation_matrix(points, n, d);
  const std::size_t N = M.columns();
  std::vector<IntVector> kernel;
  if (M.rows.empty()) {
    for (std::size_t j = 0; j < N; ++j) {
      IntVector e(N, 0);
      e[j] = 1;
      kernel.push_back(e);
    }
  } else {
    kernel = integer_kernel(M.rows, N);
  }
  if (kernel.empty()) throw PreconditionError("no nonzero section exists at this degree");
  const auto reduced = lll_reduce(kernel);

  std::vector<IntVector> pool;
  for (const auto& v : reduced) pool.push_back(primitive(v));
  for (std::size_t i = 0; i < reduced.size(); ++i)
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      IntVector plus(N), minus(N);
      for (std::size_t k = 0; k < N; ++k) {
        plus[k] = reduced[i][k] + reduced[j][k];
        minus[k] = reduced[i][k] - reduced[j][k];
      }
      pool.push_back(primitive(std::move(plus)));
      pool.push_back(primitive(std::move(minus)));
    }
  for (const auto& v : kernel) pool.push_back(primitive(v));

  const IntVector* best = nullptr;
  BigInt best_max;
  for (const auto& v : pool) {
    const BigInt m = max_abs(v);
    if (m == 0) continue;
    if (!best || better(v, m, *best, best_max)) {
      best = &v;
      best_max = m;
    }
  }
  AuxSectionCert cert{SectionPoly::from_coefficients(n, d, *best), log_abs(best_max),
                      static_cast<int>(points.size()), N, 0.0};
  for (const auto& p : points) cert.max_height = std::max(cert.max_height, height(p).value);
  if (!vanishes_on(cert.section, points)) throw Error("vanish_section: internal error, section does not vanish");
  return cert;
}

SiegelReport siegel_bound_report(const AuxSectionCert& cert, double T, double epsilon) {
  SiegelReport rep;
  rep.log_max_coeff = cert.log_max_coeff;
  const double denom = cert.section.degree() * T;
  if (denom == 0.0) {
    rep.ratio = rep.log_max_coeff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    rep.ratio = rep.log_max_coeff / denom;
  }
  const double h0 = static_cast<double>(cert.h0);
  rep.in_regime = (1.0 - 2.0 * epsilon) * h0 <= cert.point_count && cert.point_count <= (1.0 - epsilon) * h0;
  return rep;
}

double SiegelRegression::median() const {
  if (ratios_.empty()) return 0.0;
  auto v = ratios_;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

bool SiegelRegression::within(double factor) const {
  const double med = median();
  for (double r : ratios_) {
    if (!std::isfinite(r)) return false;
    if (med == 0.0 ? r != 0.0 : (r > factor * med || r * factor < med)) return false;
  }
  return true;
}

double binary_form_sup(std::span<const long> c) {
  const int d = static_cast<int>(c.size()) - 1;
  // On the torus, (x, y) = (1, e^{i t}) up to a common phase.
  auto value = [&](double t) {
    std::complex<double> acc = 0.0;
    const std::complex<double> w = std::polar(1.0, t);
    for (int k = d; k >= 0; --k) acc = acc * w + static_cast<double>(c[k]);
    return std::abs(acc);
  };
  const int samples = 64 * (d + 1);
  const double step = 2.0 * std::numbers::pi / samples;
  double best = 0.0;
  std::vector<double> vals(samples);
  for (int k = 0; k < samples; ++k) {
    vals[k] = value(step * k);
    best = std::max(best, vals[k]);
  }
  // Refine around every local maximum of the samples.
  for (int k = 0; k < samples; ++k) {
    const double prev = vals[(k + samples - 1) % samples], next = vals[(k + 1) % samples];
    if (vals[k] < prev || vals[k] < next) continue;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = step * (k - 1), b = step * (k + 1);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = value(x1), f2 = value(x2);
    for (int it = 0; it < 60; ++it) {
      if (f1 >= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = value(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = value(x2);
      }
    }
    best = std::max({best, f1, f2});
  }
  return best;
}

long count_small_sections(int d, double T) {
  if (d < 0 || d > 3) throw PreconditionError("count_small_sections: d must be in [0, 3]");
  if (!(T >= 0.0 && T <= 10.0)) throw PreconditionError("count_small_sections: T must be in [0, 10]");
  // The sup norm dominates every |c_k| (Fourier coefficient bound), so the
  // nominal box |c| <= ceil(T 2^d) can be cut to |c| <= floor(T) exactly.
  const long B = static_cast<long>(std::floor(T + 1e-9));
  const int m = d + 1;
  std::vector<long> c(m, -B);
  long count = 0;
  constexpr double kTol = 1e-9;
  while (true) {
    long l1 = 0;
    for (long x : c) l1 += std::abs(x);
    if (static_cast<double>(l1) <= T + kTol || binary_form_sup(c) <= T + kTol) ++count;
    int i = 0;
    while (i < m && c[i] == B) c[i++] = -B;
    if (i == m) break;
    ++c[i];
  }
  return count;
}

}  // namespace ratarc
