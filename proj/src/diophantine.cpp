#include "ratarc/diophantine.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <fmt/format.h>

#include "ratarc/errors.hpp"
#include "ratarc/siegel.hpp"

namespace ratarc {

LiouvilleReport liouville_check(const SectionPoly& s, const ProjectivePoint& p, std::optional<double> log_sup) {
  if (s.dimension() != p.dimension()) throw PreconditionError("liouville_check: dimension mismatch");
  const BigInt v = s.evaluate(std::span<const BigInt>(p.coords()));
  if (v == 0) throw PreconditionError("vanishing; Liouville not applicable");
  LiouvilleReport rep{p, s.degree(), v};
  const double h = height(p).value;
  const double d = s.degree();
  rep.log_sup = log_sup ? *log_sup : std::log(sup_norm(s, Metric::Max, 512));
  const double log_plus = std::max(0.0, rep.log_sup);
  const double log_v = log_abs(v);
  rep.log_norm = log_v - d * h;
  rep.bound = -h * (log_plus + d);
  // Both summands are nonnegative, so the sign is exact.
  rep.margin = log_v + h * log_plus;
  rep.exact = abs(v) >= 1;
  rep.holds = rep.margin >= 0.0 && rep.exact;
  return rep;
}

std::vector<ProjectivePoint> p1_points(long bound) {
  std::vector<ProjectivePoint> pts;
  pts.push_back(ProjectivePoint::normalize({0L, 1L}));
  for (const auto& q : enumerate_rationals(BigInt(bound))) {
    const BigInt num = q.get_num(), den = q.get_den();
    pts.push_back(ProjectivePoint::normalize(std::span<const BigInt>(std::vector<BigInt>{den, num})));
  }
  return pts;
}

LiouvilleCorpusReport liouville_corpus_scan(long height_bound, int d_max, long coeff_bound, int jobs) {
  if (height_bound < 1 || d_max < 0 || d_max > 3 || coeff_bound < 0 || coeff_bound > 1000)
    throw PreconditionError("liouville_corpus_scan: parameters out of the 64-bit range");
  struct Pt {
    long x, y;
    double h;
  };
  std::vector<Pt> pts;
  for (const auto& p : p1_points(height_bound))
    pts.push_back({p.coords()[0].get_si(), p.coords()[1].get_si(), height(p).value});

  // Sections: all nonzero coefficient vectors per degree.
  struct Job {
    int d;
    long first;  // fixed leading coefficient
  };
  std::vector<Job> work;
  for (int d = 0; d <= d_max; ++d)
    for (long c = -coeff_bound; c <= coeff_bound; ++c) work.push_back({d, c});

  std::vector<LiouvilleCorpusReport> partial(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w; (w = next.fetch_add(1)) < work.size();) {
      const auto [d, first] = work[w];
      LiouvilleCorpusReport rep;
      rep.min_margin = std::numeric_limits<double>::infinity();
      std::vector<long> c(d + 1, -coeff_bound);
      c[0] = first;
      // Precompute x^{d-k} y^k per point.
      while (true) {
        bool nonzero = false;
        for (long v : c) nonzero = nonzero || v != 0;
        if (nonzero) {
          ++rep.sections;
          const double log_plus = std::max(0.0, std::log(binary_form_sup(c)));
          for (const auto& p : pts) {
            long v = 0;
            long xp = 1;
            for (int k = d; k >= 0; --k) {
              long term = c[k] * xp;
              for (int j = 0; j < k; ++j) term *= p.y;
              v += term;
              xp *= p.x;
            }
            if (v == 0) {
              ++rep.vanishing;
              continue;
            }
            ++rep.evaluations;
            const long av = v < 0 ? -v : v;
            if (av < 1) ++rep.exact_violations;
            const double margin = std::log(static_cast<double>(av)) + p.h * log_plus;
            if (margin < 0.0) ++rep.violations;
            rep.min_margin = std::min(rep.min_margin, margin);
          }
        }
        int i = 1;
        while (i <= d && c[i] == coeff_bound) c[i++] = -coeff_bound;
        if (i > d) break;
        ++c[i];
      }
      partial[w] = rep;
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  LiouvilleCorpusReport total;
  total.points = static_cast<long>(pts.size());
  total.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : partial) {
    total.sections += r.sections;
    total.evaluations += r.evaluations;
    total.vanishing += r.vanishing;
    total.violations += r.violations;
    total.exact_violations += r.exact_violations;
    total.min_margin = std::min(total.min_margin, r.min_margin);
  }
  return total;
}

namespace {

struct ScanBest {
  double rho = 0.0;
  std::vector<long> coeffs;
  int degree = -1;
  double log_norm_b = 0.0;
  double log_sup = 0.0;
  long leaves = 0;
  long vanishing = 0;
};

struct DegreeData {
  int n = 0;
  int d = 0;
  std::size_t M = 0;
  std::vector<std::vector<Complex>> mon;   // [b][j], normalized by max|x_i|^d
  std::vector<std::vector<double>> tail;   // [b][k] = C * sum_{j >= k} |mon[b][j]|
};

class Scanner {
 public:
  Scanner(const DegreeData& data, long C, double a, ScanBest& best)
      : D_(data), C_(C), da_(std::pow(static_cast<double>(data.d), a)), a_(a), best_(best),
        c_(data.M, 0), partial_(data.M + 1, std::vector<Complex>(data.mon.size(), 0.0)),
        scale_(data.M + 1, std::vector<double>(data.mon.size(), 0.0)) {}

  void run_from(long first) {
    c_[0] = first;
    for (std::size_t b = 0; b < D_.mon.size(); ++b) {
      partial_[1][b] = static_cast<double>(first) * D_.mon[b][0];
      scale_[1][b] = std::abs(static_cast<double>(first)) * std::abs(D_.mon[b][0]);
    }
    if (prune(1)) return;
    descend(1, first == 0);
  }

 private:
  double threshold() const { return best_.rho > 0.0 ? std::exp(-best_.rho * da_) : 1.0; }

  bool prune(std::size_t level) const {
    const double thr = threshold();
    for (std::size_t b = 0; b < D_.mon.size(); ++b) {
      const double rest = level < D_.M ? D_.tail[b][level] : 0.0;
      if (std::abs(partial_[level][b]) - rest >= thr) return true;
    }
    return false;
  }

  void descend(std::size_t level, bool all_zero) {
    if (level == D_.M) {
      if (!all_zero) leaf();
      return;
    }
    // Sign normalization: the first nonzero coefficient is positive.
    const long lo = all_zero ? 0 : -C_;
    for (long v = lo; v <= C_; ++v) {
      c_[level] = v;
      for (std::size_t b = 0; b < D_.mon.size(); ++b) {
        partial_[level + 1][b] = partial_[level][b] + static_cast<double>(v) * D_.mon[b][level];
        scale_[level + 1][b] = scale_[level][b] + std::abs(static_cast<double>(v)) * std::abs(D_.mon[b][level]);
      }
      if (prune(level + 1)) continue;
      descend(level + 1, all_zero && v == 0);
    }
  }

  void leaf() {
    ++best_.leaves;
    double norm = 0.0;
    bool vanishing = true;
    for (std::size_t b = 0; b < D_.mon.size(); ++b) {
      const double v = std::abs(partial_[D_.M][b]);
      norm = std::max(norm, v);
      if (v > 1e-12 * scale_[D_.M][b]) vanishing = false;
    }
    if (vanishing) {
      ++best_.vanishing;
      return;
    }
    if (norm >= threshold()) return;
    const double log_norm = std::log(norm);
    if (-log_norm / da_ <= best_.rho) return;
    std::vector<BigInt> big(c_.begin(), c_.end());
    const SectionPoly s = SectionPoly::from_coefficients(D_.n, D_.d, big);
    const double log_sup = std::log(sup_norm(s, Metric::Max, 256));
    const double ratio = -log_norm / std::pow(std::max(0.0, log_sup) + D_.d, a_);
    if (ratio > best_.rho) {
      best_.rho = ratio;
      best_.coeffs = c_;
      best_.degree = D_.d;
      best_.log_norm_b = log_norm;
      best_.log_sup = log_sup;
    }
  }

  const DegreeData& D_;
  long C_;
  double da_;
  double a_;
  ScanBest& best_;
  std::vector<long> c_;
  std::vector<std::vector<Complex>> partial_;
  std::vector<std::vector<double>> scale_;
};

}  // namespace

TypeSReport type_s_scan(const AnalyticArc& arc, const std::vector<Complex>& B, double a, int d_max, long coeff_height,
                        int jobs) {
  if (B.empty()) throw PreconditionError("type_s_scan: B must be nonempty");
  if (d_max < 0 || coeff_height < 1) throw PreconditionError("type_s_scan: need d_max >= 0, coeff_height >= 1");
  if (!(a > 0.0)) throw PreconditionError("type_s_scan: exponent a must be positive");
  TypeSReport rep;
  rep.B = B;
  rep.a = a;
  rep.d_max = d_max;
  rep.coeff_height = coeff_height;
  const int n = arc.dimension();
  std::vector<std::vector<Complex>> points;
  for (const auto& b : B) points.push_back(arc.eval(b));

  // Constants contribute |c| >= 1 on B, never a positive ratio.
  rep.sections_total = coeff_height;
  rep.leaves_evaluated = coeff_height;

  ScanBest overall;
  for (int d = 1; d <= d_max; ++d) {
    DegreeData data;
    data.n = n;
    data.d = d;
    const auto mons = monomials(n, d);
    data.M = mons.size();
    for (const auto& x : points) {
      double mx = 0.0;
      for (const auto& xi : x) mx = std::max(mx, std::abs(xi));
      const double scale = std::pow(mx, d);
      std::vector<Complex> row;
      for (const auto& e : mons) {
        Complex m = 1.0;
        for (int i = 0; i <= n; ++i)
          for (int k = 0; k < e[i]; ++k) m *= x[i];
        row.push_back(m / scale);
      }
      std::vector<double> tail(data.M + 1, 0.0);
      for (std::size_t k = data.M; k-- > 0;) tail[k] = tail[k + 1] + coeff_height * std::abs(row[k]);
      data.mon.push_back(std::move(row));
      data.tail.push_back(std::move(tail));
    }
    const long side = 2 * coeff_height + 1;
    rep.sections_total += static_cast<long>((std::pow(static_cast<double>(side), data.M) - 1) / 2);

    // Partition on the leading coefficient; each part carries its own bound and
    // the merge keeps the earliest part among equal maxima.
    std::vector<ScanBest> parts(coeff_height + 1);
    for (auto& p : parts) p.rho = overall.rho;
    std::atomic<long> next{0};
    auto worker = [&] {
      for (long first; (first = next.fetch_add(1)) <= coeff_height;) {
        Scanner scanner(data, coeff_height, a, parts[first]);
        scanner.run_from(first);
      }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(parts.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (const auto& p : parts) {
      rep.leaves_evaluated += p.leaves;
      rep.vanishing_excluded += p.vanishing;
      if (p.degree >= 0 && p.rho > overall.rho) {
        const long leaves = overall.leaves, van = overall.vanishing;
        overall = p;
        overall.leaves = leaves;
        overall.vanishing = van;
      }
    }
  }
  rep.rho = overall.rho;
  if (overall.degree >= 0) {
    std::vector<BigInt> big(overall.coeffs.begin(), overall.coeffs.end());
    rep.witness = SectionPoly::from_coefficients(n, overall.degree, big);
    rep.witness_log_norm_b = overall.log_norm_b;
    rep.witness_log_sup = overall.log_sup;
  }
  rep.statement = fmt::format("no violation up to (d_max={}, coeff_height={})", d_max, coeff_height);
  return rep;
}

}  // namespace ratarc
