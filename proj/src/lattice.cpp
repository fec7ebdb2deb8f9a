#include "ratarc/lattice.hpp"

#include <utility>

#include "ratarc/errors.hpp"

namespace ratarc {

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

BigInt max_abs(const IntVector& v) {
  BigInt m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

IntVector primitive(IntVector v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  bool flip = false;
  for (const auto& x : v)
    if (x != 0) {
      flip = x < 0;
      break;
    }
  for (auto& x : v) {
    x /= g;
    if (flip) x = -x;
  }
  return v;
}

std::vector<IntVector> integer_kernel(const IntMatrix& A, std::size_t columns) {
  // U starts as the identity; columns of A and U are transformed together.
  std::vector<IntVector> cols(columns, IntVector(A.size()));
  std::vector<IntVector> U(columns, IntVector(columns, 0));
  for (std::size_t j = 0; j < columns; ++j) {
    U[j][j] = 1;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i].size() != columns) throw PreconditionError("integer_kernel: ragged matrix");
      cols[j][i] = A[i][j];
    }
  }
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < A.size() && pivot < columns; ++i) {
    for (std::size_t j = pivot + 1; j < columns; ++j) {
      if (cols[j][i] == 0) continue;
      const BigInt a = cols[pivot][i], b = cols[j][i];
      BigInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const BigInt ag = a / g, bg = b / g;
      // [col_p, col_j] <- [x col_p + y col_j, -bg col_p + ag col_j], determinant 1.
      auto combine = [&](IntVector& p, IntVector& q) {
        for (std::size_t k = 0; k < p.size(); ++k) {
          const BigInt np = x * p[k] + y * q[k];
          const BigInt nq = ag * q[k] - bg * p[k];
          p[k] = np;
          q[k] = nq;
        }
      };
      combine(cols[pivot], cols[j]);
      combine(U[pivot], U[j]);
    }
    if (cols[pivot][i] != 0) ++pivot;
  }
  std::vector<IntVector> kernel;
  for (std::size_t j = pivot; j < columns; ++j) kernel.push_back(U[j]);
  return kernel;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<BigRational>>& M, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < columns && row < M.size(); ++c) {
    std::size_t sel = row;
    while (sel < M.size() && M[sel][c] == 0) ++sel;
    if (sel == M.size()) continue;
    std::swap(M[row], M[sel]);
    const BigRational inv = 1 / M[row][c];
    for (auto& x : M[row]) x *= inv;
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][c] == 0) continue;
      const BigRational f = M[r][c];
      for (std::size_t k = c; k < columns; ++k) M[r][k] -= f * M[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const std::vector<std::vector<BigRational>>& A, std::size_t columns) {
  auto M = A;
  return rref(M, columns).size();
}

std::vector<IntVector> rational_kernel(const std::vector<std::vector<BigRational>>& A, std::size_t columns) {
  auto M = A;
  const auto pivots = rref(M, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][free];
    BigInt den = 1;
    for (const auto& x : v) den = lcm(den, BigInt(x.get_den()));
    IntVector w(columns);
    for (std::size_t k = 0; k < columns; ++k) w[k] = BigInt(v[k] * den);
    basis.push_back(primitive(std::move(w)));
  }
  return basis;
}

namespace {

BigInt round_div(const BigInt& a, const BigInt& b) {
  // nearest integer to a/b for b > 0
  BigInt q;
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

std::vector<IntVector> lll_reduce(std::vector<IntVector> b) {
  const std::size_t n = b.size();
  if (n <= 1) return b;
  // D[i + 1] = d_i, D[0] = 1.
  std::vector<BigInt> D(n + 1, 0);
  std::vector<std::vector<BigInt>> lam(n, std::vector<BigInt>(n, 0));
  D[0] = 1;
  auto d = [&](long i) -> BigInt& { return D[static_cast<std::size_t>(i + 1)]; };

  auto incorporate = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt u = dot(b[k], b[j]);
      for (std::size_t i = 0; i < j; ++i) u = (d(i) * u - lam[k][i] * lam[j][i]) / d(static_cast<long>(i) - 1);
      if (j < k) {
        lam[k][j] = u;
      } else {
        if (u == 0) throw PreconditionError("lll_reduce: vectors are linearly dependent");
        d(k) = u;
      }
    }
  };
  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d(l)) return;
    const BigInt q = round_div(lam[k][l], d(l));
    for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
    lam[k][l] -= q * d(l);
    for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t k = 1, kmax = 0;
  d(0) = dot(b[0], b[0]);
  if (d(0) == 0) throw PreconditionError("lll_reduce: zero vector in basis");
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      incorporate(k);
    }
    red(k, k - 1);
    const long kk = static_cast<long>(k);
    if (100 * d(kk) * d(kk - 2) < 99 * d(kk - 1) * d(kk - 1) - 100 * lam[k][k - 1] * lam[k][k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      const BigInt l = lam[k][k - 1];
      const BigInt B = (d(kk - 2) * d(kk) + l * l) / d(kk - 1);
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const BigInt t = lam[i][k];
        lam[i][k] = (d(kk) * lam[i][k - 1] - l * t) / d(kk - 1);
        lam[i][k - 1] = (B * t + l * lam[i][k]) / d(kk);
      }
      d(kk - 1) = B;
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
  return b;
}

}  // namespace ratarc
