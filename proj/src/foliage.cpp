#include "ratarc/foliage.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "ratarc/errors.hpp"

namespace ratarc {

AffinePoly::AffinePoly(int N, RationalTerms terms) : N_(N), terms_(std::move(terms)) {
  if (N < 1) throw PreconditionError("affine polynomial needs at least one variable");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<int>(it->first.size()) != N) throw PreconditionError("affine polynomial: exponent arity");
    if (sgn(it->second) == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

AffinePoly AffinePoly::parse(std::string_view text, int N) {
  auto vars = affine_variables(N);
  static const char* kAliases[] = {"x", "y", "z"};
  const int aliases = N <= 3 ? N : 0;
  for (int i = 0; i < aliases; ++i) vars.emplace_back(kAliases[i]);
  const RationalTerms raw = parse_polynomial(text, vars);
  RationalTerms folded;
  for (const auto& [e, c] : raw) {
    Exponent f(e.begin(), e.begin() + N);
    for (int i = 0; i < aliases; ++i) f[i] += e[N + i];
    folded[f] += c;
  }
  return AffinePoly(N, std::move(folded));
}

int AffinePoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

BigRational AffinePoly::evaluate(const std::vector<BigRational>& x) const {
  BigRational acc = 0;
  for (const auto& [e, c] : terms_) {
    BigRational m = c;
    for (int i = 0; i < N_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    acc += m;
  }
  return acc;
}

std::string AffinePoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto vars = N_ == 2 ? std::vector<std::string>{"x", "y"} : affine_variables(N_);
  return format_polynomial(terms_, vars);
}

AffinePoly AffinePoly::scaled(const BigRational& s) const {
  RationalTerms t;
  for (const auto& [e, c] : terms_) t[e] = c * s;
  return AffinePoly(N_, std::move(t));
}

AffinePoly operator*(const AffinePoly& a, const AffinePoly& b) {
  RationalTerms t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      t[e] += ca * cb;
    }
  return AffinePoly(a.N_, std::move(t));
}

std::vector<Exponent> affine_monomials(int N, int d) {
  std::set<Exponent, GradedLexGreater> out;
  Exponent e(N, 0);
  // Odometer over [0, d]^N keeping total degree <= d.
  while (true) {
    if (std::accumulate(e.begin(), e.end(), 0) <= d) out.insert(e);
    int i = 0;
    while (i < N && e[i] == d) e[i++] = 0;
    if (i == N) break;
    ++e[i];
  }
  return {out.begin(), out.end()};
}

VectorFieldQ VectorFieldQ::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  VectorFieldQ f;
  const int N = static_cast<int>(parts.size());
  for (const auto& p : parts) f.components.push_back(AffinePoly::parse(p, N));
  return f;
}

VectorFieldQ VectorFieldQ::scaled(const BigRational& s) const {
  VectorFieldQ f;
  for (const auto& c : components) f.components.push_back(c.scaled(s));
  return f;
}

FormalLeaf leaf_series(const VectorFieldQ& field, const std::vector<BigRational>& p, int N) {
  const int dim = field.dimension();
  if (dim < 1 || static_cast<int>(p.size()) != dim) throw PreconditionError("leaf_series: dimension mismatch");
  if (N < 1) throw PreconditionError("leaf_series: N must be >= 1");
  bool singular = true;
  for (const auto& P : field.components) singular = singular && sgn(P.evaluate(p)) == 0;
  if (singular) throw PreconditionError("singular leaf not supported");

  // Product chains: node 0 is the constant 1, nodes 1..dim the coordinates;
  // every monomial is reached by multiplying its parent by one coordinate, and
  // [t^k] of a node needs only coefficients <= k of its factors.
  struct Node {
    int parent = -1;
    int var = -1;
    std::vector<BigRational> c;
  };
  std::vector<Node> nodes(dim + 1);
  std::map<Exponent, int> index;
  index[Exponent(dim, 0)] = 0;
  for (int i = 0; i < dim; ++i) {
    Exponent e(dim, 0);
    e[i] = 1;
    index[e] = i + 1;
  }
  auto node_for = [&](const Exponent& e, auto&& self) -> int {
    if (auto it = index.find(e); it != index.end()) return it->second;
    int v = 0;
    while (e[v] == 0) ++v;
    Exponent pe = e;
    --pe[v];
    const int parent = self(pe, self);
    nodes.push_back({parent, v + 1, {}});
    index[e] = static_cast<int>(nodes.size()) - 1;
    return index[e];
  };
  std::vector<std::vector<std::pair<int, BigRational>>> rhs(dim);
  for (int i = 0; i < dim; ++i)
    for (const auto& [e, c] : field.components[i].terms()) rhs[i].emplace_back(node_for(e, node_for), c);

  for (auto& n : nodes) n.c.assign(N + 1, BigRational(0));
  nodes[0].c[0] = 1;
  for (int i = 0; i < dim; ++i) nodes[i + 1].c[0] = p[i];

  BigRational acc;
  for (int k = 0; k < N; ++k) {
    for (std::size_t m = dim + 1; m < nodes.size(); ++m) {
      auto& node = nodes[m];
      const auto& a = nodes[node.parent].c;
      const auto& b = nodes[node.var].c;
      acc = 0;
      for (int j = 0; j <= k; ++j)
        if (sgn(a[j]) != 0 && sgn(b[k - j]) != 0) acc += a[j] * b[k - j];
      node.c[k] = acc;
    }
    for (int i = 0; i < dim; ++i) {
      acc = 0;
      for (const auto& [node, coeff] : rhs[i]) acc += coeff * nodes[node].c[k];
      nodes[i + 1].c[k + 1] = acc / (k + 1);
    }
  }
  FormalLeaf leaf;
  leaf.base = p;
  for (int i = 0; i < dim; ++i) leaf.series.emplace_back(nodes[i + 1].c);
  return leaf;
}

TruncatedSeries compose(const AffinePoly& Q, const FormalLeaf& leaf) {
  const int dim = static_cast<int>(leaf.series.size());
  if (Q.variables() != dim) throw PreconditionError("compose: variable count mismatch");
  const int N = leaf.order();
  std::vector<std::vector<TruncatedSeries>> powers(dim);
  const int deg = Q.degree();
  for (int i = 0; i < dim; ++i) {
    powers[i].push_back(TruncatedSeries::constant(1, N));
    for (int a = 1; a <= deg; ++a) powers[i].push_back(powers[i].back() * leaf.series[i]);
  }
  TruncatedSeries out(N);
  for (const auto& [e, c] : Q.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(c, N);
    for (int i = 0; i < dim; ++i)
      if (e[i] > 0) term = term * powers[i][e[i]];
    out = out + term;
  }
  return out;
}

bool ode_residual_zero(const VectorFieldQ& field, const FormalLeaf& leaf) {
  for (int i = 0; i < field.dimension(); ++i) {
    const TruncatedSeries lhs = leaf.series[i].derivative();
    const TruncatedSeries rhs = compose(field.components[i], leaf).truncated(lhs.order());
    if (!(lhs == rhs)) return false;
  }
  return true;
}

LeafOrderReport ord_along_leaf(const AffinePoly& Q, const FormalLeaf& leaf) {
  const TruncatedSeries s = compose(Q, leaf);
  LeafOrderReport rep;
  rep.degree = Q.degree();
  rep.truncation = leaf.order();
  rep.order = s.valuation();
  if (rep.order < 0) throw PreconditionError("order exceeds truncation N = " + std::to_string(leaf.order()));
  rep.leading = s[rep.order];
  return rep;
}

LeafOrderReport ord_along_field(const AffinePoly& Q, const VectorFieldQ& field, const std::vector<BigRational>& p,
                                int N0, int N_max) {
  for (int N = N0;; N *= 2) {
    try {
      return ord_along_leaf(Q, leaf_series(field, p, N));
    } catch (const PreconditionError&) {
      if (2 * N > N_max) throw;
    }
  }
}

AnalyticArc leaf_arc(const VectorFieldQ& field, const FormalLeaf& leaf, double r_max, std::string id) {
  std::vector<ArcComponent> comps;
  bool graph = false;
  for (std::size_t i = 0; i < leaf.series.size(); ++i) {
    const auto& P = field.components[i];
    if (i == 0 && P.degree() == 0 && !P.is_zero()) {
      comps.push_back(polynomial_component({leaf.base[0], P.terms().begin()->second}));
      graph = P.terms().begin()->second == 1;
    } else {
      comps.push_back(series_component(leaf.series[i], ComponentKind::OdeLeaf));
    }
  }
  return AnalyticArc(std::move(id), std::move(comps), r_max, graph);
}

namespace {

using RatMatrix = std::vector<std::vector<BigRational>>;

BigRational row_dot(const std::vector<BigRational>& row, const std::vector<long>& c) {
  BigRational acc = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) acc += row[j] * c[j];
  return acc;
}

AffinePoly poly_from(const std::vector<Exponent>& mons, const IntVector& c) {
  RationalTerms t;
  for (std::size_t j = 0; j < mons.size(); ++j)
    if (c[j] != 0) t[mons[j]] = BigRational(c[j]);
  return AffinePoly(static_cast<int>(mons.front().size()), std::move(t));
}

ZeroLemmaDegree exhaustive_degree(const RatMatrix& rows, const std::vector<Exponent>& mons, long C) {
  ZeroLemmaDegree out;
  out.mode = "exhaustive";
  const std::size_t M = mons.size();
  std::vector<long> best;
  // Sign-normalized odometer: the first nonzero coordinate is positive.
  std::vector<long> cur(M, -C);
  while (true) {
    std::size_t lead = 0;
    while (lead < M && cur[lead] == 0) ++lead;
    if (lead < M && cur[lead] > 0) {
      int ord = -1;
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (sgn(row_dot(rows[k], cur)) != 0) {
          ord = static_cast<int>(k);
          break;
        }
      if (ord < 0) {
        ++out.identically_zero;
      } else if (ord > out.max_order || best.empty()) {
        out.max_order = ord;
        best = cur;
      }
    }
    std::size_t i = 0;
    while (i < M && cur[i] == C) cur[i++] = -C;
    if (i == M) break;
    ++cur[i];
  }
  if (!best.empty()) {
    out.witness = poly_from(mons, IntVector(best.begin(), best.end()));
    out.witness_within_height = true;
  }
  return out;
}

ZeroLemmaDegree lattice_degree(const RatMatrix& rows, const std::vector<Exponent>& mons, long C) {
  ZeroLemmaDegree out;
  out.mode = "lattice";
  const std::size_t M = mons.size();
  // Incremental echelon form: record the rows that raise the rank.
  std::vector<std::vector<BigRational>> basis;
  std::vector<std::size_t> pivots;
  int last = -1;
  for (std::size_t k = 0; k < rows.size() && basis.size() < M; ++k) {
    auto v = rows[k];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(v[pivots[b]]) == 0) continue;
      const BigRational f = v[pivots[b]];
      for (std::size_t j = 0; j < M; ++j) v[j] -= f * basis[b][j];
    }
    std::size_t piv = 0;
    while (piv < M && sgn(v[piv]) == 0) ++piv;
    if (piv == M) continue;
    const BigRational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(basis[b][piv]) == 0) continue;
      const BigRational f = basis[b][piv];
      for (std::size_t j = 0; j < M; ++j) basis[b][j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    last = static_cast<int>(k);
  }
  out.identically_zero = static_cast<long>(M - basis.size());
  out.max_order = std::max(last, 0);
  if (last < 0) return out;

  std::vector<IntVector> kernel;
  if (last == 0) {
    for (std::size_t j = 0; j < M; ++j) {
      IntVector e(M, 0);
      e[j] = 1;
      kernel.push_back(e);
    }
  } else {
    kernel = rational_kernel(RatMatrix(rows.begin(), rows.begin() + last), M);
  }
  const auto reduced = lll_reduce(kernel);
  for (const auto& v : reduced) {
    BigRational acc = 0;
    for (std::size_t j = 0; j < M; ++j) acc += rows[last][j] * v[j];
    if (sgn(acc) != 0) {
      const IntVector w = primitive(v);
      out.witness = poly_from(mons, w);
      out.witness_within_height = max_abs(w) <= C;
      break;
    }
  }
  return out;
}

}  // namespace

ZeroLemmaReport zero_lemma_scan(const VectorFieldQ& field, const std::vector<BigRational>& p, int d_max,
                                long coeff_height, int N, long exhaustive_limit) {
  if (d_max < 1 || coeff_height < 1) throw PreconditionError("zero_lemma_scan: need d_max >= 1, coeff_height >= 1");
  const FormalLeaf leaf = leaf_series(field, p, N);
  const int dim = field.dimension();
  ZeroLemmaReport rep;
  rep.truncation = N;
  for (int d = 1; d <= d_max; ++d) {
    const auto mons = affine_monomials(dim, d);
    const std::size_t M = mons.size();
    RatMatrix rows(N + 1, std::vector<BigRational>(M));
    for (std::size_t j = 0; j < M; ++j) {
      RationalTerms t;
      t[mons[j]] = 1;
      const TruncatedSeries s = compose(AffinePoly(dim, std::move(t)), leaf);
      for (int k = 0; k <= N; ++k) rows[k][j] = s[k];
    }
    const double box = std::pow(2.0 * coeff_height + 1.0, static_cast<double>(M));
    ZeroLemmaDegree deg = box <= static_cast<double>(exhaustive_limit) ? exhaustive_degree(rows, mons, coeff_height)
                                                                       : lattice_degree(rows, mons, coeff_height);
    deg.degree = d;
    if (deg.max_order >= N) throw PreconditionError("zero_lemma_scan: order reaches the truncation; raise N");
    rep.degrees.push_back(std::move(deg));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& d : rep.degrees) {
    if (d.max_order <= 0) continue;
    const double x = std::log(d.degree), y = std::log(d.max_order);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m >= 2) rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return rep;
}

namespace {

// Prime factorization by trial division up to `limit`; a remaining cofactor
// is returned as a single factor.
std::vector<std::pair<BigInt, int>> factor(BigInt n, unsigned long limit, bool& complete) {
  std::vector<std::pair<BigInt, int>> out;
  for (unsigned long p = 2; p <= limit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(BigInt(p), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) complete = false;
    out.emplace_back(n, 1);
  }
  return out;
}

}  // namespace

JetDenominatorReport jet_denominator_check(const FormalLeaf& leaf, const AffinePoly& Q, int n_max) {
  if (n_max < 0 || n_max > leaf.order()) throw PreconditionError("jet_denominator_check: n_max exceeds truncation");
  const TruncatedSeries s = compose(Q, leaf);
  JetDenominatorReport rep;
  rep.n_max = n_max;
  std::map<BigInt, int> need;  // prime -> required exponent in C
  BigInt fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= n;
    const BigInt den = s[n].get_den();
    rep.denominators.push_back(den);
    const BigInt rest = den / gcd(den, fact);
    if (rest == 1) continue;
    if (n == 0) throw PreconditionError("jet_denominator_check: constant term is not integral");
    bool complete = true;
    for (const auto& [p, e] : factor(rest, 1000000, complete)) {
      const int req = (e + n - 1) / n;
      need[p] = std::max(need[p], req);
    }
    rep.fully_factored = rep.fully_factored && complete;
  }
  for (const auto& [p, e] : need)
    for (int k = 0; k < e; ++k) rep.C *= p;
  return rep;
}

}  // namespace ratarc
