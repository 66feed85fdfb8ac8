#include "macpieri/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "macpieri/errors.hpp"

namespace macpieri {

namespace {

// P_lambda in the monomial basis for every partition of one degree.
//
// With g = A m and the triangularities P = L m (L unitriangular, dominance
// below) and Q = b P, duality <m_mu, g_nu> = delta forces A = L^T diag(b) L.
// Eliminating A in reverse-lex order therefore produces the rows of L and
// the pivots b_lambda; this is the orthogonalization written as a factorization.
struct DegreeTable {
  std::vector<Partition> parts;  // reverse-lex, dominance-maximal first
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<RatFunc>> P;  // P[i][j]: coefficient of m_{parts[j]}
  std::vector<RatFunc> pivot;           // b_lambda
  // (L^{-1})[j][i], filled on first use: Q_lambda = sum_nu (L^{-1})[nu][lambda] g_nu.
  std::vector<std::vector<RatFunc>> inverse;
};

std::mutex table_mutex;

DegreeTable& table(Family f, int d) {
  static std::map<std::pair<Family, int>, DegreeTable> tables;
  std::lock_guard<std::mutex> lock(table_mutex);
  auto key = std::make_pair(f, d);
  auto it = tables.find(key);
  if (it != tables.end()) return it->second;
  DegreeTable t;
  t.parts = enumerate_partitions(d);
  const std::size_t n = t.parts.size();
  for (std::size_t i = 0; i < n; ++i) t.index[t.parts[i]] = i;
  std::vector<std::vector<RatFunc>> a(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      a[i][j] = product_m_entry(Basis::gprod, f, t.parts[i], t.parts[j]);
      a[j][i] = a[i][j];
    }
  t.P.assign(n, {});
  t.pivot.assign(n, RatFunc());
  for (std::size_t k = 0; k < n; ++k) {
    const RatFunc piv = a[k][k];
    if (piv.is_zero()) throw ConsistencyError("zero pivot in the orthogonalization of degree " + std::to_string(d));
    std::vector<RatFunc> row(n, piv - piv);
    for (std::size_t j = k; j < n; ++j) row[j] = a[k][j] / piv;
    // Symmetric update of the trailing block; only the upper triangle is kept current.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[k][i].is_zero()) continue;
      for (std::size_t j = i; j < n; ++j)
        if (!row[j].is_zero()) a[i][j] -= a[k][i] * row[j];
      for (std::size_t j = i + 1; j < n; ++j) a[j][i] = a[i][j];
    }
    t.P[k] = std::move(row);
    t.pivot[k] = piv;
  }
  return tables.emplace(key, std::move(t)).first->second;
}

const std::vector<std::vector<RatFunc>>& unit_inverse(Family f, int d) {
  DegreeTable& t = table(f, d);
  std::lock_guard<std::mutex> lock(table_mutex);
  if (!t.inverse.empty()) return t.inverse;
  const std::size_t n = t.parts.size();
  const RatFunc zero = t.pivot[0] - t.pivot[0];
  std::vector<std::vector<RatFunc>> inv(n, std::vector<RatFunc>(n, zero));
  // Column c of L^{-1}: solve L x = e_c by back substitution (L is unit upper triangular).
  for (std::size_t c = 0; c < n; ++c) {
    inv[c][c] = RatFunc(1);
    for (std::size_t i = c; i-- > 0;) {
      RatFunc acc = zero;
      for (std::size_t j = i + 1; j <= c; ++j)
        if (!t.P[i][j].is_zero() && !inv[j][c].is_zero()) acc += t.P[i][j] * inv[j][c];
      inv[i][c] = -acc;
    }
  }
  t.inverse = std::move(inv);
  return t.inverse;
}

}  // namespace

SymFunc oracle_Q_gprod(const Partition& lambda, Family f) {
  const int d = lambda.weight();
  const auto& inv = unit_inverse(f, d);
  const DegreeTable& t = table(f, d);
  const std::size_t l = t.index.at(lambda);
  SymFunc r(Basis::gprod, d, f);
  for (std::size_t nu = 0; nu <= l; ++nu) r.add(t.parts[nu], inv[nu][l]);
  return r;
}

SymFunc oracle_P(const Partition& lambda, Family f) {
  const DegreeTable& t = table(f, lambda.weight());
  const auto& v = t.P[t.index.at(lambda)];
  SymFunc r(Basis::monomial, lambda.weight());
  for (std::size_t i = 0; i < v.size(); ++i) r.add(t.parts[i], v[i]);
  return r;
}

SymFunc oracle_P_powersum(const Partition& lambda, Family f) { return from_monomial_to_powersum(oracle_P(lambda, f)); }

RatFunc oracle_norm(const Partition& lambda, Family f) {
  const DegreeTable& t = table(f, lambda.weight());
  const RatFunc& b = t.pivot[t.index.at(lambda)];
  return b.inverse();
}

SymFunc oracle_Q_powersum(const Partition& lambda, Family f) {
  return oracle_P_powersum(lambda, f).scaled(oracle_norm(lambda, f).inverse());
}

SymFunc oracle_Q(const Partition& lambda, Family f) {
  return oracle_P(lambda, f).scaled(oracle_norm(lambda, f).inverse());
}

RatFunc b_lambda(const Partition& lambda) {
  RatFunc b(1);
  const int l = lambda.length();
  for (int i = 1; i <= l; ++i)
    for (int j = i; j <= l; ++j) {
      const int k = lambda[j] - lambda[j + 1];
      b *= qpoch(MonomialArg(lambda[i] - lambda[j], j - i + 1), k) /
           qpoch(MonomialArg(lambda[i] - lambda[j] + 1, j - i), k);
    }
  return b;
}

SymFunc hl_raising_Q(const IntSeq& s) {
  const int n = static_cast<int>(s.size());
  SymFunc out(Basis::gprod, 0, Family::hall_littlewood);
  int weight = 0;
  long budget = 0;  // sum_k (k-1) s_k bounds sum_{i<j} (j-i) theta_ij when all final entries are >= 0
  for (int k = 0; k < n; ++k) {
    weight += s[static_cast<std::size_t>(k)];
    budget += static_cast<long>(k) * s[static_cast<std::size_t>(k)];
  }
  if (weight < 0) return out;
  const RatFunc t = RatFunc::t();
  const RatFunc step = t - RatFunc(1);  // (1 - 1/t) t
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  IntSeq cur = s;
  std::function<void(std::size_t, long, RatFunc)> rec = [&](std::size_t p, long left, RatFunc coeff) {
    if (p == pairs.size()) {
      if (std::any_of(cur.begin(), cur.end(), [](int x) { return x < 0; })) return;
      out.add(sorted_partition(cur), coeff);
      return;
    }
    const auto [i, j] = pairs[p];
    const long cost = j - i;
    rec(p + 1, left, coeff);
    RatFunc c = coeff * step;
    for (int th = 1; th * cost <= left; ++th) {
      cur[static_cast<std::size_t>(i)] += th;
      cur[static_cast<std::size_t>(j)] -= th;
      rec(p + 1, left - th * cost, c);
      cur[static_cast<std::size_t>(i)] -= th;
      cur[static_cast<std::size_t>(j)] += th;
      c *= t;
    }
  };
  rec(0, budget, RatFunc(1));
  out.degree_bound = weight;
  return out;
}

RatFunc eigenvalue(const Partition& lambda, int n) {
  RatFunc e(0);
  for (int i = 1; i <= n; ++i) e += RatFunc::from_monomial(MonomialArg(lambda[i], n - i));
  return e;
}

namespace {

// Polynomials in x_1..x_n with coefficients in Q(q,t).
using XPoly = std::map<std::vector<int>, RatFunc>;

void xadd(XPoly& a, const std::vector<int>& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, ins] = a.try_emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

XPoly xmul(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      xadd(r, e, ca * cb);
    }
  return r;
}

// c1 x_i - c2 x_j as an XPoly.
XPoly xlin(int n, int i, const RatFunc& c1, int j, const RatFunc& c2) {
  XPoly r;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  xadd(r, e, c1);
  e[static_cast<std::size_t>(i)] = 0;
  e[static_cast<std::size_t>(j)] = 1;
  xadd(r, e, -c2);
  return r;
}

}  // namespace

bool eigencheck(const Partition& lambda, int n) {
  if (lambda.length() > n) throw ParameterError("eigencheck needs l(lambda) <= n");
  const SymFunc P = oracle_P(lambda, Family::macdonald);
  XPoly f;
  for (const auto& [mu, c] : P.coeffs) {
    if (mu.length() > n) continue;
    std::vector<int> e = mu.padded(n);
    std::sort(e.begin(), e.end());
    do {
      xadd(f, e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  const RatFunc one(1), t = RatFunc::t(), q = RatFunc::q();
  XPoly unit;
  unit[std::vector<int>(static_cast<std::size_t>(n), 0)] = one;
  XPoly delta = unit;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) delta = xmul(delta, xlin(n, i, one, j, one));
  // Delta * E f = sum_i (-1)^i prod_{j != i} (t x_i - x_j) prod_{j<k; j,k != i} (x_j - x_k) T_{q,x_i} f
  XPoly lhs;
  for (int i = 0; i < n; ++i) {
    XPoly term = unit;
    for (int j = 0; j < n; ++j)
      if (j != i) term = xmul(term, xlin(n, i, t, j, one));
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (j != i && k != i) term = xmul(term, xlin(n, j, one, k, one));
    XPoly shifted;
    for (const auto& [e, c] : f) xadd(shifted, e, c * q.pow(e[static_cast<std::size_t>(i)]));
    term = xmul(term, shifted);
    for (const auto& [e, c] : term) xadd(lhs, e, i % 2 == 0 ? c : -c);
  }
  XPoly rhs;
  const RatFunc ev = eigenvalue(lambda, n);
  for (const auto& [e, c] : xmul(delta, f)) xadd(rhs, e, c * ev);
  return lhs == rhs;
}

}  // namespace macpieri
