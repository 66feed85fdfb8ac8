#include "macpieri/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <mutex>

#include "macpieri/errors.hpp"

namespace macpieri {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::powersum: return "p";
    case Basis::gprod: return "g";
    case Basis::eprod: return "e";
  }
  return "?";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::macdonald: return "macdonald";
    case Family::hall_littlewood: return "hl";
    case Family::schur: return "schur";
    case Family::jack: return "jack";
  }
  return "?";
}

SymFunc SymFunc::single(Basis b, const Partition& p, const RatFunc& c, Family fam) {
  SymFunc f(b, p.weight(), fam);
  f.add(p, c);
  return f;
}

RatFunc SymFunc::coeff(const Partition& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? RatFunc(0) : it->second;
}

void SymFunc::add(const Partition& p, const RatFunc& c) {
  if (c.is_zero()) return;
  if (p.weight() > degree_bound) degree_bound = p.weight();
  auto [it, inserted] = coeffs.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
  if (c.is_zero()) return SymFunc(basis, degree_bound, family);
  return mapped([&c](const RatFunc& x) { return x * c; });
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.basis != basis) throw ParameterError("adding symmetric functions in different bases");
  for (const auto& [p, c] : o.coeffs) add(p, c);
  degree_bound = std::max(degree_bound, o.degree_bound);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (o.basis != basis) throw ParameterError("subtracting symmetric functions in different bases");
  for (const auto& [p, c] : o.coeffs) add(p, -c);
  degree_bound = std::max(degree_bound, o.degree_bound);
  return *this;
}

bool SymFunc::operator==(const SymFunc& o) const {
  if (basis != o.basis) return false;
  if (basis == Basis::gprod && family != o.family) return false;
  return coeffs == o.coeffs;
}

RatFunc row_weight(Family f, int m) {
  const RatFunc one(1);
  switch (f) {
    case Family::macdonald:
      return (one - RatFunc::t().pow(m)) / (one - RatFunc::q().pow(m));
    case Family::hall_littlewood:
      return one - RatFunc::t().pow(m);
    case Family::schur:
      return one;
    case Family::jack:
      return one / RatFunc::alpha();
  }
  return one;
}

RatFunc inner_weight(Family f, int m) {
  const RatFunc one(1);
  switch (f) {
    case Family::macdonald:
      return (one - RatFunc::q().pow(m)) / (one - RatFunc::t().pow(m));
    case Family::hall_littlewood:
      return one / (one - RatFunc::t().pow(m));
    case Family::schur:
      return one;
    case Family::jack:
      return RatFunc::alpha();
  }
  return one;
}

namespace {

std::mutex cache_mutex;

Partition with_part(const Partition& p, int part) {
  std::vector<int> v = p.parts();
  v.push_back(part);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

// Generic exponential expansion: k F_k = sum_{m=1}^k w_m p_m F_{k-m}.
SymFunc exp_series_term(int k, const std::function<RatFunc(int)>& w, std::map<int, SymFunc>& memo) {
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  SymFunc r(Basis::powersum, k);
  if (k == 0) {
    r.add(Partition(), RatFunc(1));
  } else {
    for (int m = 1; m <= k; ++m) {
      const SymFunc prev = exp_series_term(k - m, w, memo);
      const RatFunc wm = w(m) / RatFunc(k);
      for (const auto& [p, c] : prev.coeffs) r.add(with_part(p, m), c * wm);
    }
  }
  memo.emplace(k, r);
  return r;
}

struct Transition {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<mpz_class>> p_to_m;  // [rho][mu]
  std::vector<std::vector<mpq_class>> m_to_p;  // [mu][rho]
};

const Transition& transition(int d) {
  static std::map<int, Transition> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Transition tr;
  tr.parts = enumerate_partitions(d);
  const std::size_t n = tr.parts.size();
  for (std::size_t i = 0; i < n; ++i) tr.index[tr.parts[i]] = i;
  tr.p_to_m.assign(n, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t m = 0; m < n; ++m) tr.p_to_m[r][m] = p_to_m_entry(tr.parts[r], tr.parts[m]);
  // p_rho = sum_mu A[rho][mu] m_mu, so m_mu = sum_rho (A^{-1})[mu][rho] p_rho.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = tr.p_to_m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    const mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  tr.m_to_p.assign(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tr.m_to_p[i][j] = a[i][n + j];
  return cache.emplace(d, std::move(tr)).first->second;
}

// Coefficient of u^r in the one-variable generating series of g_r, i.e. the
// coefficient of x_1^r in g_r(x_1).
RatFunc one_row_coeff(Family f, int r) {
  const RatFunc one(1);
  switch (f) {
    case Family::macdonald:
      return qpoch(MonomialArg(0, 1), r) / qpoch(MonomialArg(1, 0), r);
    case Family::hall_littlewood:
      return r == 0 ? one : one - RatFunc::t();
    case Family::schur:
      return one;
    case Family::jack: {
      const RatFunc a = RatFunc::alpha();
      RatFunc c(1, VarSet::alpha);
      for (int i = 0; i < r; ++i) c *= (RatFunc(1, VarSet::alpha) + RatFunc(i, VarSet::alpha) * a) / (RatFunc(i + 1, VarSet::alpha) * a);
      return c;
    }
  }
  return one;
}

// Coefficient of m_mu in a product of one-variable-separable generators:
// sum over nonnegative integer matrices with row sums nu and column sums mu of
// prod c(entry). For g this is also <g_nu, g_mu>; for e only 0/1 entries count.
class ProductExpander {
 public:
  ProductExpander(Family f, bool elementary) : f_(f), elementary_(elementary) {}

  RatFunc entry(const Partition& nu, const Partition& mu) {
    coeff(nu.weight());  // fills the table once, so references into c_ stay valid below
    std::vector<int> cols = mu.parts();
    return rows(nu.parts(), 0, cols);
  }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  RatFunc zero() const { return !elementary_ && f_ == Family::jack ? RatFunc(0, VarSet::alpha) : RatFunc(0); }

  RatFunc rows(const std::vector<int>& nu, std::size_t i, std::vector<int> cols) {
    std::sort(cols.begin(), cols.end(), std::greater<>());
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    if (i == nu.size()) return cols.empty() ? coeff(0) : zero();
    Key key{std::vector<int>(nu.begin() + static_cast<long>(i), nu.end()), cols};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    RatFunc total = zero();
    std::vector<int> rem = cols;
    fill(nu, i, rem, 0, nu[i], coeff(0), total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Distributes `left` cells of row i over the columns from position j on.
  void fill(const std::vector<int>& nu, std::size_t i, std::vector<int>& rem, std::size_t j, int left,
            const RatFunc& w, RatFunc& total) {
    if (left == 0) {
      total += w * rows(nu, i + 1, rem);
      return;
    }
    if (j == rem.size()) return;
    int room = 0;
    for (std::size_t k = j; k < rem.size(); ++k) room += rem[k];
    if (room < left) return;
    const int top = elementary_ ? std::min({left, rem[j], 1}) : std::min(left, rem[j]);
    for (int a = top; a >= 0; --a) {
      rem[j] -= a;
      fill(nu, i, rem, j + 1, left - a, a == 0 ? w : w * coeff(a), total);
      rem[j] += a;
    }
  }

  const RatFunc& coeff(int r) {
    while (static_cast<int>(c_.size()) <= r)
      c_.push_back(elementary_ ? RatFunc(1) : one_row_coeff(f_, static_cast<int>(c_.size())));
    return c_[static_cast<std::size_t>(r)];
  }

  Family f_;
  bool elementary_;
  std::vector<RatFunc> c_;
  std::map<Key, RatFunc> memo_;
};

}  // namespace

RatFunc product_m_entry(Basis b, Family f, const Partition& nu, const Partition& mu) {
  if (b != Basis::gprod && b != Basis::eprod) throw ParameterError("product_m_entry needs the g or e product basis");
  if (nu.weight() != mu.weight()) return RatFunc(0);
  static std::map<std::pair<Family, bool>, ProductExpander> expanders;
  static std::mutex expander_mutex;
  std::lock_guard<std::mutex> lock(expander_mutex);
  const bool elem = b == Basis::eprod;
  auto key = std::make_pair(elem ? Family::schur : f, elem);
  auto it = expanders.find(key);
  if (it == expanders.end()) it = expanders.emplace(key, ProductExpander(key.first, elem)).first;
  return it->second.entry(nu, mu);
}

RatFunc row_coeff(Family f, int r) { return one_row_coeff(f, r); }

// Coefficient of x^kappa in g_s * f: remove a vector beta from kappa, weight
// prod c(beta_i), and read the coefficient of the sorted remainder in f.
SymFunc multiply_row(const SymFunc& f, Basis b, Family fam, int s) {
  if (f.basis != Basis::monomial) throw ParameterError("multiply_row expects a monomial-basis input");
  if (b != Basis::gprod && b != Basis::eprod) throw ParameterError("multiply_row needs the g or e product basis");
  SymFunc out(Basis::monomial, 0);
  if (s < 0 || f.is_zero()) return out;
  const bool elem = b == Basis::eprod;
  std::vector<RatFunc> c;
  for (int r = 0; r <= s; ++r) c.push_back(elem ? RatFunc(r <= 1 ? 1 : 0) : one_row_coeff(fam, r));
  std::set<int> degrees;
  for (const auto& [nu, x] : f.coeffs) degrees.insert(nu.weight() + s);
  for (int d : degrees) {
    for (const auto& kappa : enumerate_partitions(d)) {
      const int l = kappa.length();
      IntSeq rest(kappa.parts().begin(), kappa.parts().end());
      RatFunc acc(0);
      std::function<void(int, int, RatFunc)> rec = [&](int i, int left, RatFunc w) {
        if (i == l) {
          if (left != 0) return;
          const RatFunc& fc = f.coeff(sorted_partition(rest));
          if (!fc.is_zero()) acc += w * fc;
          return;
        }
        const int top = std::min(left, kappa[i + 1]);
        for (int x = 0; x <= top; ++x) {
          if (c[static_cast<std::size_t>(x)].is_zero()) continue;
          rest[static_cast<std::size_t>(i)] -= x;
          rec(i + 1, left - x, x == 0 ? w : w * c[static_cast<std::size_t>(x)]);
          rest[static_cast<std::size_t>(i)] += x;
        }
      };
      rec(0, s, RatFunc(1));
      out.add(kappa, acc);
    }
  }
  for (const auto& [nu, x] : out.coeffs) out.degree_bound = std::max(out.degree_bound, nu.weight());
  return out;
}

SymFunc gk_in_p_basis(int k, Family f) {
  if (k < 0) return SymFunc(Basis::powersum, 0);
  static std::map<Family, std::map<int, SymFunc>> memo;
  std::map<int, SymFunc>* m;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    m = &memo[f];
  }
  return exp_series_term(k, [f](int i) { return row_weight(f, i); }, *m);
}

SymFunc ek_in_p_basis(int k) {
  if (k < 0) return SymFunc(Basis::powersum, 0);
  static std::map<int, SymFunc> memo;
  return exp_series_term(k, [](int i) { return RatFunc(i % 2 == 1 ? 1 : -1); }, memo);
}

SymFunc hk_in_p_basis(int k) { return gk_in_p_basis(k, Family::schur); }

mpz_class p_to_m_entry(const Partition& rho, const Partition& mu) {
  if (rho.weight() != mu.weight()) return 0;
  std::map<std::pair<std::size_t, std::vector<int>>, mpz_class> memo;
  const auto& parts = rho.parts();
  std::function<mpz_class(std::size_t, std::vector<int>&)> rec = [&](std::size_t i, std::vector<int>& rem) -> mpz_class {
    if (i == parts.size()) return 1;  // weights agree, so rem is all zero here
    auto key = std::make_pair(i, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    for (auto& r : rem) {
      if (r >= parts[i]) {
        r -= parts[i];
        total += rec(i + 1, rem);
        r += parts[i];
      }
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  std::vector<int> rem = mu.parts();
  return rec(0, rem);
}

mpz_class p_to_m_entry_expanded(const Partition& rho, const Partition& mu, int nvars) {
  if (mu.length() > nvars) return 0;
  std::map<std::vector<int>, mpz_class> poly;
  poly[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = 1;
  for (int part : rho.parts()) {
    std::map<std::vector<int>, mpz_class> next;
    for (const auto& [e, c] : poly) {
      for (int v = 0; v < nvars; ++v) {
        std::vector<int> e2 = e;
        e2[static_cast<std::size_t>(v)] += part;
        next[e2] += c;
      }
    }
    poly = std::move(next);
  }
  auto it = poly.find(mu.padded(nvars));
  return it == poly.end() ? mpz_class(0) : it->second;
}

mpq_class m_to_p_entry(const Partition& mu, const Partition& rho) {
  if (mu.weight() != rho.weight()) return 0;
  const Transition& tr = transition(mu.weight());
  return tr.m_to_p[tr.index.at(mu)][tr.index.at(rho)];
}

SymFunc gprod_powersum(const std::vector<int>& idx, Family f) {
  SymFunc r(Basis::powersum, 0);
  r.add(Partition(), RatFunc(1));
  for (int k : idx) {
    if (k < 0) return SymFunc(Basis::powersum, 0);
    if (k == 0) continue;
    r = multiply(r, gk_in_p_basis(k, f));
  }
  return r;
}

SymFunc eprod_powersum(const std::vector<int>& idx) {
  SymFunc r(Basis::powersum, 0);
  r.add(Partition(), RatFunc(1));
  for (int k : idx) {
    if (k < 0) return SymFunc(Basis::powersum, 0);
    if (k == 0) continue;
    r = multiply(r, ek_in_p_basis(k));
  }
  return r;
}

SymFunc to_powersum(const SymFunc& f) {
  switch (f.basis) {
    case Basis::powersum:
      return f;
    case Basis::monomial:
      return from_monomial_to_powersum(f);
    case Basis::gprod:
    case Basis::eprod: {
      SymFunc r(Basis::powersum, f.degree_bound);
      for (const auto& [p, c] : f.coeffs) {
        const SymFunc prod = f.basis == Basis::gprod ? gprod_powersum(p.parts(), f.family) : eprod_powersum(p.parts());
        for (const auto& [rho, d] : prod.coeffs) r.add(rho, c * d);
      }
      return r;
    }
  }
  return f;
}

SymFunc from_monomial_to_powersum(const SymFunc& f) {
  if (f.basis != Basis::monomial) throw ParameterError("expected the monomial basis");
  SymFunc r(Basis::powersum, f.degree_bound);
  for (const auto& [mu, c] : f.coeffs) {
    const Transition& tr = transition(mu.weight());
    const auto& row = tr.m_to_p[tr.index.at(mu)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) r.add(tr.parts[j], c * RatFunc(row[j]));
  }
  return r;
}

SymFunc to_monomial(const SymFunc& f) {
  if (f.basis == Basis::monomial) return f;
  if (f.basis == Basis::gprod || f.basis == Basis::eprod) {
    SymFunc r(Basis::monomial, f.degree_bound);
    std::map<int, std::vector<Partition>> targets;
    for (const auto& [nu, c] : f.coeffs) {
      auto& mus = targets[nu.weight()];
      if (mus.empty()) mus = enumerate_partitions(nu.weight());
      for (const auto& mu : mus) {
        const RatFunc e = product_m_entry(f.basis, f.family, nu, mu);
        if (!e.is_zero()) r.add(mu, c * e);
      }
    }
    return r;
  }
  const SymFunc p = to_powersum(f);
  // Group by degree so each m-coefficient is a single sum over rho.
  std::map<int, std::vector<std::pair<std::size_t, const RatFunc*>>> by_degree;
  for (const auto& [rho, c] : p.coeffs) {
    const Transition& tr = transition(rho.weight());
    by_degree[rho.weight()].emplace_back(tr.index.at(rho), &c);
  }
  SymFunc r(Basis::monomial, f.degree_bound);
  for (const auto& [d, entries] : by_degree) {
    const Transition& tr = transition(d);
    for (std::size_t m = 0; m < tr.parts.size(); ++m) {
      RatFunc acc(0);
      for (const auto& [ri, c] : entries)
        if (tr.p_to_m[ri][m] != 0) acc += *c * RatFunc(tr.p_to_m[ri][m]);
      r.add(tr.parts[m], acc);
    }
  }
  return r;
}

SymFunc to_monomial_in(const SymFunc& f, int nvars) {
  const SymFunc p = to_powersum(f);
  SymFunc r(Basis::monomial, f.degree_bound);
  for (const auto& [rho, c] : p.coeffs)
    for (const auto& mu : enumerate_partitions(rho.weight(), nvars)) {
      const mpz_class e = p_to_m_entry_expanded(rho, mu, nvars);
      if (e != 0) r.add(mu, c * RatFunc(e));
    }
  return r;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b, int bound) {
  const SymFunc pa = to_powersum(a), pb = to_powersum(b);
  SymFunc r(Basis::powersum, pa.degree_bound + pb.degree_bound);
  for (const auto& [x, c] : pa.coeffs)
    for (const auto& [y, d] : pb.coeffs) {
      if (bound >= 0 && x.weight() + y.weight() > bound)
        throw DegreeError("product exceeds the degree bound " + std::to_string(bound));
      r.add(merged(x, y), c * d);
    }
  if (bound >= 0) r.degree_bound = bound;
  return r;
}

RatFunc scalar_product(const SymFunc& a, const SymFunc& b, Family f) {
  const SymFunc pa = to_powersum(a), pb = to_powersum(b);
  RatFunc s(0);
  for (const auto& [rho, c] : pa.coeffs) {
    auto it = pb.coeffs.find(rho);
    if (it == pb.coeffs.end()) continue;
    RatFunc w(rho.z_factor());
    for (int part : rho.parts()) w *= inner_weight(f, part);
    s += c * it->second * w;
  }
  return s;
}

}  // namespace macpieri
