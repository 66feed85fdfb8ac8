#include "macpieri/ratfunc.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <utility>

#include "macpieri/errors.hpp"

namespace macpieri {

namespace {

mpq_class qpow(const mpq_class& b, unsigned long e) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Clears a Laurent polynomial: P = poly * x0^m0 * x1^m1 / scale.
struct Cleared {
  MultiPoly poly;
  mpz_class scale;
  long m0 = 0, m1 = 0;
};

Cleared clear_laurent(const std::vector<LaurentTerm>& terms, VarSet v) {
  Cleared c{MultiPoly(v), 1, 0, 0};
  bool any = false;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!any) {
      c.m0 = t.e0;
      c.m1 = t.e1;
      any = true;
    }
    c.m0 = std::min(c.m0, t.e0);
    c.m1 = std::min(c.m1, t.e1);
    c.scale = lcm_z(c.scale, t.coeff.get_den());
  }
  if (!any) return c;
  std::vector<MultiPoly::Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    mpz_class k = c.scale / t.coeff.get_den() * t.coeff.get_num();
    const long a = t.e0 - c.m0, b = t.e1 - c.m1;
    if (a > static_cast<long>(MultiPoly::kMaxExp) || b > static_cast<long>(MultiPoly::kMaxExp))
      throw DegreeError("exponent overflow while clearing Laurent terms");
    out.push_back({MultiPoly::make_key(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), std::move(k)});
  }
  c.poly = MultiPoly::from_terms(std::move(out), v);
  return c;
}

}  // namespace

RatFunc::RatFunc(long c, VarSet v) : num_(c, v), den_(1, v) {}
RatFunc::RatFunc(const mpz_class& c, VarSet v) : num_(c, v), den_(1, v) {}
RatFunc::RatFunc(const mpq_class& c, VarSet v) : num_(c.get_num(), v), den_(c.get_den(), v) {
  if (num_.is_zero()) den_ = MultiPoly(1, v);
}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  const VarSet vs = merge_vars(num, den);
  if (num.is_zero()) {
    num_ = MultiPoly(vs);
    den_ = MultiPoly(1, vs);
    return;
  }
  if (den.is_one()) {
    num_ = num.with_vars(vs);
    den_ = den.with_vars(vs);
    return;
  }
  GcdResult g = gcd_cofactors(num, den);
  num_ = std::move(g.cofactor_a);
  den_ = std::move(g.cofactor_b);
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  num_ = num_.with_vars(vs);
  den_ = den_.with_vars(vs);
}

RatFunc RatFunc::from_reduced(MultiPoly num, MultiPoly den) {
  RatFunc r;
  const VarSet vs = merge_vars(num, den);
  r.num_ = num.with_vars(vs);
  r.den_ = den.with_vars(vs);
  return r;
}

RatFunc RatFunc::from_monomial(const MonomialArg& m, VarSet v) {
  return laurent_ratio({{m.qexp, m.texp, m.scale}}, {{0, 0, 1}}, v);
}

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw ParameterError("constant_value of a non-constant rational function");
  mpq_class r(num_.constant_term(), den_.constant_term());
  r.canonicalize();
  return r;
}

RatFunc RatFunc::operator-() const { return from_reduced(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc::from_reduced(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return RatFunc::from_reduced(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return RatFunc::from_reduced(a.num_ + b.num_ * a.den_, a.den_);
  // Henrici: only the common part of the denominators can cancel.
  GcdResult g = gcd_cofactors(a.den_, b.den_);
  MultiPoly n = a.num_ * g.cofactor_b + b.num_ * g.cofactor_a;
  if (n.is_zero()) return RatFunc(0L, merge_vars(a.num_, b.num_));
  if (g.gcd.is_one()) return RatFunc::from_reduced(std::move(n), a.den_ * b.den_);
  GcdResult h = gcd_cofactors(n, g.gcd);
  MultiPoly den = h.cofactor_b * g.cofactor_a * g.cofactor_b;
  MultiPoly num = std::move(h.cofactor_a);
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(0L, merge_vars(a.num_, b.num_));
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  GcdResult g1 = gcd_cofactors(a.num_, b.den_);
  GcdResult g2 = gcd_cofactors(b.num_, a.den_);
  MultiPoly num = g1.cofactor_a * g2.cofactor_a;
  MultiPoly den = g2.cofactor_b * g1.cofactor_b;
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero rational function");
  if (num_.leading_coeff() < 0) return from_reduced(-den_, -num_);
  return from_reduced(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  MultiPoly n = num_.pow(static_cast<unsigned>(k));
  MultiPoly d = den_.pow(static_cast<unsigned>(k));
  return from_reduced(std::move(n), std::move(d));
}

mpq_class RatFunc::evaluate(const mpq_class& x0, const mpq_class& x1) const {
  const mpq_class d = den_.evaluate(x0, x1);
  if (d == 0) throw ArithmeticError("evaluation at a pole");
  return num_.evaluate(x0, x1) / d;
}

RatFunc laurent_ratio(const std::vector<LaurentTerm>& num, const std::vector<LaurentTerm>& den, VarSet v) {
  Cleared d = clear_laurent(den, v);
  if (d.poly.is_zero()) throw ArithmeticError("denominator vanishes identically");
  Cleared n = clear_laurent(num, v);
  if (n.poly.is_zero()) return RatFunc(0L, v);
  // value = n.poly * d.scale * x^(n.m) / (d.poly * n.scale * x^(d.m))
  const long s0 = n.m0 - d.m0, s1 = n.m1 - d.m1;
  MultiPoly top = n.poly.scaled(d.scale).shifted(static_cast<std::uint32_t>(std::max(s0, 0L)),
                                                 static_cast<std::uint32_t>(std::max(s1, 0L)));
  MultiPoly bot = d.poly.scaled(n.scale).shifted(static_cast<std::uint32_t>(std::max(-s0, 0L)),
                                                 static_cast<std::uint32_t>(std::max(-s1, 0L)));
  return RatFunc(top, bot);
}

namespace {

std::vector<LaurentTerm> map_terms(const MultiPoly& p, const MonomialImage& i0, const MonomialImage& i1) {
  std::vector<LaurentTerm> out;
  out.reserve(p.size());
  std::map<std::uint32_t, mpq_class> pw0, pw1;
  auto power = [](std::map<std::uint32_t, mpq_class>& cache, const mpq_class& s, std::uint32_t e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    mpq_class r = e == 0 ? mpq_class(1) : qpow(s, e);
    cache.emplace(e, r);
    return r;
  };
  for (const auto& t : p.terms()) {
    const std::uint32_t a = t.e0(), b = t.e1();
    mpq_class c(t.coeff);
    if (a) c *= power(pw0, i0.scale, a);
    if (b) c *= power(pw1, i1.scale, b);
    if (c == 0) continue;
    out.push_back({static_cast<long>(a) * i0.e0 + static_cast<long>(b) * i1.e0,
                   static_cast<long>(a) * i0.e1 + static_cast<long>(b) * i1.e1, std::move(c)});
  }
  return out;
}

}  // namespace

RatFunc RatFunc::substitute(const MonomialImage& img0, const MonomialImage& img1, VarSet target) const {
  std::vector<LaurentTerm> dn = map_terms(den_, img0, img1);
  Cleared check = clear_laurent(dn, target);
  if (check.poly.is_zero()) throw ArithmeticError("substitution lands on a pole");
  return laurent_ratio(map_terms(num_, img0, img1), dn, target);
}

RatFunc RatFunc::set_q(const mpq_class& v) const {
  return substitute({0, 0, v}, {0, 1, 1}, vars());
}

RatFunc RatFunc::set_t(const mpq_class& v) const { return substitute({1, 0, 1}, {0, 0, v}, vars()); }

RatFunc RatFunc::q_to_t() const { return substitute({0, 1, 1}, {0, 1, 1}, VarSet::qt); }

RatFunc RatFunc::swapped() const { return from_reduced(num_.swapped(), den_.swapped()); }

RatFunc RatFunc::on_curve(long p, long r) const { return substitute({p, 0, 1}, {r, 0, 1}, VarSet::x); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::ostringstream os;
  const bool wrap_num = num_.size() > 1;
  const bool wrap_den = den_.size() > 1 || !den_.is_constant();
  os << (wrap_num ? "(" : "") << num_.to_string() << (wrap_num ? ")" : "") << "/"
     << (wrap_den ? "(" : "") << den_.to_string() << (wrap_den ? ")" : "");
  return os.str();
}

RatFunc qpoch(const MonomialArg& a, long k) {
  if (k < 0) throw ParameterError("qpoch needs k >= 0");
  if (k == 0) return RatFunc(1);
  // prod (1 - a q^i): each factor is cleared separately and multiplied as polynomials.
  MultiPoly num(1, VarSet::qt), den(1, VarSet::qt);
  long shift_q = 0, shift_t = 0;
  mpz_class dscale = 1;
  for (long i = 0; i < k; ++i) {
    Cleared c = clear_laurent({{0, 0, 1}, {a.qexp + i, a.texp, -a.scale}}, VarSet::qt);
    if (c.poly.is_zero()) return RatFunc(0);
    num *= c.poly;
    dscale *= c.scale;
    shift_q += c.m0;
    shift_t += c.m1;
  }
  num = num.shifted(static_cast<std::uint32_t>(std::max(shift_q, 0L)), static_cast<std::uint32_t>(std::max(shift_t, 0L)));
  den = MultiPoly::monomial(dscale, static_cast<std::uint32_t>(std::max(-shift_q, 0L)),
                            static_cast<std::uint32_t>(std::max(-shift_t, 0L)));
  return RatFunc(num, den);
}

RatFunc ratfunc_det(const std::vector<std::vector<RatFunc>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw ParameterError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw ParameterError("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  VarSet vs = VarSet::qt;
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_constant()) vs = e.vars();
  // Clear each row to a common denominator, then run Bareiss over Z[q,t].
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(vs)));
  MultiPoly row_den_product(1, vs);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly l(1, vs);
    for (const auto& e : m[i]) {
      if (e.is_zero() || e.den().is_one()) continue;
      const GcdResult g = gcd_cofactors(l, e.den());
      l = l * g.cofactor_b;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j].is_zero()) continue;
      auto f = l.divide_exact(m[i][j].den());
      a[i][j] = (m[i][j].num() * *f).with_vars(vs);
    }
    row_den_product *= l;
  }
  int sign = 1;
  MultiPoly prev(1, vs);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return RatFunc(0L, vs);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto qv = v.divide_exact(prev);
        if (!qv) throw ConsistencyError("Bareiss step is not exact");
        a[i][j] = std::move(*qv);
      }
      a[i][k] = MultiPoly(vs);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return RatFunc(det, row_den_product);
}

}  // namespace macpieri
