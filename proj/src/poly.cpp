#include "macpieri/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "macpieri/errors.hpp"

namespace macpieri {

int var_count(VarSet v) { return v == VarSet::qt ? 2 : 1; }

const char* var_name(VarSet v, int slot) {
  switch (v) {
    case VarSet::qt: return slot == 0 ? "q" : "t";
    case VarSet::alpha: return "alpha";
    case VarSet::x: return "x";
  }
  return "?";
}

MultiPoly::MultiPoly(long c, VarSet v) : vars_(v) {
  if (c != 0) terms_.push_back({0, mpz_class(c)});
}

MultiPoly::MultiPoly(const mpz_class& c, VarSet v) : vars_(v) {
  if (c != 0) terms_.push_back({0, c});
}

MultiPoly MultiPoly::monomial(const mpz_class& c, std::uint32_t e0, std::uint32_t e1, VarSet v) {
  MultiPoly p(v);
  if (e0 > kMaxExp || e1 > kMaxExp) throw DegreeError("exponent overflow in MultiPoly");
  if (var_count(v) == 1 && e1 != 0) throw ParameterError("second slot used in univariate field");
  if (c != 0) p.terms_.push_back({make_key(e0, e1), c});
  return p;
}

MultiPoly MultiPoly::variable(int slot, VarSet v) {
  return slot == 0 ? monomial(1, 1, 0, v) : monomial(1, 0, 1, v);
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms, VarSet v) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
  MultiPoly p(v);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == t.key) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

MultiPoly MultiPoly::from_sorted_terms(std::vector<Term> terms, VarSet v) {
  MultiPoly p(v);
  p.terms_ = std::move(terms);
  return p;
}

MultiPoly MultiPoly::with_vars(VarSet v) const {
  MultiPoly p = *this;
  p.vars_ = v;
  return p;
}

mpz_class MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coeff;
  return 0;
}

std::uint32_t MultiPoly::degree(int slot) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, slot == 0 ? t.e0() : t.e1());
  return d;
}

std::uint32_t MultiPoly::min_degree(int slot) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = kMaxExp;
  for (const auto& t : terms_) d = std::min(d, slot == 0 ? t.e0() : t.e1());
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : static_cast<std::uint32_t>(terms_.front().key >> (2 * kBits));
}

mpz_class MultiPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class MultiPoly::max_norm() const {
  mpz_class m = 0;
  for (const auto& t : terms_) {
    if (mpz_cmpabs(t.coeff.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coeff);
  }
  return m;
}

VarSet merge_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() == b.vars()) return a.vars();
  if (a.is_constant()) return b.vars();
  if (b.is_constant()) return a.vars();
  throw ParameterError(std::string("mixing polynomial fields ") + var_name(a.vars(), 0) + " and " +
                       var_name(b.vars(), 0));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

MultiPoly merge_add(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<MultiPoly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].key > y[j].key)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].key > x[i].key) {
      out.push_back({y[j].key, subtract ? mpz_class(-y[j].coeff) : y[j].coeff});
      ++j;
    } else {
      mpz_class c = subtract ? mpz_class(x[i].coeff - y[j].coeff) : mpz_class(x[i].coeff + y[j].coeff);
      if (c != 0) out.push_back({x[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  return MultiPoly::from_sorted_terms(std::move(out), merge_vars(a, b));
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge_add(a, b, false); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge_add(a, b, true); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const VarSet vs = merge_vars(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(vs);
  if (a.size() == 1 || b.size() == 1) {
    const MultiPoly& m = a.size() == 1 ? a : b;
    const MultiPoly& o = a.size() == 1 ? b : a;
    const auto& mt = m.terms_[0];
    std::vector<MultiPoly::Term> out;
    out.reserve(o.size());
    for (const auto& t : o.terms_) out.push_back({t.key + mt.key, t.coeff * mt.coeff});
    return MultiPoly::from_sorted_terms(std::move(out), vs);
  }
  const std::uint32_t d0 = a.degree(0) + b.degree(0);
  const std::uint32_t d1 = a.degree(1) + b.degree(1);
  if (d0 > MultiPoly::kMaxExp || d1 > MultiPoly::kMaxExp) throw DegreeError("exponent overflow");
  const std::size_t w = d1 + 1;
  const std::size_t box = static_cast<std::size_t>(d0 + 1) * w;
  if (box <= 8 * a.size() * b.size() + 4096) {
    std::vector<mpz_class> buf(box);
    std::vector<char> used(box, 0);
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        const std::size_t idx = static_cast<std::size_t>(s.e0() + t.e0()) * w + (s.e1() + t.e1());
        mpz_addmul(buf[idx].get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
        used[idx] = 1;
      }
    }
    std::vector<MultiPoly::Term> out;
    for (std::int64_t tot = static_cast<std::int64_t>(d0 + d1); tot >= 0; --tot) {
      const std::int64_t hi = std::min<std::int64_t>(tot, d0);
      const std::int64_t lo = std::max<std::int64_t>(0, tot - d1);
      for (std::int64_t e0 = hi; e0 >= lo; --e0) {
        const std::size_t idx = static_cast<std::size_t>(e0) * w + static_cast<std::size_t>(tot - e0);
        if (used[idx] && buf[idx] != 0) {
          out.push_back({MultiPoly::make_key(static_cast<std::uint32_t>(e0),
                                             static_cast<std::uint32_t>(tot - e0)),
                         std::move(buf[idx])});
        }
      }
    }
    return MultiPoly::from_sorted_terms(std::move(out), vs);
  }
  std::vector<MultiPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back({s.key + t.key, s.coeff * t.coeff});
  return MultiPoly::from_terms(std::move(prods), vs);
}

MultiPoly MultiPoly::scaled(const mpz_class& c) const {
  if (c == 0) return MultiPoly(vars_);
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly MultiPoly::divexact(const mpz_class& c) const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return p;
}

MultiPoly MultiPoly::shifted(std::uint32_t e0, std::uint32_t e1) const {
  if (e0 == 0 && e1 == 0) return *this;
  MultiPoly p = *this;
  const Key s = make_key(e0, e1);
  for (auto& t : p.terms_) {
    if (t.e0() + e0 > kMaxExp || t.e1() + e1 > kMaxExp) throw DegreeError("exponent overflow");
    t.key += s;
  }
  return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1, vars_);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
  const VarSet vs = merge_vars(*this, d);
  if (is_zero()) return MultiPoly(vs);
  if (d.is_constant()) {
    const mpz_class& c = d.terms_[0].coeff;
    MultiPoly p = *this;
    for (auto& t : p.terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
    p.vars_ = vs;
    return p;
  }
  for (int s = 0; s < 2; ++s) {
    if (d.degree(s) > degree(s) || d.min_degree(s) > min_degree(s)) return std::nullopt;
  }
  if (d.is_monomial()) {
    const auto& dt = d.terms_[0];
    std::vector<Term> out;
    out.reserve(size());
    for (const auto& t : terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t())) return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
      out.push_back({make_key(t.e0() - dt.e0(), t.e1() - dt.e1()), std::move(c)});
    }
    return from_sorted_terms(std::move(out), vs);
  }
  // Cheap necessary condition: divisibility of values at an integer point.
  {
    const mpz_class dv = d.evaluate_z(3, 5);
    if (dv != 0) {
      const mpz_class fv = evaluate_z(3, 5);
      if (!mpz_divisible_p(fv.get_mpz_t(), dv.get_mpz_t())) return std::nullopt;
    }
  }
  std::map<Key, mpz_class, std::greater<Key>> rem;
  for (const auto& t : terms_) rem.emplace(t.key, t.coeff);
  const Term& ld = d.terms_[0];
  std::vector<Term> quot;
  mpz_class qc;
  while (!rem.empty()) {
    auto it = rem.begin();
    const Key k = it->first;
    if (key_e0(k) < ld.e0() || key_e1(k) < ld.e1()) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), ld.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), ld.coeff.get_mpz_t());
    const Key shift = make_key(key_e0(k) - ld.e0(), key_e1(k) - ld.e1());
    rem.erase(it);
    for (std::size_t i = 1; i < d.terms_.size(); ++i) {
      const Key nk = d.terms_[i].key + shift;
      auto [pos, inserted] = rem.try_emplace(nk);
      mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), d.terms_[i].coeff.get_mpz_t());
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back({shift, qc});
  }
  return from_sorted_terms(std::move(quot), vs);
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return a.vars_ == b.vars_ || a.is_constant();
}

mpz_class MultiPoly::evaluate_z(const mpz_class& x0, const mpz_class& x1) const {
  if (terms_.empty()) return 0;
  const std::uint32_t d0 = degree(0), d1 = degree(1);
  std::vector<mpz_class> p0(d0 + 1), p1(d1 + 1);
  p0[0] = 1;
  for (std::uint32_t i = 1; i <= d0; ++i) p0[i] = p0[i - 1] * x0;
  p1[0] = 1;
  for (std::uint32_t i = 1; i <= d1; ++i) p1[i] = p1[i - 1] * x1;
  mpz_class s = 0, tmp;
  for (const auto& t : terms_) {
    tmp = p0[t.e0()] * p1[t.e1()];
    mpz_addmul(s.get_mpz_t(), tmp.get_mpz_t(), t.coeff.get_mpz_t());
  }
  return s;
}

mpq_class MultiPoly::evaluate(const mpq_class& x0, const mpq_class& x1) const {
  if (terms_.empty()) return 0;
  // Homogenize in each variable so the whole sum stays in integers.
  const std::uint32_t d0 = degree(0), d1 = degree(1);
  const mpz_class& a = x0.get_num();
  const mpz_class& b = x0.get_den();
  const mpz_class& c = x1.get_num();
  const mpz_class& d = x1.get_den();
  std::vector<mpz_class> pa(d0 + 1), pb(d0 + 1), pc(d1 + 1), pd(d1 + 1);
  pa[0] = pb[0] = pc[0] = pd[0] = 1;
  for (std::uint32_t i = 1; i <= d0; ++i) {
    pa[i] = pa[i - 1] * a;
    pb[i] = pb[i - 1] * b;
  }
  for (std::uint32_t i = 1; i <= d1; ++i) {
    pc[i] = pc[i - 1] * c;
    pd[i] = pd[i - 1] * d;
  }
  mpz_class s = 0, tmp;
  for (const auto& t : terms_) {
    tmp = pa[t.e0()] * pb[d0 - t.e0()] * pc[t.e1()] * pd[d1 - t.e1()];
    mpz_addmul(s.get_mpz_t(), tmp.get_mpz_t(), t.coeff.get_mpz_t());
  }
  mpq_class r(s, pb[d0] * pd[d1]);
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::swapped() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({make_key(t.e1(), t.e0()), t.coeff});
  return from_terms(std::move(out), vars_);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool bare = t.key == 0;
    bool need_star = false;
    if (c != 1 || bare) {
      os << c.get_str();
      need_star = true;
    }
    for (int s = 0; s < 2; ++s) {
      const std::uint32_t e = s == 0 ? t.e0() : t.e1();
      if (e == 0) continue;
      if (need_star) os << "*";
      os << var_name(vars_, s);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace macpieri
