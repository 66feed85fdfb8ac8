#include "macpieri/factored.hpp"

#include <algorithm>
#include <tuple>

#include "macpieri/errors.hpp"

namespace macpieri {

namespace {

void trim_u(std::vector<int>& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

mpq_class qpow_signed(const mpq_class& b, long e) {
  if (e == 0) return 1;
  if (b == 0) {
    if (e < 0) throw ArithmeticError("zero raised to a negative power");
    return 0;
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), k);
  r.canonicalize();
  return e < 0 ? mpq_class(1 / r) : r;
}

}  // namespace

GMono GMono::symbol(std::size_t arity, std::size_t k, int power) {
  (void)arity;
  GMono m;
  m.u.assign(k + 1, 0);
  m.u[k] = power;
  trim_u(m.u);
  return m;
}

GMono GMono::operator*(const GMono& o) const {
  GMono r{q + o.q, t + o.t, {}};
  r.u.assign(std::max(u.size(), o.u.size()), 0);
  for (std::size_t i = 0; i < u.size(); ++i) r.u[i] += u[i];
  for (std::size_t i = 0; i < o.u.size(); ++i) r.u[i] += o.u[i];
  trim_u(r.u);
  return r;
}

GMono GMono::inverse() const {
  GMono r{-q, -t, u};
  for (auto& e : r.u) e = -e;
  return r;
}

GMono GMono::pow(long k) const {
  GMono r{q * k, t * k, u};
  for (auto& e : r.u) e = static_cast<int>(e * k);
  trim_u(r.u);
  return r;
}

bool GMono::is_trivial() const { return q == 0 && t == 0 && u.empty(); }

int GMono::orientation() const {
  for (int e : u)
    if (e != 0) return e > 0 ? 1 : -1;
  if (q != 0) return q > 0 ? 1 : -1;
  if (t != 0) return t > 0 ? 1 : -1;
  return 0;
}

Factored Factored::constant(const mpq_class& c) {
  Factored f;
  if (c == 0) {
    f.num_zeros_ = 1;
  } else {
    f.scale_ = c;
  }
  return f;
}

Factored Factored::monomial(const mpq_class& c, const GMono& m) {
  Factored f = constant(c);
  f.mono_ = m;
  trim_u(f.mono_.u);
  return f;
}

Factored Factored::one_minus(const mpq_class& c, const GMono& m) {
  Factored f;
  f.multiply_binomial(c, m, 1);
  return f;
}

Factored Factored::difference(const mpq_class& c1, const GMono& m1, const mpq_class& c2, const GMono& m2) {
  if (c1 == 0) return monomial(-c2, m2);
  Factored f = monomial(c1, m1);
  f.multiply_binomial(c2 / c1, m2 * m1.inverse(), 1);
  return f;
}

Factored Factored::qpoch(const mpq_class& c, const GMono& m, long k) {
  if (k < 0) throw ParameterError("generic q-Pochhammer needs k >= 0");
  Factored f;
  for (long i = 0; i < k; ++i) f.multiply_binomial(c, m * GMono(i, 0), 1);
  return f;
}

void Factored::multiply_binomial(const mpq_class& c, const GMono& mraw, long mult) {
  if (mult == 0) return;
  GMono m = mraw;
  trim_u(m.u);
  if (c == 0) return;
  if (m.is_trivial()) {
    const mpq_class v = 1 - c;
    if (v == 0) {
      if (mult > 0)
        num_zeros_ += static_cast<int>(mult);
      else
        den_zeros_ += static_cast<int>(-mult);
      return;
    }
    scale_ *= qpow_signed(v, mult);
    return;
  }
  mpq_class key_c = c;
  if (m.orientation() < 0) {
    // 1 - c m = (-c m) (1 - c^{-1} m^{-1})
    scale_ *= qpow_signed(-c, mult);
    mono_ = mono_ * m.pow(mult);
    key_c = 1 / c;
    m = m.inverse();
  }
  auto [it, inserted] = factors_.try_emplace(BinKey{key_c, m}, 0);
  it->second += mult;
  if (it->second == 0) factors_.erase(it);
}

Factored Factored::operator*(const Factored& o) const {
  Factored r = *this;
  r.scale_ *= o.scale_;
  r.mono_ = r.mono_ * o.mono_;
  r.num_zeros_ += o.num_zeros_;
  r.den_zeros_ += o.den_zeros_;
  for (const auto& [k, e] : o.factors_) {
    auto [it, inserted] = r.factors_.try_emplace(k, 0);
    it->second += e;
    if (it->second == 0) r.factors_.erase(it);
  }
  return r;
}

Factored Factored::pow(long k) const {
  if (k < 0) {
    Factored inv;
    inv.scale_ = 1 / scale_;
    inv.mono_ = mono_.inverse();
    inv.num_zeros_ = den_zeros_;
    inv.den_zeros_ = num_zeros_;
    for (const auto& [key, e] : factors_) inv.factors_.emplace(key, -e);
    return inv.pow(-k);
  }
  Factored r;
  r.scale_ = qpow_signed(scale_, k);
  r.mono_ = mono_.pow(k);
  r.num_zeros_ = num_zeros_ * static_cast<int>(k);
  r.den_zeros_ = den_zeros_ * static_cast<int>(k);
  if (k != 0)
    for (const auto& [key, e] : factors_) r.factors_.emplace(key, e * k);
  return r;
}

Factored Factored::operator/(const Factored& o) const { return *this * o.pow(-1); }

Factored Factored::operator-() const {
  Factored r = *this;
  r.scale_ = -r.scale_;
  return r;
}

Specialization Specialization::at(const std::vector<MonomialArg>& u) {
  Specialization s;
  for (const auto& m : u) s.u.push_back({m.qexp, m.texp, m.scale});
  return s;
}

Specialization Specialization::swapped_at(const std::vector<MonomialArg>& u) {
  Specialization s = at(u);
  s.q = {0, 1, 1};
  s.t = {1, 0, 1};
  return s;
}

namespace {

struct SKey {
  mpq_class c;
  long e0, e1;
  bool operator<(const SKey& o) const {
    if (e0 != o.e0) return e0 < o.e0;
    if (e1 != o.e1) return e1 < o.e1;
    return cmp(c, o.c) < 0;
  }
};

struct SpecProduct {
  mpq_class scale = 1;
  long e0 = 0, e1 = 0;
  std::map<SKey, long> bins;
  int zero_num = 0, zero_den = 0;
};

struct ImageMono {
  mpq_class scale;
  long e0, e1;
};

ImageMono image(const GMono& m, const Specialization& s) {
  ImageMono r{1, 0, 0};
  auto apply = [&r](const SymbolImage& img, long e) {
    if (e == 0) return;
    r.scale *= qpow_signed(img.scale, e);
    r.e0 += e * img.e0;
    r.e1 += e * img.e1;
  };
  apply(s.q, m.q);
  apply(s.t, m.t);
  if (m.u.size() > s.u.size()) throw ParameterError("specialization misses a generic symbol");
  for (std::size_t k = 0; k < m.u.size(); ++k) apply(s.u[k], m.u[k]);
  return r;
}

SpecProduct specialize_product(const Factored& f, const Specialization& s) {
  SpecProduct p;
  if (f.is_indeterminate()) throw ConsistencyError("product carries an identically vanishing denominator");
  if (f.is_zero()) {
    p.zero_num = 1;
    return p;
  }
  const ImageMono base = image(f.mono(), s);
  p.scale = f.scale() * base.scale;
  p.e0 = base.e0;
  p.e1 = base.e1;
  for (const auto& [key, mult] : f.factors()) {
    const ImageMono im = image(key.m, s);
    mpq_class c = key.c * im.scale;
    long e0 = im.e0, e1 = im.e1;
    if (e0 == 0 && e1 == 0) {
      const mpq_class v = 1 - c;
      if (v == 0) {
        if (mult > 0)
          p.zero_num += static_cast<int>(mult);
        else
          p.zero_den += static_cast<int>(-mult);
      } else {
        p.scale *= qpow_signed(v, mult);
      }
      continue;
    }
    if (e0 < 0 || (e0 == 0 && e1 < 0)) {
      p.scale *= qpow_signed(-c, mult);
      p.e0 += mult * e0;
      p.e1 += mult * e1;
      c = 1 / c;
      e0 = -e0;
      e1 = -e1;
    }
    // A negative t-power with positive q-power: pull t^{e1} out so the binomial is a polynomial.
    if (e1 < 0) p.e1 += mult * e1;
    auto [it, inserted] = p.bins.try_emplace(SKey{c, e0, e1}, 0);
    it->second += mult;
    if (it->second == 0) p.bins.erase(it);
  }
  if (p.zero_den > 0) throw ArithmeticError("specialization hits a pole of the product");
  return p;
}

// (1 - c x^e)^k as integer polynomial times rational scale folded into `scale`.
// With e1 < 0 the polynomial is x1^{-e1} - c x0^{e0}; the caller accounted for x1^{e1}.
MultiPoly binomial_power(const SKey& k, long mult, VarSet v, mpq_class& scale) {
  const mpz_class& n = k.c.get_num();
  const mpz_class& d = k.c.get_den();
  const auto lo1 = static_cast<std::uint32_t>(k.e1 < 0 ? -k.e1 : 0);
  const auto hi1 = static_cast<std::uint32_t>(k.e1 < 0 ? 0 : k.e1);
  MultiPoly b = MultiPoly::monomial(d, 0, lo1, v) - MultiPoly::monomial(n, static_cast<std::uint32_t>(k.e0), hi1, v);
  scale /= qpow_signed(mpq_class(d), mult);
  return b.pow(static_cast<unsigned>(mult));
}

}  // namespace

RatFunc specialize(const Factored& f, const Specialization& s) { return specialize_sum({f}, s); }

RatFunc specialize_sum(const std::vector<Factored>& terms, const Specialization& s) {
  const VarSet v = s.target;
  std::vector<SpecProduct> prods;
  prods.reserve(terms.size());
  for (const auto& f : terms) {
    SpecProduct p = specialize_product(f, s);
    if (p.zero_num > 0 || p.scale == 0) continue;
    prods.push_back(std::move(p));
  }
  if (prods.empty()) return RatFunc(0L, v);
  // Common denominator: every binomial at its largest negative multiplicity.
  std::map<SKey, long> den_mult;
  long min0 = prods[0].e0, min1 = prods[0].e1;
  for (const auto& p : prods) {
    min0 = std::min(min0, p.e0);
    min1 = std::min(min1, p.e1);
    for (const auto& [k, m] : p.bins) {
      if (m < 0) {
        long& d = den_mult[k];
        d = std::max(d, -m);
      }
    }
  }
  mpz_class lcm_den = 1;
  std::vector<std::pair<MultiPoly, mpq_class>> nums;
  std::map<std::pair<SKey, long>, MultiPoly> power_cache;
  auto cached_power = [&](const SKey& k, long mult, mpq_class& scale) -> MultiPoly {
    const mpz_class& d = k.c.get_den();
    scale /= qpow_signed(mpq_class(d), mult);
    auto key = std::make_pair(k, mult);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    mpq_class dummy = 1;
    MultiPoly p = binomial_power(k, mult, v, dummy);
    power_cache.emplace(key, p);
    return p;
  };
  for (auto& p : prods) {
    mpq_class scale = p.scale;
    MultiPoly acc(1, v);
    for (const auto& [k, m] : p.bins)
      if (m > 0 && !den_mult.count(k)) acc *= cached_power(k, m, scale);
    for (const auto& [k, d] : den_mult) {
      auto it = p.bins.find(k);
      const long m = (it == p.bins.end() ? 0 : it->second) + d;
      if (m > 0) acc *= cached_power(k, m, scale);
    }
    acc = acc.shifted(static_cast<std::uint32_t>(p.e0 - min0), static_cast<std::uint32_t>(p.e1 - min1));
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), scale.get_den_mpz_t());
    nums.emplace_back(std::move(acc), scale);
  }
  MultiPoly total(v);
  for (auto& [poly, scale] : nums) {
    const mpz_class factor = lcm_den / scale.get_den() * scale.get_num();
    total += poly.scaled(factor);
  }
  if (total.is_zero()) return RatFunc(0L, v);
  mpq_class dscale = 1;
  MultiPoly den(1, v);
  for (const auto& [k, d] : den_mult) den *= cached_power(k, d, dscale);
  // dscale holds 1/prod(denominators of c)^d; fold it into the numerator.
  total = total.scaled(dscale.get_den());
  den = den.scaled(lcm_den * dscale.get_num());
  total = total.shifted(static_cast<std::uint32_t>(std::max(min0, 0L)), static_cast<std::uint32_t>(std::max(min1, 0L)));
  den = den.shifted(static_cast<std::uint32_t>(std::max(-min0, 0L)), static_cast<std::uint32_t>(std::max(-min1, 0L)));
  return RatFunc(total, den);
}

}  // namespace macpieri
