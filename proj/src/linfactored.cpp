#include "macpieri/linfactored.hpp"

#include "macpieri/errors.hpp"

namespace macpieri {

LinForm LinForm::constant(long v, std::size_t n) {
  LinForm l;
  l.c.assign(n + 2, 0);
  l.c[0] = v;
  return l;
}

LinForm LinForm::a(std::size_t n) {
  LinForm l = constant(0, n);
  l.c[1] = 1;
  return l;
}

LinForm LinForm::u(std::size_t k, std::size_t n) {
  LinForm l = constant(0, n);
  l.c[k + 2] = 1;
  return l;
}

LinForm LinForm::operator+(const LinForm& o) const {
  if (c.size() != o.c.size()) throw ParameterError("linear forms over different symbol sets");
  LinForm r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

LinForm LinForm::operator-(const LinForm& o) const {
  if (c.size() != o.c.size()) throw ParameterError("linear forms over different symbol sets");
  LinForm r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

LinForm LinForm::operator+(long v) const {
  LinForm r = *this;
  r.c[0] += v;
  return r;
}

bool LinForm::operator<(const LinForm& o) const {
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int s = cmp(c[i], o.c[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

LinFactored LinFactored::constant(const mpq_class& v) {
  LinFactored f;
  if (v == 0)
    f.zeros_ = 1;
  else
    f.scale_ = v;
  return f;
}

LinFactored LinFactored::form(const LinForm& l) {
  LinFactored f;
  f.multiply_form(l, 1);
  return f;
}

LinFactored LinFactored::rising(const LinForm& l, long k) {
  if (k < 0) throw ParameterError("rising factorial with negative length");
  LinFactored f;
  for (long i = 0; i < k; ++i) f.multiply_form(l + i, 1);
  return f;
}

// Stores l^mult with l primitive and its last nonzero symbol coefficient positive;
// content and sign move to the scale. Constant forms are folded in directly.
void LinFactored::scale_pow(const mpq_class& v, long mult) {
  for (long i = 0; i < mult; ++i) scale_ *= v;
  for (long i = 0; i < -mult; ++i) scale_ /= v;
}

void LinFactored::multiply_form(LinForm l, long mult) {
  std::size_t lead = l.c.size();
  for (std::size_t i = l.c.size(); i-- > 1;)
    if (l.c[i] != 0) {
      lead = i;
      break;
    }
  if (lead == l.c.size()) {
    if (l.c[0] == 0) {
      (mult > 0 ? zeros_ : poles_) += static_cast<int>(mult > 0 ? mult : -mult);
      return;
    }
    scale_pow(mpq_class(l.c[0]), mult);
    return;
  }
  mpz_class g = 0;
  for (const auto& x : l.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (l.c[lead] < 0) g = -g;
  for (auto& x : l.c) x /= g;
  scale_pow(mpq_class(g), mult);
  auto [it, inserted] = factors_.try_emplace(std::move(l), 0);
  it->second += mult;
  if (it->second == 0) factors_.erase(it);
}

LinFactored LinFactored::operator*(const LinFactored& o) const {
  LinFactored r = *this;
  r.scale_ *= o.scale_;
  r.zeros_ += o.zeros_;
  r.poles_ += o.poles_;
  for (const auto& [l, m] : o.factors_) {
    auto [it, inserted] = r.factors_.try_emplace(l, 0);
    it->second += m;
    if (it->second == 0) r.factors_.erase(it);
  }
  return r;
}

LinFactored LinFactored::operator/(const LinFactored& o) const {
  if (o.zeros_ > 0) throw ArithmeticError("division by an identically zero product");
  LinFactored inv;
  inv.scale_ = 1 / o.scale_;
  inv.poles_ = 0;
  for (const auto& [l, m] : o.factors_) inv.factors_.emplace(l, -m);
  inv.zeros_ = o.poles_;
  return *this * inv;
}

LinFactored LinFactored::operator-() const {
  LinFactored r = *this;
  r.scale_ = -r.scale_;
  return r;
}

namespace {

struct Affine {
  mpq_class x, y;  // x + y a
};

Affine evaluate_form(const LinForm& l, const JackSpecialization& s) {
  const std::size_t n = l.c.size() - 2;
  if (s.u.size() < n) throw ParameterError("specialization misses a generic symbol");
  Affine r{mpq_class(l.c[0]), mpq_class(l.c[1])};
  for (std::size_t k = 0; k < n; ++k) {
    if (l.c[k + 2] == 0) continue;
    r.x += l.c[k + 2] * s.u[k].first;
    r.y += l.c[k + 2] * s.u[k].second;
  }
  return r;
}

RatFunc affine_value(const Affine& v, const JackSpecialization& s) {
  const RatFunc al = RatFunc::alpha();
  switch (s.mode) {
    case JackSpecialization::AMode::alpha:
      return RatFunc(v.x, VarSet::alpha) + RatFunc(v.y, VarSet::alpha) * al;
    case JackSpecialization::AMode::inverse_alpha:
      return RatFunc(v.x, VarSet::alpha) + RatFunc(v.y, VarSet::alpha) / al;
    case JackSpecialization::AMode::value:
      return RatFunc(mpq_class(v.x + v.y * s.a_value), VarSet::alpha);
  }
  return RatFunc(0, VarSet::alpha);
}

bool affine_vanishes(const Affine& v, const JackSpecialization& s) {
  if (s.mode == JackSpecialization::AMode::value) return v.x + v.y * s.a_value == 0;
  return v.x == 0 && v.y == 0;
}

}  // namespace

RatFunc specialize(const LinFactored& f, const JackSpecialization& s) {
  if (f.is_indeterminate()) throw ConsistencyError("product carries an identically vanishing denominator");
  if (f.is_zero()) return RatFunc(0, VarSet::alpha);
  int zeros = 0, poles = 0;
  RatFunc num(f.scale(), VarSet::alpha), den(1, VarSet::alpha);
  for (const auto& [l, m] : f.factors()) {
    const Affine v = evaluate_form(l, s);
    if (affine_vanishes(v, s)) {
      (m > 0 ? zeros : poles) += static_cast<int>(m > 0 ? m : -m);
      continue;
    }
    const RatFunc val = affine_value(v, s);
    if (m > 0)
      num *= val.pow(m);
    else
      den *= val.pow(-m);
  }
  if (poles > 0) throw ArithmeticError("specialization hits a pole of the product");
  if (zeros > 0) return RatFunc(0, VarSet::alpha);
  return num / den;
}

RatFunc specialize_sum(const std::vector<LinFactored>& terms, const JackSpecialization& s) {
  RatFunc total(0, VarSet::alpha);
  for (const auto& f : terms) total += specialize(f, s);
  return total;
}

}  // namespace macpieri
