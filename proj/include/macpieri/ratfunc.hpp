#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "macpieri/poly.hpp"

namespace macpieri {

// scale * q^qexp * t^texp with integer (possibly negative) exponents.
struct MonomialArg {
  long qexp = 0;
  long texp = 0;
  mpq_class scale = 1;

  MonomialArg() = default;
  MonomialArg(long qe, long te, mpq_class s = 1) : qexp(qe), texp(te), scale(std::move(s)) {}

  MonomialArg operator*(const MonomialArg& o) const {
    return {qexp + o.qexp, texp + o.texp, scale * o.scale};
  }
  MonomialArg inverse() const { return {-qexp, -texp, 1 / scale}; }
  bool operator==(const MonomialArg& o) const {
    return qexp == o.qexp && texp == o.texp && scale == o.scale;
  }
  bool is_one() const { return qexp == 0 && texp == 0 && scale == 1; }
};

// Image of one variable under a monomial substitution: scale * x0^e0 * x1^e1.
struct MonomialImage {
  long e0 = 0;
  long e1 = 0;
  mpq_class scale = 1;
};

// Canonically reduced quotient of two MultiPoly values.
class RatFunc {
 public:
  RatFunc() : num_(VarSet::qt), den_(1, VarSet::qt) {}
  RatFunc(long c, VarSet v = VarSet::qt);
  RatFunc(const mpz_class& c, VarSet v = VarSet::qt);
  RatFunc(const mpq_class& c, VarSet v = VarSet::qt);
  explicit RatFunc(const MultiPoly& p) : num_(p), den_(1, p.vars()) {}
  RatFunc(const MultiPoly& num, const MultiPoly& den);  // reduces

  static RatFunc q() { return RatFunc(MultiPoly::variable(0, VarSet::qt)); }
  static RatFunc t() { return RatFunc(MultiPoly::variable(1, VarSet::qt)); }
  static RatFunc alpha() { return RatFunc(MultiPoly::variable(0, VarSet::alpha)); }
  static RatFunc x() { return RatFunc(MultiPoly::variable(0, VarSet::x)); }
  static RatFunc from_monomial(const MonomialArg& m, VarSet v = VarSet::qt);
  // Caller guarantees the pair is already reduced with canonical sign.
  static RatFunc from_reduced(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  VarSet vars() const { return num_.is_constant() ? den_.vars() : num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  RatFunc inverse() const;
  RatFunc pow(long k) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Exact value at a rational point; throws ArithmeticError at a pole.
  mpq_class evaluate(const mpq_class& x0, const mpq_class& x1 = 0) const;
  // Substitute x0 -> img0, x1 -> img1 (monomials), landing in field `target`.
  // Throws ArithmeticError when the substituted denominator vanishes identically.
  RatFunc substitute(const MonomialImage& img0, const MonomialImage& img1, VarSet target) const;
  RatFunc set_q(const mpq_class& v) const;  // q -> v
  RatFunc set_t(const mpq_class& v) const;  // t -> v
  RatFunc q_to_t() const;                    // q -> t
  RatFunc swapped() const;                   // q <-> t
  // q -> x^p, t -> x^r, landing in the univariate field x.
  RatFunc on_curve(long p, long r) const;

  std::string to_string() const;

 private:
  MultiPoly num_, den_;
};

RatFunc qpoch(const MonomialArg& a, long k);
RatFunc ratfunc_det(const std::vector<std::vector<RatFunc>>& m);

// Builds the reduced quotient of two Laurent polynomials with rational coefficients.
struct LaurentTerm {
  long e0, e1;
  mpq_class coeff;
};
RatFunc laurent_ratio(const std::vector<LaurentTerm>& num, const std::vector<LaurentTerm>& den, VarSet v);

}  // namespace macpieri
