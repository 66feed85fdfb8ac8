#pragma once

// Products of linear forms c0 + ca*a + sum_k ck*u_k with generic u_k and a.
//
// This is the Jack counterpart of Factored: the Jack coefficient is a product
// of rising factorials in u_i - u_j + const, u_i + const, 1 - a, ... Keeping u
// and a symbolic lets coinciding factors cancel before the actual u (an
// affine function of a) is substituted.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "macpieri/ratfunc.hpp"

namespace macpieri {

// Integer coefficients in the order (1, a, u_1, ..., u_n).
struct LinForm {
  std::vector<mpz_class> c;

  static LinForm constant(long v, std::size_t n);
  static LinForm a(std::size_t n);
  static LinForm u(std::size_t k, std::size_t n);  // 0-based
  LinForm operator+(const LinForm& o) const;
  LinForm operator-(const LinForm& o) const;
  LinForm operator+(long v) const;
  LinForm operator-(long v) const { return *this + (-v); }
  bool operator<(const LinForm& o) const;
  bool operator==(const LinForm& o) const { return c == o.c; }
};

class LinFactored {
 public:
  static LinFactored constant(const mpq_class& v);
  static LinFactored form(const LinForm& l);
  // (l)_k = l (l+1) ... (l+k-1), rising factorial, k >= 0.
  static LinFactored rising(const LinForm& l, long k);

  LinFactored operator*(const LinFactored& o) const;
  LinFactored operator/(const LinFactored& o) const;
  LinFactored& operator*=(const LinFactored& o) { return *this = *this * o; }
  LinFactored& operator/=(const LinFactored& o) { return *this = *this / o; }
  LinFactored operator-() const;

  bool is_zero() const { return zeros_ > 0; }
  bool is_indeterminate() const { return poles_ > 0; }
  const mpq_class& scale() const { return scale_; }
  const std::map<LinForm, long>& factors() const { return factors_; }

 private:
  void multiply_form(LinForm l, long mult);
  void scale_pow(const mpq_class& v, long mult);

  mpq_class scale_ = 1;
  std::map<LinForm, long> factors_;
  int zeros_ = 0;
  int poles_ = 0;
};

// u_k -> x_k + y_k a, and a -> alpha, 1/alpha, or a rational value.
struct JackSpecialization {
  enum class AMode { alpha, inverse_alpha, value };
  AMode mode = AMode::alpha;
  mpq_class a_value = 0;
  std::vector<std::pair<mpq_class, mpq_class>> u;
};

// Value in Q(alpha) (constant for AMode::value). Throws ArithmeticError at a pole.
RatFunc specialize(const LinFactored& f, const JackSpecialization& s);
RatFunc specialize_sum(const std::vector<LinFactored>& terms, const JackSpecialization& s);

}  // namespace macpieri
