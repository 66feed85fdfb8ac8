#pragma once

// Products of binomials in generic symbols.
//
// The coefficient formulas are products and quotients of factors such as
// (1 - q^a t^b u_i/u_j) with indeterminate u. The expansions specialize u to
// monomials in q and t, and at those points individual factors may vanish in
// both a numerator and a denominator. Keeping the u_k symbolic lets identical
// factors cancel as rational functions of u before anything is specialized,
// which is exactly the value of the reduced rational function at that point.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <vector>

#include "macpieri/ratfunc.hpp"

namespace macpieri {

// q^q t^t u_1^{u[0]} ... u_n^{u[n-1]}
struct GMono {
  long q = 0;
  long t = 0;
  std::vector<int> u;

  GMono() = default;
  GMono(long qe, long te, std::vector<int> ue = {}) : q(qe), t(te), u(std::move(ue)) {}
  static GMono symbol(std::size_t arity, std::size_t k, int power = 1);  // u_{k+1}^power

  GMono operator*(const GMono& o) const;
  GMono inverse() const;
  GMono pow(long k) const;
  bool is_trivial() const;
  int orientation() const;  // sign of the first nonzero exponent among u..., q, t
  auto operator<=>(const GMono&) const = default;
  bool operator==(const GMono&) const = default;
};

// scale * mono * prod (1 - c_i m_i)^{e_i}
class Factored {
 public:
  Factored() = default;
  static Factored constant(const mpq_class& c);
  static Factored monomial(const mpq_class& c, const GMono& m);
  static Factored one_minus(const mpq_class& c, const GMono& m);
  // c1 m1 - c2 m2
  static Factored difference(const mpq_class& c1, const GMono& m1, const mpq_class& c2, const GMono& m2);
  // (c m; q)_k for k >= 0
  static Factored qpoch(const mpq_class& c, const GMono& m, long k);

  Factored operator*(const Factored& o) const;
  Factored operator/(const Factored& o) const;
  Factored& operator*=(const Factored& o) { return *this = *this * o; }
  Factored& operator/=(const Factored& o) { return *this = *this / o; }
  Factored pow(long k) const;
  Factored operator-() const;

  // Identically zero: carries a factor that vanishes for generic symbols.
  bool is_zero() const { return num_zeros_ > 0; }
  bool is_indeterminate() const { return den_zeros_ > 0; }

  struct BinKey {
    mpq_class c;
    GMono m;
    bool operator<(const BinKey& o) const {
      if (m != o.m) return m < o.m;
      return cmp(c, o.c) < 0;
    }
  };

  const mpq_class& scale() const { return scale_; }
  const GMono& mono() const { return mono_; }
  const std::map<BinKey, long>& factors() const { return factors_; }

 private:
  void multiply_binomial(const mpq_class& c, const GMono& m, long mult);

  mpq_class scale_ = 1;
  GMono mono_;
  std::map<BinKey, long> factors_;
  int num_zeros_ = 0;
  int den_zeros_ = 0;
};

// Where each symbol lands: scale * x0^e0 * x1^e1 in the target field.
struct SymbolImage {
  long e0 = 0;
  long e1 = 0;
  mpq_class scale = 1;
};

struct Specialization {
  VarSet target = VarSet::qt;
  SymbolImage q{1, 0, 1};
  SymbolImage t{0, 1, 1};
  std::vector<SymbolImage> u;

  // The usual case: u_k -> monomials in (q,t), q and t fixed.
  static Specialization at(const std::vector<MonomialArg>& u);
  // q <-> t exchanged on the formula side, u_k given in the actual (q,t).
  static Specialization swapped_at(const std::vector<MonomialArg>& u);
};

// Exact value of the product at the specialization. Throws ArithmeticError at a pole.
RatFunc specialize(const Factored& f, const Specialization& s);
// Exact value of a sum of products, combined over one common denominator.
RatFunc specialize_sum(const std::vector<Factored>& terms, const Specialization& s);

}  // namespace macpieri
