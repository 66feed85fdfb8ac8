#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace macpieri {

// Variable sets supported by the polynomial layer. Univariate sets store
// their single variable in slot 0; slot 1 is then always zero.
enum class VarSet : std::uint8_t { qt, alpha, x };

int var_count(VarSet v);
const char* var_name(VarSet v, int slot);

// Sparse polynomial with integer coefficients in at most two variables.
// Terms are kept sorted by descending graded-lexicographic order (slot 0 > slot 1).
class MultiPoly {
 public:
  using Key = std::uint64_t;
  static constexpr unsigned kBits = 21;
  static constexpr std::uint32_t kMaxExp = (1u << kBits) - 1;

  static Key make_key(std::uint32_t e0, std::uint32_t e1) {
    return (static_cast<Key>(e0 + e1) << (2 * kBits)) | (static_cast<Key>(e0) << kBits) | e1;
  }
  static std::uint32_t key_e0(Key k) { return static_cast<std::uint32_t>((k >> kBits) & kMaxExp); }
  static std::uint32_t key_e1(Key k) { return static_cast<std::uint32_t>(k & kMaxExp); }

  struct Term {
    Key key;
    mpz_class coeff;
    std::uint32_t e0() const { return key_e0(key); }
    std::uint32_t e1() const { return key_e1(key); }
  };

  MultiPoly() = default;
  explicit MultiPoly(VarSet v) : vars_(v) {}
  MultiPoly(long c, VarSet v = VarSet::qt);
  MultiPoly(const mpz_class& c, VarSet v = VarSet::qt);

  static MultiPoly monomial(const mpz_class& c, std::uint32_t e0, std::uint32_t e1,
                            VarSet v = VarSet::qt);
  static MultiPoly variable(int slot, VarSet v = VarSet::qt);
  // Sorts, merges equal exponents and drops zero coefficients.
  static MultiPoly from_terms(std::vector<Term> terms, VarSet v);
  // Caller guarantees terms are strictly descending and nonzero.
  static MultiPoly from_sorted_terms(std::vector<Term> terms, VarSet v);

  VarSet vars() const { return vars_; }
  MultiPoly with_vars(VarSet v) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  const mpz_class& leading_coeff() const { return terms_.front().coeff; }
  mpz_class constant_term() const;

  std::uint32_t degree(int slot) const;
  std::uint32_t min_degree(int slot) const;
  std::uint32_t total_degree() const;

  mpz_class content() const;  // positive gcd of coefficients, 0 for the zero polynomial
  mpz_class max_norm() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  MultiPoly scaled(const mpz_class& c) const;
  MultiPoly divexact(const mpz_class& c) const;
  MultiPoly shifted(std::uint32_t e0, std::uint32_t e1) const;  // multiply by a monomial
  MultiPoly pow(unsigned k) const;

  // Exact quotient, or nullopt when d does not divide *this.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  mpq_class evaluate(const mpq_class& x0, const mpq_class& x1 = 0) const;
  mpz_class evaluate_z(const mpz_class& x0, const mpz_class& x1) const;

  // Swap the two slots (q <-> t).
  MultiPoly swapped() const;

  std::string to_string() const;

 private:
  VarSet vars_ = VarSet::qt;
  std::vector<Term> terms_;
};

VarSet merge_vars(const MultiPoly& a, const MultiPoly& b);

// Greatest common divisor with positive leading coefficient, and the cofactors.
struct GcdResult {
  MultiPoly gcd, cofactor_a, cofactor_b;
};
GcdResult gcd_cofactors(const MultiPoly& a, const MultiPoly& b);
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
// Primitive polynomial remainder sequence. Slow, used as fallback and as a test reference.
MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b);

}  // namespace macpieri
