#pragma once

#include <map>
#include <vector>

#include "macpieri/partitions.hpp"
#include "macpieri/ratfunc.hpp"

namespace macpieri {

enum class Basis { monomial, powersum, gprod, eprod };

// Coefficient families. Each one fixes the one-row function g_k (the generator
// behind the gprod basis) and the weights of the scalar product on power sums.
//   macdonald: g_k(q,t); weights z (1-q^i)/(1-t^i)
//   hall_littlewood: q_k(t) = g_k(0,t); weights z / (1-t^i)
//   schur: h_k; weights z
//   jack: Q_(k)(alpha); weights z alpha^i per part
enum class Family { macdonald, hall_littlewood, schur, jack };

const char* basis_name(Basis b);
const char* family_name(Family f);

struct SymFunc {
  Basis basis = Basis::monomial;
  Family family = Family::macdonald;  // meaningful for gprod only
  int degree_bound = 0;
  std::map<Partition, RatFunc> coeffs;

  SymFunc() = default;
  SymFunc(Basis b, int bound, Family fam = Family::macdonald) : basis(b), family(fam), degree_bound(bound) {}
  static SymFunc single(Basis b, const Partition& p, const RatFunc& c = RatFunc(1), Family fam = Family::macdonald);

  bool is_zero() const { return coeffs.empty(); }
  RatFunc coeff(const Partition& p) const;
  // Adds c to the coefficient of p, dropping a resulting zero.
  void add(const Partition& p, const RatFunc& c);
  SymFunc scaled(const RatFunc& c) const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  // Apply a map to every coefficient (for specializations); zeros are dropped.
  template <class F>
  SymFunc mapped(F&& f) const {
    SymFunc r(basis, degree_bound, family);
    for (const auto& [p, c] : coeffs) r.add(p, f(c));
    return r;
  }
  bool operator==(const SymFunc& o) const;
};

// c_m with g_k = sum_{rho |- k} z_rho^{-1} prod_i c_{rho_i} p_rho.
RatFunc row_weight(Family f, int m);
// Scalar product <p_rho, p_rho> = z_rho prod_i inner_weight(rho_i).
RatFunc inner_weight(Family f, int m);

// g_k of the family in the power-sum basis, expanded from the exponential of
// the logarithm of the generating series (k g_k = sum_m c_m p_m g_{k-m}).
SymFunc gk_in_p_basis(int k, Family f = Family::macdonald);
SymFunc ek_in_p_basis(int k);
SymFunc hk_in_p_basis(int k);

// Integer coefficient of m_mu in p_rho (number of ways to distribute the parts
// of rho over the rows of mu). Both partitions of the same weight.
mpz_class p_to_m_entry(const Partition& rho, const Partition& mu);
// Coefficient of m_mu in p_rho read off an explicit expansion in N variables.
mpz_class p_to_m_entry_expanded(const Partition& rho, const Partition& mu, int nvars);
// Rational coefficient of p_rho in m_mu.
mpq_class m_to_p_entry(const Partition& mu, const Partition& rho);

// Coefficient of m_mu in g_nu (gprod, family f) or e_nu (eprod), summed over
// integer matrices with margins nu and mu.
RatFunc product_m_entry(Basis b, Family f, const Partition& nu, const Partition& mu);

// Coefficient of x^r in the one-variable g_r of the family.
RatFunc row_coeff(Family f, int r);
// g_s * f (gprod) or e_s * f (eprod) for f in the monomial basis, result in the monomial basis.
SymFunc multiply_row(const SymFunc& f, Basis b, Family fam, int s);
SymFunc to_powersum(const SymFunc& f);
SymFunc to_monomial(const SymFunc& f);
// Monomial expansion computed by explicit expansion in nvars variables.
SymFunc to_monomial_in(const SymFunc& f, int nvars);
SymFunc from_monomial_to_powersum(const SymFunc& f);

// Product in the power-sum basis. Throws DegreeError if bound >= 0 is exceeded.
SymFunc multiply(const SymFunc& a, const SymFunc& b, int bound = -1);
// Product of the family's one-row generators g_{i_1} g_{i_2} ... (entries < 0 give 0).
SymFunc gprod_powersum(const std::vector<int>& idx, Family f);
SymFunc eprod_powersum(const std::vector<int>& idx);

RatFunc scalar_product(const SymFunc& a, const SymFunc& b, Family f = Family::macdonald);

}  // namespace macpieri
