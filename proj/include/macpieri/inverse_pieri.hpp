#pragma once

// Inverse Pieri coefficients and the expansions they drive.
//
// C^{(q,t)}_theta(u) is built once per theta as generic products in u (see
// Factored) along three independent routes and specialized on demand. The
// other flavours are: C^{(t,q)} (parameters exchanged), the Hall-Littlewood
// C^{(t)}(m), the monomial C(m), and the Jack C^{(a)}(u).

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "macpieri/expansion.hpp"
#include "macpieri/factored.hpp"
#include "macpieri/linfactored.hpp"
#include "macpieri/partitions.hpp"
#include "macpieri/ratfunc.hpp"
#include "macpieri/symfunc.hpp"

namespace macpieri {

enum class CFlavor { qt, tq, hl, mono, jack };

const char* flavor_name(CFlavor f);

// Generic term lists for one theta; the sum of each list is C^{(q,t)}_theta(u).
struct CRouteTerms {
  std::vector<Factored> det;      // multilinear expansion of the determinant
  std::vector<Factored> subset;   // subset sum with u_{n+1} = 1/t
  std::vector<Factored> reduced;  // subsets of the support T of theta
};
const CRouteTerms& c_route_terms(const ThetaVector& theta);

// Value of C^{(q,t)}_theta at a specialization of (q, t, u). Every route that
// is regular at the point is evaluated; they must agree (ConsistencyError
// otherwise). Throws ArithmeticError if no route is regular.
RatFunc c_coeff_at(const ThetaVector& theta, const Specialization& s);
// Number of routes that were regular in the last c_coeff_at call on this thread.
int last_route_count();

RatFunc c_coeff_qt(const ThetaVector& theta, const std::vector<MonomialArg>& u);
// C^{(t,q)}: the formula with q and t exchanged, u given in the actual (q,t).
RatFunc c_coeff_tq(const ThetaVector& theta, const std::vector<MonomialArg>& u);
// Closed form in m_1..m_n (0/0 factors with theta_j = 0 are read as 0).
RatFunc c_coeff_hl(const ThetaVector& theta, const IntSeq& m);
mpq_class c_coeff_mono(const ThetaVector& theta, const IntSeq& m);

// Jack coefficient from the determinant route and the subset route, which must agree.
RatFunc c_coeff_jack(const ThetaVector& theta, const JackSpecialization& s);
std::vector<LinFactored> jack_det_terms(const ThetaVector& theta);
std::vector<LinFactored> jack_subset_terms(const ThetaVector& theta);

struct CArgs {
  std::vector<MonomialArg> u;  // qt, tq
  IntSeq m;                    // hl, mono
  JackSpecialization jack;     // jack
};
RatFunc c_coeff(CFlavor flavor, const ThetaVector& theta, const CArgs& args);

// C^{(q,t)} at q = t, compared with 0 or (-1)^{|theta|}; the u_k are read at
// q = t. Throws ConsistencyError on mismatch and returns the value.
RatFunc schur_c_check(const ThetaVector& theta, const std::vector<MonomialArg>& u);

// Both sides of the limit relating C^{(a)} and C^{(q,t)}: u_k = x_k + y_k a in
// the Jack coefficient, U_k = q^{x_k} t^{y_k} on the curve q = x^p, t = x^r
// taken at x = 1, with a = r/p.
std::pair<mpq_class, mpq_class> jack_limit_pair(const ThetaVector& theta, const std::vector<std::pair<long, long>>& u,
                                                long p, long r);

enum class StepSide { q_g, p_e, hl, mono, jack_q, jack_p, schur };

const char* side_name(StepSide s);
StepSide parse_side(const std::string& name);
bool is_g_side(StepSide s);  // q_g, jack_q, schur: one-row factors are g-type
// Family of the one-row factors and of the polynomials on both sides.
Family side_family(StepSide s);

// One inversion step. index = (s, rest...) for f_s X_rest, theta = theta.
//   g-type sides: lambda of length n+1 (any integers allowed for q_g), rest = lambda_1..n + theta.
//   e-type sides: lambda a partition, n+1 = lambda_1, rest = the partition mu.
std::vector<ExpansionTerm> invert_step(const IntSeq& lambda, StepSide side);
// e-type step on a multiplicity vector m_1..m_{n+1}; rest = new multiplicities m'_1..m'_n.
std::vector<ExpansionTerm> invert_step_mult(const IntSeq& m, StepSide side);

// Left-hand side of a step in the monomial basis (oracle).
SymFunc step_lhs(const IntSeq& lambda, StepSide side);
// Right-hand side of a step in the monomial basis: one-row factor times the
// oracle polynomial; non-partition targets count as zero.
SymFunc step_resum(const std::vector<ExpansionTerm>& terms, StepSide side);

struct FullTerm {
  ThetaMatrix theta;
  RatFunc coeff;
  IntSeq index;  // one-row indices, row 1 first
};

struct FullExpansion {
  Partition lambda;
  StepSide side = StepSide::q_g;
  bool full = false;
  std::vector<FullTerm> terms;
};

// Recursive expansion into products of one-row functions. With full = false
// the recursion skips non-partition intermediate shapes (their polynomials
// vanish); with full = true every theta matrix is kept (q_g, p_e, schur only).
FullExpansion expand_full(const Partition& lambda, StepSide side, bool full = false);
// Product of C coefficients read directly off the closed display for one theta matrix.
RatFunc full_display_coeff(const Partition& lambda, const ThetaMatrix& theta, StepSide side);
IntSeq full_display_index(const Partition& lambda, const ThetaMatrix& theta, StepSide side);
// Re-summation in the monomial basis.
SymFunc full_resum(const FullExpansion& e);
std::vector<ExpansionTerm> full_as_terms(const FullExpansion& e);

// Subset-sum F_n and closed-form G_n for a_1..a_{n+1}, b_1..b_n.
std::pair<mpq_class, mpq_class> fn_gn(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);

// Window check of the pair f_{beta kappa} = C_{beta-kappa}(q^{kappa_i+|kappa|} u_i),
// g_{kappa gamma} = d_{kappa-gamma}(q^{gamma_i+|gamma|} u_i) at numeric q, t, u.
// Returns the number of violated entries of f g = 1 and g f = 1.
int inverse_link_violations(const mpq_class& q, const mpq_class& t, const std::vector<mpq_class>& u, int side);

}  // namespace macpieri
