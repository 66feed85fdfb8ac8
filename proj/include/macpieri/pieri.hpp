#pragma once

#include <vector>

#include "macpieri/expansion.hpp"
#include "macpieri/factored.hpp"
#include "macpieri/partitions.hpp"
#include "macpieri/ratfunc.hpp"

namespace macpieri {

// d_theta(u_1..u_n), evaluated both from the four-ratio product and from the
// compact product with u_{n+1} = 1/t, theta_{n+1} = -|theta|. The two must agree.
RatFunc d_coeff(const ThetaVector& theta, const std::vector<MonomialArg>& u);
RatFunc d_coeff_four_ratio(const ThetaVector& theta, const std::vector<MonomialArg>& u);
RatFunc d_coeff_compact(const ThetaVector& theta, const std::vector<MonomialArg>& u);
// Both forms at an arbitrary specialization of (q, t, u).
RatFunc d_coeff_at(const ThetaVector& theta, const Specialization& s);

// Combinatorial psi_{kappa/lambda}; zero unless kappa/lambda is a horizontal strip.
RatFunc psi_coeff(const Partition& kappa, const Partition& lambda);

struct PieriExpansion {
  Partition lambda;
  int r = 0;
  std::vector<ExpansionTerm> terms;  // index = kappa, theta = theta
};

// Q_lambda Q_(r) = sum_theta d_theta(u) Q_kappa with n = l(lambda),
// u_k = q^{lambda_k - r} t^{n-k}, kappa = (lambda + theta, r - |theta|).
// Without raw, non-partition kappa are dropped.
PieriExpansion pieri_expand(const Partition& lambda, int r, bool raw = false);

// Hall-Littlewood analytic Pieri pair on integer sequences:
//   Q_lambda q_r = sum_{|theta| <= r} (1-t)^{n(theta)} Q_{(lambda+theta, r-|theta|)}
//   Q_lambda = sum_theta t^{|theta|} (1-1/t)^{n(theta)} q_{lambda_{n+1}-|theta|} Q_{lambda_1+theta_1, ...}
// The second returns index = (s, rho...) for q_s Q_rho.
std::vector<ExpansionTerm> hl_pieri_expand(const IntSeq& lambda, int r);
std::vector<ExpansionTerm> hl_recurrence(const IntSeq& lambda);

}  // namespace macpieri
