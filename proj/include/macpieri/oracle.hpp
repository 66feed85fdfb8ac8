#pragma once

#include "macpieri/partitions.hpp"
#include "macpieri/symfunc.hpp"

namespace macpieri {

// Gram-Schmidt ground truth for the orthogonal families. Results are memoized
// per family and degree; the first call for a degree runs the orthogonalization
// down to (1^d).

// P_lambda of the family in the monomial basis.
SymFunc oracle_P(const Partition& lambda, Family f = Family::macdonald);
// Same element in the power-sum basis.
SymFunc oracle_P_powersum(const Partition& lambda, Family f = Family::macdonald);
// <P_lambda, P_lambda> from the orthogonalization.
RatFunc oracle_norm(const Partition& lambda, Family f = Family::macdonald);
// Q_lambda = P_lambda / <P_lambda, P_lambda>, power-sum basis.
SymFunc oracle_Q_powersum(const Partition& lambda, Family f = Family::macdonald);
SymFunc oracle_Q(const Partition& lambda, Family f = Family::macdonald);
// Q_lambda expanded in products of the family's one-row functions, read off the
// inverse of the unitriangular factor.
SymFunc oracle_Q_gprod(const Partition& lambda, Family f = Family::macdonald);

// Closed product formula for b_lambda(q,t) = <P_lambda, P_lambda>^{-1}.
RatFunc b_lambda(const Partition& lambda);

// Hall-Littlewood Q for an arbitrary integer sequence through the raising
// operator product applied to q_s, returned in the gprod basis (family hl).
SymFunc hl_raising_Q(const IntSeq& s);

// Checks E(X;q,t) P_lambda = (sum_i q^{lambda_i} t^{n-i}) P_lambda on n variables.
bool eigencheck(const Partition& lambda, int n);
// Eigenvalue sum_{i=1}^n q^{lambda_i} t^{n-i}.
RatFunc eigenvalue(const Partition& lambda, int n);

}  // namespace macpieri
