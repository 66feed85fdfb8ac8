#pragma once

#include <vector>

#include "macpieri/partitions.hpp"
#include "macpieri/ratfunc.hpp"
#include "macpieri/symfunc.hpp"

namespace macpieri {

// One summand of an expansion. The meaning of `index` depends on the producer:
//   Pieri expansions: the target sequence kappa;
//   single inversion steps: (s, rho_1, ..., rho_n) for g_s Q_rho, e_s P_mu, ...;
//   full expansions and hook formulas: the sequence of one-row indices.
// `theta` records the summation index (vector, or a theta matrix flattened
// row by row above the diagonal) when one exists.
struct ExpansionTerm {
  IntSeq index;
  RatFunc coeff;
  IntSeq theta;
};

// Sum of coeff * prod_i f_{index_i} in the given product basis. Sequences with
// a negative entry contribute nothing; zero entries are dropped.
SymFunc product_sum(const std::vector<ExpansionTerm>& terms, Basis b, Family f = Family::macdonald);

}  // namespace macpieri
