#pragma once

// Expansions of hook-shaped Macdonald polynomials Q_(r,1^s) and P_(r,1^s) in
// the one-row bases.

#include <vector>

#include "macpieri/expansion.hpp"
#include "macpieri/symfunc.hpp"

namespace macpieri {

enum class HookSide { q_g, p_e };

// The (s+1) x (s+1) hook determinant for Q_(r,1^s), expanded over permutations.
// Result in the gprod basis (Macdonald family).
SymFunc kerov_det(int r, int s);

// Composition sums: Q_(r,1^s) over C(s+1) in g_k (q_g), P_(r,1^s) over C(r)
// in e_k (p_e). `theta` holds the composition c, `index` the one-row indices.
std::vector<ExpansionTerm> hook_expand(int r, int s, HookSide side);

// Q_(1^n) over C(n) in g_k.
std::vector<ExpansionTerm> column_expand(int n);

// Scalar of the two-term Pieri rule Q_(1^s) Q_(r) = a Q_(r+1,1^{s-1}) + Q_(r,1^s).
RatFunc hook_pieri_scalar(int r, int s);

}  // namespace macpieri
