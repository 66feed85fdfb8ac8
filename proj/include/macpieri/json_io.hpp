#pragma once

#include <string>

#include <json.hpp>

#include "macpieri/partitions.hpp"
#include "macpieri/ratfunc.hpp"
#include "macpieri/symfunc.hpp"

namespace macpieri {

using json = nlohmann::ordered_json;

json poly_terms_to_json(const MultiPoly& p);
json ratfunc_to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const json& j);

// {"n": n, "entries": [[i, j, v], ...]} with the nonzero entries, row-major.
json theta_matrix_to_json(const ThetaMatrix& m);
// {"basis", "degree", "terms": [{"index", "coeff"}]}, indices in reverse-lex order.
json symfunc_to_json(const SymFunc& f, const std::string& basis_label);

std::string poly_to_latex(const MultiPoly& p);
// Polynomial, or \frac{num}{den}.
std::string ratfunc_to_latex(const RatFunc& r);

}  // namespace macpieri
