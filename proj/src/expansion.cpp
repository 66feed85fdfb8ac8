#include "macpieri/expansion.hpp"

#include <algorithm>

namespace macpieri {

SymFunc product_sum(const std::vector<ExpansionTerm>& terms, Basis b, Family f) {
  SymFunc out(b, 0, f);
  for (const auto& term : terms) {
    if (std::any_of(term.index.begin(), term.index.end(), [](int x) { return x < 0; })) continue;
    out.add(sorted_partition(term.index), term.coeff);
  }
  return out;
}

}  // namespace macpieri
