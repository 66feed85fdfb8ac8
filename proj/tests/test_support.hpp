#pragma once

#include <doctest.h>

#include <random>

#include "macpieri/ratfunc.hpp"

namespace testsupport {

using macpieri::MultiPoly;
using macpieri::RatFunc;

inline MultiPoly random_poly(std::mt19937_64& rng, int max_terms, int max_deg, int max_coeff) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg), co(-max_coeff, max_coeff);
  std::vector<MultiPoly::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    terms.push_back({MultiPoly::make_key(static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))),
                     mpz_class(co(rng))});
  }
  return MultiPoly::from_terms(std::move(terms), macpieri::VarSet::qt);
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, int max_terms, int max_deg, int max_coeff) {
  while (true) {
    MultiPoly p = random_poly(rng, max_terms, max_deg, max_coeff);
    if (!p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(std::mt19937_64& rng) {
  return RatFunc(random_poly(rng, 4, 3, 5), random_nonzero_poly(rng, 3, 3, 5));
}

inline mpq_class random_rational(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  mpq_class r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline mpq_class random_nonzero_rational(std::mt19937_64& rng, int bound = 9) {
  while (true) {
    mpq_class r = random_rational(rng, bound);
    if (r != 0) return r;
  }
}

}  // namespace testsupport

namespace doctest {
template <>
struct StringMaker<macpieri::RatFunc> {
  static String convert(const macpieri::RatFunc& r) { return r.to_string().c_str(); }
};
}  // namespace doctest
