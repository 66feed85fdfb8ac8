#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpieri/errors.hpp"
#include "macpieri/factored.hpp"
#include "test_support.hpp"

using namespace macpieri;

namespace {

const RatFunc Q = RatFunc::q();
const RatFunc T = RatFunc::t();
const RatFunc ONE(1);

GMono u(std::size_t k, int p = 1) { return GMono::symbol(0, k, p); }

}  // namespace

TEST_CASE("orientation keeps one representative per binomial") {
  const Factored a = Factored::one_minus(1, u(0, -1));  // 1 - 1/u1
  const Factored b = Factored::one_minus(1, u(0));      // 1 - u1
  const Factored r = a / b;                              // -1/u1
  CHECK(r.factors().empty());
  CHECK(r.scale() == -1);
  CHECK(r.mono() == u(0, -1));
}

TEST_CASE("identical generic factors cancel before specialization") {
  const Factored f = Factored::one_minus(1, GMono(1, 0) * u(0)) / Factored::one_minus(1, GMono(1, 0) * u(0));
  const Specialization s = Specialization::at({MonomialArg(-1, 0)});
  CHECK(specialize(f, s) == ONE);
  const Factored pole = Factored::constant(1) / Factored::one_minus(1, u(0));
  CHECK_THROWS_AS(specialize(pole, Specialization::at({MonomialArg(0, 0)})), ArithmeticError);
  CHECK(specialize(Factored::one_minus(1, u(0)), Specialization::at({MonomialArg(0, 0)})).is_zero());
}

TEST_CASE("specialization agrees with direct rational-function evaluation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<MonomialArg> args = {MonomialArg(e(rng), e(rng)), MonomialArg(e(rng), e(rng))};
    const GMono m1 = GMono(e(rng), e(rng)) * u(0, e(rng)) * u(1, e(rng));
    const GMono m2 = GMono(e(rng), e(rng)) * u(1, e(rng));
    const mpq_class c = testsupport::random_nonzero_rational(rng, 4);
    auto direct = [&](const GMono& m) {
      MonomialArg r(m.q, m.t);
      for (std::size_t k = 0; k < m.u.size(); ++k)
        for (int i = 0; i < std::abs(m.u[k]); ++i) r = r * (m.u[k] > 0 ? args[k] : args[k].inverse());
      return RatFunc::from_monomial(r);
    };
    const RatFunc d1 = ONE - RatFunc(c) * direct(m1);
    const RatFunc d2 = direct(m2) - RatFunc(c) * direct(m1);
    if (d1.is_zero() || d2.is_zero()) continue;
    const Factored f = Factored::one_minus(c, m1) / Factored::difference(1, m2, c, m1) * Factored::qpoch(c, m2, 2);
    const RatFunc expect = d1 / d2 * (ONE - RatFunc(c) * direct(m2)) * (ONE - RatFunc(c) * Q * direct(m2));
    CHECK(specialize(f, Specialization::at(args)) == expect);
    const RatFunc sum = specialize_sum({f, -f.pow(2), Factored::monomial(c, m1)}, Specialization::at(args));
    CHECK(sum == expect - expect * expect + RatFunc(c) * direct(m1));
  }
}

TEST_CASE("parameter swap and curve specializations") {
  const Factored f = Factored::qpoch(1, GMono(0, 1), 2) / Factored::qpoch(1, GMono(1, 0), 2);  // (t;q)_2/(q;q)_2
  CHECK(specialize(f, Specialization::at({})) == (ONE - T) * (ONE - Q * T) / ((ONE - Q) * (ONE - Q * Q)));
  CHECK(specialize(f, Specialization::swapped_at({})) == (ONE - Q) * (ONE - Q * T) / ((ONE - T) * (ONE - T * T)));
  Specialization qt;
  qt.q = {0, 1, 1};
  CHECK(specialize(f, qt) == ONE);
  Specialization curve;
  curve.target = VarSet::x;
  curve.q = {1, 0, 1};
  curve.t = {2, 0, 1};
  const RatFunc c = specialize(f, curve);  // (1-x^2)(1-x^3)/((1-x)(1-x^2))
  CHECK(c.evaluate(1) == 3);
}
