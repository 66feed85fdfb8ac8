#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpieri/errors.hpp"
#include "macpieri/symfunc.hpp"
#include "test_support.hpp"

using namespace macpieri;
using namespace testsupport;

namespace {

const RatFunc Q = RatFunc::q();
const RatFunc T = RatFunc::t();
const RatFunc ONE(1);

SymFunc mono(std::initializer_list<int> p, const RatFunc& c = ONE) { return SymFunc::single(Basis::monomial, Partition(p), c); }
SymFunc psum(std::initializer_list<int> p, const RatFunc& c = ONE) { return SymFunc::single(Basis::powersum, Partition(p), c); }

SymFunc random_sym(std::mt19937_64& rng, Basis b, int deg) {
  SymFunc f(b, deg);
  for (int d = 0; d <= deg; ++d)
    for (const auto& p : enumerate_partitions(d))
      if (rng() % 2) f.add(p, random_ratfunc(rng));
  return f;
}

}  // namespace

TEST_CASE("one-row generator in power sums") {
  CHECK(gk_in_p_basis(0) == psum({}));
  CHECK(gk_in_p_basis(1) == psum({1}, (ONE - T) / (ONE - Q)));
  SymFunc g2 = psum({2}, (ONE - T * T) / (RatFunc(2) * (ONE - Q * Q)));
  g2 += psum({1, 1}, (ONE - T).pow(2) / (RatFunc(2) * (ONE - Q).pow(2)));
  CHECK(gk_in_p_basis(2) == g2);
  // brute product in two variables: coefficient of x1^2 is (t;q)_2/(q;q)_2
  CHECK(to_monomial(gk_in_p_basis(2)).coeff(Partition({2})) == qpoch(MonomialArg(0, 1), 2) / qpoch(MonomialArg(1, 0), 2));
  CHECK(to_monomial(gk_in_p_basis(2)).coeff(Partition({1, 1})) == ((ONE - T) / (ONE - Q)).pow(2));
}

TEST_CASE("monomial conversions") {
  CHECK(to_monomial(ek_in_p_basis(2)) == mono({1, 1}));
  CHECK(to_monomial(psum({2})) == mono({2}));
  SymFunc h2 = mono({2});
  h2 += mono({1, 1});
  CHECK(to_monomial(hk_in_p_basis(2)) == h2);
  SymFunc m11 = mono({2});
  m11 += mono({1, 1}, RatFunc(2));
  CHECK(to_monomial(multiply(mono({1}), mono({1}))) == m11);
  SymFunc m12 = mono({3});
  m12 += mono({2, 1});
  CHECK(to_monomial(multiply(mono({1}), mono({2}))) == m12);
  const SymFunc one = SymFunc::single(Basis::monomial, Partition());
  CHECK(to_monomial(multiply(m12, one)) == m12);
  CHECK_THROWS_AS(multiply(mono({2}), mono({2}), 3), DegreeError);
}

TEST_CASE("transition counts agree with explicit expansion and are stable") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& rho : enumerate_partitions(d))
      for (const auto& mu : enumerate_partitions(d)) {
        const mpz_class c = p_to_m_entry(rho, mu);
        CHECK(c == p_to_m_entry_expanded(rho, mu, d));
        CHECK(c == p_to_m_entry_expanded(rho, mu, d + 1));
      }
}

TEST_CASE("round trip m -> p -> m") {
  std::mt19937_64 rng(11);
  for (int deg = 1; deg <= 8; ++deg) {
    const SymFunc f = random_sym(rng, Basis::monomial, deg);
    CHECK(to_monomial(from_monomial_to_powersum(f)) == f);
  }
  const SymFunc f = random_sym(rng, Basis::powersum, 5);
  CHECK(to_monomial_in(f, 5) == to_monomial_in(f, 6));
  CHECK(to_monomial_in(f, 5) == to_monomial(f));
}

TEST_CASE("product bases: matrix counts agree with power-sum products") {
  for (Family fam : {Family::macdonald, Family::hall_littlewood, Family::schur, Family::jack})
    for (int d = 1; d <= 5; ++d)
      for (const auto& nu : enumerate_partitions(d)) {
        const SymFunc g = SymFunc::single(Basis::gprod, nu, ONE, fam);
        CHECK(to_monomial(g) == to_monomial(to_powersum(g)));
      }
  for (int d = 1; d <= 6; ++d)
    for (const auto& nu : enumerate_partitions(d)) {
      const SymFunc e = SymFunc::single(Basis::eprod, nu);
      CHECK(to_monomial(e) == to_monomial(to_powersum(e)));
    }
  CHECK(gprod_powersum({2, -1}, Family::macdonald).is_zero());
}

TEST_CASE("scalar product") {
  CHECK(scalar_product(psum({2}), psum({2})) == RatFunc(2) * (ONE - Q * Q) / (ONE - T * T));
  CHECK(scalar_product(psum({1}), psum({2})).is_zero());
  CHECK(scalar_product(gk_in_p_basis(1), psum({1})) == ONE);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3; ++i) {
    const SymFunc a = random_sym(rng, Basis::powersum, 4), b = random_sym(rng, Basis::monomial, 4),
                  c = random_sym(rng, Basis::powersum, 4);
    CHECK(scalar_product(a, b) == scalar_product(b, a));
    SymFunc ac = a;
    ac += c;
    CHECK(scalar_product(ac, b) == scalar_product(a, b) + scalar_product(c, b));
  }
}

TEST_CASE("g_k is dual to m under the scalar product") {
  for (int k = 1; k <= 6; ++k) {
    const SymFunc g = gk_in_p_basis(k);
    SymFunc rebuilt(Basis::powersum, k);
    for (const auto& rho : enumerate_partitions(k)) {
      const SymFunc pr = SymFunc::single(Basis::powersum, rho);
      rebuilt.add(rho, scalar_product(g, pr) / scalar_product(pr, pr));
    }
    CHECK(rebuilt == g);
    for (const auto& mu : enumerate_partitions(k))
      CHECK(scalar_product(g, SymFunc::single(Basis::monomial, mu)) == (mu == Partition({k}) ? ONE : RatFunc(0)));
  }
}
