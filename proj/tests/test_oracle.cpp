#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpieri/oracle.hpp"

using namespace macpieri;

namespace {

const RatFunc Q = RatFunc::q();
const RatFunc T = RatFunc::t();
const RatFunc ONE(1);

SymFunc gprod(std::initializer_list<int> p, const RatFunc& c = ONE) {
  return SymFunc::single(Basis::gprod, Partition(p), c, Family::hall_littlewood);
}

}  // namespace

TEST_CASE("small cases") {
  CHECK(oracle_P(Partition({1})) == SymFunc::single(Basis::monomial, Partition({1})));
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    CHECK(oracle_P(Partition(ones)) == to_monomial(ek_in_p_basis(k)));
    CHECK(oracle_P(Partition(ones), Family::jack) == to_monomial(ek_in_p_basis(k)));
  }
  // P_(2) = m_2 + (1+q)(1-t)/(1-qt) m_11
  SymFunc p2 = SymFunc::single(Basis::monomial, Partition({2}));
  p2.add(Partition({1, 1}), (ONE + Q) * (ONE - T) / (ONE - Q * T));
  CHECK(oracle_P(Partition({2})) == p2);
}

TEST_CASE("b_lambda") {
  CHECK(b_lambda(Partition({1})) == (ONE - T) / (ONE - Q));
  for (int k = 1; k <= 4; ++k) {
    CHECK(b_lambda(Partition({k})) == qpoch(MonomialArg(0, 1), k) / qpoch(MonomialArg(1, 0), k));
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    RatFunc tt(1), qt(1);
    for (int i = 0; i < k; ++i) {
      tt *= ONE - T.pow(i + 1);
      qt *= ONE - Q * T.pow(i);
    }
    CHECK(b_lambda(Partition(ones)) == tt / qt);
  }
  for (int d = 1; d <= 7; ++d)
    for (const auto& p : enumerate_partitions(d)) CHECK(b_lambda(p) * oracle_norm(p) == ONE);
}

TEST_CASE("orthogonality") {
  for (int d = 1; d <= 6; ++d) {
    const auto ps = enumerate_partitions(d);
    std::vector<SymFunc> pp;
    for (const auto& p : ps) pp.push_back(oracle_P_powersum(p));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(oracle_P(ps[i]).coeff(ps[i]) == ONE);
      for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK(scalar_product(pp[i], pp[j]).is_zero());
    }
  }
  for (Family f : {Family::hall_littlewood, Family::jack}) {
    const auto ps = enumerate_partitions(5);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        CHECK(scalar_product(oracle_P_powersum(ps[i], f), oracle_P_powersum(ps[j], f), f).is_zero());
  }
}

TEST_CASE("the (q,t) oracle specializes to the Schur and Hall-Littlewood oracles") {
  for (int d = 1; d <= 7; ++d)
    for (const auto& lam : enumerate_partitions(d)) {
      const SymFunc P = oracle_P(lam);
      const SymFunc S = oracle_P(lam, Family::schur);
      const SymFunc H = oracle_P(lam, Family::hall_littlewood);
      for (const auto& mu : enumerate_partitions(d)) {
        const RatFunc c = P.coeff(mu);
        CHECK(c.q_to_t() == S.coeff(mu));
        CHECK(c.set_q(0) == H.coeff(mu));
      }
    }
}

TEST_CASE("eigenoperator") {
  CHECK(eigenvalue(Partition(), 2) == T + ONE);
  CHECK(eigenvalue(Partition({1}), 2) == Q * T + ONE);
  CHECK(eigencheck(Partition({2, 1}), 3));
  CHECK(eigencheck(Partition({3, 1}), 2));
  CHECK(eigencheck(Partition({2, 2, 1}), 3));
  CHECK(eigencheck(Partition(), 2));
}

TEST_CASE("Hall-Littlewood raising operators") {
  SymFunc q21 = gprod({2, 1});
  q21.add(Partition({3}), T - ONE);
  CHECK(hl_raising_Q({2, 1}) == q21);
  SymFunc q12 = gprod({2, 1}, T);
  q12.add(Partition({3}), T * (T - ONE));
  CHECK(hl_raising_Q({1, 2}) == q12);
  CHECK(hl_raising_Q({1, 2}) == hl_raising_Q({2, 1}).scaled(T));
  CHECK(hl_raising_Q({1, -2}).is_zero());
  // partitions: agrees with the q = 0 orthogonal family
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : enumerate_partitions(d))
      CHECK(to_monomial(hl_raising_Q(lam.parts())) == oracle_Q(lam, Family::hall_littlewood));
}
