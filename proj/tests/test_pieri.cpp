#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpieri/oracle.hpp"
#include "macpieri/pieri.hpp"

using namespace macpieri;

namespace {

const RatFunc Q = RatFunc::q();
const RatFunc T = RatFunc::t();
const RatFunc ONE(1);

RatFunc qt(long a, long b) { return RatFunc::from_monomial(MonomialArg(a, b)); }

}  // namespace

TEST_CASE("d coefficient examples") {
  CHECK(d_coeff({0, 0}, {MonomialArg(1, 1), MonomialArg(0, 0)}) == ONE);
  // lambda = (1^s), theta = (r): coefficient of Q_(r+1,1^{s-1}) in Q_{1^s} Q_(r)
  for (int s = 1; s <= 3; ++s)
    for (int r = 1; r <= 3; ++r) {
      const PieriExpansion e = pieri_expand(Partition(std::vector<int>(static_cast<std::size_t>(s), 1)), r);
      CHECK(e.terms.size() == 2);
      std::vector<int> hook{r + 1};
      hook.resize(static_cast<std::size_t>(s), 1);
      hook.push_back(0);
      bool found = false;
      for (const auto& term : e.terms) {
        IntSeq k = term.index;
        k.resize(hook.size(), 0);
        if (k == IntSeq(hook)) {
          found = true;
          CHECK(term.coeff == (ONE - T.pow(s)) * (ONE - qt(r + 1, s - 1)) / ((ONE - qt(1, s - 1)) * (ONE - qt(r, s))));
        }
      }
      CHECK(found);
    }
}

TEST_CASE("psi coefficient") {
  CHECK(psi_coeff(Partition({2, 1}), Partition({2, 1})) == ONE);
  CHECK(psi_coeff(Partition({2, 2}), Partition({1})).is_zero());
  CHECK(psi_coeff(Partition({2}), Partition({1})) == (ONE - T) * (ONE - Q * Q) / ((ONE - Q) * (ONE - Q * T)));
}

TEST_CASE("analytic and combinatorial Pieri coefficients agree") {
  for (int d = 0; d <= 4; ++d)
    for (const auto& lam : enumerate_partitions(d, 3))
      for (int r = 0; r <= 3; ++r) {
        const int n = lam.length();
        std::vector<MonomialArg> u;
        for (int k = 1; k <= n; ++k) u.emplace_back(lam[k] - r, n - k);
        for (const auto& th : enumerate_theta(n, r)) {
          IntSeq kappa;
          for (int k = 1; k <= n; ++k) kappa.push_back(lam[k] + th[static_cast<std::size_t>(k - 1)]);
          int tot = 0;
          for (int x : th) tot += x;
          kappa.push_back(r - tot);
          if (!is_partition(kappa)) continue;
          const Partition kp(kappa);
          const RatFunc dc = d_coeff(th, u);
          CHECK(dc == psi_coeff(kp, lam));
          CHECK(dc.is_zero() == !is_horizontal_strip(kp, lam));
        }
      }
}

TEST_CASE("Pieri expansion reproduces the oracle product") {
  for (int d = 0; d <= 3; ++d)
    for (const auto& lam : enumerate_partitions(d, 3))
      for (int r = 0; r <= 2; ++r) {
        const PieriExpansion e = pieri_expand(lam, r);
        SymFunc lhs = oracle_Q_gprod(lam);
        SymFunc prod(Basis::gprod, d + r);
        for (const auto& [nu, c] : lhs.coeffs) {
          std::vector<int> idx = nu.parts();
          idx.push_back(r);
          prod.add(sorted_partition(idx), c);
        }
        SymFunc rhs(Basis::monomial, d + r);
        for (const auto& term : e.terms) rhs += oracle_Q(Partition(term.index)).scaled(term.coeff);
        CHECK(to_monomial(prod) == rhs);
      }
  const PieriExpansion empty = pieri_expand(Partition(), 3);
  REQUIRE(empty.terms.size() == 1);
  CHECK(empty.terms[0].coeff == ONE);
}

TEST_CASE("oracle Q in one-row products") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& lam : enumerate_partitions(d)) CHECK(to_monomial(oracle_Q_gprod(lam)) == oracle_Q(lam));
  CHECK(oracle_Q_gprod(Partition({3})) == SymFunc::single(Basis::gprod, Partition({3})));
}

TEST_CASE("Hall-Littlewood Pieri pair") {
  const auto e = hl_pieri_expand({1}, 1);
  REQUIRE(e.size() == 2);
  CHECK(e[0].coeff == ONE);
  CHECK(e[0].index == IntSeq{1, 1});
  CHECK(e[1].coeff == ONE - T);
  CHECK(e[1].index == IntSeq{2, 0});
  // q_1 q_1 = Q_(1,1) + (1-t) Q_(2,0), checked through the raising-operator values
  SymFunc rhs = hl_raising_Q({1, 1});
  rhs += hl_raising_Q({2, 0}).scaled(ONE - T);
  CHECK(rhs == SymFunc::single(Basis::gprod, Partition({1, 1}), ONE, Family::hall_littlewood));
}
