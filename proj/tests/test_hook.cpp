#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpieri/hook.hpp"
#include "macpieri/inverse_pieri.hpp"
#include "macpieri/oracle.hpp"
#include "test_support.hpp"

using namespace macpieri;

namespace {

const RatFunc Q = RatFunc::q();
const RatFunc T = RatFunc::t();
const RatFunc ONE(1);

Partition hook(int r, int s) {
  std::vector<int> p(static_cast<std::size_t>(s) + 1, 1);
  p[0] = r;
  return Partition(p);
}

SymFunc gsum(const std::vector<ExpansionTerm>& terms) { return product_sum(terms, Basis::gprod); }

}  // namespace

TEST_CASE("one-row hooks") {
  for (int r = 1; r <= 4; ++r) {
    CHECK(kerov_det(r, 0) == SymFunc::single(Basis::gprod, Partition{r}));
    const auto terms = hook_expand(r, 0, HookSide::q_g);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].index == IntSeq{r});
    CHECK(terms[0].coeff == ONE);
  }
}

TEST_CASE("2 x 2 hook determinant") {
  SymFunc expected(Basis::gprod, 2);
  expected.add(Partition{1, 1}, ONE);
  expected.add(Partition{2}, -(ONE - Q * Q) / (ONE - Q * T) * (ONE - T) / (ONE - Q));
  CHECK(kerov_det(1, 1) == expected);
  CHECK(gsum(hook_expand(1, 1, HookSide::q_g)) == expected);
  CHECK(kerov_det(2, 1) == oracle_Q_gprod(Partition{2, 1}));
  CHECK(to_monomial(kerov_det(2, 1)) == oracle_Q(Partition{2, 1}));
}

TEST_CASE("term counts") {
  for (int r = 1; r <= 4; ++r)
    for (int s = 0; s <= 4; ++s) {
      CHECK(hook_expand(r, s, HookSide::q_g).size() == (1u << s));
      CHECK(hook_expand(r, s, HookSide::p_e).size() == (1u << (r - 1)));
    }
}

TEST_CASE("four expansions of a hook agree") {
  for (int r = 1; r <= 5; ++r)
    for (int s = 0; r + s <= 6; ++s) {
      const Partition lam = hook(r, s);
      const SymFunc det = kerov_det(r, s);
      CHECK(gsum(hook_expand(r, s, HookSide::q_g)) == det);
      CHECK(det == oracle_Q_gprod(lam));
      CHECK(full_resum(expand_full(lam, StepSide::q_g)) == oracle_Q(lam));
      CHECK(to_monomial(product_sum(hook_expand(r, s, HookSide::p_e), Basis::eprod)) == oracle_P(lam));
    }
}

TEST_CASE("omega exchanges the two hook formulas") {
  for (int r = 1; r <= 5; ++r)
    for (int s = 0; s <= 4; ++s) {
      const auto e = hook_expand(r, s, HookSide::p_e);
      const auto g = hook_expand(s + 1, r - 1, HookSide::q_g);
      REQUIRE(e.size() == g.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(e[i].theta == g[i].theta);
        CHECK(e[i].index == g[i].index);
        CHECK(e[i].coeff == g[i].coeff.swapped());
      }
    }
}

TEST_CASE("two-term Pieri recurrence for hooks") {
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; r + s <= 7; ++s) {
      std::vector<ExpansionTerm> lhs;
      for (auto t : column_expand(s)) {
        t.index.push_back(r);
        lhs.push_back(t);
      }
      SymFunc rhs = gsum(hook_expand(r + 1, s - 1, HookSide::q_g)).scaled(hook_pieri_scalar(r, s));
      rhs += gsum(hook_expand(r, s, HookSide::q_g));
      CHECK(gsum(lhs) == rhs);
    }
}

TEST_CASE("column formula") {
  const auto one = column_expand(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].coeff == ONE);
  for (int n = 1; n <= 6; ++n) {
    const auto col = column_expand(n);
    CHECK(col.size() == (1u << (n - 1)));
    const auto h = hook_expand(1, n - 1, HookSide::q_g);
    REQUIRE(h.size() == col.size());
    for (std::size_t i = 0; i < col.size(); ++i) {
      CHECK(col[i].index == h[i].index);
      CHECK(col[i].coeff == h[i].coeff);
    }
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    CHECK(to_monomial(gsum(col)) == oracle_Q(Partition(ones)));
  }
}
