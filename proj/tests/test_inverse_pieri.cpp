#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macpieri/errors.hpp"
#include "macpieri/inverse_pieri.hpp"
#include "macpieri/oracle.hpp"
#include "test_support.hpp"

using namespace macpieri;
using namespace testsupport;

namespace {

const RatFunc Q = RatFunc::q();
const RatFunc T = RatFunc::t();
const RatFunc ONE(1);

RatFunc qt(long a, long b) { return RatFunc::from_monomial(MonomialArg(a, b)); }

RatFunc c1_display(const RatFunc& u) { return (T - ONE) / (ONE - Q) * (ONE - Q * Q * u) / (ONE - Q * T * u); }

RatFunc c2_display(const RatFunc& u) {
  return (T - ONE) / (ONE - Q) * (T - Q) / (ONE - Q * Q) * (ONE - Q * u) / (ONE - Q * T * u) * (ONE - Q.pow(4) * u) /
         (ONE - Q * Q * T * u);
}

SymFunc gsum(const std::vector<ExpansionTerm>& terms) { return product_sum(terms, Basis::gprod); }

}  // namespace

TEST_CASE("C coefficient at theta = 0") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<MonomialArg> u;
    for (std::size_t k = 0; k < n; ++k) u.emplace_back(static_cast<long>(k + 2), static_cast<long>(n - k));
    CHECK(c_coeff_qt(ThetaVector(n, 0), u) == ONE);
    CHECK(c_coeff_tq(ThetaVector(n, 0), u) == ONE);
    CHECK(c_coeff_hl(ThetaVector(n, 0), IntSeq(n, 2)) == ONE);
    CHECK(c_coeff_mono(ThetaVector(n, 0), IntSeq(n, 1)) == 1);
  }
}

TEST_CASE("one-dimensional C against the closed n = 1 form") {
  for (int th = 0; th <= 4; ++th)
    for (auto [a, b] : {std::pair{1, 0}, {2, 0}, {1, 1}, {0, 1}, {3, 2}}) {
      const RatFunc u = qt(a, b);
      const RatFunc expected = T.pow(th) * qpoch(MonomialArg(0, -1), th) / qpoch(MonomialArg(1, 0), th) *
                               qpoch(MonomialArg(a, b), th) / qpoch(MonomialArg(a + 1, b + 1), th) *
                               (ONE - qt(2 * th + a, b)) / (ONE - u);
      CHECK(c_coeff_qt({th}, {MonomialArg(a, b)}) == expected);
      CHECK(last_route_count() == 3);
    }
}

TEST_CASE("C_1 and C_2 displays") {
  for (int k = -1; k <= 3; ++k) {
    const RatFunc u = qt(k, 0);
    CHECK(c_coeff_qt({1}, {MonomialArg(k, 0)}) == c1_display(u));
    if (k != -1) CHECK(c_coeff_qt({2}, {MonomialArg(k, 0)}) == c2_display(u));
  }
  CHECK(c_coeff_qt({1}, {MonomialArg(-1, 0)}) == RatFunc(-1));
  CHECK(c_coeff_qt({2}, {MonomialArg(-1, 0)}).is_zero());
}

TEST_CASE("Schur values at q = t") {
  const std::vector<MonomialArg> u2{MonomialArg(0, 3, mpq_class(2, 7)), MonomialArg(0, 1, mpq_class(5, 3))};
  CHECK(schur_c_check({1, 0}, u2) == RatFunc(-1));
  CHECK(schur_c_check({1, 1}, u2) == ONE);
  CHECK(schur_c_check({2}, {MonomialArg(0, 2, mpq_class(3, 5))}).is_zero());
  for (const auto& th : enumerate_theta(3, 4)) {
    if (*std::max_element(th.begin(), th.end()) > 3) continue;
    const std::vector<MonomialArg> u3{MonomialArg(0, 4, mpq_class(2, 3)), MonomialArg(0, 2, mpq_class(-5, 7)),
                                      MonomialArg(0, 1, mpq_class(11, 2))};
    CHECK_NOTHROW(schur_c_check(th, u3));
  }
}

TEST_CASE("q = 1 leaves only theta = 0") {
  Specialization s;
  s.q = {0, 1, 1};  // the formula's q is the actual t
  s.t = {0, 0, 1};  // and its t is the actual q = 1
  s.u = {{0, 3, mpq_class(2, 9)}, {0, 1, mpq_class(7, 4)}};
  for (const auto& th : enumerate_theta(2, 3)) {
    const RatFunc c = c_coeff_at(th, s);
    CHECK(c == (th == ThetaVector{0, 0} ? ONE : RatFunc(0)));
  }
}

TEST_CASE("monomial and Hall-Littlewood closed forms") {
  for (int m = 0; m <= 4; ++m) CHECK(c_coeff_mono({1}, {m}) == -(m + 2));
  for (const auto& th : enumerate_theta(3, 4))
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        const IntSeq m{a, b, (a + b) % 4};
        if (*std::max_element(th.begin(), th.end()) > 3) continue;
        CHECK(c_coeff_hl(th, m).set_t(1) == RatFunc(c_coeff_mono(th, m)));
      }
}

TEST_CASE("Hall-Littlewood C is the q -> 0 value of C^(t,q)") {
  std::mt19937_64 rng(11);
  for (const auto& th : enumerate_theta(2, 3))
    for (int m1 = 0; m1 <= 2; ++m1)
      for (int m2 = 0; m2 <= 2; ++m2) {
        const std::vector<MonomialArg> u{MonomialArg(1, m1 + m2), MonomialArg(0, m2)};
        const RatFunc at_zero = c_coeff_tq(th, u).set_q(0);
        CHECK(at_zero == c_coeff_hl(th, {m1, m2}));
      }
}

TEST_CASE("invert_step examples") {
  const auto terms = invert_step({2, 1}, StepSide::q_g);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].index == IntSeq{1, 2});
  CHECK(terms[0].coeff == ONE);
  CHECK(terms[1].index == IntSeq{0, 3});
  CHECK(terms[1].coeff == c1_display(Q));

  // Q_(1,2) = g_2 g_1 - g_1 g_2 + 0 g_3
  CHECK(gsum(invert_step({1, 2}, StepSide::q_g)).is_zero());

  const auto s = invert_step({2, 1}, StepSide::schur);
  REQUIRE(s.size() == 2);
  CHECK(s[0].index == IntSeq{1, 2});
  CHECK(s[1].index == IntSeq{0, 3});
  CHECK(s[1].coeff == RatFunc(-1));
}

TEST_CASE("invert_step reconstructs the oracle, small weights") {
  for (const auto& lam : enumerate_partitions_up_to(5)) {
    if (lam.empty()) continue;
    const IntSeq l = lam.parts();
    CHECK(step_resum(invert_step(l, StepSide::q_g), StepSide::q_g) == step_lhs(l, StepSide::q_g));
    CHECK(step_resum(invert_step(l, StepSide::p_e), StepSide::p_e) == step_lhs(l, StepSide::p_e));
    CHECK(step_resum(invert_step(l, StepSide::hl), StepSide::hl) == step_lhs(l, StepSide::hl));
    CHECK(step_resum(invert_step(l, StepSide::mono), StepSide::mono) == step_lhs(l, StepSide::mono));
    CHECK(step_resum(invert_step(l, StepSide::schur), StepSide::schur) == step_lhs(l, StepSide::schur));
    if (lam.weight() <= 4) {
      CHECK(step_resum(invert_step(l, StepSide::jack_q), StepSide::jack_q) == step_lhs(l, StepSide::jack_q));
      CHECK(step_resum(invert_step(l, StepSide::jack_p), StepSide::jack_p) == step_lhs(l, StepSide::jack_p));
    }
  }
}

TEST_CASE("non-partition sequences give zero") {
  for (const IntSeq& l : {IntSeq{1, 2}, IntSeq{1, 3}, IntSeq{0, 2}, IntSeq{1, 1, 2}, IntSeq{2, 0, 1}, IntSeq{1, 2, 1}})
    CHECK(step_resum(invert_step(l, StepSide::q_g), StepSide::q_g).is_zero());
}

TEST_CASE("full expansions") {
  const FullExpansion row = expand_full(Partition{3}, StepSide::q_g);
  REQUIRE(row.terms.size() == 1);
  CHECK(row.terms[0].index == IntSeq{3});
  CHECK(row.terms[0].coeff == ONE);

  const FullExpansion col = expand_full(Partition{1, 1, 1}, StepSide::p_e);
  REQUIRE(col.terms.size() == 1);
  CHECK(col.terms[0].index == IntSeq{3});

  const FullExpansion two = expand_full(Partition{2, 1}, StepSide::q_g);
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms[1].coeff == c1_display(Q));

  for (const auto& lam : enumerate_partitions_up_to(5)) {
    for (StepSide side : {StepSide::q_g, StepSide::p_e, StepSide::hl, StepSide::mono, StepSide::schur}) {
      const FullExpansion e = expand_full(lam, side);
      CHECK(full_resum(e) == step_lhs(lam.parts(), side));
      for (const auto& t : e.terms) {
        CHECK(full_display_coeff(lam, t.theta, side) == t.coeff);
        CHECK(full_display_index(lam, t.theta, side) == t.index);
      }
    }
    CHECK(full_resum(expand_full(lam, StepSide::q_g, true)) == step_lhs(lam.parts(), StepSide::q_g));
    CHECK(full_resum(expand_full(lam, StepSide::p_e, true)) == step_lhs(lam.parts(), StepSide::p_e));
  }
}

TEST_CASE("omega duality of full expansions") {
  for (const auto& lam : enumerate_partitions_up_to(5)) {
    if (lam.empty()) continue;
    const FullExpansion g = expand_full(lam, StepSide::q_g);
    const FullExpansion e = expand_full(lam.conjugate(), StepSide::p_e);
    REQUIRE(g.terms.size() == e.terms.size());
    for (std::size_t i = 0; i < g.terms.size(); ++i) {
      CHECK(g.terms[i].theta == e.terms[i].theta);
      CHECK(g.terms[i].index == e.terms[i].index);
      CHECK(g.terms[i].coeff == e.terms[i].coeff.swapped());
    }
  }
}

TEST_CASE("F_n = G_n") {
  CHECK(fn_gn({mpq_class(3)}, {}) == std::make_pair(mpq_class(1), mpq_class(1)));
  const mpq_class a1(2), a2(5), b1(3);
  const auto [f1, g1] = fn_gn({a1, a2}, {b1});
  CHECK(f1 == 1 + a2 / b1 * (a1 - b1) / (a2 - b1));
  CHECK(f1 == g1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<mpq_class> a, b;
    for (int i = 0; i < 4; ++i) a.push_back(random_nonzero_rational(rng));
    for (int i = 0; i < 3; ++i) b.push_back(random_nonzero_rational(rng));
    try {
      const auto [f, g] = fn_gn(a, b);
      CHECK(f == g);
    } catch (const ParameterError&) {
    }
  }
}

TEST_CASE("C and d are mutually inverse matrices") {
  CHECK(inverse_link_violations(mpq_class(2, 3), mpq_class(5, 7), {mpq_class(3, 11)}, 3) == 0);
  CHECK(inverse_link_violations(mpq_class(-3, 5), mpq_class(7, 2), {mpq_class(2, 9), mpq_class(-4, 3)}, 3) == 0);
}

TEST_CASE("Jack coefficient as a limit") {
  for (auto [p, r] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 2L}})
    for (const auto& th : enumerate_theta(2, 3)) {
      const auto [jack, curve] = jack_limit_pair(th, {{3, 1}, {1, 0}}, p, r);
      CHECK(jack == curve);
    }
}
