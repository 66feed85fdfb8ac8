#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "macpieri/errors.hpp"
#include "macpieri/inversions.hpp"
#include "test_support.hpp"

using namespace macpieri;
using testsupport::random_nonzero_rational;

namespace {

EntryFn<mpq_class> side_fn(const NumericPairSpec& s, PairSide side) {
  return [s, side](const IntSeq& r, const IntSeq& c) { return pair_entry(s, side, r, c); };
}

}  // namespace

TEST_CASE("diagonal and off-window behaviour") {
  std::mt19937_64 rng(1);
  const Window w{0, 3};
  for (PairFamily fam : all_pair_families()) {
    const NumericPairSpec s = draw_regular(fam, 1, w, rng);
    CHECK(pair_entry(s, PairSide::f, {1}, {2}) == 0);
    if (fam == PairFamily::prod_det || fam == PairFamily::one_dim || fam == PairFamily::one_dim_b) {
      CHECK(pair_entry(s, PairSide::f, {1}, {1}) == 1);
      CHECK(pair_entry(s, PairSide::g, {2}, {2}) == 1);
    }
    // closed_form entries are products valid at every index
    if (fam != PairFamily::closed_form) CHECK_THROWS_AS(pair_entry(s, PairSide::f, {5}, {0}), ParameterError);
  }
}

TEST_CASE("one-dimensional entry") {
  NumericPairSpec s;
  s.family = PairFamily::one_dim;
  s.a = {{mpq_class(2), mpq_class(5), mpq_class(-1)}};
  s.c = {{mpq_class(3), mpq_class(7), mpq_class(1, 2)}};
  CHECK(pair_entry(s, PairSide::f, {1}, {0}) == mpq_class(2 - 3) / (7 - 3));
  CHECK(verify_inverse(s, Window{0, 3}).ok());
}

TEST_CASE("all families are inverse pairs on random windows") {
  std::mt19937_64 rng(7);
  const Window w{0, 3};
  for (PairFamily fam : all_pair_families()) {
    const int top = is_one_dimensional(fam) ? 1 : 3;
    for (int n = 1; n <= top; ++n)
      for (int draw = 0; draw < (n == 3 ? 2 : 5); ++draw) {
        const InverseReport r = verify_inverse(draw_regular(fam, n, w, rng), w);
        INFO(pair_family_name(fam), " n=", n);
        CHECK(r.ok());
        CHECK(r.checked > 0);
      }
  }
}

TEST_CASE("windows away from the origin") {
  std::mt19937_64 rng(8);
  const Window w{-2, 3};
  for (PairFamily fam : {PairFamily::prod_det, PairFamily::det_prod_b, PairFamily::closed_form})
    CHECK(verify_inverse(draw_regular(fam, 2, w, rng), w).ok());
}

TEST_CASE("first-power prefactor gives an inverse pair only for n = 1") {
  std::mt19937_64 rng(3);
  const Window w{0, 3};
  for (PairFamily fam : {PairFamily::prod_det_b, PairFamily::det_prod_b}) {
    NumericPairSpec one = draw_regular(fam, 1, w, rng);
    one.first_power_prefactor = true;
    CHECK(verify_inverse(one, w).ok());
    NumericPairSpec two = draw_regular(fam, 2, w, rng);
    two.first_power_prefactor = true;
    CHECK_FALSE(verify_inverse(two, w).ok());
  }
}

TEST_CASE("second theorem is the first one with negated indices") {
  std::mt19937_64 rng(11);
  const Window w{0, 3};
  for (int n = 1; n <= 2; ++n) {
    NumericPairSpec s = draw_regular(PairFamily::det_prod, n, w, rng);
    NumericPairSpec neg = negated(s);
    neg.family = PairFamily::prod_det;
    for (const IntSeq& m : window_indices(n, w))
      for (const IntSeq& k : window_indices(n, w)) {
        IntSeq mm = m, kk = k;
        for (auto& x : mm) x = -x;
        for (auto& x : kk) x = -x;
        CHECK(pair_entry(s, PairSide::f, m, k) == pair_entry(neg, PairSide::g, kk, mm));
        CHECK(pair_entry(s, PairSide::g, m, k) == pair_entry(neg, PairSide::f, kk, mm));
      }
  }
}

TEST_CASE("transferring a diagonal factor keeps the inverse") {
  std::mt19937_64 rng(5);
  const Window w{0, 3};
  const int n = 2;
  const NumericPairSpec s = draw_regular(PairFamily::prod_det, n, w, rng);
  std::map<IntSeq, mpq_class> d;
  for (const IntSeq& k : window_indices(n, w)) d[k] = random_nonzero_rational(rng);
  const EntryFn<mpq_class> f = [&](const IntSeq& m, const IntSeq& k) {
    return mpq_class(pair_entry(s, PairSide::f, m, k) * d[m] / d[k]);
  };
  const EntryFn<mpq_class> g = [&](const IntSeq& k, const IntSeq& l) {
    return mpq_class(pair_entry(s, PairSide::g, k, l) * d[k] / d[l]);
  };
  CHECK(verify_entries(f, g, n, w).ok());
  CHECK(transfer_mismatches(side_fn(s, PairSide::f), side_fn(s, PairSide::g), f, g, n, w) == 0);
}

TEST_CASE("b-deformed pairs follow from the substitution construction") {
  std::mt19937_64 rng(21);
  const Window w{0, 3};
  for (int n = 1; n <= 3; ++n) {
    for (auto [fam, dual] : {std::pair{PairFamily::prod_det_b, false}, {PairFamily::det_prod_b, true}}) {
      const NumericPairSpec s = draw_regular(fam, n, w, rng);
      const auto [f1, g1] = substituted_limit_pair(s, dual);
      CHECK(verify_entries(f1, g1, n, w).ok());
      CHECK(transfer_mismatches(f1, g1, side_fn(s, PairSide::f), side_fn(s, PairSide::g), n, w) == 0);
    }
  }
}

TEST_CASE("one-dimensional pairs and their relatives") {
  std::mt19937_64 rng(4);
  const Window w{0, 4};
  const NumericPairSpec kb = draw_regular(PairFamily::one_dim_b, 1, w, rng);
  NumericPairSpec t1 = kb;
  t1.family = PairFamily::prod_det;
  CHECK(transfer_mismatches(side_fn(t1, PairSide::f), side_fn(t1, PairSide::g), side_fn(kb, PairSide::f),
                            side_fn(kb, PairSide::g), 1, w) == 0);
  const auto [f1, g1] = substituted_limit_pair(kb, false);
  CHECK(transfer_mismatches(f1, g1, side_fn(kb, PairSide::f), side_fn(kb, PairSide::g), 1, w) == 0);
}

TEST_CASE("closed-form pair is the geometric specialization") {
  std::mt19937_64 rng(9);
  const Window w{0, 3};
  for (int n = 1; n <= 3; ++n) {
    const NumericPairSpec s = draw_regular(PairFamily::closed_form, n, w, rng);
    const NumericPairSpec geo = geometric_preset(s.q, s.t, s.u, w.lo, w.lo + w.side - 1);
    CHECK(verify_inverse(geo, w).ok());
    CHECK(transfer_mismatches(side_fn(geo, PairSide::f), side_fn(geo, PairSide::g), side_fn(s, PairSide::f),
                              side_fn(s, PairSide::g), n, w) == 0);
  }
}

TEST_CASE("closed-form pair with a symbolic base") {
  InversePairSpec s;
  s.family = PairFamily::closed_form;
  s.n = 2;
  s.q = RatFunc::q();
  s.t = {RatFunc(mpq_class(3, 2)), RatFunc(mpq_class(-2)), RatFunc(mpq_class(5, 7))};
  s.u = {RatFunc(mpq_class(2, 3)), RatFunc(mpq_class(-7, 5))};
  CHECK(verify_inverse(s, Window{0, 2}).ok());
  // common specialization t_k = t with symbolic t
  InversePairSpec g = s;
  g.t = {RatFunc::t(), RatFunc::t()};
  g.n = 1;
  g.u = {RatFunc(mpq_class(3, 4))};
  CHECK(verify_inverse(g, Window{0, 3}).ok());
}

TEST_CASE("suite aggregates") {
  const auto reps = inversion_suite(7, 2, 2, Window{0, 3});
  CHECK(reps.size() == 5 * 2 + 2);
  for (const auto& r : reps) CHECK(r.ok());
}
