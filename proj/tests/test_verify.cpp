#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpieri/errors.hpp"
#include "macpieri/json_io.hpp"
#include "macpieri/verify.hpp"

using namespace macpieri;

TEST_CASE("Jacobi-Trudi determinant") {
  SymFunc expected(Basis::gprod, 3, Family::schur);
  expected.add(Partition{2, 1}, RatFunc(1));
  expected.add(Partition{3}, RatFunc(-1));
  CHECK(jacobi_trudi(Partition{2, 1}) == expected);
  CHECK(jacobi_trudi(Partition{4}) == SymFunc::single(Basis::gprod, Partition{4}, RatFunc(1), Family::schur));
  // s_(1,1,1) = h1^3 - 2 h2 h1 + h3
  const SymFunc col = jacobi_trudi(Partition{1, 1, 1});
  CHECK(col.coeff(Partition{1, 1, 1}) == RatFunc(1));
  CHECK(col.coeff(Partition{2, 1}) == RatFunc(-2));
  CHECK(col.coeff(Partition{3}) == RatFunc(1));
}

TEST_CASE("small suites pass and report as JSON") {
  const auto results = run_suite("hook", 4, 1);
  REQUIRE(results.size() == 2);
  for (const auto& r : results) {
    CHECK(r.ok());
    CHECK(r.checked > 0);
  }
  const auto j = check_report_json("hook", 4, 1, results);
  CHECK(j["violations"].empty());
  CHECK(j["checks"].size() == 2);
  CHECK_THROWS_AS(run_suite("nonsense", 4, 1), ParameterError);
}

TEST_CASE("failures are reported, not thrown") {
  CheckResult r;
  r.failures.push_back("x");
  const auto j = check_report_json("main", 1, 0, {r});
  CHECK(j["violations"].size() == 1);
}

TEST_CASE("serialization helpers") {
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  const RatFunc r = (RatFunc(1) - q * q * t) / (RatFunc(1) - t);
  CHECK(ratfunc_from_json(ratfunc_to_json(r)) == r);
  CHECK(ratfunc_to_latex(q.pow(12) * t) == "q^{12}t");
  CHECK(ratfunc_to_latex(RatFunc(-3)) == "-3");
  CHECK(ratfunc_to_latex(RatFunc(1) / (RatFunc(1) - q)).find("\\frac{") == 0);

  ThetaMatrix m(3);
  m.set(1, 3, 2);
  CHECK(theta_matrix_to_json(m).dump() == R"({"n":3,"entries":[[1,3,2]]})");

  SymFunc f(Basis::monomial, 3);
  f.add(Partition{1, 1, 1}, RatFunc(2));
  f.add(Partition{3}, RatFunc(1));
  const auto j = symfunc_to_json(f, "m");
  CHECK(j["degree"] == 3);
  CHECK(j["terms"][0]["index"] == json::array({3}));
  CHECK(j["terms"][1]["index"] == json::array({1, 1, 1}));
}
