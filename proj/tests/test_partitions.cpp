#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpieri/errors.hpp"
#include "macpieri/partitions.hpp"

using namespace macpieri;

TEST_CASE("conjugate") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  CHECK(Partition().conjugate() == Partition());
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      CHECK(p.conjugate().conjugate() == p);
      CHECK(p.conjugate().weight() == n);
    }
}

TEST_CASE("z factor") {
  CHECK(Partition({1, 1, 1}).z_factor() == 6);
  CHECK(Partition({2, 1}).z_factor() == 2);
  CHECK(Partition({3}).z_factor() == 3);
  CHECK(Partition({2, 2, 1}).z_factor() == 8);
}

TEST_CASE("partition counts and order") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    const auto ps = enumerate_partitions(n);
    CHECK(static_cast<int>(ps.size()) == expected[n]);
    for (std::size_t i = 1; i < ps.size(); ++i) {
      CHECK(ps[i] < ps[i - 1]);                   // reverse-lex
      CHECK_FALSE(ps[i - 1].dominated_by(ps[i]));  // linear extension of dominance
    }
  }
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(5, -1, 2) ==
        std::vector<Partition>{Partition({2, 2, 1}), Partition({2, 1, 1, 1}), Partition({1, 1, 1, 1, 1})});
  CHECK(enumerate_partitions(6, 2).size() == 4);
}

TEST_CASE("multiplicity identities") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const auto m = p.multiplicities();
      int len = 0, w = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        len += m[i];
        w += static_cast<int>(i + 1) * m[i];
      }
      CHECK(len == p.length());
      CHECK(w == p.weight());
      CHECK(Partition::from_multiplicities(m) == p);
    }
}

TEST_CASE("compositions") {
  CHECK(enumerate_compositions(3) == std::vector<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}});
  CHECK(enumerate_compositions(1) == std::vector<Composition>{{1}});
  for (int n = 1; n <= 10; ++n) {
    const auto cs = enumerate_compositions(n);
    CHECK(cs.size() == (std::size_t{1} << (n - 1)));
    for (const auto& c : cs) {
      int w = 0;
      for (int x : c) {
        CHECK(x >= 1);
        w += x;
      }
      CHECK(w == n);
    }
  }
  CHECK_THROWS_AS(enumerate_compositions(0), ParameterError);
}

TEST_CASE("validation, parsing and strips") {
  CHECK_THROWS_AS(Partition({1, 2}), ParameterError);
  CHECK_THROWS_AS(Partition({2, -1}), ParameterError);
  CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
  CHECK(parse_int_seq("1, 2,-3") == IntSeq{1, 2, -3});
  CHECK(parse_int_seq("") == IntSeq{});
  CHECK_THROWS_AS(parse_int_seq("1,x"), ParameterError);
  CHECK(sorted_partition({1, 0, 3}) == Partition({3, 1}));
  CHECK(is_horizontal_strip(Partition({3, 1}), Partition({2})));
  CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
  CHECK(enumerate_theta(2, 2).size() == 6);
}

TEST_CASE("theta matrix") {
  ThetaMatrix m(3);
  m.set(1, 3, 2);
  m.set(2, 3, 1);
  CHECK(m.total() == 3);
  CHECK(m.column(3) == std::vector<int>{2, 1});
  CHECK(m(3, 1) == 0);
  CHECK_THROWS_AS(m.set(2, 2, 1), ParameterError);
  CHECK(m.grown(4)(1, 3) == 2);
}
