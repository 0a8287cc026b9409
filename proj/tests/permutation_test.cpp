#include "hessgkm/permutation.hpp"
#include "hessgkm/oracles.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <set>
#include <stdexcept>

using namespace hessgkm;
using testutil::P;

TEST_SUITE("perm_core") {

TEST_CASE("parse and print") {
  CHECK(P("4312").to_string() == "4312");
  CHECK(P("4312").one_line() == std::vector<int>{4, 3, 1, 2});
  const auto big = Permutation::parse("10,3,1,2,4,5,6,7,8,9");
  CHECK(big.rank() == 10);
  CHECK(big(1) == 10);
  CHECK(big.to_string() == "10,3,1,2,4,5,6,7,8,9");
  CHECK_THROWS_AS(Permutation::parse("4412"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1245"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("12a"), std::invalid_argument);
}

TEST_CASE("compose") {
  const auto w = P("4312");
  CHECK(compose(Permutation::identity(4), w) == w);
  CHECK(compose(P("1423"), P("4312")) == P("3214"));
  CHECK(compose(w, inverse(w)) == Permutation::identity(4));
  CHECK_THROWS_AS(compose(P("12"), P("123")), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(inverse(P("4312")) == P("3421"));
  CHECK(inverse(longest_element(6)) == longest_element(6));
  for (const auto& w : all_permutations(4)) CHECK(inverse(inverse(w)) == w);
}

TEST_CASE("length") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(longest_element(4)) == 6);
  CHECK(length(P("3214")) == 3);
}

TEST_CASE("apply_transposition") {
  CHECK(apply_transposition(Permutation::identity(3), 1, 2) == P("213"));
  CHECK(apply_transposition(P("4321"), 3, 4) == P("4312"));
  const auto w = P("25314");
  CHECK(apply_transposition(apply_transposition(w, 2, 5), 2, 5) == w);
  CHECK_THROWS_AS(apply_transposition(w, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(apply_transposition(w, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(apply_transposition(w, 2, 6), std::invalid_argument);
}

TEST_CASE("bruhat_leq examples") {
  CHECK(bruhat_leq(P("3214"), P("3214")));
  CHECK(bruhat_leq(P("3214"), P("4312")));
  CHECK_FALSE(bruhat_leq(P("4312"), P("3421")));
  CHECK_FALSE(oracle::bruhat(P("4312"), P("3421")));
  CHECK_THROWS_AS(bruhat_leq(P("12"), P("123")), std::invalid_argument);
}

TEST_CASE("bruhat_interval") {
  CHECK(testutil::names(bruhat_interval(longest_element(4))) ==
        std::vector<std::string>{"4321"});
  CHECK(testutil::names(bruhat_interval(P("4312"))) ==
        std::vector<std::string>{"4312", "4321"});
  CHECK(bruhat_interval(Permutation::identity(5)).size() == 120);
}

TEST_CASE("longest_element") {
  CHECK(longest_element(1).to_string() == "1");
  CHECK(longest_element(3).to_string() == "321");
  CHECK(longest_element(4).to_string() == "4321");
}

TEST_CASE("bruhat order is a partial order compatible with length, n<=5") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (const auto& u : all) {
      CHECK(bruhat_leq(u, u));
      for (const auto& v : all) {
        const bool uv = bruhat_leq(u, v);
        if (uv && u != v) {
          CHECK(length(u) < length(v));
          CHECK_FALSE(bruhat_leq(v, u));
        }
      }
    }
  }
  // transitivity on S_4 (n=5 is covered by the sweep)
  const auto all = all_permutations(4);
  for (const auto& a : all)
    for (const auto& b : all)
      if (bruhat_leq(a, b))
        for (const auto& c : all)
          if (bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
}

TEST_CASE("bruhat_leq agrees with the chain oracle, n<=5") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_permutations(n);
    for (const auto& u : all) {
      const auto up = oracle::upset(u.one_line());
      const std::set<std::vector<int>> reach(up.begin(), up.end());
      for (const auto& v : all)
        REQUIRE(bruhat_leq(u, v) == (reach.count(v.one_line()) == 1));
    }
  }
}

TEST_CASE("intervals are upward closed") {
  const auto all = all_permutations(4);
  for (const auto& w : all) {
    const auto iv = bruhat_interval(w);
    const std::set<Permutation> in(iv.begin(), iv.end());
    CHECK(in.count(w) == 1);
    CHECK(in.count(longest_element(4)) == 1);
    for (const auto& v : iv)
      for (const auto& z : all)
        if (bruhat_leq(v, z)) CHECK(in.count(z) == 1);
  }
}

}
