#include "hessgkm/hessenberg.hpp"
#include "hessgkm/oracles.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace hessgkm;
using testutil::H;
using testutil::P;

TEST_SUITE("hess_core") {

TEST_CASE("validate") {
  CHECK(H("2,3,3").values() == std::vector<int>{2, 3, 3});
  CHECK(H("1,2,3").values() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(H("3,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(H("1,1,3"), std::invalid_argument);
  CHECK_THROWS_AS(H("2,4,3"), std::invalid_argument);
  CHECK_THROWS_AS(H("3,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(H(""), std::invalid_argument);
  CHECK(HessenbergFunction::full(4) == H("4,4,4,4"));
}

TEST_CASE("Hessenberg functions are counted by Catalan numbers") {
  const std::vector<std::size_t> catalan = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n)
    CHECK(all_hessenberg_functions(n).size() == catalan[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("complexity_dimension") {
  for (int n = 1; n <= 6; ++n)
    CHECK(complexity_dimension(HessenbergFunction::full(n)) == n * (n - 1) / 2);
  CHECK(complexity_dimension(H("2,3,3")) == 2);
  CHECK(complexity_dimension(H("3,3,4,4")) == 4);
}

TEST_CASE("h_length") {
  CHECK(h_length(Permutation::identity(4), H("3,3,4,4")) == 0);
  CHECK(h_length(P("2134"), H("3,3,4,4")) == 1);
  CHECK(h_length(P("4312"), H("3,3,4,4")) == 3);
  CHECK_THROWS_AS(h_length(P("213"), H("3,3,4,4")), std::invalid_argument);
}

TEST_CASE("is_admissible") {
  CHECK(is_admissible(P("2134"), H("3,3,4,4")));
  CHECK_FALSE(is_admissible(P("3214"), H("3,3,4,4")));
  for (const auto& h : all_hessenberg_functions(4))
    CHECK(is_admissible(longest_element(4), h));
}

TEST_CASE("enumerate_admissible") {
  CHECK(testutil::names(enumerate_admissible(H("3,3,4,4"))) ==
        std::vector<std::string>{"1234", "1423", "2134", "2341", "2431", "3241",
                                 "3412", "3421", "4123", "4231", "4312", "4321"});
  CHECK(enumerate_admissible(HessenbergFunction::full(4)).size() == 24);
  // Only the decreasing permutation survives when no window pair exists.
  CHECK(testutil::names(enumerate_admissible(H("1,2,3"))) ==
        std::vector<std::string>{"321"});
}

TEST_CASE("admissible_representative") {
  const auto r = admissible_representative(P("3214"), H("3,3,4,4"));
  CHECK(r.admissible == P("4312"));
  CHECK(r.translate == P("1423"));
  const auto a = admissible_representative(P("2134"), H("3,3,4,4"));
  CHECK(a.admissible == P("2134"));
  CHECK(a.translate == Permutation::identity(4));
  const auto d = admissible_representative(P("123"), H("1,2,3"));
  CHECK(d.admissible == P("321"));
  CHECK(d.translate == P("321"));
  const auto f = admissible_representative(P("123"), H("3,3,3"));
  CHECK(f.admissible == P("123"));
}

TEST_CASE("representative is unique and well formed, n<=5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : all_hessenberg_functions(n))
      for (const auto& w : all_permutations(n)) {
        const auto cands = representative_candidates(w, h);
        REQUIRE(cands.size() == 1);
        const auto& wt = cands.front();
        CHECK(is_admissible(wt, h));
        CHECK(oracle::bruhat(w, wt));
        for (const auto& [i, j] : h.window_pairs())
          CHECK((wt(i) < wt(j)) == (w(i) < w(j)));
        if (is_admissible(w, h)) CHECK(wt == w);
      }
}

TEST_CASE("hess_schubert_fixed_points") {
  CHECK(testutil::names(hess_schubert_fixed_points(P("3214"), H("3,3,4,4"))) ==
        std::vector<std::string>{"3214", "3241"});
  CHECK(hess_schubert_fixed_points(P("2134"), H("3,3,4,4")) ==
        bruhat_interval(P("2134")));
  for (const auto& h : all_hessenberg_functions(4))
    CHECK(testutil::names(hess_schubert_fixed_points(longest_element(4), h)) ==
          std::vector<std::string>{"4321"});
}

TEST_CASE("fixed points sit inside [w,w0] and fill it iff admissible, n<=5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : all_hessenberg_functions(n))
      for (const auto& w : all_permutations(n)) {
        const auto fp = hess_schubert_fixed_points(w, h);
        const auto up = oracle::upset(w.one_line());
        const std::set<std::vector<int>> reach(up.begin(), up.end());
        for (const auto& v : fp) CHECK(reach.count(v.one_line()) == 1);
        CHECK(is_admissible(w, h) == (fp.size() == up.size()));
      }
}

TEST_CASE("h_bruhat_leq") {
  const auto h = H("3,3,4,4");
  CHECK(h_bruhat_leq(P("2134"), P("2134"), h));
  for (int n = 1; n <= 4; ++n) {
    const auto full = HessenbergFunction::full(n);
    const auto all = all_permutations(n);
    for (const auto& u : all)
      for (const auto& v : all) CHECK(h_bruhat_leq(u, v, full) == bruhat_leq(u, v));
  }
  for (const auto& w : enumerate_admissible(h))
    for (const auto& v : bruhat_interval(w)) {
      CHECK(h_bruhat_leq(w, v, h));
      CHECK(h_bruhat_leq(v, longest_element(4), h));
    }
}

TEST_CASE("cell dimensions are nonnegative and the paving is palindromic, n<=5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      const int d = complexity_dimension(h);
      std::map<int, int> counts;
      for (const auto& w : all_permutations(n)) {
        const int c = d - h_length(w, h);
        CHECK(c >= 0);
        ++counts[c];
      }
      for (const auto& [k, c] : counts) CHECK(counts[d - k] == c);
    }
}

}
