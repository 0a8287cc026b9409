#include "hessgkm/oracles.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <stdexcept>

using namespace hessgkm;

TEST_SUITE("verify_oracles") {

TEST_CASE("oracle basics") {
  CHECK(oracle::length({3, 2, 1, 4}) == 3);
  CHECK(oracle::upset({3, 2, 1}).size() == 1);
  CHECK(oracle::upset({1, 2, 3}).size() == 6);
  for (const auto& w : all_permutations(4))
    CHECK(oracle::bruhat(Permutation::identity(4), w));
  CHECK_FALSE(oracle::bruhat(oracle::Word{2, 1, 3}, oracle::Word{1, 2, 3}));
}

TEST_CASE("sweep arguments") {
  CHECK_THROWS_AS(sweep("nonsense"), std::invalid_argument);
  SweepOptions o;
  o.n_max = 7;
  CHECK_THROWS_AS(sweep("bruhat", o), std::invalid_argument);
  o.n_max = 0;
  CHECK_THROWS_AS(sweep("bruhat", o), std::invalid_argument);
  CHECK(suite_names().size() == 12);
}

TEST_CASE("suites that hold at n<=4") {
  SweepOptions o;
  o.n_max = 4;
  for (const std::string s : {"bruhat", "representative", "fixed-points", "connectivity",
                        "shortcut", "phi-injective", "poincare", "cohomology"}) {
    const auto r = sweep(s, o);
    INFO(s);
    CHECK(r.complete);
    CHECK(r.violation_count == 0);
    CHECK(r.passed());
    if (s != "bruhat") CHECK(r.h_count == 1 + 2 + 5 + 14);
  }
}

TEST_CASE("pattern sweep covers every pattern at n<=5") {
  const auto r = sweep("patterns");
  CHECK(r.passed());
  CHECK(r.h_count == 1 + 2 + 5 + 14 + 42);
  CHECK(r.coverage["patterns_covered"] == 7);
  CHECK(r.coverage["pattern_hits"].size() == 7);
  for (const auto& [name, hits] : r.coverage["pattern_hits"].items()) {
    INFO(name);
    CHECK(hits.get<int>() > 0);
  }
}

TEST_CASE("surjectivity sweep reports the (3,3,4,4) case") {
  SweepOptions o;
  o.n_max = 4;
  o.max_records = 1000;
  const auto r = sweep("phi-surjective", o);
  CHECK(r.violation_count == r.violations.size());
  bool found = false;
  for (const auto& v : r.violations)
    if (v["h"] == "3,3,4,4" && v["w"] == "2134" && v["v"] == "2431") found = true;
  CHECK(found);
}

TEST_CASE("budget exhaustion is not a pass") {
  SweepOptions o;
  o.n_max = 6;
  o.budget_seconds = 1e-9;
  const auto r = sweep("bruhat", o);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.passed());
}

TEST_CASE("JSON leaves timing out unless asked") {
  SweepOptions o;
  o.n_max = 3;
  const auto r = sweep("poincare", o);
  CHECK_FALSE(to_json(r).contains("elapsed_seconds"));
  CHECK(to_json(r, true).contains("elapsed_seconds"));
  CHECK(to_json(r)["passed"] == true);
}

}
