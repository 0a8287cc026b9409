#include "hessgkm/classify.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace hessgkm;
using testutil::H;
using testutil::P;

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("non-admissible w with a regular representative") {
  const auto r = classify(P("3214"), H("3,3,4,4"));
  CHECK_FALSE(r.admissible);
  CHECK(r.representative.admissible == P("4312"));
  CHECK(r.representative.translate == P("1423"));
  CHECK(testutil::names(r.fixed_points) == std::vector<std::string>{"3214", "3241"});
  CHECK(r.intersection_irreducible.value == Verdict::No);
  CHECK(has(r.intersection_irreducible.citations, cite::kFixedPointsAdmissible));
  CHECK(has(r.intersection_irreducible.citations,
            cite::kConnectedNonAdmissibleReducible));
  CHECK(r.hess_schubert_smooth.value == Verdict::Yes);
  CHECK(r.intersection_smooth.value == Verdict::No);
  CHECK(r.cell_dimension == 1);
  CHECK(testutil::names(r.smooth_fixed_points) ==
        std::vector<std::string>{"3214", "3241"});
  REQUIRE(r.component_lower_bound);
  const auto lb = testutil::names(*r.component_lower_bound);
  const std::set<std::string> cap = {"3214", "3412", "3241", "4213"};
  for (const auto& v : lb) CHECK(cap.count(v) == 1);
  CHECK(has(lb, "3214"));
  CHECK(has(lb, "3412"));
}

TEST_CASE("admissible w with a non-regular connected graph") {
  const auto r = classify(P("2134"), H("3,3,4,4"));
  CHECK(r.admissible);
  CHECK(r.graph_stats.connected);
  CHECK_FALSE(r.graph_stats.regular);
  CHECK(r.intersection_smooth.value == Verdict::No);
  CHECK(r.hess_schubert_smooth.value == Verdict::Unknown);
  CHECK(r.intersection_irreducible.value == Verdict::Unknown);
  bool found = false;
  for (const auto& x : r.pattern_witnesses)
    if (x.pattern == HPattern::P2134 && x.indices == PatternIndices{1, 2, 3, 4})
      found = true;
  CHECK(found);
}

TEST_CASE("longest element") {
  for (const auto& h : all_hessenberg_functions(4)) {
    const auto r = classify(longest_element(4), h);
    CHECK(r.admissible);
    CHECK(r.intersection_smooth.value == Verdict::Yes);
    CHECK(r.intersection_irreducible.value == Verdict::Yes);
    CHECK(r.intersection_equals_closure.value == Verdict::Yes);
    CHECK(r.hess_schubert_smooth.value == Verdict::Yes);
    CHECK(r.cell_dimension == 0);
    CHECK(testutil::names(r.fixed_points) == std::vector<std::string>{"4321"});
    CHECK(testutil::names(*r.component_lower_bound) ==
          std::vector<std::string>{"4321"});
  }
}

TEST_CASE("smooth_points_theorem") {
  CHECK(testutil::names(smooth_points_theorem(P("3214"), H("3,3,4,4"))) ==
        std::vector<std::string>{"3214", "3241"});
  CHECK(testutil::names(smooth_points_theorem(longest_element(4), H("3,3,4,4"))) ==
        std::vector<std::string>{"4321"});
}

TEST_CASE("regular and connected gives a single component generator") {
  const auto h = H("3,3,4,4");
  const auto r = classify(P("4312"), h);
  CHECK(r.intersection_irreducible.value == Verdict::Yes);
  CHECK(testutil::names(*r.component_lower_bound) == std::vector<std::string>{"4312"});
}

TEST_CASE("graph that stays non-regular despite monotone h-lengths") {
  const auto h = H("3,4,5,6,6,6");
  const auto w = P("236451");
  CHECK(is_admissible(w, h));
  const auto r = classify(w, h);
  CHECK(r.cell_dimension == 5);
  CHECK_FALSE(r.graph_stats.regular);
  CHECK(r.intersection_smooth.value == Verdict::No);
  CHECK(degree(h, w, P("632451")) == 7);
}

TEST_CASE("JSON report") {
  const auto j = to_json(classify(P("3214"), H("3,3,4,4")));
  CHECK(j["admissible"] == false);
  CHECK(j["representative"]["w_tilde"] == "4312");
  CHECK(j["representative"]["u"] == "1423");
  CHECK(j["fixed_points"] == nlohmann::json::array({"3214", "3241"}));
  CHECK(j["verdicts"]["intersection_irreducible"]["value"] == "no");
  CHECK(j["verdicts"]["hess_schubert_smooth"]["value"] == "yes");
  CHECK(j["citations"].size() > 0);
}

TEST_CASE("verdicts agree with brute-force scans, n<=5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : all_hessenberg_functions(n))
      for (const auto& w : all_permutations(n)) {
        ClassifyOptions opt;
        opt.component_bound_max_rank = 4;
        const auto r = classify(w, h, opt);
        INFO("h=" << h.to_string() << " w=" << w.to_string());
        const auto iv = bruhat_interval(w);
        bool all_equal = true;
        for (const auto& v : iv)
          all_equal = all_equal && degree(h, w, v) == r.cell_dimension;
        CHECK((r.intersection_smooth.value == Verdict::Yes) == all_equal);
        if (r.intersection_irreducible.value == Verdict::No)
          CHECK(r.fixed_points.size() < iv.size());
        if (r.admissible) {
          const bool avoids = avoids_all_associated(w, h).avoids;
          CHECK((r.hess_schubert_smooth.value == Verdict::Yes) == avoids);
        }
        for (const auto& z : r.smooth_fixed_points)
          CHECK(std::find(r.fixed_points.begin(), r.fixed_points.end(), z) !=
                r.fixed_points.end());
      }
}

}
