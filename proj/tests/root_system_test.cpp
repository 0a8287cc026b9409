#include "hessgkm/gkm_graph.hpp"
#include "hessgkm/root_system.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

using namespace hessgkm;
using testutil::H;
using testutil::P;

namespace {

RootMask mask_of(const RootSystem& rs, std::initializer_list<const char*> roots) {
  RootMask m = 0;
  for (const char* r : roots) m |= RootMask{1} << *rs.index_of(parse_root(r, rs.rank()));
  return m;
}

WeylElement word(const WeylGroup& g, std::vector<int> w) { return g.from_word(w); }

std::vector<std::string> element_names(const WeylGroup& g,
                                       const std::vector<WeylElement>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(g.name(e));
  return out;
}

// u <=_L v straight from lengths.
bool weak_leq(const WeylGroup& g, WeylElement u, WeylElement v) {
  return g.length(v) == g.length(u) + g.length(g.multiply(v, g.inverse(u)));
}

// Upward closure under length-increasing right multiplication by reflections.
std::set<std::size_t> reflection_upset(const WeylGroup& g, WeylElement u) {
  std::set<std::size_t> seen = {u.id};
  std::deque<WeylElement> todo = {u};
  while (!todo.empty()) {
    const auto x = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < g.roots().num_positive(); ++k) {
      const auto y = g.multiply(x, g.reflection(k));
      if (g.length(y) > g.length(x) && seen.insert(y.id).second) todo.push_back(y);
    }
  }
  return seen;
}

struct SystemCase {
  char type;
  int rank;
  std::size_t spaces;
};

const std::vector<SystemCase> kSystems = {
    {'A', 1, 2},  {'A', 2, 5},  {'A', 3, 14}, {'B', 2, 6},  {'C', 2, 6},
    {'B', 3, 20}, {'C', 3, 20}, {'D', 4, 50}, {'G', 2, 8},
};

}  // namespace

TEST_SUITE("root_systems") {

TEST_CASE("build_root_system") {
  const auto a2 = RootSystem::build('A', 2);
  CHECK(a2.positive_roots() == std::vector<RootVector>{{1, 0}, {0, 1}, {1, 1}});
  const auto c2 = RootSystem::build('C', 2);
  CHECK(c2.positive_roots() ==
        std::vector<RootVector>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
  CHECK(c2.cartan()[1][0] == -2);  // alpha2 is long
  const auto a3 = RootSystem::build('A', 3);
  CHECK(a3.num_positive() == 6);
  CHECK(a3.weyl_order() == 24);
  CHECK(RootSystem::build('G', 2).num_positive() == 6);
  CHECK(RootSystem::build('F', 4).num_positive() == 24);
  CHECK(RootSystem::build('D', 4).num_positive() == 12);
  CHECK(RootSystem::build('B', 3).positive_roots().back() == RootVector{1, 2, 2});
  CHECK(RootSystem::build('C', 3).positive_roots().back() == RootVector{2, 2, 1});
  CHECK_THROWS_AS(RootSystem::build('E', 6), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('B', 1), std::invalid_argument);
}

TEST_CASE("sum table is symmetric and closed") {
  for (const auto& sc : kSystems) {
    const auto rs = RootSystem::build(sc.type, sc.rank);
    const auto& roots = rs.positive_roots();
    for (std::size_t a = 0; a < roots.size(); ++a) {
      for (int x : roots[a]) CHECK(x >= 0);
      for (std::size_t b = 0; b < roots.size(); ++b) {
        CHECK(rs.sum_index(a, b) == rs.sum_index(b, a));
        RootVector s = roots[a];
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += roots[b][i];
        CHECK(rs.sum_index(a, b) == rs.index_of(s));
      }
    }
  }
}

TEST_CASE("root text") {
  CHECK(format_root({2, 1}) == "2α1+α2");
  CHECK(format_root({1, 1}, true) == "a1+a2");
  CHECK(parse_root("a1+a2", 2) == RootVector{1, 1});
  CHECK(parse_root("2α1+α2", 2) == RootVector{2, 1});
  CHECK(parse_root("[1,1]", 2) == RootVector{1, 1});
  CHECK(parse_root_list("a1,[1,1],2a1+a2", 2) ==
        std::vector<RootVector>{{1, 0}, {1, 1}, {2, 1}});
  CHECK_THROWS_AS(parse_root("a3", 2), std::invalid_argument);
  const auto c2 = RootSystem::build('C', 2);
  CHECK(format_root_set(c2, 0) == "∅");
  CHECK(format_root_set(c2, mask_of(c2, {"a1", "2a1+a2"})) == "{α1, 2α1+α2}");
}

TEST_CASE("inversion_set") {
  const WeylGroup g(RootSystem::build('C', 2));
  const auto& rs = g.roots();
  CHECK(g.size() == 8);
  CHECK(g.inversion_set(g.identity()) == 0);
  CHECK(g.inversion_set(word(g, {2, 1})) == mask_of(rs, {"a1", "2a1+a2"}));
  CHECK(g.inversion_set(word(g, {1, 2})) == mask_of(rs, {"a2", "a1+a2"}));
  for (const auto& sc : kSystems) {
    const WeylGroup gg(RootSystem::build(sc.type, sc.rank));
    CHECK(gg.size() == gg.roots().weyl_order());
    CHECK(gg.inversion_set(gg.longest()) == gg.roots().all_positive_mask());
    for (auto w : gg.elements())
      CHECK(std::popcount(gg.inversion_set(w)) == gg.length(w));
  }
}

TEST_CASE("validate_hessenberg_space") {
  const auto c2 = RootSystem::build('C', 2);
  CHECK(HessenbergSpace::validate(c2, parse_root_list("a1,a2,a1+a2", 2)).size() == 3);
  const auto a2 = RootSystem::build('A', 2);
  CHECK_THROWS_AS(HessenbergSpace::validate(a2, parse_root_list("a1+a2", 2)),
                  std::invalid_argument);
  for (const auto& sc : kSystems) {
    const auto rs = RootSystem::build(sc.type, sc.rank);
    CHECK_NOTHROW(HessenbergSpace::validate(rs, rs.all_positive_mask()));
    CHECK_NOTHROW(HessenbergSpace::validate(rs, RootMask{0}));
  }
}

TEST_CASE("Hessenberg spaces are counted by Catalan numbers of the type") {
  for (const auto& sc : kSystems)
    CHECK(all_hessenberg_spaces(RootSystem::build(sc.type, sc.rank)).size() ==
          sc.spaces);
  CHECK(all_hessenberg_spaces(RootSystem::build('F', 4)).size() == 105);
}

TEST_CASE("weyl_type_subsets") {
  const auto a2 = RootSystem::build('A', 2);
  const auto ma = HessenbergSpace::validate(a2, parse_root_list("a1,a2", 2));
  CHECK(weyl_type_subsets(a2, ma).size() == 4);
  const auto c2 = RootSystem::build('C', 2);
  const auto mc = HessenbergSpace::validate(c2, parse_root_list("a1,a2,a1+a2", 2));
  const auto subsets = weyl_type_subsets(c2, mc);
  CHECK(subsets == std::vector<RootMask>{
                       0, mask_of(c2, {"a1"}), mask_of(c2, {"a2"}),
                       mask_of(c2, {"a1", "a1+a2"}), mask_of(c2, {"a2", "a1+a2"}),
                       mc.mask()});
  CHECK(std::find(subsets.begin(), subsets.end(), mask_of(c2, {"a1+a2"})) ==
        subsets.end());
}

TEST_CASE("partition classes and bounds in C2") {
  const WeylGroup g(RootSystem::build('C', 2));
  const auto& rs = g.roots();
  const auto hs = HessenbergSpace::validate(rs, parse_root_list("a1,a2,a1+a2", 2));
  const auto classes = partition_classes(g, hs);
  CHECK(element_names(g, classes.at(mask_of(rs, {"a1"}))) ==
        std::vector<std::string>{"s1", "s2s1"});
  CHECK(element_names(g, classes.at(mask_of(rs, {"a2", "a1+a2"}))) ==
        std::vector<std::string>{"s1s2", "s2s1s2"});
  const auto b1 = z_and_w(g, hs, mask_of(rs, {"a1"}));
  CHECK(g.name(b1.z) == "s1");
  CHECK(g.name(b1.w) == "s2s1");
  const auto b2 = z_and_w(g, hs, mask_of(rs, {"a2", "a1+a2"}));
  CHECK(g.name(b2.z) == "s1s2");
  CHECK(g.name(b2.w) == "s2s1s2");
  CHECK_THROWS_AS(z_and_w(g, hs, mask_of(rs, {"a1+a2"})), std::invalid_argument);
  std::set<std::string> adm;
  for (auto e : h_admissible_elements(g, hs)) adm.insert(g.name(e));
  CHECK(adm == std::set<std::string>{"e", "s2s1", "s2", "s1s2s1", "s2s1s2",
                                     "s1s2s1s2"});
}

TEST_CASE("partition classes and bounds in A2") {
  const WeylGroup g(RootSystem::build('A', 2));
  const auto& rs = g.roots();
  const auto hs = HessenbergSpace::validate(rs, parse_root_list("a1,a2", 2));
  CHECK(partition_classes(g, hs).at(0).front() == g.identity());
  const auto b = z_and_w(g, hs, mask_of(rs, {"a1"}));
  CHECK(g.to_permutation(b.z) == P("213"));
  CHECK(g.to_permutation(b.w) == P("312"));
  std::vector<std::string> adm;
  for (auto e : h_admissible_elements(g, hs)) adm.push_back(g.to_permutation(e).to_string());
  CHECK(testutil::sorted(adm) == std::vector<std::string>{"123", "231", "312", "321"});
}

TEST_CASE("partition and weak-interval properties for every M") {
  for (const auto& sc : kSystems) {
    const WeylGroup g(RootSystem::build(sc.type, sc.rank));
    for (const auto& hs : all_hessenberg_spaces(g.roots())) {
      const auto subsets = weyl_type_subsets(g.roots(), hs);
      const std::set<RootMask> weyl(subsets.begin(), subsets.end());
      std::size_t total = 0;
      std::set<std::size_t> seen;
      for (const auto& [s, cls] : partition_classes(g, hs)) {
        CHECK(weyl.count(s) == 1);
        total += cls.size();
        for (auto e : cls) CHECK(seen.insert(e.id).second);
        const auto b = z_and_w(g, hs, s);
        for (auto u : g.elements()) {
          const bool in = std::binary_search(cls.begin(), cls.end(), u);
          CHECK(in == (weak_leq(g, b.z, u) && weak_leq(g, u, b.w)));
        }
        const auto zc = z_and_w(g, hs, hs.mask() & ~s).z;
        CHECK(g.multiply(g.longest(), zc) == b.w);
      }
      CHECK(total == g.size());
      CHECK(partition_classes(g, hs).size() == weyl.size());
    }
  }
}

TEST_CASE("full M makes every element admissible") {
  for (const auto& sc : kSystems) {
    const WeylGroup g(RootSystem::build(sc.type, sc.rank));
    const auto hs = HessenbergSpace::validate(g.roots(), g.roots().all_positive_mask());
    CHECK(h_admissible_elements(g, hs).size() == g.size());
  }
}

TEST_CASE("Bruhat order agrees with the reflection-chain closure") {
  for (const auto& sc : kSystems) {
    const WeylGroup g(RootSystem::build(sc.type, sc.rank));
    if (g.size() > 200) continue;
    for (auto u : g.elements()) {
      const auto up = reflection_upset(g, u);
      for (auto v : g.elements()) REQUIRE(g.bruhat_leq(u, v) == (up.count(v.id) == 1));
    }
  }
}

TEST_CASE("arbitrary_gkm_graph") {
  const WeylGroup c2(RootSystem::build('C', 2));
  const auto hs = HessenbergSpace::validate(c2.roots(), parse_root_list("a1,a2,a1+a2", 2));
  const auto g = arbitrary_gkm_graph(c2, hs);
  CHECK(g.vertices.size() == 8);
  CHECK(g.edges.size() == 12);
  const auto empty = arbitrary_gkm_graph(c2, HessenbergSpace::validate(c2.roots(), RootMask{0}));
  CHECK(empty.edges.empty());
  CHECK(empty.vertices.size() == 8);

  const WeylGroup a2(RootSystem::build('A', 2));
  const auto ha = HessenbergSpace::from_hessenberg_function(a2.roots(), H("2,3,3"));
  const auto hex = arbitrary_gkm_graph(a2, ha);
  CHECK(hex.vertices.size() == 6);
  CHECK(hex.edges.size() == 6);
  for (std::size_t k = 0; k < hex.vertices.size(); ++k) CHECK(hex.incident[k].size() == 2);
  CHECK(is_connected(hex));
  std::set<std::pair<std::string, std::string>> a, b;
  for (const auto& e : hex.edges) {
    auto x = a2.to_permutation(WeylElement{e.u}).to_string();
    auto y = a2.to_permutation(WeylElement{e.v}).to_string();
    a.emplace(std::min(x, y), std::max(x, y));
  }
  const auto tg = build_hessenberg_graph(H("2,3,3"));
  for (const auto& e : tg.edges())
    b.emplace(tg.vertices()[e.u].to_string(), tg.vertices()[e.v].to_string());
  CHECK(a == b);
}

TEST_CASE("classify_arbitrary") {
  const WeylGroup c2(RootSystem::build('C', 2));
  const auto hs = HessenbergSpace::validate(c2.roots(), parse_root_list("a1,a2,a1+a2", 2));
  for (auto w : c2.elements()) {
    const auto r = classify_arbitrary(c2, hs, w);
    CHECK(r.hess_schubert_smooth.value == Verdict::Unknown);
    CHECK(r.hess_schubert_smooth.reason.find("non-simply-laced") != std::string::npos);
  }
  const auto top = classify_arbitrary(c2, hs, c2.longest());
  CHECK(top.regular);
  CHECK(top.interval_size == 1);
  CHECK(top.cell_dimension == 0);
}

TEST_CASE("type A dictionary, n<=4") {
  for (int n = 2; n <= 4; ++n) {
    const WeylGroup g(RootSystem::build('A', n - 1));
    for (const auto& h : all_hessenberg_functions(n)) {
      const auto hs = HessenbergSpace::from_hessenberg_function(g.roots(), h);
      CHECK(hs.size() == static_cast<std::size_t>(complexity_dimension(h)));
      std::vector<std::string> adm;
      for (auto e : h_admissible_elements(g, hs)) adm.push_back(g.to_permutation(e).to_string());
      CHECK(testutil::sorted(adm) == testutil::names(enumerate_admissible(h)));
      for (auto e : g.elements()) {
        const auto w = g.to_permutation(e);
        CHECK(g.from_permutation(w) == e);
        CHECK(g.length(e) == length(w));
        const auto r = classify_arbitrary(g, hs, e);
        const auto rep = admissible_representative(w, h);
        CHECK(g.to_permutation(r.w_tilde) == rep.admissible);
        CHECK(r.cell_dimension == complexity_dimension(h) - h_length(w, h));
        const int dim = complexity_dimension(h) - h_length(rep.admissible, h);
        CHECK(r.regular ==
              is_regular(interval_graph(h, rep.admissible), dim).regular);
        for (auto f : g.elements())
          CHECK(g.bruhat_leq(e, f) == bruhat_leq(w, g.to_permutation(f)));
      }
    }
  }
}

TEST_CASE("tables") {
  const WeylGroup g(RootSystem::build('C', 2));
  const auto hs = HessenbergSpace::validate(g.roots(), parse_root_list("a1,a2,a1+a2", 2));
  const auto inv = inversion_table(g, hs);
  CHECK(inv.find("s2s1     | {α1, 2α1+α2}            | {α1}") != std::string::npos);
  const auto part = partition_table(g, hs);
  CHECK(part.find("{α2, α1+α2}     | {s1s2, s2s1s2} | s1s2     | s2s1s2") !=
        std::string::npos);
  const WeylGroup a2(RootSystem::build('A', 2));
  CHECK(table_name(a2, a2.from_word({2})) == "132");
  CHECK(table_name(g, g.from_word({2, 1})) == "s2s1");
  CHECK(inversion_table(a2, HessenbergSpace::validate(a2.roots(), parse_root_list("a1,a2", 2)))
            .find("132 = s2") != std::string::npos);
}

}
