#include "hessgkm/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "hessgkm/classify.hpp"
#include "hessgkm/cohomology.hpp"
#include "hessgkm/gkm_graph.hpp"
#include "hessgkm/hessenberg.hpp"
#include "hessgkm/patterns.hpp"
#include "hessgkm/root_system.hpp"

namespace hessgkm {

namespace oracle {

int length(const Word& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  }
  return inv;
}

std::vector<Word> upset(const Word& u) {
  std::set<Word> seen{u};
  std::deque<Word> queue{u};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    const int lx = length(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        auto y = x;
        std::swap(y[i], y[j]);
        if (length(y) > lx && seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool bruhat(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  const auto up = upset(u);
  return std::binary_search(up.begin(), up.end(), v);
}

bool bruhat(const Permutation& u, const Permutation& v) {
  return bruhat(u.one_line(), v.one_line());
}

}  // namespace oracle

namespace {

using Clock = std::chrono::steady_clock;
using oracle::Word;

const std::vector<std::size_t> kCatalan = {1, 1, 2, 5, 14, 42, 132};

class Runner {
 public:
  Runner(std::string suite, const SweepOptions& options, Clock::time_point start)
      : options_(options), start_(start) {
    result_.suite = std::move(suite);
    result_.n_max = options.n_max;
  }

  bool out_of_time() {
    if (options_.budget_seconds <= 0) return false;
    const std::chrono::duration<double> spent = Clock::now() - start_;
    if (spent.count() > options_.budget_seconds) result_.complete = false;
    return !result_.complete;
  }

  void check(bool ok, const std::function<nlohmann::json()>& record) {
    ++result_.case_count;
    if (ok) return;
    ++result_.violation_count;
    if (result_.violations.size() < options_.max_records) {
      result_.violations.push_back(record());
    }
  }

  // Hessenberg functions of rank n, with the generator's Catalan self-test.
  std::vector<HessenbergFunction> functions(int n) {
    auto hs = all_hessenberg_functions(n);
    if (hs.size() != kCatalan[static_cast<std::size_t>(n)]) {
      ++result_.violation_count;
      result_.violations.push_back({{"generator", "hessenberg functions"},
                                    {"n", n},
                                    {"count", hs.size()},
                                    {"expected", kCatalan[static_cast<std::size_t>(n)]}});
    }
    result_.h_count += hs.size();
    return hs;
  }

  SweepResult finish(Clock::time_point suite_start) {
    const std::chrono::duration<double> spent = Clock::now() - suite_start;
    result_.elapsed_seconds = spent.count();
    return std::move(result_);
  }

  SweepResult& result() { return result_; }
  int n_max() const { return options_.n_max; }

 private:
  SweepOptions options_;
  Clock::time_point start_;
  SweepResult result_;
};

nlohmann::json hw(const HessenbergFunction& h, const Permutation& w) {
  return {{"h", h.to_string()}, {"w", w.to_string()}};
}

// Oracle-side quantities for one (h, w), computed from the transposition-chain
// upset and raw one-line vectors only.
struct OracleInterval {
  std::vector<Word> vertices;  // sorted upset of w
  std::vector<int> degree;
  int dimension = 0;
  bool connected = false;

  bool regular() const {
    return std::all_of(degree.begin(), degree.end(),
                       [&](int d) { return d == dimension; });
  }
};

OracleInterval oracle_interval(const std::vector<int>& h, const Word& w,
                               const std::vector<Word>& up) {
  const int n = static_cast<int>(w.size());
  OracleInterval out;
  out.vertices = up;
  int d_h = 0, l_h = 0;
  for (int i = 0; i < n; ++i) {
    d_h += h[static_cast<std::size_t>(i)] - (i + 1);
    for (int j = i + 1; j < h[static_cast<std::size_t>(i)]; ++j) {
      l_h += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)];
    }
  }
  out.dimension = d_h - l_h;
  const auto index = [&](const Word& x) -> std::ptrdiff_t {
    const auto it = std::lower_bound(up.begin(), up.end(), x);
    return it != up.end() && *it == x ? it - up.begin() : -1;
  };
  std::vector<std::vector<std::size_t>> adj(up.size());
  for (std::size_t k = 0; k < up.size(); ++k) {
    int deg = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < h[static_cast<std::size_t>(i)]; ++j) {
        auto y = up[k];
        std::swap(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
        const auto t = index(y);
        if (t >= 0) {
          ++deg;
          adj[k].push_back(static_cast<std::size_t>(t));
        }
      }
    }
    out.degree.push_back(deg);
  }
  std::vector<bool> seen(up.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto k = queue.front();
    queue.pop_front();
    for (auto t : adj[k]) {
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        queue.push_back(t);
      }
    }
  }
  out.connected = reached == up.size();
  return out;
}

// Upsets of every w in S_n, lexicographic order of w.
std::vector<std::vector<Word>> all_upsets(const std::vector<Permutation>& perms) {
  std::vector<std::vector<Word>> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(oracle::upset(p.one_line()));
  return out;
}

template <class Body>
void for_each_hw(Runner& run, int n_min, int n_max, Body&& body) {
  for (int n = n_min; n <= n_max; ++n) {
    const auto perms = all_permutations(n);
    const auto ups = all_upsets(perms);
    for (const auto& h : run.functions(n)) {
      for (std::size_t k = 0; k < perms.size(); ++k) {
        if (run.out_of_time()) return;
        body(h, perms[k], ups[k]);
      }
    }
  }
}

// ---------------------------------------------------------------------------

void suite_bruhat(Runner& run) {
  for (int n = 1; n <= run.n_max(); ++n) {
    const auto perms = all_permutations(n);
    for (const auto& u : perms) {
      if (run.out_of_time()) return;
      const auto up = oracle::upset(u.one_line());
      for (const auto& v : perms) {
        const bool expected = std::binary_search(up.begin(), up.end(), v.one_line());
        const bool got = bruhat_leq(u, v);
        run.check(got == expected, [&] {
          return nlohmann::json{{"u", u.to_string()}, {"v", v.to_string()},
                                {"criterion", got}, {"oracle", expected}};
        });
      }
    }
  }
}

void suite_representative(Runner& run) {
  for_each_hw(run, 1, run.n_max(),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>&) {
                const auto c = representative_candidates(w, h);
                run.check(c.size() == 1, [&] {
                  auto j = hw(h, w);
                  j["candidates"] = c.size();
                  return j;
                });
              });
}

void suite_fixed_points(Runner& run) {
  for_each_hw(run, 1, run.n_max(),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>& up) {
                const auto fixed = hess_schubert_fixed_points(w, h);
                std::vector<Word> words;
                for (const auto& p : fixed) words.push_back(p.one_line());
                std::sort(words.begin(), words.end());
                const bool equal = words == up;
                const bool admissible = is_admissible(w, h);
                run.check(admissible == equal, [&] {
                  auto j = hw(h, w);
                  j["admissible"] = admissible;
                  j["fixed_points_equal_interval"] = equal;
                  return j;
                });
              });
}

void suite_connectivity(Runner& run) {
  for_each_hw(run, 1, run.n_max(),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>& up) {
                if (!is_admissible(w, h) && !h.hess_connected()) return;
                const auto o = oracle_interval(h.values(), w.one_line(), up);
                run.check(o.connected, [&] { return hw(h, w); });
              });
}

void suite_shortcut(Runner& run) {
  for_each_hw(run, 1, run.n_max(),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>& up) {
                if (!is_admissible(w, h)) return;
                const bool regular = oracle_interval(h.values(), w.one_line(), up).regular();
                const bool shortcut = regularity_via_w0(h, w);
                run.check(regular == shortcut, [&] {
                  auto j = hw(h, w);
                  j["w0_shortcut"] = shortcut;
                  j["oracle_regular"] = regular;
                  return j;
                });
              });
}

void suite_patterns(Runner& run) {
  std::map<std::string, std::size_t> hits;
  for (auto p : kAllPatterns) hits[pattern_name(p)] = 0;
  for_each_hw(run, 1, run.n_max(),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>& up) {
                if (!is_admissible(w, h)) return;
                const bool regular = oracle_interval(h.values(), w.one_line(), up).regular();
                const auto av = avoids_all_associated(w, h);
                for (const auto& wit : av.witnesses) ++hits[pattern_name(wit.pattern)];
                run.check(av.avoids == regular, [&] {
                  auto j = hw(h, w);
                  j["avoids"] = av.avoids;
                  j["oracle_regular"] = regular;
                  return j;
                });
              });
  run.result().coverage["pattern_hits"] = hits;
  run.result().coverage["patterns_covered"] = std::count_if(
      hits.begin(), hits.end(), [](const auto& kv) { return kv.second > 0; });
}

void suite_phi_injective(Runner& run) {
  for_each_hw(run, 1, run.n_max(),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>&) {
                if (!is_admissible(w, h)) return;
                for (const auto& u : bruhat_interval(w)) {
                  for (const auto& [a, b] : edge_set_at(h, w, u)) {
                    const auto v = apply_transposition(u, a, b);
                    if (length(v) <= length(u)) continue;
                    const auto phi = phi_map(h, w, u, a, b);
                    const auto target = edge_set_at(h, w, v);
                    std::set<Transposition> image;
                    bool into = true;
                    for (const auto& [src, dst] : phi) {
                      image.insert(dst);
                      into = into && std::find(target.begin(), target.end(), dst) != target.end();
                    }
                    run.check(into && image.size() == phi.size(), [&] {
                      auto j = hw(h, w);
                      j["u"] = u.to_string();
                      j["a"] = a;
                      j["b"] = b;
                      j["well_defined"] = into;
                      j["injective"] = image.size() == phi.size();
                      return j;
                    });
                  }
                }
              });
}

void suite_phi_surjective(Runner& run) {
  for_each_hw(run, 1, run.n_max(),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>&) {
                if (!is_admissible(w, h)) return;
                const auto source = edge_set_at(h, w, w);
                const int n = w.rank();
                for (int a = 1; a <= n; ++a) {
                  for (int b = a + 1; b <= n; ++b) {
                    if (w(a) > w(b)) continue;  // need w < w(a,b)
                    const auto v = apply_transposition(w, a, b);
                    const auto target = edge_set_at(h, w, v);
                    std::set<Transposition> image;
                    for (const auto& e : source) image.insert(phi_image(source, a, b, e));
                    bool onto = true;
                    for (const auto& e : target) onto = onto && image.count(e) > 0;
                    run.check(onto, [&] {
                      auto j = hw(h, w);
                      j["v"] = v.to_string();
                      j["a"] = a;
                      j["b"] = b;
                      j["deg_v"] = target.size();
                      j["dim"] = source.size();
                      return j;
                    });
                  }
                }
              });
}

void suite_poincare(Runner& run) {
  for (int n = 1; n <= run.n_max(); ++n) {
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (const auto& h : run.functions(n)) {
      if (run.out_of_time()) return;
      const auto b = poincare_polynomial(h);
      long long sum = 0;
      for (auto x : b) sum += x;
      const bool palindromic = std::equal(b.begin(), b.end(), b.rbegin());
      run.check(palindromic && sum == fact && static_cast<int>(b.size()) ==
                                                     complexity_dimension(h) + 1,
                [&] {
                  return nlohmann::json{{"h", h.to_string()}, {"betti", b}};
                });
    }
  }
}

void suite_cohomology(Runner& run) {
  std::size_t tested = 0;
  for_each_hw(run, 1, std::min(run.n_max(), 4),
              [&](const HessenbergFunction& h, const Permutation& w, const std::vector<Word>& up) {
                const auto o = oracle_interval(h.values(), w.one_line(), up);
                if (!o.regular() || !o.connected) return;
                ++tested;
                std::string failure;
                try {
                  const auto c = localized_class_candidate(h, w);
                  if (!check_compatibility(c.ambient, c.values).compatible) {
                    failure = "incompatible";
                  }
                } catch (const std::exception& e) {
                  failure = e.what();
                }
                run.check(failure.empty(), [&] {
                  auto j = hw(h, w);
                  j["failure"] = failure;
                  return j;
                });
              });
  run.result().coverage["regular_connected_cases"] = tested;
}

// -- arbitrary type ---------------------------------------------------------

struct GroupTables {
  std::vector<std::size_t> inv;
  std::vector<std::vector<std::size_t>> mul;  // mul[u][v] = u v

  explicit GroupTables(const WeylGroup& g) : inv(g.size()), mul(g.size()) {
    for (const auto& u : g.elements()) {
      inv[u.id] = g.inverse(u).id;
      mul[u.id].resize(g.size());
      for (const auto& v : g.elements()) mul[u.id][v.id] = g.multiply(u, v).id;
    }
  }

  bool weak_leq(const WeylGroup& g, std::size_t u, std::size_t v) const {
    return g.length({v}) == g.length({u}) + g.length({mul[v][inv[u]]});
  }
};

std::size_t type_catalan(const RootSystem& rs) {
  const auto binom = [](int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
  };
  const int n = rs.rank();
  switch (rs.type()) {
    case 'A': return binom(2 * n + 2, n + 1) / static_cast<std::size_t>(n + 2);
    case 'B':
    case 'C': return binom(2 * n, n);
    case 'D': return binom(2 * n, n) - binom(2 * n - 2, n - 1);
    case 'F': return 105;
    case 'G': return 8;
    default: return 0;
  }
}

void check_system(Runner& run, char type, int rank) {
  const auto rs = RootSystem::build(type, rank);
  const WeylGroup g(rs);
  const GroupTables t(g);
  const auto label = rs.label();

  run.check(g.inversion_set(g.longest()) == rs.all_positive_mask(), [&] {
    return nlohmann::json{{"system", label}, {"property", "N(w0) = Phi+"}};
  });

  const auto spaces = all_hessenberg_spaces(rs);
  run.check(spaces.size() == type_catalan(rs), [&] {
    return nlohmann::json{{"system", label}, {"property", "Hessenberg space count"},
                          {"count", spaces.size()}};
  });

  for (const auto& hs : spaces) {
    if (run.out_of_time()) return;
    const auto m = hs.mask();
    const auto record = [&](const std::string& property, RootMask s) {
      return nlohmann::json{{"system", label},
                            {"M", format_root_set(rs, m, true)},
                            {"S", format_root_set(rs, s, true)},
                            {"property", property}};
    };
    const auto subsets = weyl_type_subsets(rs, hs);
    const auto classes = partition_classes(g, hs);
    std::size_t total = 0;
    for (const auto& [s, members] : classes) {
      total += members.size();
      const bool listed = std::binary_search(subsets.begin(), subsets.end(), s,
                                             [&](RootMask l, RootMask r) {
                                               const int pl = std::popcount(l), pr = std::popcount(r);
                                               if (pl != pr) return pl < pr;
                                               return mask_indices(l) < mask_indices(r);
                                             });
      const bool weyl = is_closed_in(rs, s, m) && is_closed_in(rs, m & ~s, m);
      run.check(listed && weyl, [&] { return record("class key is of Weyl type", s); });
    }
    run.check(total == g.size() && classes.size() == subsets.size(),
              [&] { return record("partition of W", 0); });

    for (auto s : subsets) {
      const auto it = classes.find(s);
      if (it == classes.end()) continue;  // reported above
      const auto& cls = it->second;
      ClassBounds b;
      try {
        b = z_and_w(g, hs, s);
      } catch (const std::exception& e) {
        run.check(false, [&] {
          auto j = record("z_S / w_S", s);
          j["error"] = e.what();
          return j;
        });
        continue;
      }
      // Independent class extremes by exhaustive weak-order comparison.
      std::optional<std::size_t> lo, hi;
      for (const auto& x : cls) {
        bool is_lo = true, is_hi = true;
        for (const auto& y : cls) {
          is_lo = is_lo && t.weak_leq(g, x.id, y.id);
          is_hi = is_hi && t.weak_leq(g, y.id, x.id);
        }
        if (is_lo) lo = x.id;
        if (is_hi) hi = x.id;
      }
      run.check(lo == b.z.id && hi == b.w.id,
                [&] { return record("z_S and w_S are the class extremes", s); });
      bool interval = true;
      for (const auto& u : g.elements()) {
        const bool inside = t.weak_leq(g, b.z.id, u.id) && t.weak_leq(g, u.id, b.w.id);
        const bool member = std::binary_search(cls.begin(), cls.end(), u);
        interval = interval && inside == member;
      }
      run.check(interval, [&] { return record("class is the weak interval [z_S, w_S]", s); });
    }
  }

  const auto full = HessenbergSpace::validate(rs, rs.all_positive_mask());
  run.check(h_admissible_elements(g, full).size() == g.size(), [&] {
    return nlohmann::json{{"system", label}, {"property", "M = Phi+ admits all of W"}};
  });

  // Strong order against the reflection-chain closure.
  if (g.size() <= 200) {
    for (const auto& u : g.elements()) {
      std::vector<bool> reach(g.size(), false);
      std::deque<std::size_t> queue{u.id};
      reach[u.id] = true;
      while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < rs.num_positive(); ++k) {
          const auto y = t.mul[x][g.reflection(k).id];
          if (g.length({y}) > g.length({x}) && !reach[y]) {
            reach[y] = true;
            queue.push_back(y);
          }
        }
      }
      for (const auto& v : g.elements()) {
        run.check(g.bruhat_leq(u, v) == reach[v.id], [&] {
          return nlohmann::json{{"system", label}, {"u", g.name(u)}, {"v", g.name(v)},
                                {"property", "Bruhat order vs reflection chains"}};
        });
      }
    }
  }
}

void check_type_a_dictionary(Runner& run, int n) {
  const auto rs = RootSystem::build('A', n - 1);
  const WeylGroup g(rs);
  for (const auto& h : run.functions(n)) {
    if (run.out_of_time()) return;
    const auto hs = HessenbergSpace::from_hessenberg_function(rs, h);
    const auto rec = [&](const std::string& property) {
      return nlohmann::json{{"h", h.to_string()}, {"property", property}};
    };
    std::vector<Permutation> adm;
    for (const auto& w : h_admissible_elements(g, hs)) adm.push_back(g.to_permutation(w));
    std::sort(adm.begin(), adm.end());
    run.check(adm == enumerate_admissible(h), [&] { return rec("H-admissible = h-admissible"); });

    const auto graph = arbitrary_gkm_graph(g, hs);
    run.check(graph.edges.size() == build_hessenberg_graph(h).edges().size(),
              [&] { return rec("GKM edge count"); });

    for (const auto& w : g.elements()) {
      const auto p = g.to_permutation(w);
      const auto ar = classify_arbitrary(g, hs, w);
      const auto rep = admissible_representative(p, h);
      const auto rep_graph = interval_graph(h, rep.admissible);
      const bool regular =
          is_regular(rep_graph, complexity_dimension(h) - h_length(rep.admissible, h)).regular;
      const bool ok =
          std::popcount(g.inversion_set(w) & hs.mask()) == h_length(p, h) &&
          g.to_permutation(ar.w_tilde) == rep.admissible && ar.regular == regular &&
          g.from_permutation(p) == w;
      run.check(ok, [&] {
        auto j = rec("type-A dictionary");
        j["w"] = p.to_string();
        return j;
      });
    }
  }
}

void suite_roots(Runner& run) {
  const std::vector<std::pair<char, int>> systems = {
      {'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'B', 3},
      {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}};
  for (const auto& [type, rank] : systems) {
    if (run.out_of_time()) return;
    check_system(run, type, rank);
  }
  for (int n = 2; n <= std::min(run.n_max(), 4); ++n) check_type_a_dictionary(run, n);
}

void suite_example61(Runner& run) {
  const auto h = HessenbergFunction::parse("3,4,5,6,6,6");
  const auto w = Permutation::parse("236451");
  run.result().h_count = 1;
  const bool admissible = is_admissible(w, h);
  run.check(admissible, [&] { return nlohmann::json{{"property", "admissible"}}; });
  const int lw = h_length(w, h);
  for (const auto& u : bruhat_interval(w)) {
    if (u == w) continue;
    const int lu = h_length(u, h);
    run.check(lu > lw, [&] {
      return nlohmann::json{{"property", "l_h(u) > l_h(w)"}, {"u", u.to_string()}, {"l_h(u)", lu}};
    });
  }
  const auto graph = interval_graph(h, w);
  const int dim = complexity_dimension(h) - lw;
  const auto reg = is_regular(graph, dim);
  run.check(!reg.regular, [&] { return nlohmann::json{{"property", "interval graph not regular"}}; });
  const auto v = Permutation::parse("632451");
  run.result().coverage["interval_size"] = graph.vertices().size();
  run.result().coverage["dimension"] = dim;
  run.result().coverage["degree_at_632451"] = degree(h, w, v);
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"bruhat", suite_bruhat},
      {"representative", suite_representative},
      {"fixed-points", suite_fixed_points},
      {"connectivity", suite_connectivity},
      {"shortcut", suite_shortcut},
      {"patterns", suite_patterns},
      {"phi-injective", suite_phi_injective},
      {"phi-surjective", suite_phi_surjective},
      {"poincare", suite_poincare},
      {"cohomology", suite_cohomology},
      {"roots", suite_roots},
      {"example61", suite_example61},
  };
  return r;
}

SweepResult run_suite(std::string_view suite, const SweepOptions& options,
                      Clock::time_point budget_start) {
  if (options.n_max < 1 || options.n_max > 6) {
    throw std::invalid_argument("n_max must be between 1 and 6");
  }
  for (const auto& [name, fn] : registry()) {
    if (name != suite) continue;
    const auto start = Clock::now();
    Runner run(name, options, budget_start);
    fn(run);
    return run.finish(start);
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

SweepResult sweep(std::string_view suite, const SweepOptions& options) {
  return run_suite(suite, options, Clock::now());
}

std::vector<SweepResult> sweep_all(const SweepOptions& options) {
  const auto start = Clock::now();
  std::vector<SweepResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, options, start));
  return out;
}

nlohmann::json to_json(const SweepResult& r, bool include_timing) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  j["h_count"] = r.h_count;
  j["cases"] = r.case_count;
  j["violation_count"] = r.violation_count;
  j["violations"] = r.violations;
  j["coverage"] = r.coverage;
  j["complete"] = r.complete;
  j["passed"] = r.passed();
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace hessgkm
