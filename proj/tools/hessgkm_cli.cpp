// hessgkm: command-line front end for the Hessenberg Schubert / GKM engine.

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hessgkm/classify.hpp"
#include "hessgkm/cohomology.hpp"
#include "hessgkm/gkm_graph.hpp"
#include "hessgkm/graph_export.hpp"
#include "hessgkm/hessenberg.hpp"
#include "hessgkm/oracles.hpp"
#include "hessgkm/patterns.hpp"
#include "hessgkm/root_system.hpp"

using namespace hessgkm;
using nlohmann::json;

namespace {

constexpr int kUsageError = 2;
constexpr int kViolation = 1;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string join(const std::vector<Permutation>& ps, const char* sep = " ") {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += sep;
    out += p.to_string();
  }
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct ClassifyArgs {
  std::string h, w;
  bool json = false;
};

void print_claim(std::ostream& out, const char* name, const Claim& c) {
  out << name << ": " << to_string(c.value);
  if (!c.citations.empty()) {
    out << " [";
    for (std::size_t k = 0; k < c.citations.size(); ++k) {
      out << (k ? ", " : "") << c.citations[k];
    }
    out << "]";
  }
  out << " (" << c.reason << ")\n";
}

void print_stats(std::ostream& out, const char* name, const GraphStats& s) {
  out << name << ": " << s.vertex_count << " vertices, " << s.edge_count
      << " edges, " << (s.connected ? "connected" : "disconnected") << ", "
      << (s.regular ? "regular" : "not regular") << " (degrees " << s.min_degree
      << ".." << s.max_degree;
  if (s.violating_vertex) out << ", first violation at " << s.violating_vertex->to_string();
  out << ")\n";
}

int run_classify(const ClassifyArgs& a) {
  const auto h = HessenbergFunction::parse(a.h);
  const auto w = Permutation::parse(a.w);
  const auto r = classify(w, h);
  if (a.json) {
    print_json(std::cout, to_json(r));
    return 0;
  }
  auto& out = std::cout;
  out << "h: " << h.to_string() << "\n";
  out << "w: " << w.to_string() << "\n";
  out << "admissible: " << (r.admissible ? "yes" : "no") << "\n";
  out << "representative: " << r.representative.admissible.to_string()
      << " (u = " << r.representative.translate.to_string() << ")\n";
  out << "h-length: " << r.h_length << "\n";
  out << "cell dimension: " << r.cell_dimension << "\n";
  print_stats(out, "interval graph", r.graph_stats);
  print_stats(out, "representative graph", r.representative_graph_stats);
  print_claim(out, "intersection_smooth", r.intersection_smooth);
  print_claim(out, "intersection_irreducible", r.intersection_irreducible);
  print_claim(out, "intersection_equals_closure", r.intersection_equals_closure);
  print_claim(out, "hess_schubert_smooth", r.hess_schubert_smooth);
  out << "fixed points: " << join(r.fixed_points) << "\n";
  out << "smooth fixed points: " << join(r.smooth_fixed_points) << "\n";
  out << "pattern witnesses:";
  if (r.pattern_witnesses.empty()) out << " none";
  for (const auto& pw : r.pattern_witnesses) {
    out << " " << pattern_name(pw.pattern) << "@(" << pw.indices[0] << ","
        << pw.indices[1] << "," << pw.indices[2] << "," << pw.indices[3] << ")";
  }
  out << "\n";
  if (r.component_lower_bound) {
    out << "component lower bound: " << join(*r.component_lower_bound) << "\n";
  }
  out << "citations:";
  for (const auto& c : r.citations()) out << " " << c;
  out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct HArgs {
  std::string h;
  bool json = false;
};

int run_enumerate(const HArgs& a) {
  const auto h = HessenbergFunction::parse(a.h);
  const auto adm = enumerate_admissible(h);
  if (a.json) {
    json j;
    j["h"] = h.values();
    j["admissible"] = json::array();
    for (const auto& p : adm) j["admissible"].push_back(p.to_string());
    print_json(std::cout, j);
  } else {
    for (const auto& p : adm) std::cout << p.to_string() << "\n";
  }
  return 0;
}

int run_betti(const HArgs& a) {
  const auto h = HessenbergFunction::parse(a.h);
  const auto b = poincare_polynomial(h);
  if (a.json) {
    print_json(std::cout, {{"h", h.values()}, {"betti", b}});
  } else {
    for (std::size_t k = 0; k < b.size(); ++k) std::cout << (k ? " " : "") << b[k];
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct GraphArgs {
  std::string h, w, format = "dot", out;
  bool json = false;
};

int run_graph(const GraphArgs& a) {
  const auto h = HessenbergFunction::parse(a.h);
  const auto g = a.w.empty() ? build_hessenberg_graph(h)
                             : interval_graph(h, Permutation::parse(a.w));
  const std::string format = a.json ? "json" : a.format;
  std::string text;
  if (format == "dot") {
    text = to_dot(g);
  } else if (format == "json") {
    text = to_json(g).dump(2) + "\n";
  } else {
    throw UsageError("unknown format '" + format + "' (dot or json)");
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + a.out);
    file << text;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct PatternArgs {
  std::string h, w;
  bool json = false;
};

int run_patterns(const PatternArgs& a) {
  const auto h = HessenbergFunction::parse(a.h);
  const auto w = Permutation::parse(a.w);
  check_rank(w, h);
  const bool admissible = is_admissible(w, h);
  json j;
  j["h"] = h.values();
  j["w"] = w.to_string();
  j["admissible"] = admissible;
  j["in_theorem_scope"] = admissible;
  j["patterns"] = json::array();
  bool avoids = true;
  for (auto p : kAllPatterns) {
    const auto m = contains_hpattern(w, h, p);
    avoids = avoids && !m.witness;
    j["patterns"].push_back(
        {{"pattern", pattern_name(p)},
         {"witness", m.witness ? json(*m.witness) : json()}});
  }
  j["avoids_all"] = avoids;
  if (a.json) {
    print_json(std::cout, j);
    return 0;
  }
  std::cout << "h: " << h.to_string() << "\nw: " << w.to_string() << "\n";
  if (!admissible) {
    std::cout << "note: w is not h-admissible; pattern results carry no regularity claim\n";
  }
  for (const auto& entry : j["patterns"]) {
    std::cout << entry["pattern"].get<std::string>() << ": ";
    if (entry["witness"].is_null()) {
      std::cout << "avoided\n";
    } else {
      const auto idx = entry["witness"];
      std::cout << "(" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3] << ")\n";
    }
  }
  std::cout << "avoids all: " << (avoids ? "yes" : "no") << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct RootArgs {
  std::string type;
  int rank = 0;
  std::string m;
  std::string w;
  bool tables = false;
  bool graph = false;
  bool json = false;
};

WeylElement parse_element(const WeylGroup& g, const std::string& text) {
  if (text == "e") return g.identity();
  if (!text.empty() && text.front() == 's') {
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != 's') throw UsageError("cannot parse element '" + text + "'");
      ++pos;
      const auto start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw UsageError("cannot parse element '" + text + "'");
      word.push_back(std::stoi(text.substr(start, pos - start)));
    }
    return g.from_word(word);
  }
  if (g.roots().type() == 'A') return g.from_permutation(Permutation::parse(text));
  throw UsageError("elements are written as reduced words, e.g. s1s2");
}

// Subsets of M that fail to be of Weyl type, listed when M is small.
std::vector<RootMask> non_weyl_subsets(const RootSystem& rs, const HessenbergSpace& hs) {
  std::vector<RootMask> out;
  const auto idx = mask_indices(hs.mask());
  if (idx.size() > 12) return out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << idx.size()); ++bits) {
    RootMask s = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (bits >> k & 1) s |= RootMask{1} << idx[k];
    }
    if (!is_closed_in(rs, s, hs.mask()) || !is_closed_in(rs, hs.mask() & ~s, hs.mask())) {
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](RootMask l, RootMask r) {
    if (std::popcount(l) != std::popcount(r)) return std::popcount(l) < std::popcount(r);
    return mask_indices(l) < mask_indices(r);
  });
  return out;
}

int run_roots(const RootArgs& a) {
  if (a.type.size() != 1) throw UsageError("--type is one of A, B, C, D, F, G");
  const auto rs = RootSystem::build(a.type[0], a.rank);
  const WeylGroup g(rs);
  const auto hs = a.m.empty() ? HessenbergSpace::validate(rs, rs.all_positive_mask())
                              : HessenbergSpace::validate(rs, parse_root_list(a.m, a.rank));
  const auto& roots = rs.positive_roots();

  json j;
  j["type"] = rs.label();
  j["weyl_order"] = g.size();
  j["positive_roots"] = roots;
  auto& mj = j["M"] = json::array();
  for (auto k : mask_indices(hs.mask())) mj.push_back(roots[k]);
  const auto to_vectors = [&](RootMask s) {
    auto arr = json::array();
    for (auto k : mask_indices(s)) arr.push_back(roots[k]);
    return arr;
  };

  const auto subsets = weyl_type_subsets(rs, hs);
  const auto non_weyl = non_weyl_subsets(rs, hs);
  std::vector<ClassBounds> bounds;
  for (auto s : subsets) bounds.push_back(z_and_w(g, hs, s));

  if (a.json) {
    if (a.tables) {
      auto& inv = j["inversion_table"] = json::array();
      for (const auto& w : g.elements()) {
        inv.push_back({{"w", table_name(g, w)},
                       {"word", g.name(w)},
                       {"N", to_vectors(g.inversion_set(w))},
                       {"N_cap_M", to_vectors(g.inversion_set(w) & hs.mask())}});
      }
      const auto classes = partition_classes(g, hs);
      auto& part = j["partition"] = json::array();
      for (std::size_t k = 0; k < subsets.size(); ++k) {
        auto members = json::array();
        for (const auto& w : classes.at(subsets[k])) members.push_back(table_name(g, w));
        part.push_back({{"S", to_vectors(subsets[k])},
                        {"class", members},
                        {"z_S", table_name(g, bounds[k].z)},
                        {"w_S", table_name(g, bounds[k].w)}});
      }
      auto& nw = j["not_weyl_type"] = json::array();
      for (auto s : non_weyl) nw.push_back(to_vectors(s));
    }
    auto& adm = j["h_admissible"] = json::array();
    for (const auto& w : h_admissible_elements(g, hs)) adm.push_back(table_name(g, w));
    if (a.graph) j["graph"] = to_json(g, arbitrary_gkm_graph(g, hs));
    if (!a.w.empty()) j["classify"] = to_json(g, classify_arbitrary(g, hs, parse_element(g, a.w)));
    print_json(std::cout, j);
    return 0;
  }

  auto& out = std::cout;
  out << rs.label() << ": |W| = " << g.size() << ", " << roots.size() << " positive roots\n";
  out << "Phi+ = " << format_root_set(rs, rs.all_positive_mask()) << "\n";
  out << "M = " << format_root_set(rs, hs.mask()) << "\n";
  if (a.tables) {
    out << "\n" << inversion_table(g, hs) << "\n" << partition_table(g, hs);
    if (!non_weyl.empty()) {
      out << "\nnot of Weyl type:";
      for (auto s : non_weyl) out << " " << format_root_set(rs, s);
      out << "\n";
    }
  }
  out << "\nH-admissible:";
  for (const auto& w : h_admissible_elements(g, hs)) out << " " << table_name(g, w);
  out << "\n";
  if (a.graph) out << "\n" << to_dot(g, arbitrary_gkm_graph(g, hs));
  if (!a.w.empty()) {
    const auto r = classify_arbitrary(g, hs, parse_element(g, a.w));
    out << "\nw: " << table_name(g, r.w) << "\n";
    out << "S = N(w) cap M: " << format_root_set(rs, r.s) << "\n";
    out << "w~: " << table_name(g, r.w_tilde) << "\n";
    out << "cell dimension: " << r.cell_dimension << "\n";
    out << "interval graph: " << r.interval_size << " vertices, "
        << (r.connected ? "connected" : "disconnected") << ", "
        << (r.regular ? "regular" : "not regular") << "\n";
    print_claim(out, "hess_schubert_smooth", r.hess_schubert_smooth);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int n_max = 5;
  double budget = 0;
  bool json = false;
  bool timing = false;
};

int run_verify(const VerifyArgs& a) {
  SweepOptions opt;
  opt.n_max = a.n_max;
  opt.budget_seconds = a.budget;
  opt.include_timing = a.timing;
  std::vector<SweepResult> results;
  if (a.suite == "all") {
    results = sweep_all(opt);
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
      throw UsageError("unknown suite '" + a.suite + "'");
    }
    results.push_back(sweep(a.suite, opt));
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  if (a.json) {
    json j = json::array();
    for (const auto& r : results) j.push_back(to_json(r, a.timing));
    print_json(std::cout, j);
  } else {
    for (const auto& r : results) {
      std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
                << r.case_count << " cases, " << r.violation_count << " violations";
      if (!r.complete) std::cout << ", budget exhausted";
      if (a.timing) std::cout << ", " << r.elapsed_seconds << " s";
      std::cout << ")\n";
      for (const auto& v : r.violations) std::cout << "  " << v.dump() << "\n";
    }
  }
  return ok ? 0 : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hessenberg Schubert varieties from GKM graph data"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_help_all_flag("--help-all");

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Smoothness and irreducibility verdicts for (h, w)");
  classify_cmd->add_option("--h", ca.h, "Hessenberg function, e.g. 3,3,4,4")->required();
  classify_cmd->add_option("--w", ca.w, "permutation in one-line notation")->required();
  classify_cmd->add_flag("--json", ca.json);

  HArgs ea;
  auto* enum_cmd = app.add_subcommand("enumerate-admissible", "List h-admissible permutations");
  enum_cmd->add_option("--h", ea.h)->required();
  enum_cmd->add_flag("--json", ea.json);

  GraphArgs ga;
  auto* graph_cmd = app.add_subcommand("graph", "GKM graph of Hess(s,h), or of Omega_w cap Hess(s,h) with --w");
  graph_cmd->add_option("--h", ga.h)->required();
  graph_cmd->add_option("--w", ga.w);
  graph_cmd->add_option("--format", ga.format)->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("--out", ga.out);
  graph_cmd->add_flag("--json", ga.json);

  HArgs ba;
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of Hess(s,h)");
  betti_cmd->add_option("--h", ba.h)->required();
  betti_cmd->add_flag("--json", ba.json);

  PatternArgs pa;
  auto* pat_cmd = app.add_subcommand("patterns", "Associated h-pattern containment");
  pat_cmd->add_option("--h", pa.h)->required();
  pat_cmd->add_option("--w", pa.w)->required();
  pat_cmd->add_flag("--json", pa.json);

  RootArgs ra;
  auto* roots_cmd = app.add_subcommand("roots", "Arbitrary-type Hessenberg spaces and Weyl-type partitions");
  roots_cmd->add_option("--type", ra.type)->required();
  roots_cmd->add_option("--rank", ra.rank)->required();
  roots_cmd->add_option("--m", ra.m, "roots of M, e.g. \"a1,a2,a1+a2\" or \"[1,0],[0,1]\"; default Phi+");
  roots_cmd->add_option("--w", ra.w, "element to classify, e.g. s1s2 (or one-line in type A)");
  roots_cmd->add_flag("--tables", ra.tables);
  roots_cmd->add_flag("--graph", ra.graph);
  roots_cmd->add_flag("--json", ra.json);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive oracle sweeps");
  verify_cmd->add_option("--suite", va.suite, "suite name or all");
  verify_cmd->add_option("--n-max", va.n_max)->check(CLI::Range(1, 6));
  verify_cmd->add_option("--budget-seconds", va.budget)->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--json", va.json);
  verify_cmd->add_flag("--timing", va.timing, "include elapsed times (not byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*classify_cmd) return run_classify(ca);
    if (*enum_cmd) return run_enumerate(ea);
    if (*graph_cmd) return run_graph(ga);
    if (*betti_cmd) return run_betti(ba);
    if (*pat_cmd) return run_patterns(pa);
    if (*roots_cmd) return run_roots(ra);
    if (*verify_cmd) return run_verify(va);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsageError;
}
