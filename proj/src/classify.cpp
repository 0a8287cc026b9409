#include "hessgkm/classify.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace hessgkm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

GraphStats stats_of(const GkmGraph& g, int expected_degree) {
  const auto reg = is_regular(g, expected_degree);
  GraphStats s;
  s.connected = is_connected(g);
  s.regular = reg.regular;
  s.min_degree = reg.min_degree;
  s.max_degree = reg.max_degree;
  s.violating_vertex = reg.violating_vertex;
  s.vertex_count = g.vertices().size();
  s.edge_count = g.edges().size();
  return s;
}

bool is_transposition(const Permutation& p) {
  int moved = 0;
  for (int i = 1; i <= p.rank(); ++i) {
    if (p(i) != i) ++moved;
  }
  return moved == 2;
}

// Points z' of [w~, w0] with deg_{w~,h}(z') equal to the cell dimension; the
// degree is monotone along <_h, so the whole chain w~ <=_h v <=_h z' is
// smooth.
std::vector<Permutation> degree_chain_points(const Representative& rep,
                                             const HessenbergFunction& h) {
  const int dim = complexity_dimension(h) - h_length(rep.admissible, h);
  std::vector<Permutation> out;
  for (const auto& z : bruhat_interval(rep.admissible)) {
    if (degree(h, rep.admissible, z) == dim) {
      out.push_back(compose(rep.translate, z));
    }
  }
  return out;
}

void cite_once(std::vector<std::string>& into, const std::string& tag) {
  if (std::find(into.begin(), into.end(), tag) == into.end()) into.push_back(tag);
}

}  // namespace

std::vector<Permutation> smooth_points_theorem(const Permutation& w,
                                               const HessenbergFunction& h) {
  const auto winv = inverse(w);
  std::vector<Permutation> out;
  for (const auto& z : hess_schubert_fixed_points(w, h)) {
    if (z == w || is_transposition(compose(winv, z))) out.push_back(z);
  }
  return out;
}

std::vector<Permutation> component_lower_bound(const Permutation& w,
                                               const HessenbergFunction& h) {
  const auto interval = bruhat_interval(w);
  std::unordered_set<Permutation> covered;
  for (const auto& u : interval) {
    for (const auto& v : hess_schubert_fixed_points(u, h)) {
      if (v != u) covered.insert(v);
    }
  }
  std::vector<Permutation> out;
  for (const auto& v : interval) {
    if (v == w || !covered.count(v)) out.push_back(v);
  }
  return out;
}

ClassificationReport classify(const Permutation& w, const HessenbergFunction& h,
                              const ClassifyOptions& options) {
  check_rank(w, h);
  ClassificationReport r(h, w);
  r.admissible = is_admissible(w, h);
  r.representative = admissible_representative(w, h);
  r.h_length = h_length(w, h);
  r.cell_dimension = complexity_dimension(h) - r.h_length;

  const auto graph = interval_graph(h, w);
  r.interval_size = graph.vertices().size();
  r.graph_stats = stats_of(graph, r.cell_dimension);

  const auto& tilde = r.representative.admissible;
  const int tilde_dim = complexity_dimension(h) - h_length(tilde, h);
  r.representative_graph_stats =
      tilde == w ? r.graph_stats : stats_of(interval_graph(h, tilde), tilde_dim);

  r.fixed_points = hess_schubert_fixed_points(w, h);

  // Smoothness of the intersection: regularity is an equivalence.
  r.intersection_smooth.citations = {cite::kRegularIffSmooth};
  if (r.graph_stats.regular) {
    r.intersection_smooth.value = Verdict::Yes;
    r.intersection_smooth.reason = "interval graph is regular of degree " +
                                   std::to_string(r.cell_dimension);
  } else {
    r.intersection_smooth.value = Verdict::No;
    r.intersection_smooth.reason =
        "vertex " + r.graph_stats.violating_vertex->to_string() +
        " has degree != " + std::to_string(r.cell_dimension);
  }

  // Irreducibility.
  auto& irr = r.intersection_irreducible;
  if (!r.admissible) {
    irr.value = Verdict::No;
    irr.citations.push_back(cite::kFixedPointsAdmissible);
    irr.reason = "Omega_{w,h}^T has " + std::to_string(r.fixed_points.size()) +
                 " points but [w,w0] has " + std::to_string(r.interval_size);
    if (h.hess_connected()) {
      irr.citations.push_back(cite::kConnectedNonAdmissibleReducible);
    }
  } else if (r.graph_stats.regular && r.graph_stats.connected) {
    irr.value = Verdict::Yes;
    irr.citations.push_back(cite::kRegularConnectedIrreducible);
    irr.reason = "interval graph is regular and connected";
  } else {
    irr.value = Verdict::Unknown;
    irr.reason = "admissible w with a non-regular interval graph";
  }

  auto& closure = r.intersection_equals_closure;
  if (r.graph_stats.regular && r.graph_stats.connected) {
    closure.value = Verdict::Yes;
    closure.citations = {cite::kRegularConnectedClosure};
    closure.reason = "smooth and connected intersection";
  } else {
    closure.value = Verdict::Unknown;
    closure.reason = "interval graph is not both regular and connected";
  }

  auto& hs = r.hess_schubert_smooth;
  hs.citations = {cite::kRepresentativeRegular};
  if (r.representative_graph_stats.regular) {
    hs.value = Verdict::Yes;
    hs.reason = "Gamma(Omega_{" + tilde.to_string() +
                "} cap Hess) is regular";
  } else {
    hs.value = Verdict::Unknown;
    hs.reason = "Gamma(Omega_{" + tilde.to_string() +
                "} cap Hess) is not regular; the converse does not hold";
  }

  const auto avoidance = avoids_all_associated(tilde, h);
  r.pattern_witnesses = avoidance.witnesses;

  std::set<Permutation> smooth;
  for (const auto& z : smooth_points_theorem(w, h)) smooth.insert(z);
  for (const auto& z : degree_chain_points(r.representative, h)) smooth.insert(z);
  r.smooth_fixed_points.assign(smooth.begin(), smooth.end());

  if (w.rank() <= options.component_bound_max_rank) {
    r.component_lower_bound = component_lower_bound(w, h);
  }
  return r;
}

std::vector<std::string> ClassificationReport::citations() const {
  std::vector<std::string> out;
  for (const Claim* c : {&intersection_smooth, &intersection_irreducible,
                         &intersection_equals_closure, &hess_schubert_smooth}) {
    for (const auto& tag : c->citations) cite_once(out, tag);
  }
  cite_once(out, cite::kPatternAvoidance);
  cite_once(out, cite::kReflectionSmoothPoints);
  cite_once(out, cite::kDegreeChainSmoothPoints);
  if (component_lower_bound) cite_once(out, cite::kComponentFixedPoints);
  return out;
}

namespace {

nlohmann::json perm_list(const std::vector<Permutation>& ps) {
  auto out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

nlohmann::json claim_json(const Claim& c) {
  return {{"value", to_string(c.value)},
          {"citations", c.citations},
          {"reason", c.reason}};
}

nlohmann::json stats_json(const GraphStats& s) {
  return {{"connected", s.connected},
          {"regular", s.regular},
          {"min_degree", s.min_degree},
          {"max_degree", s.max_degree},
          {"violating_vertex", s.violating_vertex
                                   ? nlohmann::json(s.violating_vertex->to_string())
                                   : nlohmann::json()},
          {"vertices", s.vertex_count},
          {"edges", s.edge_count}};
}

}  // namespace

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["n"] = r.w.rank();
  j["h"] = r.h.values();
  j["w"] = r.w.to_string();
  j["admissible"] = r.admissible;
  j["representative"] = {{"w_tilde", r.representative.admissible.to_string()},
                         {"u", r.representative.translate.to_string()}};
  j["h_length"] = r.h_length;
  j["cell_dimension"] = r.cell_dimension;
  j["interval_size"] = r.interval_size;
  j["graph_stats"] = stats_json(r.graph_stats);
  j["representative_graph_stats"] = stats_json(r.representative_graph_stats);
  j["verdicts"] = {
      {"intersection_smooth", claim_json(r.intersection_smooth)},
      {"intersection_irreducible", claim_json(r.intersection_irreducible)},
      {"intersection_equals_closure", claim_json(r.intersection_equals_closure)},
      {"hess_schubert_smooth", claim_json(r.hess_schubert_smooth)}};
  j["fixed_points"] = perm_list(r.fixed_points);
  j["smooth_fixed_points"] = perm_list(r.smooth_fixed_points);
  auto& pw = j["pattern_witnesses"] = nlohmann::json::array();
  for (const auto& w : r.pattern_witnesses) pw.push_back(to_json(w));
  j["component_lower_bound"] = r.component_lower_bound
                                   ? perm_list(*r.component_lower_bound)
                                   : nlohmann::json();
  j["citations"] = r.citations();
  return j;
}

}  // namespace hessgkm
