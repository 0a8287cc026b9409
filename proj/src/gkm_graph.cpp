#include "hessgkm/gkm_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace hessgkm {

GkmGraph::GkmGraph(HessenbergFunction h, std::optional<Permutation> w,
                   std::vector<Permutation> vertices,
                   std::vector<GkmEdge> edges)
    : h_(std::move(h)),
      w_(std::move(w)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      incident_(vertices_.size()) {
  if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
      std::adjacent_find(vertices_.begin(), vertices_.end()) !=
          vertices_.end()) {
    throw std::invalid_argument("GKM graph vertices must be sorted and unique");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.u >= vertices_.size() || edge.v >= vertices_.size() ||
        edge.u >= edge.v) {
      throw std::invalid_argument("bad GKM edge endpoints");
    }
    const auto& pu = vertices_[edge.u];
    if (apply_transposition(pu, edge.i, edge.j) != vertices_[edge.v] ||
        std::min(pu(edge.i), pu(edge.j)) != edge.a ||
        std::max(pu(edge.i), pu(edge.j)) != edge.b) {
      throw std::invalid_argument("GKM edge datum does not match endpoints");
    }
    if (!seen.emplace(edge.u, edge.v).second) {
      throw std::invalid_argument("parallel GKM edge");
    }
    incident_[edge.u].push_back(e);
    incident_[edge.v].push_back(e);
  }
}

std::optional<std::size_t> GkmGraph::index_of(const Permutation& p) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t GkmGraph::other_end(std::size_t edge, std::size_t k) const {
  const auto& e = edges_[edge];
  return e.u == k ? e.v : e.u;
}

GkmGraph induced_hessenberg_subgraph(const HessenbergFunction& h,
                                     std::optional<Permutation> w,
                                     std::vector<Permutation> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (const auto& v : vertices) check_rank(v, h);
  const auto pairs = h.window_pairs();
  std::vector<GkmEdge> edges;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const auto& x = vertices[k];
    for (const auto& [i, j] : pairs) {
      const auto y = apply_transposition(x, i, j);
      if (!(x < y)) continue;
      const auto it = std::lower_bound(vertices.begin(), vertices.end(), y);
      if (it == vertices.end() || *it != y) continue;
      GkmEdge e;
      e.u = k;
      e.v = static_cast<std::size_t>(it - vertices.begin());
      e.i = i;
      e.j = j;
      e.a = std::min(x(i), x(j));
      e.b = std::max(x(i), x(j));
      edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const GkmEdge& l, const GkmEdge& r) {
    return std::tie(l.u, l.v) < std::tie(r.u, r.v);
  });
  return GkmGraph(h, std::move(w), std::move(vertices), std::move(edges));
}

GkmGraph build_hessenberg_graph(const HessenbergFunction& h, int rank_cap) {
  if (h.rank() > rank_cap) {
    throw std::invalid_argument("n=" + std::to_string(h.rank()) +
                                " exceeds the vertex rank cap " +
                                std::to_string(rank_cap));
  }
  return induced_hessenberg_subgraph(h, std::nullopt,
                                     all_permutations(h.rank()));
}

GkmGraph interval_graph(const HessenbergFunction& h, const Permutation& w) {
  check_rank(w, h);
  return induced_hessenberg_subgraph(h, w, bruhat_interval(w));
}

std::vector<Transposition> edge_set_at(const HessenbergFunction& h,
                                       const Permutation& w,
                                       const Permutation& u) {
  check_rank(w, h);
  check_rank(u, h);
  if (!bruhat_leq(w, u)) {
    throw std::invalid_argument(u.to_string() + " is not in [" +
                                w.to_string() + ", w0]");
  }
  std::vector<Transposition> out;
  for (const auto& [i, j] : h.window_pairs()) {
    if (bruhat_leq(w, apply_transposition(u, i, j))) out.emplace_back(i, j);
  }
  return out;
}

int degree(const HessenbergFunction& h, const Permutation& w,
           const Permutation& u) {
  return static_cast<int>(edge_set_at(h, w, u).size());
}

RegularityResult is_regular(const GkmGraph& g, int expected) {
  RegularityResult result;
  if (g.vertices().empty()) return result;
  result.min_degree = static_cast<int>(g.degree(0));
  result.max_degree = result.min_degree;
  for (std::size_t k = 0; k < g.vertices().size(); ++k) {
    const int d = static_cast<int>(g.degree(k));
    result.min_degree = std::min(result.min_degree, d);
    result.max_degree = std::max(result.max_degree, d);
    if (d != expected && result.regular) {
      result.regular = false;
      result.violating_vertex = g.vertices()[k];
    }
  }
  return result;
}

bool regularity_via_w0(const HessenbergFunction& h, const Permutation& w) {
  if (!is_admissible(w, h)) {
    throw std::invalid_argument("w0 shortcut requires an h-admissible w; " +
                                w.to_string() + " is not");
  }
  const int dim = complexity_dimension(h) - h_length(w, h);
  return degree(h, w, longest_element(w.rank())) == dim;
}

bool is_connected(const GkmGraph& g) {
  const auto n = g.vertices().size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto k = queue.front();
    queue.pop_front();
    for (auto e : g.incident(k)) {
      const auto next = g.other_end(e, k);
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        queue.push_back(next);
      }
    }
  }
  return reached == n;
}

Transposition phi_image(const std::vector<Transposition>& source_edges, int a,
                        int b, const Transposition& edge) {
  const auto in_source = [&](int i, int j) {
    return std::find(source_edges.begin(), source_edges.end(),
                     Transposition{i, j}) != source_edges.end();
  };
  const auto [i, j] = edge;
  if (i == a && j > b && !in_source(b, j)) return {b, j};
  if (i < a && j == b && !in_source(i, a)) return {i, a};
  return edge;
}

std::map<Transposition, Transposition> phi_map(const HessenbergFunction& h,
                                               const Permutation& w,
                                               const Permutation& u, int a,
                                               int b) {
  if (!is_admissible(w, h)) {
    throw std::invalid_argument("phi map requires an h-admissible w");
  }
  const auto source = edge_set_at(h, w, u);
  if (std::find(source.begin(), source.end(), Transposition{a, b}) ==
      source.end()) {
    throw std::invalid_argument("(a,b) is not in E_{w,h}(u)");
  }
  const auto v = apply_transposition(u, a, b);
  if (length(v) <= length(u)) {
    throw std::invalid_argument("phi map requires u <_h u(a,b)");
  }
  std::map<Transposition, Transposition> out;
  for (const auto& edge : source) out.emplace(edge, phi_image(source, a, b, edge));
  return out;
}

GkmGraph fixed_point_induced_graph(const HessenbergFunction& h,
                                   const Permutation& w) {
  return induced_hessenberg_subgraph(h, w, hess_schubert_fixed_points(w, h));
}

GkmGraph translated_unlabeled_graph(const HessenbergFunction& h,
                                    const Permutation& w) {
  const auto rep = admissible_representative(w, h);
  const auto source = fixed_point_induced_graph(h, rep.admissible);
  std::vector<Permutation> vertices;
  for (const auto& x : source.vertices()) {
    vertices.push_back(compose(rep.translate, x));
  }
  std::sort(vertices.begin(), vertices.end());
  const auto index = [&](const Permutation& p) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), p) -
        vertices.begin());
  };
  std::vector<GkmEdge> edges;
  for (const auto& e : source.edges()) {
    const auto x = compose(rep.translate, source.vertices()[e.u]);
    const auto y = compose(rep.translate, source.vertices()[e.v]);
    GkmEdge t;
    t.u = std::min(index(x), index(y));
    t.v = std::max(index(x), index(y));
    t.i = e.i;
    t.j = e.j;
    const auto& low = vertices[t.u];
    t.a = std::min(low(e.i), low(e.j));
    t.b = std::max(low(e.i), low(e.j));
    edges.push_back(t);
  }
  std::sort(edges.begin(), edges.end(), [](const GkmEdge& l, const GkmEdge& r) {
    return std::tie(l.u, l.v) < std::tie(r.u, r.v);
  });
  return GkmGraph(h, w, std::move(vertices), std::move(edges));
}

bool is_translation_isomorphism(const GkmGraph& source, const GkmGraph& target,
                                const Permutation& translate) {
  if (source.vertices().size() != target.vertices().size() ||
      source.edges().size() != target.edges().size()) {
    return false;
  }
  std::vector<std::size_t> image(source.vertices().size());
  std::vector<bool> hit(target.vertices().size(), false);
  for (std::size_t k = 0; k < source.vertices().size(); ++k) {
    const auto idx = target.index_of(compose(translate, source.vertices()[k]));
    if (!idx || hit[*idx]) return false;
    hit[*idx] = true;
    image[k] = *idx;
  }
  std::set<std::pair<std::size_t, std::size_t>> target_edges;
  for (const auto& e : target.edges()) target_edges.emplace(e.u, e.v);
  for (const auto& e : source.edges()) {
    const auto x = image[e.u];
    const auto y = image[e.v];
    if (!target_edges.count({std::min(x, y), std::max(x, y)})) return false;
  }
  return true;
}

}  // namespace hessgkm
