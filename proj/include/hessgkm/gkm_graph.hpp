#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hessgkm/hessenberg.hpp"
#include "hessgkm/permutation.hpp"

namespace hessgkm {

using Transposition = std::pair<int, int>;

/// Undirected GKM edge {u, u(i,j)}. The directed label of u -> u(i,j) is
/// t_{u(i)} - t_{u(j)}; only the unordered value pair {a, b} is stored.
struct GkmEdge {
  std::size_t u = 0;  ///< index of the lexicographically smaller endpoint
  std::size_t v = 0;
  int i = 0, j = 0;   ///< positions, i < j
  int a = 0, b = 0;   ///< values {u(i), u(j)}, a < b

  friend bool operator==(const GkmEdge&, const GkmEdge&) = default;
};

/// Torus-fixed points of a Hessenberg-type variety with their T-curves.
/// Immutable once built; vertices are kept in lexicographic order.
class GkmGraph {
 public:
  GkmGraph(HessenbergFunction h, std::optional<Permutation> w,
           std::vector<Permutation> vertices, std::vector<GkmEdge> edges);

  const HessenbergFunction& hessenberg() const { return h_; }
  const std::optional<Permutation>& base() const { return w_; }
  int rank() const { return h_.rank(); }

  const std::vector<Permutation>& vertices() const { return vertices_; }
  const std::vector<GkmEdge>& edges() const { return edges_; }
  /// Edge indices incident to vertex `k`.
  const std::vector<std::size_t>& incident(std::size_t k) const {
    return incident_[k];
  }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  std::size_t degree(std::size_t k) const { return incident_[k].size(); }
  std::size_t other_end(std::size_t edge, std::size_t k) const;

 private:
  HessenbergFunction h_;
  std::optional<Permutation> w_;
  std::vector<Permutation> vertices_;
  std::vector<GkmEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Default ceiling on n for anything that materializes all of S_n.
inline constexpr int kDefaultVertexRankCap = 8;

/// Subgraph of Gamma(Hess(s,h)) induced on `vertices` (any order, no
/// duplicates).
GkmGraph induced_hessenberg_subgraph(const HessenbergFunction& h,
                                     std::optional<Permutation> w,
                                     std::vector<Permutation> vertices);

/// Gamma(Hess(s,h)) on all of S_n. Throws std::invalid_argument above
/// `rank_cap`.
GkmGraph build_hessenberg_graph(const HessenbergFunction& h,
                                int rank_cap = kDefaultVertexRankCap);

/// Gamma(Omega_w cap Hess(s,h)): induced on [w, w0].
GkmGraph interval_graph(const HessenbergFunction& h, const Permutation& w);

/// E_{w,h}(u) = {(i,j) window pair : u(i,j) >= w}. Requires u in [w, w0].
std::vector<Transposition> edge_set_at(const HessenbergFunction& h,
                                       const Permutation& w,
                                       const Permutation& u);

/// deg_{w,h}(u) = |E_{w,h}(u)|.
int degree(const HessenbergFunction& h, const Permutation& w,
           const Permutation& u);

struct RegularityResult {
  bool regular = true;
  std::optional<Permutation> violating_vertex;  ///< first in vertex order
  int min_degree = 0;
  int max_degree = 0;
};

/// Every vertex has degree `expected`.
RegularityResult is_regular(const GkmGraph& g, int expected);

/// deg_{w,h}(w0) == d_h - l_h(w). Only meaningful for admissible w; throws
/// std::invalid_argument otherwise.
bool regularity_via_w0(const HessenbergFunction& h, const Permutation& w);

bool is_connected(const GkmGraph& g);

/// Three-case rule of the phi_{uv} map applied to a single pair, given the
/// source edge set E_{w,h}(u) and the swapped positions (a, b). No
/// preconditions are checked.
Transposition phi_image(const std::vector<Transposition>& source_edges, int a,
                        int b, const Transposition& edge);

/// phi_{uv} : E_{w,h}(u) -> E_{w,h}(v) with v = u(a,b). Requires w admissible,
/// (a,b) in E_{w,h}(u) and u <_h v; throws std::invalid_argument otherwise.
std::map<Transposition, Transposition> phi_map(const HessenbergFunction& h,
                                               const Permutation& w,
                                               const Permutation& u, int a,
                                               int b);

/// Gamma_{w,h}: induced on the fixed points of Omega_{w,h}.
GkmGraph fixed_point_induced_graph(const HessenbergFunction& h,
                                   const Permutation& w);

/// Left translate by u = w w~^{-1} of Gamma_{w~,h}. Position pairs of edges
/// are preserved by left translation; value pairs are relabeled through u.
GkmGraph translated_unlabeled_graph(const HessenbergFunction& h,
                                    const Permutation& w);

/// Whether x -> translate o x is a bijection from the vertices of `source`
/// onto those of `target` that maps edges onto edges.
bool is_translation_isomorphism(const GkmGraph& source, const GkmGraph& target,
                                const Permutation& translate);

}  // namespace hessgkm
