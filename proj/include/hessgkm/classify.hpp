#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hessgkm/gkm_graph.hpp"
#include "hessgkm/hessenberg.hpp"
#include "hessgkm/patterns.hpp"
#include "hessgkm/permutation.hpp"

namespace hessgkm {

/// "unknown" is a real answer: the engine never claims more than the graph
/// criteria certify.
enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

/// Citation tags naming the criterion that produced a claim.
namespace cite {
inline constexpr const char* kRegularIffSmooth = "regular-iff-smooth";
inline constexpr const char* kRegularConnectedIrreducible =
    "regular-connected-irreducible";
inline constexpr const char* kRegularConnectedClosure =
    "regular-connected-equals-closure";
inline constexpr const char* kFixedPointsAdmissible = "fixed-points-iff-admissible";
inline constexpr const char* kConnectedNonAdmissibleReducible =
    "connected-hess-nonadmissible-reducible";
inline constexpr const char* kRepresentativeRegular =
    "representative-regular-smooth";
inline constexpr const char* kReflectionSmoothPoints = "reflection-smooth-points";
inline constexpr const char* kDegreeChainSmoothPoints = "w0-degree-chain";
inline constexpr const char* kPatternAvoidance = "pattern-avoidance";
inline constexpr const char* kConnectivity = "connectivity";
inline constexpr const char* kComponentFixedPoints = "component-fixed-points";
}  // namespace cite

struct Claim {
  Verdict value = Verdict::Unknown;
  std::vector<std::string> citations;
  std::string reason;
};

struct GraphStats {
  bool connected = false;
  bool regular = false;
  int min_degree = 0;
  int max_degree = 0;
  std::optional<Permutation> violating_vertex;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
};

struct ClassifyOptions {
  /// component_lower_bound is quadratic in the interval size; skip it above
  /// this rank.
  int component_bound_max_rank = 6;
};

struct ClassificationReport {
  ClassificationReport(HessenbergFunction h_, Permutation w_)
      : h(std::move(h_)), w(w_) {}

  HessenbergFunction h;
  Permutation w;
  bool admissible = false;
  Representative representative;
  int h_length = 0;
  int cell_dimension = 0;  ///< d_h - l_h(w)
  std::size_t interval_size = 0;
  GraphStats graph_stats;  ///< of Gamma(Omega_w cap Hess(s,h))
  GraphStats representative_graph_stats;

  Claim intersection_smooth;
  Claim intersection_irreducible;
  Claim intersection_equals_closure;
  Claim hess_schubert_smooth;

  std::vector<Permutation> fixed_points;         ///< Omega_{w,h}^T
  std::vector<Permutation> smooth_fixed_points;  ///< certified smooth points
  /// Patterns contained in the admissible representative.
  std::vector<PatternWitness> pattern_witnesses;
  std::optional<std::vector<Permutation>> component_lower_bound;

  /// Every tag that fired, in first-fired order.
  std::vector<std::string> citations() const;
};

ClassificationReport classify(const Permutation& w, const HessenbergFunction& h,
                              const ClassifyOptions& options = {});

/// Certified subset of the irreducible-component generators C_w:
/// {v in [w,w0] : v is a fixed point of no Omega_{u,h}, u in [w,w0], u != v}
/// together with w. Never claimed complete.
std::vector<Permutation> component_lower_bound(const Permutation& w,
                                               const HessenbergFunction& h);

/// Fixed points z = w t (t a transposition) of Omega_{w,h}, plus w itself.
std::vector<Permutation> smooth_points_theorem(const Permutation& w,
                                               const HessenbergFunction& h);

nlohmann::json to_json(const ClassificationReport& report);

}  // namespace hessgkm
