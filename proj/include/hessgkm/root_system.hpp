#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "hessgkm/classify.hpp"
#include "hessgkm/hessenberg.hpp"
#include "hessgkm/permutation.hpp"

namespace hessgkm {

/// Root in simple-root coordinates: (1,1) is alpha_1 + alpha_2.
using RootVector = std::vector<int>;

/// Bit k set <=> positive root k is in the set. Every supported system has at
/// most 64 positive roots.
using RootMask = std::uint64_t;

/// Finite crystallographic root system with Bourbaki labeling.
///
/// Types A_n (n>=1), B_n and C_n (n>=2), D_n (n>=4), F4, G2. In B_n the last
/// simple root is short, in C_n it is long, so C2 has
/// Phi+ = {a1, a2, a1+a2, 2a1+a2}. G2 has a1 short; F4 has a1, a2 long.
///
/// Positive roots are indexed with the simple roots first (index i-1 is
/// alpha_i), then by height, then lexicographically.
class RootSystem {
 public:
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;
  bool simply_laced() const { return type_ == 'A' || type_ == 'D'; }

  /// A[i][j] = <alpha_i, alpha_j^vee>, 0-indexed.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const std::vector<RootVector>& positive_roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size(); }
  std::optional<std::size_t> index_of(const RootVector& r) const;
  /// Index of roots[a] + roots[b] when it is a positive root.
  std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const {
    const auto s = sums_[a][b];
    return s < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(s));
  }
  int height(std::size_t k) const;

  /// s_i(beta) with i 1-indexed.
  RootVector reflect(const RootVector& beta, int i) const;

  /// |W| from the standard order formulas.
  std::uint64_t weyl_order() const;

  RootMask all_positive_mask() const;

 private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> roots_;
  std::map<RootVector, std::size_t> index_;
  std::vector<std::vector<int>> sums_;
};

/// "α1+α2", "2α1+α2" (UTF-8), or with `ascii`, "a1+a2".
std::string format_root(const RootVector& r, bool ascii = false);
/// Accepts "a1+a2", "2a1+a2", "α1+α2", or "[1,1]".
RootVector parse_root(std::string_view text, int rank);
/// Comma separated list of roots; brackets protect their inner commas.
std::vector<RootVector> parse_root_list(std::string_view text, int rank);
std::string format_root_set(const RootSystem& rs, RootMask mask,
                            bool ascii = false);
std::vector<std::size_t> mask_indices(RootMask mask);

struct WeylElement {
  std::size_t id = 0;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

/// Weyl group enumerated from the simple reflections. Elements are stored as
/// integer matrices on simple-root coordinates, with length, inversion set,
/// and lexicographically least reduced word cached.
class WeylGroup {
 public:
  static constexpr std::uint64_t kDefaultOrderCap = 50000;

  explicit WeylGroup(RootSystem rs, std::uint64_t order_cap = kDefaultOrderCap);

  const RootSystem& roots() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  std::vector<WeylElement> elements() const;

  WeylElement identity() const { return {0}; }
  WeylElement longest() const { return longest_; }
  int length(WeylElement w) const { return elements_[w.id].length; }
  /// N(w) = {alpha > 0 : w(alpha) < 0}.
  RootMask inversion_set(WeylElement w) const {
    return elements_[w.id].inversions;
  }
  const std::vector<int>& word(WeylElement w) const { return elements_[w.id].word; }
  /// "e", "s1", "s2s1", ... (lexicographically least reduced word).
  std::string name(WeylElement w) const;

  WeylElement right_simple(WeylElement w, int i) const {
    return {right_[static_cast<std::size_t>(i - 1)][w.id]};
  }
  WeylElement left_simple(int i, WeylElement w) const {
    return {left_[static_cast<std::size_t>(i - 1)][w.id]};
  }
  WeylElement multiply(WeylElement u, WeylElement v) const;
  WeylElement inverse(WeylElement w) const;
  WeylElement from_word(const std::vector<int>& word) const;
  /// Reflection s_beta for positive root index k.
  WeylElement reflection(std::size_t k) const { return reflections_[k]; }

  RootVector apply(WeylElement w, const RootVector& beta) const;

  /// Strong Bruhat order by descent recursion.
  bool bruhat_leq(WeylElement u, WeylElement v) const;
  /// u <=_L v  iff  l(v) = l(u) + l(v u^{-1}).
  bool left_weak_leq(WeylElement u, WeylElement v) const;
  /// [w, w0] in the strong order, by element id.
  std::vector<WeylElement> bruhat_interval(WeylElement w) const;

  /// Type A only: the permutation in one-line notation, s_i = (i, i+1).
  Permutation to_permutation(WeylElement w) const;
  WeylElement from_permutation(const Permutation& p) const;

 private:
  struct Entry {
    std::vector<int> matrix;  ///< column j is w(alpha_j), row-major r x r
    int length = 0;
    RootMask inversions = 0;
    std::vector<int> word;
  };
  struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  RootSystem rs_;
  std::vector<Entry> elements_;
  std::unordered_map<std::vector<int>, std::size_t, VectorHash> lookup_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<WeylElement> reflections_;
  WeylElement longest_;
};

/// Subset M of the positive roots, closed under subtracting positive roots
/// (alpha in M, beta > 0, alpha - beta > 0  =>  alpha - beta in M). This is
/// the root-level form of the B-stability of b + sum_{alpha in M} g_{-alpha}.
class HessenbergSpace {
 public:
  /// Throws std::invalid_argument naming the first violated pair.
  static HessenbergSpace validate(const RootSystem& rs, RootMask m);
  static HessenbergSpace validate(const RootSystem& rs,
                                  const std::vector<RootVector>& roots);
  /// M = {alpha_ij : j <= h(i)} in type A_{n-1}.
  static HessenbergSpace from_hessenberg_function(const RootSystem& rs,
                                                  const HessenbergFunction& h);

  RootMask mask() const { return m_; }
  std::size_t size() const;

 private:
  explicit HessenbergSpace(RootMask m) : m_(m) {}
  RootMask m_ = 0;
};

/// Every valid M for the system (lower order ideals of the root poset).
std::vector<HessenbergSpace> all_hessenberg_spaces(const RootSystem& rs);

/// S subset of R is R-closed when a+b in S for all a, b in S with a+b in R.
bool is_closed_in(const RootSystem& rs, RootMask s, RootMask r);

/// Subsets S of M with both S and M \ S M-closed, ordered by size then by
/// their sorted root indices.
std::vector<RootMask> weyl_type_subsets(const RootSystem& rs,
                                        const HessenbergSpace& hs);

/// W(S,H) = {w : N(w) cap M = S}, keyed by S. Elements sorted by id.
std::map<RootMask, std::vector<WeylElement>> partition_classes(
    const WeylGroup& g, const HessenbergSpace& hs);

struct ClassBounds {
  WeylElement z;  ///< minimum in left weak order
  WeylElement w;  ///< maximum, w0 z_{M \ S}
};

/// Throws std::logic_error if the characterization of z_S does not pick out
/// exactly one element or the bounds fail the weak-order check.
ClassBounds z_and_w(const WeylGroup& g, const HessenbergSpace& hs, RootMask s);

/// {w_S : S of Weyl type}, sorted by id.
std::vector<WeylElement> h_admissible_elements(const WeylGroup& g,
                                               const HessenbergSpace& hs);

struct WeylGkmEdge {
  std::size_t u = 0, v = 0;  ///< element ids, u < v
  std::size_t root = 0;      ///< alpha in M with v = u s_alpha
  std::size_t label = 0;     ///< positive root +-u(alpha)
};

struct WeylGkmGraph {
  std::vector<WeylElement> vertices;  ///< sorted by id
  std::vector<WeylGkmEdge> edges;
  std::vector<std::vector<std::size_t>> incident;  ///< by vertex position
};

/// Vertices W, edges {w, w s_alpha} for alpha in M.
WeylGkmGraph arbitrary_gkm_graph(const WeylGroup& g, const HessenbergSpace& hs);
WeylGkmGraph arbitrary_induced_graph(const WeylGroup& g,
                                     const HessenbergSpace& hs,
                                     std::vector<WeylElement> vertices);
bool is_connected(const WeylGkmGraph& graph);

/// DOT with nodes named by table_name; each edge carries root="<alpha in M>"
/// and weight="<+-w(alpha)>".
std::string to_dot(const WeylGroup& g, const WeylGkmGraph& graph);
/// {"vertices": [...], "edges": [{"u","v","root","label"}]}, roots as vectors.
nlohmann::json to_json(const WeylGroup& g, const WeylGkmGraph& graph);

struct ArbitraryReport {
  RootMask s = 0;  ///< N(w) cap M
  WeylElement w;
  WeylElement w_tilde;  ///< w_S
  int cell_dimension = 0;  ///< |M \ S|
  std::size_t interval_size = 0;
  bool regular = false;
  bool connected = false;
  std::optional<WeylElement> violating_vertex;
  bool simply_laced = false;
  Claim hess_schubert_smooth;
};

ArbitraryReport classify_arbitrary(const WeylGroup& g, const HessenbergSpace& hs,
                                   WeylElement w);

nlohmann::json to_json(const WeylGroup& g, const ArbitraryReport& r);

/// Element label for reports: one-line notation in type A, the reduced word
/// otherwise. Type A table rows add the word ("132 = s2").
std::string table_name(const WeylGroup& g, WeylElement w);

/// w | N(w) | N(w) cap M, one row per element in (length, name) order.
std::string inversion_table(const WeylGroup& g, const HessenbergSpace& hs);
/// S | W(S,H) | z_S | w_S, one row per Weyl-type S.
std::string partition_table(const WeylGroup& g, const HessenbergSpace& hs);

}  // namespace hessgkm
