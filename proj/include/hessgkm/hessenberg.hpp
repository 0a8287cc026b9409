#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hessgkm/permutation.hpp"

namespace hessgkm {

/// Nondecreasing h : [n] -> [n] with h(i) >= i.
class HessenbergFunction {
 public:
  /// Throws std::invalid_argument naming the first violated condition.
  static HessenbergFunction validate(std::span<const int> values);
  /// Comma separated, e.g. "3,3,4,4".
  static HessenbergFunction parse(std::string_view text);
  /// (n, n, ..., n)
  static HessenbergFunction full(int n);

  int rank() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }

  /// True when (i, j), i < j, is an h-window pair, i.e. j <= h(i).
  bool in_window(int i, int j) const { return i < j && j <= (*this)(i); }

  /// All h-window pairs (i, j) in lexicographic order.
  std::vector<std::pair<int, int>> window_pairs() const;

  /// Hess(s,h) is connected iff h(i) > i for every i < n.
  bool hess_connected() const;

  std::string to_string() const;

  friend bool operator==(const HessenbergFunction&,
                         const HessenbergFunction&) = default;

 private:
  explicit HessenbergFunction(std::vector<int> values)
      : values_(std::move(values)) {}
  std::vector<int> values_;
};

/// Every Hessenberg function of rank n, lexicographic. There are Catalan(n).
std::vector<HessenbergFunction> all_hessenberg_functions(int n);

/// d_h = sum_i (h(i) - i).
int complexity_dimension(const HessenbergFunction& h);

/// Number of inversions (i,j) of w with j <= h(i).
int h_length(const Permutation& w, const HessenbergFunction& h);

/// w^{-1}(w(j)+1) <= h(j) for every j with w(j) <= n-1.
bool is_admissible(const Permutation& w, const HessenbergFunction& h);

std::vector<Permutation> enumerate_admissible(const HessenbergFunction& h);

struct Representative {
  Permutation admissible;  ///< the unique admissible w~ >= w
  Permutation translate;   ///< u = w w~^{-1}
};

/// Every v in [w, w0] that is admissible and agrees with w on the relative
/// order of all window pairs. Exactly one exists for every (w, h).
std::vector<Permutation> representative_candidates(
    const Permutation& w, const HessenbergFunction& h);

/// Searches [w, w0] for the admissible permutation that agrees with w on the
/// relative order of every window pair. Throws std::logic_error if the search
/// does not find exactly one candidate.
Representative admissible_representative(const Permutation& w,
                                         const HessenbergFunction& h);

/// u [w~, w0]: the torus-fixed points of the Hessenberg Schubert variety.
std::vector<Permutation> hess_schubert_fixed_points(
    const Permutation& w, const HessenbergFunction& h);

/// Transitive closure of u <_h u(i,j) for window pairs that increase length.
bool h_bruhat_leq(const Permutation& u, const Permutation& v,
                  const HessenbergFunction& h);

void check_rank(const Permutation& w, const HessenbergFunction& h);

}  // namespace hessgkm
