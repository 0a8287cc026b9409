#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hessgkm {

/// Element of the symmetric group S_n in one-line notation, 1-indexed.
///
/// Values are stored inline (no allocation), so permutations are cheap to
/// copy and hash. Ranks up to kMaxRank are representable.
class Permutation {
 public:
  static constexpr int kMaxRank = 16;

  Permutation() = default;
  /// Throws std::invalid_argument unless `one_line` is a bijection of {1..n}.
  explicit Permutation(std::span<const int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(int n);

  /// Accepts "4312" (one digit per entry, n <= 9) or "10,3,1,...".
  static Permutation parse(std::string_view text);

  int rank() const { return n_; }
  /// w(i) for 1 <= i <= n. Unchecked.
  int operator()(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }

  std::vector<int> one_line() const;
  /// Digits for n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on one-line notation (rank first).
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxRank> v_{};
  std::uint8_t n_ = 0;

  friend Permutation apply_transposition(const Permutation&, int, int);
};

/// (u o v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
/// Number of inversions.
int length(const Permutation& w);
/// w(i,j): swaps the entries at positions i and j (1 <= i < j <= n).
Permutation apply_transposition(const Permutation& w, int i, int j);
/// n(n-1)...1
Permutation longest_element(int n);

/// Strong Bruhat order via sorted-prefix dominance: u[k]^ <= v[k]^ for all k.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Upper interval [w, w0], sorted lexicographically.
std::vector<Permutation> bruhat_interval(const Permutation& w);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace hessgkm

template <>
struct std::hash<hessgkm::Permutation> {
  std::size_t operator()(const hessgkm::Permutation& p) const noexcept {
    return p.hash();
  }
};
