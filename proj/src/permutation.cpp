#include "hessgkm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hessgkm {

namespace {

void check_same_rank(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("permutation rank mismatch: " +
                                std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()));
  }
}

// Above this rank the interval is grown by BFS over Bruhat covers instead of
// scanning all of S_n.
constexpr int kIntervalScanMaxRank = 8;

}  // namespace

Permutation::Permutation(std::span<const int> one_line) {
  const auto n = one_line.size();
  if (n > static_cast<std::size_t>(kMaxRank)) {
    throw std::invalid_argument("permutation rank exceeds " +
                                std::to_string(kMaxRank));
  }
  std::array<bool, kMaxRank + 1> seen{};
  for (std::size_t i = 0; i < n; ++i) {
    const int x = one_line[i];
    if (x < 1 || x > static_cast<int>(n) || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(n));
    }
    seen[static_cast<std::size_t>(x)] = true;
    v_[i] = static_cast<std::uint8_t>(x);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> one_line)
    : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> entries;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad permutation text: '" +
                                    std::string(text) + "'");
      }
      entries.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const auto token = text.substr(pos, comma - pos);
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() ||
          token.empty()) {
        throw std::invalid_argument("bad permutation text: '" +
                                    std::string(text) + "'");
      }
      entries.push_back(value);
      pos = comma + 1;
    }
  }
  if (entries.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(entries);
}

std::vector<int> Permutation::one_line() const {
  return std::vector<int>(v_.begin(), v_.begin() + n_);
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (n_ <= 9) {
      out.push_back(static_cast<char>('0' + v_[static_cast<std::size_t>(i)]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(v_[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (int i = 0; i < a.n_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (auto c = a.v_[k] <=> b.v_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Permutation::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) {
    h = h * 31 + v_[static_cast<std::size_t>(i)];
  }
  return h;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  check_same_rank(u, v);
  std::vector<int> out(static_cast<std::size_t>(u.rank()));
  for (int i = 1; i <= u.rank(); ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(out);
}

Permutation inverse(const Permutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(out);
}

int length(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.rank(); ++i) {
    for (int j = i + 1; j <= w.rank(); ++j) {
      if (w(i) > w(j)) ++count;
    }
  }
  return count;
}

Permutation apply_transposition(const Permutation& w, int i, int j) {
  if (i < 1 || j > w.rank() || i >= j) {
    throw std::invalid_argument("transposition (" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of range for n=" +
                                std::to_string(w.rank()));
  }
  Permutation out = w;
  std::swap(out.v_[static_cast<std::size_t>(i - 1)],
            out.v_[static_cast<std::size_t>(j - 1)]);
  return out;
}

Permutation longest_element(int n) {
  if (n < 1) throw std::invalid_argument("longest_element needs n >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(v);
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  check_same_rank(u, v);
  const int n = u.rank();
  // Prefix dominance u[k]^ <= v[k]^ is equivalent to: for every threshold x,
  // #{i <= k : u(i) >= x} <= #{i <= k : v(i) >= x}.
  std::array<int, Permutation::kMaxRank + 2> cu{};
  std::array<int, Permutation::kMaxRank + 2> cv{};
  for (int k = 1; k <= n; ++k) {
    for (int x = 1; x <= u(k); ++x) ++cu[static_cast<std::size_t>(x)];
    for (int x = 1; x <= v(k); ++x) ++cv[static_cast<std::size_t>(x)];
    for (int x = 1; x <= n; ++x) {
      if (cu[static_cast<std::size_t>(x)] > cv[static_cast<std::size_t>(x)]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> bruhat_interval(const Permutation& w) {
  const int n = w.rank();
  std::vector<Permutation> out;
  if (n <= kIntervalScanMaxRank) {
    for (const auto& v : all_permutations(n)) {
      if (bruhat_leq(w, v)) out.push_back(v);
    }
    return out;
  }
  // Upward BFS along covers v < v(i,j): v(i) < v(j) with no intermediate
  // value between positions i and j.
  std::unordered_set<Permutation> seen{w};
  std::deque<Permutation> queue{w};
  while (!queue.empty()) {
    const Permutation v = queue.front();
    queue.pop_front();
    out.push_back(v);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (v(i) > v(j)) continue;
        bool cover = true;
        for (int k = i + 1; k < j && cover; ++k) {
          if (v(i) < v(k) && v(k) < v(j)) cover = false;
        }
        if (!cover) continue;
        auto next = apply_transposition(v, i, j);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hessgkm
