#include "hessgkm/hessenberg.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace hessgkm {

HessenbergFunction HessenbergFunction::validate(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw std::invalid_argument("empty Hessenberg function");
  if (n > Permutation::kMaxRank) {
    throw std::invalid_argument("Hessenberg function rank exceeds " +
                                std::to_string(Permutation::kMaxRank));
  }
  for (int i = 1; i <= n; ++i) {
    const int hi = values[static_cast<std::size_t>(i - 1)];
    if (hi < i) {
      throw std::invalid_argument("h(" + std::to_string(i) + ")=" +
                                  std::to_string(hi) + " < " +
                                  std::to_string(i));
    }
    if (hi > n) {
      throw std::invalid_argument("h(" + std::to_string(i) + ")=" +
                                  std::to_string(hi) + " > n=" +
                                  std::to_string(n));
    }
    if (i > 1 && hi < values[static_cast<std::size_t>(i - 2)]) {
      throw std::invalid_argument("h is not nondecreasing at i=" +
                                  std::to_string(i));
    }
  }
  return HessenbergFunction(std::vector<int>(values.begin(), values.end()));
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad Hessenberg function text: '" +
                                  std::string(text) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return validate(values);
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(static_cast<std::size_t>(n), n));
}

std::vector<std::pair<int, int>> HessenbergFunction::window_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= rank(); ++i) {
    for (int j = i + 1; j <= (*this)(i); ++j) out.emplace_back(i, j);
  }
  return out;
}

bool HessenbergFunction::hess_connected() const {
  for (int i = 1; i < rank(); ++i) {
    if ((*this)(i) <= i) return false;
  }
  return true;
}

std::string HessenbergFunction::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

namespace {

// Lattice-path generator: h(i) ranges over [max(i, h(i-1)), n].
void extend_hessenberg(int n, std::vector<int>& prefix,
                       std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.push_back(HessenbergFunction::validate(prefix));
    return;
  }
  const int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    extend_hessenberg(n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HessenbergFunction> all_hessenberg_functions(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> prefix;
  extend_hessenberg(n, prefix, out);
  return out;
}

void check_rank(const Permutation& w, const HessenbergFunction& h) {
  if (w.rank() != h.rank()) {
    throw std::invalid_argument("rank mismatch: permutation " + w.to_string() +
                                " vs h=(" + h.to_string() + ")");
  }
}

int complexity_dimension(const HessenbergFunction& h) {
  int d = 0;
  for (int i = 1; i <= h.rank(); ++i) d += h(i) - i;
  return d;
}

int h_length(const Permutation& w, const HessenbergFunction& h) {
  check_rank(w, h);
  int count = 0;
  for (int i = 1; i <= w.rank(); ++i) {
    for (int j = i + 1; j <= h(i); ++j) {
      if (w(i) > w(j)) ++count;
    }
  }
  return count;
}

bool is_admissible(const Permutation& w, const HessenbergFunction& h) {
  check_rank(w, h);
  const auto winv = inverse(w);
  for (int j = 1; j <= w.rank(); ++j) {
    if (w(j) <= w.rank() - 1 && winv(w(j) + 1) > h(j)) return false;
  }
  return true;
}

std::vector<Permutation> enumerate_admissible(const HessenbergFunction& h) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(h.rank())) {
    if (is_admissible(w, h)) out.push_back(w);
  }
  return out;
}

std::vector<Permutation> representative_candidates(
    const Permutation& w, const HessenbergFunction& h) {
  check_rank(w, h);
  const auto pairs = h.window_pairs();
  std::vector<Permutation> candidates;
  for (const auto& v : bruhat_interval(w)) {
    if (!is_admissible(v, h)) continue;
    const bool same_order =
        std::all_of(pairs.begin(), pairs.end(), [&](const auto& p) {
          return (v(p.first) < v(p.second)) == (w(p.first) < w(p.second));
        });
    if (same_order) candidates.push_back(v);
  }
  return candidates;
}

Representative admissible_representative(const Permutation& w,
                                         const HessenbergFunction& h) {
  check_rank(w, h);
  if (is_admissible(w, h)) return {w, Permutation::identity(w.rank())};
  const auto candidates = representative_candidates(w, h);
  if (candidates.size() != 1) {
    throw std::logic_error("admissible representative of " + w.to_string() +
                           " for h=(" + h.to_string() + ") has " +
                           std::to_string(candidates.size()) + " candidates");
  }
  const auto& tilde = candidates.front();
  return {tilde, compose(w, inverse(tilde))};
}

std::vector<Permutation> hess_schubert_fixed_points(
    const Permutation& w, const HessenbergFunction& h) {
  const auto rep = admissible_representative(w, h);
  std::vector<Permutation> out;
  for (const auto& v : bruhat_interval(rep.admissible)) {
    out.push_back(compose(rep.translate, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool h_bruhat_leq(const Permutation& u, const Permutation& v,
                  const HessenbergFunction& h) {
  check_rank(u, h);
  check_rank(v, h);
  if (u == v) return true;
  const int target = length(v);
  const auto pairs = h.window_pairs();
  std::unordered_set<Permutation> seen{u};
  std::deque<Permutation> queue{u};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    const int lx = length(x);
    for (const auto& [i, j] : pairs) {
      if (x(i) > x(j)) continue;  // length must increase
      auto y = apply_transposition(x, i, j);
      if (y == v) return true;
      if (length(y) >= target) continue;
      if (length(y) <= lx) continue;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return false;
}

}  // namespace hessgkm
