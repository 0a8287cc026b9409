#include "hessgkm/root_system.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hessgkm {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int r) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(r),
                                  std::vector<int>(static_cast<std::size_t>(r), 0));
  const auto link = [&](int i, int j, int aij, int aji) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
  };
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 2, r - 1, -2, -1);  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 2, r - 1, -1, -2);  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 3, r - 1, -1, -1);
      break;
    case 'F':
      link(0, 1, -1, -1);
      link(1, 2, -2, -1);
      link(2, 3, -1, -1);
      break;
    case 'G':
      link(0, 1, -1, -3);  // alpha_1 short
      break;
    default:
      break;
  }
  return a;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

int pairing(const std::vector<std::vector<int>>& a, const RootVector& beta, int i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * a[j][static_cast<std::size_t>(i)];
  return s;
}

bool is_positive(const RootVector& v) {
  bool nonzero = false;
  for (int c : v) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative(const RootVector& v) {
  bool nonzero = false;
  for (int c : v) {
    if (c > 0) return false;
    if (c < 0) nonzero = true;
  }
  return nonzero;
}

RootVector negate(RootVector v) {
  for (auto& c : v) c = -c;
  return v;
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  const bool ok = (type == 'A' && rank >= 1) ||
                  ((type == 'B' || type == 'C') && rank >= 2) ||
                  (type == 'D' && rank >= 4) || (type == 'F' && rank == 4) ||
                  (type == 'G' && rank == 2);
  if (!ok) {
    throw std::invalid_argument("unsupported root system type " +
                                std::string(1, type) + std::to_string(rank));
  }
  if (rank > 64) throw std::invalid_argument("rank too large");

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type, rank);

  std::vector<RootVector> found;
  std::map<RootVector, bool> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < rank; ++i) {
    RootVector e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen[e] = true;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    found.push_back(beta);
    for (int i = 1; i <= rank; ++i) {
      auto next = rs.reflect(beta, i);
      if (is_positive(next) && !seen.count(next)) {
        seen[next] = true;
        queue.push_back(std::move(next));
      }
    }
  }
  const auto height_of = [](const RootVector& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
  };
  std::sort(found.begin(), found.end(), [&](const RootVector& l, const RootVector& r) {
    const int hl = height_of(l), hr = height_of(r);
    if (hl != hr) return hl < hr;
    return l > r;
  });
  if (found.size() > 64) throw std::invalid_argument("too many positive roots");
  rs.roots_ = std::move(found);
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k]] = k;

  const auto m = rs.roots_.size();
  rs.sums_.assign(m, std::vector<int>(m, -1));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      RootVector s(static_cast<std::size_t>(rank));
      for (std::size_t c = 0; c < s.size(); ++c) s[c] = rs.roots_[a][c] + rs.roots_[b][c];
      if (const auto k = rs.index_of(s)) rs.sums_[a][b] = static_cast<int>(*k);
    }
  }
  return rs;
}

std::string RootSystem::label() const {
  return std::string(1, type_) + std::to_string(rank_);
}

std::optional<std::size_t> RootSystem::index_of(const RootVector& r) const {
  const auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::height(std::size_t k) const {
  int h = 0;
  for (int c : roots_[k]) h += c;
  return h;
}

RootVector RootSystem::reflect(const RootVector& beta, int i) const {
  RootVector out = beta;
  out[static_cast<std::size_t>(i - 1)] -= pairing(cartan_, beta, i - 1);
  return out;
}

std::uint64_t RootSystem::weyl_order() const {
  switch (type_) {
    case 'A': return factorial(rank_ + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << rank_) * factorial(rank_);
    case 'D': return (std::uint64_t{1} << (rank_ - 1)) * factorial(rank_);
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

RootMask RootSystem::all_positive_mask() const {
  return roots_.size() == 64 ? ~RootMask{0}
                             : (RootMask{1} << roots_.size()) - 1;
}

std::string format_root(const RootVector& r, bool ascii) {
  const std::string alpha = ascii ? "a" : "\xCE\xB1";
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (r[i] < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const int c = std::abs(r[i]);
    if (c != 1) out += std::to_string(c);
    out += alpha + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

RootVector parse_root(std::string_view text, int rank) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const auto fail = [&]() {
    return std::invalid_argument("cannot parse root '" + std::string(text) + "'");
  };
  RootVector out(static_cast<std::size_t>(rank), 0);
  if (s.empty()) throw fail();
  if (s.front() == '[') {
    if (s.back() != ']') throw fail();
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string part;
    std::size_t k = 0;
    while (std::getline(in, part, ',')) {
      if (k >= out.size() || part.empty()) throw fail();
      try {
        std::size_t used = 0;
        out[k] = std::stoi(part, &used);
        if (used != part.size()) throw fail();
      } catch (const std::logic_error&) {
        throw fail();
      }
      ++k;
    }
    if (k != out.size()) throw fail();
    return out;
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    int coef = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coef = coef * 10 + (s[pos++] - '0');
      }
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (s.compare(pos, 2, "\xCE\xB1") == 0) {
      pos += 2;
    } else if (pos < s.size() && (s[pos] == 'a' || s[pos] == 'A')) {
      ++pos;
    } else {
      throw fail();
    }
    if (pos < s.size() && s[pos] == '_') ++pos;
    int idx = 0;
    const auto start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      idx = idx * 10 + (s[pos++] - '0');
    }
    if (pos == start || idx < 1 || idx > rank) throw fail();
    out[static_cast<std::size_t>(idx - 1)] += sign * coef;
  }
  return out;
}

std::vector<RootVector> parse_root_list(std::string_view text, int rank) {
  std::vector<RootVector> out;
  std::string current;
  int depth = 0;
  const auto flush = [&]() {
    if (current.find_first_not_of(" \t") != std::string::npos) {
      out.push_back(parse_root(current, rank));
    }
    current.clear();
  };
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return out;
}

std::vector<std::size_t> mask_indices(RootMask mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::string format_root_set(const RootSystem& rs, RootMask mask, bool ascii) {
  if (mask == 0) return ascii ? "{}" : "\xE2\x88\x85";
  std::string out = "{";
  bool first = true;
  for (auto k : mask_indices(mask)) {
    if (!first) out += ", ";
    first = false;
    out += format_root(rs.positive_roots()[k], ascii);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

std::size_t WeylGroup::VectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ull;
  }
  return h;
}

WeylGroup::WeylGroup(RootSystem rs, std::uint64_t order_cap) : rs_(std::move(rs)) {
  const auto order = rs_.weyl_order();
  if (order > order_cap) {
    throw std::invalid_argument("|W(" + rs_.label() + ")| = " +
                                std::to_string(order) + " exceeds the cap " +
                                std::to_string(order_cap));
  }
  const int r = rs_.rank();
  const auto ru = static_cast<std::size_t>(r);
  const auto& a = rs_.cartan();

  Entry id;
  id.matrix.assign(ru * ru, 0);
  for (std::size_t i = 0; i < ru; ++i) id.matrix[i * ru + i] = 1;
  elements_.push_back(id);
  lookup_.emplace(id.matrix, 0);
  right_.assign(ru, {});

  // BFS by right multiplication; column j of w s_i is w(alpha_j) - A[j][i] w(alpha_i).
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < ru; ++i) {
      std::vector<int> m = elements_[head].matrix;
      for (std::size_t j = 0; j < ru; ++j) {
        const int c = a[j][i];
        if (c == 0) continue;
        for (std::size_t row = 0; row < ru; ++row) {
          m[row * ru + j] -= c * elements_[head].matrix[row * ru + i];
        }
      }
      auto word = elements_[head].word;
      word.push_back(static_cast<int>(i + 1));
      const auto it = lookup_.find(m);
      std::size_t target;
      if (it == lookup_.end()) {
        target = elements_.size();
        Entry e;
        e.matrix = m;
        e.length = elements_[head].length + 1;
        e.word = std::move(word);
        lookup_.emplace(std::move(m), target);
        elements_.push_back(std::move(e));
      } else {
        target = it->second;
        auto& e = elements_[target];
        if (e.length == elements_[head].length + 1 && word < e.word) e.word = std::move(word);
      }
      if (right_[i].size() <= head) right_[i].resize(head + 1);
      right_[i][head] = target;
    }
  }
  if (elements_.size() != order) {
    throw std::logic_error("Weyl group enumeration produced " +
                           std::to_string(elements_.size()) + " elements, expected " +
                           std::to_string(order));
  }

  left_.assign(ru, std::vector<std::size_t>(elements_.size()));
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    auto& e = elements_[k];
    for (std::size_t i = 0; i < ru; ++i) {
      std::vector<int> m = e.matrix;
      for (std::size_t col = 0; col < ru; ++col) {
        int p = 0;
        for (std::size_t row = 0; row < ru; ++row) p += m[row * ru + col] * a[row][i];
        m[i * ru + col] -= p;
      }
      left_[i][k] = lookup_.at(m);
    }
    for (std::size_t root = 0; root < rs_.num_positive(); ++root) {
      if (is_negative(apply({k}, rs_.positive_roots()[root]))) {
        e.inversions |= RootMask{1} << root;
      }
    }
    if (static_cast<std::size_t>(std::popcount(e.inversions)) !=
        static_cast<std::size_t>(e.length)) {
      throw std::logic_error("inversion set size differs from length");
    }
    if (e.length > length(longest_)) longest_ = {k};
  }

  reflections_.assign(rs_.num_positive(), WeylElement{elements_.size()});
  std::size_t missing = rs_.num_positive();
  for (std::size_t k = 0; k < elements_.size() && missing > 0; ++k) {
    for (int i = 1; i <= r; ++i) {
      RootVector simple(ru, 0);
      simple[static_cast<std::size_t>(i - 1)] = 1;
      const auto beta = apply({k}, simple);
      const auto idx = rs_.index_of(beta);
      if (!idx || reflections_[*idx].id != elements_.size()) continue;
      reflections_[*idx] = multiply(right_simple({k}, i), inverse({k}));
      --missing;
    }
  }
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out(elements_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = {k};
  return out;
}

std::string WeylGroup::name(WeylElement w) const {
  const auto& word = elements_[w.id].word;
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i);
  return out;
}

WeylElement WeylGroup::multiply(WeylElement u, WeylElement v) const {
  for (int i : word(v)) u = right_simple(u, i);
  return u;
}

WeylElement WeylGroup::inverse(WeylElement w) const {
  const auto& wd = word(w);
  WeylElement out = identity();
  for (auto it = wd.rbegin(); it != wd.rend(); ++it) out = right_simple(out, *it);
  return out;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement out = identity();
  for (int i : word) {
    if (i < 1 || i > rs_.rank()) {
      throw std::invalid_argument("simple reflection index out of range");
    }
    out = right_simple(out, i);
  }
  return out;
}

RootVector WeylGroup::apply(WeylElement w, const RootVector& beta) const {
  const auto ru = static_cast<std::size_t>(rs_.rank());
  const auto& m = elements_[w.id].matrix;
  RootVector out(ru, 0);
  for (std::size_t row = 0; row < ru; ++row) {
    for (std::size_t col = 0; col < ru; ++col) out[row] += m[row * ru + col] * beta[col];
  }
  return out;
}

bool WeylGroup::bruhat_leq(WeylElement u, WeylElement v) const {
  while (true) {
    if (length(u) > length(v)) return false;
    if (length(v) == 0) return u == v;
    int s = 0;
    for (int i = 1; i <= rs_.rank(); ++i) {
      if (length(left_simple(i, v)) < length(v)) {
        s = i;
        break;
      }
    }
    const auto su = left_simple(s, u);
    if (length(su) < length(u)) u = su;
    v = left_simple(s, v);
  }
}

bool WeylGroup::left_weak_leq(WeylElement u, WeylElement v) const {
  return length(v) == length(u) + length(multiply(v, inverse(u)));
}

std::vector<WeylElement> WeylGroup::bruhat_interval(WeylElement w) const {
  std::vector<WeylElement> out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (bruhat_leq(w, {k})) out.push_back({k});
  }
  return out;
}

Permutation WeylGroup::to_permutation(WeylElement w) const {
  if (rs_.type() != 'A') {
    throw std::invalid_argument("permutation form exists only in type A");
  }
  const int n = rs_.rank() + 1;
  auto p = Permutation::identity(n);
  for (int i : word(w)) p = apply_transposition(p, i, i + 1);
  return p;
}

WeylElement WeylGroup::from_permutation(const Permutation& p) const {
  if (rs_.type() != 'A' || p.rank() != rs_.rank() + 1) {
    throw std::invalid_argument("permutation does not match type A" +
                                std::to_string(rs_.rank()));
  }
  std::vector<int> reversed;
  auto q = p;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < q.rank(); ++i) {
      if (q(i) > q(i + 1)) {
        q = apply_transposition(q, i, i + 1);
        reversed.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return from_word({reversed.rbegin(), reversed.rend()});
}

// ---------------------------------------------------------------------------

HessenbergSpace HessenbergSpace::validate(const RootSystem& rs, RootMask m) {
  if (m & ~rs.all_positive_mask()) {
    throw std::invalid_argument("M contains an index that is not a positive root");
  }
  const auto& roots = rs.positive_roots();
  for (auto a : mask_indices(m)) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      RootVector diff(roots[a].size());
      for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = roots[a][c] - roots[b][c];
      const auto k = rs.index_of(diff);
      if (k && !(m >> *k & 1)) {
        throw std::invalid_argument(
            "M is not closed under subtracting positive roots: " +
            format_root(roots[a], true) + " - " + format_root(roots[b], true) +
            " = " + format_root(diff, true) + " is not in M");
      }
    }
  }
  return HessenbergSpace(m);
}

HessenbergSpace HessenbergSpace::validate(const RootSystem& rs,
                                          const std::vector<RootVector>& roots) {
  RootMask m = 0;
  for (const auto& r : roots) {
    const auto k = rs.index_of(r);
    if (!k) {
      throw std::invalid_argument(format_root(r, true) + " is not a positive root of " +
                                  rs.label());
    }
    m |= RootMask{1} << *k;
  }
  return validate(rs, m);
}

HessenbergSpace HessenbergSpace::from_hessenberg_function(const RootSystem& rs,
                                                          const HessenbergFunction& h) {
  if (rs.type() != 'A' || rs.rank() != h.rank() - 1) {
    throw std::invalid_argument("Hessenberg function of rank " +
                                std::to_string(h.rank()) + " does not match " +
                                rs.label());
  }
  std::vector<RootVector> roots;
  for (const auto& [i, j] : h.window_pairs()) {
    RootVector v(static_cast<std::size_t>(rs.rank()), 0);
    for (int k = i; k < j; ++k) v[static_cast<std::size_t>(k - 1)] = 1;
    roots.push_back(std::move(v));
  }
  return validate(rs, roots);
}

std::size_t HessenbergSpace::size() const {
  return static_cast<std::size_t>(std::popcount(m_));
}

std::vector<HessenbergSpace> all_hessenberg_spaces(const RootSystem& rs) {
  const auto& roots = rs.positive_roots();
  const auto r = static_cast<std::size_t>(rs.rank());
  // below[k]: roots gamma - alpha_i that are positive.
  std::vector<RootMask> below(roots.size(), 0);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      auto v = roots[k];
      --v[i];
      if (const auto idx = rs.index_of(v)) below[k] |= RootMask{1} << *idx;
    }
  }
  std::vector<HessenbergSpace> out;
  const auto rec = [&](auto&& self, std::size_t k, RootMask m) -> void {
    if (k == roots.size()) {
      out.push_back(HessenbergSpace::validate(rs, m));
      return;
    }
    self(self, k + 1, m);
    if ((below[k] & m) == below[k]) self(self, k + 1, m | RootMask{1} << k);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const HessenbergSpace& l, const HessenbergSpace& r2) {
    return l.mask() < r2.mask();
  });
  return out;
}

bool is_closed_in(const RootSystem& rs, RootMask s, RootMask r) {
  for (auto a : mask_indices(s)) {
    for (auto b : mask_indices(s)) {
      const auto sum = rs.sum_index(a, b);
      if (sum && (r >> *sum & 1) && !(s >> *sum & 1)) return false;
    }
  }
  return true;
}

namespace {

bool subset_order(RootMask l, RootMask r) {
  const int pl = std::popcount(l), pr = std::popcount(r);
  if (pl != pr) return pl < pr;
  return mask_indices(l) < mask_indices(r);
}

}  // namespace

std::vector<RootMask> weyl_type_subsets(const RootSystem& rs, const HessenbergSpace& hs) {
  const auto members = mask_indices(hs.mask());
  const auto n = rs.num_positive();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> summands(n);
  for (auto a : members) {
    for (auto b : members) {
      if (a >= b) continue;
      const auto s = rs.sum_index(a, b);
      if (s && (hs.mask() >> *s & 1)) summands[*s].emplace_back(a, b);
    }
  }
  std::vector<RootMask> out;
  // Roots of M in index order have nondecreasing height, so the summands of
  // each root are decided before the root itself.
  const auto rec = [&](auto&& self, std::size_t pos, RootMask s) -> void {
    if (pos == members.size()) {
      out.push_back(s);
      return;
    }
    const auto g = members[pos];
    bool must_in = false, must_out = false;
    for (const auto& [a, b] : summands[g]) {
      const bool ia = s >> a & 1, ib = s >> b & 1;
      if (ia && ib) must_in = true;
      if (!ia && !ib) must_out = true;
    }
    if (must_in && must_out) return;
    if (!must_in) self(self, pos + 1, s);
    if (!must_out) self(self, pos + 1, s | RootMask{1} << g);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), subset_order);
  return out;
}

std::map<RootMask, std::vector<WeylElement>> partition_classes(const WeylGroup& g,
                                                               const HessenbergSpace& hs) {
  std::map<RootMask, std::vector<WeylElement>> out;
  for (const auto& w : g.elements()) {
    out[g.inversion_set(w) & hs.mask()].push_back(w);
  }
  return out;
}

namespace {

std::vector<WeylElement> class_of(const WeylGroup& g, const HessenbergSpace& hs,
                                  RootMask s) {
  std::vector<WeylElement> out;
  for (const auto& w : g.elements()) {
    if ((g.inversion_set(w) & hs.mask()) == s) out.push_back(w);
  }
  return out;
}

// Unique w in W(S,H) with w^{-1}(-Pi) cap Phi+ inside M.
WeylElement find_z(const WeylGroup& g, const HessenbergSpace& hs, RootMask s) {
  const auto& rs = g.roots();
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<WeylElement> hits;
  for (const auto& w : class_of(g, hs, s)) {
    const auto winv = g.inverse(w);
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      RootVector simple(r, 0);
      simple[i] = 1;
      const auto img = g.apply(winv, simple);
      if (!is_negative(img)) continue;
      const auto k = rs.index_of(negate(img));
      ok = k && (hs.mask() >> *k & 1);
    }
    if (ok) hits.push_back(w);
  }
  if (hits.size() != 1) {
    throw std::logic_error("z_S characterization picked " +
                           std::to_string(hits.size()) + " elements for S = " +
                           format_root_set(rs, s, true));
  }
  return hits.front();
}

}  // namespace

ClassBounds z_and_w(const WeylGroup& g, const HessenbergSpace& hs, RootMask s) {
  const auto& rs = g.roots();
  if ((s & ~hs.mask()) || !is_closed_in(rs, s, hs.mask()) ||
      !is_closed_in(rs, hs.mask() & ~s, hs.mask())) {
    throw std::invalid_argument(format_root_set(rs, s, true) + " is not of Weyl type");
  }
  ClassBounds b;
  b.z = find_z(g, hs, s);
  b.w = g.multiply(g.longest(), find_z(g, hs, hs.mask() & ~s));
  for (const auto& u : class_of(g, hs, s)) {
    if (!g.left_weak_leq(b.z, u) || !g.left_weak_leq(u, b.w)) {
      throw std::logic_error("class of " + format_root_set(rs, s, true) +
                             " is not the weak interval [" + g.name(b.z) + ", " +
                             g.name(b.w) + "]");
    }
  }
  return b;
}

std::vector<WeylElement> h_admissible_elements(const WeylGroup& g,
                                               const HessenbergSpace& hs) {
  std::vector<WeylElement> out;
  for (auto s : weyl_type_subsets(g.roots(), hs)) out.push_back(z_and_w(g, hs, s).w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WeylGkmGraph arbitrary_induced_graph(const WeylGroup& g, const HessenbergSpace& hs,
                                     std::vector<WeylElement> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<std::ptrdiff_t> position(g.size(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    position[vertices[k].id] = static_cast<std::ptrdiff_t>(k);
  }
  const auto& rs = g.roots();
  WeylGkmGraph out;
  out.vertices = vertices;
  out.incident.resize(vertices.size());
  for (const auto& w : vertices) {
    for (auto alpha : mask_indices(hs.mask())) {
      const auto x = g.multiply(w, g.reflection(alpha));
      if (position[x.id] < 0 || !(w < x)) continue;
      auto img = g.apply(w, rs.positive_roots()[alpha]);
      if (is_negative(img)) img = negate(img);
      WeylGkmEdge e;
      e.u = w.id;
      e.v = x.id;
      e.root = alpha;
      e.label = *rs.index_of(img);
      out.edges.push_back(e);
    }
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const WeylGkmEdge& l, const WeylGkmEdge& r) {
    return std::tie(l.u, l.v) < std::tie(r.u, r.v);
  });
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    out.incident[static_cast<std::size_t>(position[out.edges[e].u])].push_back(e);
    out.incident[static_cast<std::size_t>(position[out.edges[e].v])].push_back(e);
  }
  return out;
}

WeylGkmGraph arbitrary_gkm_graph(const WeylGroup& g, const HessenbergSpace& hs) {
  return arbitrary_induced_graph(g, hs, g.elements());
}

bool is_connected(const WeylGkmGraph& graph) {
  const auto n = graph.vertices.size();
  if (n == 0) return true;
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < n; ++k) pos[graph.vertices[k].id] = k;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto k = queue.front();
    queue.pop_front();
    for (auto e : graph.incident[k]) {
      const auto& edge = graph.edges[e];
      const auto other = pos.at(edge.u == graph.vertices[k].id ? edge.v : edge.u);
      if (!seen[other]) {
        seen[other] = true;
        ++reached;
        queue.push_back(other);
      }
    }
  }
  return reached == n;
}

std::string to_dot(const WeylGroup& g, const WeylGkmGraph& graph) {
  const auto& rs = g.roots();
  std::string out = "graph gkm {\n";
  for (const auto& v : graph.vertices) out += "  \"" + table_name(g, v) + "\";\n";
  for (const auto& e : graph.edges) {
    out += "  \"" + table_name(g, {e.u}) + "\" -- \"" + table_name(g, {e.v}) +
           "\" [root=\"" + format_root(rs.positive_roots()[e.root], true) + "\", weight=\"" +
           format_root(rs.positive_roots()[e.label], true) + "\"];\n";
  }
  return out + "}\n";
}

nlohmann::json to_json(const WeylGroup& g, const WeylGkmGraph& graph) {
  const auto& roots = g.roots().positive_roots();
  nlohmann::json j;
  j["type"] = g.roots().label();
  auto& vs = j["vertices"] = nlohmann::json::array();
  for (const auto& v : graph.vertices) vs.push_back(table_name(g, v));
  auto& es = j["edges"] = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    es.push_back({{"u", table_name(g, {e.u})},
                  {"v", table_name(g, {e.v})},
                  {"root", roots[e.root]},
                  {"label", roots[e.label]}});
  }
  return j;
}

ArbitraryReport classify_arbitrary(const WeylGroup& g, const HessenbergSpace& hs,
                                   WeylElement w) {
  ArbitraryReport r;
  r.w = w;
  r.s = g.inversion_set(w) & hs.mask();
  r.w_tilde = z_and_w(g, hs, r.s).w;
  r.cell_dimension = static_cast<int>(hs.size()) - std::popcount(r.s);
  const auto graph = arbitrary_induced_graph(g, hs, g.bruhat_interval(r.w_tilde));
  r.interval_size = graph.vertices.size();
  r.connected = is_connected(graph);
  r.regular = true;
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    if (static_cast<int>(graph.incident[k].size()) != r.cell_dimension) {
      r.regular = false;
      r.violating_vertex = graph.vertices[k];
      break;
    }
  }
  r.simply_laced = g.roots().simply_laced();
  auto& c = r.hess_schubert_smooth;
  const std::string regularity = r.regular ? "true" : "false";
  if (!r.simply_laced) {
    c.value = Verdict::Unknown;
    c.reason = "regularity=" + regularity + ", smoothness=unknown (non-simply-laced)";
  } else if (r.regular) {
    c.value = Verdict::Yes;
    c.citations = {cite::kRepresentativeRegular};
    c.reason = "Gamma(Omega_{" + table_name(g, r.w_tilde) + "} cap Hess) is regular";
  } else {
    c.value = Verdict::Unknown;
    c.citations = {cite::kRepresentativeRegular};
    c.reason = "Gamma(Omega_{" + table_name(g, r.w_tilde) +
               "} cap Hess) is not regular; the converse does not hold";
  }
  return r;
}

nlohmann::json to_json(const WeylGroup& g, const ArbitraryReport& r) {
  const auto& rs = g.roots();
  auto roots = nlohmann::json::array();
  for (auto k : mask_indices(r.s)) roots.push_back(rs.positive_roots()[k]);
  nlohmann::json j;
  j["type"] = rs.label();
  j["w"] = table_name(g, r.w);
  j["S"] = roots;
  j["w_tilde"] = table_name(g, r.w_tilde);
  j["cell_dimension"] = r.cell_dimension;
  j["interval_size"] = r.interval_size;
  j["regular"] = r.regular;
  j["connected"] = r.connected;
  j["violating_vertex"] =
      r.violating_vertex ? nlohmann::json(table_name(g, *r.violating_vertex)) : nlohmann::json();
  j["simply_laced"] = r.simply_laced;
  j["hess_schubert_smooth"] = {{"value", to_string(r.hess_schubert_smooth.value)},
                               {"citations", r.hess_schubert_smooth.citations},
                               {"reason", r.hess_schubert_smooth.reason}};
  return j;
}

// ---------------------------------------------------------------------------

std::string table_name(const WeylGroup& g, WeylElement w) {
  if (g.roots().type() == 'A') return g.to_permutation(w).to_string();
  return g.name(w);
}

namespace {

// Type A rows follow one-line notation; elsewhere (length, reversed word).
std::vector<WeylElement> table_order(const WeylGroup& g) {
  auto all = g.elements();
  if (g.roots().type() == 'A') {
    std::sort(all.begin(), all.end(), [&](WeylElement l, WeylElement r) {
      return g.to_permutation(l) < g.to_permutation(r);
    });
  } else {
    std::sort(all.begin(), all.end(), [&](WeylElement l, WeylElement r) {
      if (g.length(l) != g.length(r)) return g.length(l) < g.length(r);
      const auto& wl = g.word(l);
      const auto& wr = g.word(r);
      return std::lexicographical_compare(wl.rbegin(), wl.rend(), wr.rbegin(), wr.rend());
    });
  }
  return all;
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
  // Column widths count code points so UTF-8 cells line up.
  const auto width = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
      if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
  };
  std::vector<std::size_t> w(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], width(row[c]));
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) line += " | ";
      line += rows[r][c];
      if (c + 1 < rows[r].size()) line += std::string(w[c] - width(rows[r][c]), ' ');
    }
    out += line + "\n";
    if (r == 0) {
      std::string rule;
      for (std::size_t c = 0; c < w.size(); ++c) {
        if (c) rule += "-+-";
        rule += std::string(w[c], '-');
      }
      out += rule + "\n";
    }
  }
  return out;
}

}  // namespace

std::string inversion_table(const WeylGroup& g, const HessenbergSpace& hs) {
  const auto& rs = g.roots();
  std::vector<std::vector<std::string>> rows{{"w", "N(w)", "N(w) \xE2\x88\xA9 M"}};
  for (const auto& w : table_order(g)) {
    std::string label = table_name(g, w);
    if (rs.type() == 'A') label += " = " + g.name(w);
    rows.push_back({label, format_root_set(rs, g.inversion_set(w)),
                    format_root_set(rs, g.inversion_set(w) & hs.mask())});
  }
  return render(rows);
}

std::string partition_table(const WeylGroup& g, const HessenbergSpace& hs) {
  const auto& rs = g.roots();
  const auto classes = partition_classes(g, hs);
  const auto order = table_order(g);
  std::vector<std::vector<std::string>> rows{{"S", "W(S,H)", "z_S", "w_S"}};
  for (auto s : weyl_type_subsets(rs, hs)) {
    const auto b = z_and_w(g, hs, s);
    std::string members = "{";
    bool first = true;
    const auto& cls = classes.at(s);
    for (const auto& w : order) {
      if (!std::binary_search(cls.begin(), cls.end(), w)) continue;
      if (!first) members += ", ";
      first = false;
      members += table_name(g, w);
    }
    members += "}";
    rows.push_back({format_root_set(rs, s), members, table_name(g, b.z), table_name(g, b.w)});
  }
  return render(rows);
}

}  // namespace hessgkm
