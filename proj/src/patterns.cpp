#include "hessgkm/patterns.hpp"

#include <stdexcept>

namespace hessgkm {

std::string pattern_name(HPattern p) {
  switch (p) {
    case HPattern::P2143: return "h-2143";
    case HPattern::P1324: return "h-1324";
    case HPattern::P1243: return "h-1243";
    case HPattern::P2134: return "h-2134";
    case HPattern::P1423: return "h-1423";
    case HPattern::P2314: return "h-2314";
    case HPattern::P2413: return "h-2413";
  }
  throw std::logic_error("unknown pattern");
}

HPattern parse_pattern(std::string_view name) {
  if (name.starts_with("h-")) name.remove_prefix(2);
  for (auto p : kAllPatterns) {
    if (pattern_name(p).substr(2) == name) return p;
  }
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

namespace {

// Value order and window constraints of each pattern on i<j<k<l.
bool matches(HPattern id, const Permutation& w, const HessenbergFunction& h,
             int i, int j, int k, int l) {
  const int wi = w(i), wj = w(j), wk = w(k), wl = w(l);
  switch (id) {
    case HPattern::P2143:
      return wj < wi && wi < wl && wl < wk && l <= h(i);
    case HPattern::P1324:
      return wi < wk && wk < wj && wj < wl && l <= h(j) && k <= h(i);
    case HPattern::P1243:
      return wi < wj && wj < wl && wl < wk && l <= h(j) && j <= h(i) &&
             h(i) < l;
    case HPattern::P2134:
      return wj < wi && wi < wk && wk < wl && l <= h(k) && k <= h(i) &&
             h(i) < l;
    case HPattern::P1423:
      return wi < wk && wk < wl && wl < wj && l <= h(j) && k <= h(i) &&
             h(i) < l;
    case HPattern::P2314:
      return wk < wi && wi < wj && wj < wl && l <= h(j) && k <= h(i) &&
             h(i) < l;
    case HPattern::P2413:
      return wk < wi && wi < wl && wl < wj && j <= h(i) && h(i) < k &&
             k <= h(j) && h(j) < l && l <= h(k);
  }
  return false;
}

}  // namespace

PatternMatch contains_hpattern(const Permutation& w,
                               const HessenbergFunction& h, HPattern id) {
  check_rank(w, h);
  PatternMatch result;
  result.in_theorem_scope = is_admissible(w, h);
  const int n = w.rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          if (matches(id, w, h, i, j, k, l)) {
            result.witness = PatternIndices{i, j, k, l};
            return result;
          }
        }
      }
    }
  }
  return result;
}

AvoidanceResult avoids_all_associated(const Permutation& w,
                                      const HessenbergFunction& h) {
  if (!is_admissible(w, h)) {
    throw std::invalid_argument(
        "pattern criterion applies to h-admissible permutations only; " +
        w.to_string() + " is not admissible for h=(" + h.to_string() + ")");
  }
  AvoidanceResult result;
  for (auto p : kAllPatterns) {
    if (auto m = contains_hpattern(w, h, p); m.witness) {
      result.avoids = false;
      result.witnesses.push_back({p, *m.witness});
    }
  }
  return result;
}

nlohmann::json to_json(const PatternWitness& w) {
  return {{"pattern", pattern_name(w.pattern)},
          {"indices", {w.indices[0], w.indices[1], w.indices[2], w.indices[3]}}};
}

}  // namespace hessgkm
