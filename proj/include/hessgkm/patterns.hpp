#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hessgkm/hessenberg.hpp"
#include "hessgkm/permutation.hpp"

namespace hessgkm {

/// The seven h-decorated patterns whose avoidance characterizes regularity of
/// Gamma(Omega_w cap Hess(s,h)) for admissible w.
enum class HPattern { P2143, P1324, P1243, P2134, P1423, P2314, P2413 };

inline constexpr std::array<HPattern, 7> kAllPatterns = {
    HPattern::P2143, HPattern::P1324, HPattern::P1243, HPattern::P2134,
    HPattern::P1423, HPattern::P2314, HPattern::P2413};

/// "h-2143" etc.
std::string pattern_name(HPattern p);
HPattern parse_pattern(std::string_view name);

using PatternIndices = std::array<int, 4>;

struct PatternMatch {
  std::optional<PatternIndices> witness;  ///< lexicographically first i<j<k<l
  bool in_theorem_scope = true;           ///< false when w is not admissible
};

PatternMatch contains_hpattern(const Permutation& w,
                               const HessenbergFunction& h, HPattern id);

struct PatternWitness {
  HPattern pattern;
  PatternIndices indices;
};

struct AvoidanceResult {
  bool avoids = true;
  std::vector<PatternWitness> witnesses;  ///< one per contained pattern
};

/// Throws std::invalid_argument for non-admissible w.
AvoidanceResult avoids_all_associated(const Permutation& w,
                                      const HessenbergFunction& h);

/// {"pattern": "h-2134", "indices": [i,j,k,l]}
nlohmann::json to_json(const PatternWitness& w);

}  // namespace hessgkm
