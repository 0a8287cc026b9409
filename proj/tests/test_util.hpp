#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hessgkm/hessenberg.hpp"
#include "hessgkm/permutation.hpp"

namespace testutil {

inline hessgkm::Permutation P(const char* s) {
  return hessgkm::Permutation::parse(s);
}

inline hessgkm::HessenbergFunction H(const char* s) {
  return hessgkm::HessenbergFunction::parse(s);
}

inline std::vector<std::string> names(const std::vector<hessgkm::Permutation>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testutil
