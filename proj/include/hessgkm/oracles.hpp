#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hessgkm/permutation.hpp"

namespace hessgkm {

/// Brute-force oracles. They work on plain one-line vectors and never call the
/// order, interval, or graph routines they are used to check.
namespace oracle {

using Word = std::vector<int>;  ///< one-line notation, values 1..n

int length(const Word& w);
/// Everything reachable from u by right multiplication with transpositions
/// that strictly increase length, u included. Sorted.
std::vector<Word> upset(const Word& u);
/// u <= v by the transposition-chain closure.
bool bruhat(const Word& u, const Word& v);
bool bruhat(const Permutation& u, const Permutation& v);

}  // namespace oracle

struct SweepOptions {
  int n_max = 5;
  double budget_seconds = 0;  ///< 0: no limit
  std::size_t max_records = 20;
  bool include_timing = false;
};

struct SweepResult {
  std::string suite;
  int n_max = 0;
  std::size_t h_count = 0;
  std::size_t case_count = 0;
  std::size_t violation_count = 0;
  std::vector<nlohmann::json> violations;  ///< first max_records of them
  nlohmann::json coverage = nlohmann::json::object();
  bool complete = true;  ///< false when the budget ran out
  double elapsed_seconds = 0;

  bool passed() const { return complete && violation_count == 0; }
};

/// bruhat, representative, fixed-points, connectivity, shortcut, patterns,
/// phi-injective, phi-surjective, poincare, cohomology, roots, example61.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or n_max outside 1..6.
SweepResult sweep(std::string_view suite, const SweepOptions& options = {});
/// Every suite in suite_names() order, sharing one budget.
std::vector<SweepResult> sweep_all(const SweepOptions& options = {});

nlohmann::json to_json(const SweepResult& r, bool include_timing = false);

}  // namespace hessgkm
