#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsd/estimators.hpp"
#include "rsd/scores.hpp"
#include "rsd/selection.hpp"

namespace rsd {

struct SearchConfig {
  double weight = 0.5;
  std::size_t k = 5;
  double alpha = 1.0;
  int max_depth = 3;
  EstimatorKind estimator = EstimatorKind::rawr;
  std::uint64_t node_budget = 50'000'000;
  Exec exec = Exec::serial;
};

/// Throws WeightOutOfRange, AlphaOutOfRange or InvalidConfig.
void validate(const SearchConfig& config);

struct ResultEntry {
  Selector selector;
  std::string descriptor;
  ScoreBreakdown scores;
  std::size_t m1 = 0;  // control class counts in the subgroup
  std::size_t m2 = 0;
  std::size_t size = 0;
};

void to_json(nlohmann::json& j, const ResultEntry& e);

ResultEntry make_result_entry(const Selector& selector, const SubgroupView& view,
                              std::span<const Proposition> propositions, double weight);

/// Result order: f descending, then selector indices lexicographically.
bool result_before(const ResultEntry& a, const ResultEntry& b) noexcept;

struct SearchStats {
  std::uint64_t nodes_generated = 0;  // candidates created, root included
  std::uint64_t nodes_expanded = 0;   // dequeued, scored and refined
  std::uint64_t nodes_pruned = 0;     // discarded before or after queueing
  std::uint64_t estimator_calls = 0;
  std::uint64_t fccs_evals = 0;
  std::uint64_t ternary_rounds = 0;
  double wall_ms = 0.0;
  bool budget_exhausted = false;
};

struct SearchResult {
  std::vector<ResultEntry> results;
  SearchStats stats;
};

/// Best-first branch-and-bound for the top-k selectors under the controlled
/// impact. A child is pruned when its extension is empty or when
/// alpha * bound <= the current k-th best value. The root is never reported.
SearchResult mine_topk(const Population& population, std::span<const Proposition> propositions,
                       const SearchConfig& config);

}  // namespace rsd
