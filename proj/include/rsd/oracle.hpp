#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rsd/search.hpp"

// Exhaustive references. Slow by construction; the caps are hard errors.
namespace rsd {

inline constexpr std::size_t kMaxBruteForceItems = 20;
inline constexpr std::size_t kMaxLanguageSize = 1'000'000;

/// Maximum controlled impact over all 2^|Q| - 1 non-empty subsets of Q.
/// Throws TooLarge above kMaxBruteForceItems items.
double brute_force_oest(const SubgroupView& q, double a);

/// Scores every canonical selector up to max_depth with a non-empty
/// extension (root excluded) and returns the best k in result order.
/// Throws LanguageTooLarge above kMaxLanguageSize selectors.
std::vector<ResultEntry> brute_force_topk(const Population& population, std::span<const Proposition> propositions,
                                          double a, std::size_t k, int max_depth);

}  // namespace rsd
