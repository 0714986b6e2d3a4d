#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>

#include <json.hpp>

#include "rsd/dataset.hpp"
#include "rsd/selection.hpp"

namespace rsd {

using ProbPair = std::array<double, 2>;

struct ScoreBreakdown {
  double coverage = 0.0;
  double tendency = 0.0;
  double covcent = 0.0;  // impact = coverage * tendency
  double repr = 0.0;
  double f = 0.0;  // controlled impact
  double weight = 0.0;
};

void to_json(nlohmann::json& j, const ScoreBreakdown& s);

/// Aggregates sufficient for every score: size, target sum, class counts.
struct SubgroupCounts {
  std::size_t size = 0;
  double sum_y = 0.0;
  std::size_t m0 = 0;
  std::size_t m1 = 0;
};

SubgroupCounts counts_of(const SubgroupView& q);

/// Throws WeightOutOfRange unless a is in [0, 1).
void validate_weight(double a);

/// Impact values at or below this are treated as zero before the fractional
/// power in the controlled impact. Keeps rounding residue of a mathematically
/// zero impact from turning into a visible score.
inline constexpr double kImpactFloor = 1e-12;

/// 1 - tvd / dMax for a binary control, evaluated on integer counts so exact
/// zeros stay exact (a fractional power would magnify rounding residue).
/// 1 when the population holds a single class.
inline double representativeness_from_counts(std::uint64_t sub_c0, std::uint64_t sub_n, std::uint64_t pop_c0,
                                             std::uint64_t pop_n) noexcept {
  const std::uint64_t pop_c1 = pop_n - pop_c0;
  if (pop_c0 == 0 || pop_c1 == 0) return 1.0;
  const std::uint64_t lhs = pop_c0 * sub_n;
  const std::uint64_t rhs = sub_c0 * pop_n;
  const std::uint64_t diff = lhs > rhs ? lhs - rhs : rhs - lhs;
  const std::uint64_t scale = sub_n * std::max(pop_c0, pop_c1);
  return static_cast<double>(scale - diff) / static_cast<double>(scale);
}

/// max(0, covcent)^(1-a) * repr^a with the floor above applied.
double combine_controlled(double covcent, double repr, double a) noexcept;

double coverage(const SubgroupView& q);
double central_tendency(const SubgroupView& q);  // EmptySubgroup
double impact(const SubgroupView& q);            // 0 for empty
double tvd(const ProbPair& p, const ProbPair& q);  // NotAProbabilityVector
double representativeness(const SubgroupView& q);  // EmptySubgroup
double controlled_impact(const SubgroupView& q, double a);

double impact(const SubgroupCounts& q, const Population& p);
double representativeness(const SubgroupCounts& q, const Population& p);
double controlled_impact(const SubgroupCounts& q, const Population& p, double a);

ScoreBreakdown score(const SubgroupView& q, double a);
ScoreBreakdown score(const SubgroupCounts& q, const Population& p, double a);

}  // namespace rsd
