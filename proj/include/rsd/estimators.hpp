#pragma once

#include <cstdint>
#include <string_view>

#include "rsd/ccs.hpp"
#include "rsd/selection.hpp"

namespace rsd {

enum class EstimatorKind { naive, brig, rawr };

std::string_view to_string(EstimatorKind kind) noexcept;
/// Throws InvalidConfig for unknown names.
EstimatorKind parse_estimator(std::string_view name);

/// Serial reference kernels or their OpenMP counterparts. Results are identical.
enum class Exec { serial, parallel };

/// Per-call instrumentation.
struct EstimatorTrace {
  EstimatorKind kind = EstimatorKind::rawr;
  std::uint64_t fccs_evals = 0;
  std::uint64_t path_evals = 0;
  std::uint64_t ternary_rounds = 0;
};

struct Estimate {
  double value = 0.0;
  CcsPoint argmax{};
  EstimatorTrace trace;
};

/// Exact bound by scanning the whole class count space. Works for any binary
/// control, balanced or not.
Estimate naive_oest(const SubgroupView& q, double a, Exec exec = Exec::serial);

/// Tight impact bound with representativeness fixed at 1: valid, not tight.
Estimate brig_oest(const SubgroupView& q, double a);

/// Tight bound for balanced binary controls in O(n log n): ternary search for
/// the impact-optimal point on the path of top-k class counts, then ternary
/// searches over the rows (or columns) of the triangle it spans with the
/// diagonal. Throws UnbalancedPopulation otherwise.
Estimate rawr_oest(const SubgroupView& q, double a, Exec exec = Exec::serial);

Estimate optimistic_estimate(EstimatorKind kind, const SubgroupView& q, double a, Exec exec = Exec::serial);

/// The impact-optimal class count point used by rawr_oest: smallest path
/// index k >= 1 maximising the impact of the top-k items.
struct CtOptimum {
  std::size_t kappa = 0;
  CcsPoint point{};
  std::uint64_t evaluations = 0;
  std::uint64_t rounds = 0;
};
CtOptimum optimal_ct_point(const SubgroupView& q);

}  // namespace rsd
