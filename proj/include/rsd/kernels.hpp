#pragma once

#include <cstdint>

#include "rsd/ccs.hpp"

// Data-parallel inner loops of the estimators. Each kernel has a serial
// reference and an OpenMP variant; both return identical results because the
// merge below is a total order.
namespace rsd::kernels {

struct ScanResult {
  double value = kZeroPointValue;
  CcsPoint argmax{};
  std::uint64_t evaluations = 0;
  std::uint64_t rounds = 0;
};

/// Larger value wins; equal values keep the lexicographically smaller point.
inline void merge_into(ScanResult& acc, const ScanResult& other) noexcept {
  if (other.value > acc.value || (other.value == acc.value && other.argmax < acc.argmax)) {
    acc.value = other.value;
    acc.argmax = other.argmax;
  }
  acc.evaluations += other.evaluations;
  acc.rounds += other.rounds;
}

/// Lines below this count run serially inside the OpenMP variants.
inline constexpr std::int64_t kParallelGrain = 64;

/// Exhaustive maximum over every point of the class count space except zero.
ScanResult grid_max_serial(const CcsObjective& obj);
ScanResult grid_max_omp(const CcsObjective& obj);

/// Maximum over the triangle spanned by `gamma` and its two projections onto
/// the diagonal, clipped to the class count space. Each row (gamma above the
/// diagonal) or column (otherwise) is searched with ternary search.
ScanResult triangle_max_serial(const CcsObjective& obj, CcsPoint gamma);
ScanResult triangle_max_omp(const CcsObjective& obj, CcsPoint gamma);

/// The ternary search along one row or column of the triangle.
ScanResult triangle_line(const CcsObjective& obj, CcsPoint gamma, std::size_t line);

/// Number of lines triangle_line accepts for this gamma.
std::size_t triangle_line_count(CcsPoint gamma) noexcept;

}  // namespace rsd::kernels
