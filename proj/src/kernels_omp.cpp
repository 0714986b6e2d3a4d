#include <cstdint>

#include "rsd/kernels.hpp"

namespace rsd::kernels {

ScanResult grid_max_omp(const CcsObjective& obj) {
  ScanResult best;
  const auto rows = static_cast<std::int64_t>(obj.m1()) + 1;
  const std::size_t m2 = obj.m2();

#pragma omp parallel if (rows >= kParallelGrain)
  {
    ScanResult local;
#pragma omp for schedule(static) nowait
    for (std::int64_t r = 0; r < rows; ++r) {
      const auto i1 = static_cast<std::size_t>(r);
      for (std::size_t i2 = (i1 == 0 ? 1 : 0); i2 <= m2; ++i2)
        merge_into(local, {obj.value(i1, i2), {i1, i2}, 1, 0});
    }
#pragma omp critical(rsd_grid_merge)
    merge_into(best, local);
  }
  return best;
}

ScanResult triangle_max_omp(const CcsObjective& obj, CcsPoint gamma) {
  ScanResult best;
  const auto lines = static_cast<std::int64_t>(triangle_line_count(gamma));

#pragma omp parallel if (lines >= kParallelGrain)
  {
    ScanResult local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t line = 0; line < lines; ++line)
      merge_into(local, triangle_line(obj, gamma, static_cast<std::size_t>(line)));
#pragma omp critical(rsd_triangle_merge)
    merge_into(best, local);
  }
  return best;
}

}  // namespace rsd::kernels
