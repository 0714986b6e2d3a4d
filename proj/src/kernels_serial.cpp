#include <algorithm>

#include "rsd/kernels.hpp"
#include "rsd/ternary_search.hpp"

namespace rsd::kernels {

ScanResult grid_max_serial(const CcsObjective& obj) {
  ScanResult best;
  for (std::size_t i1 = 0; i1 <= obj.m1(); ++i1) {
    for (std::size_t i2 = 0; i2 <= obj.m2(); ++i2) {
      if (i1 == 0 && i2 == 0) continue;
      merge_into(best, {obj.value(i1, i2), {i1, i2}, 1, 0});
    }
  }
  return best;
}

std::size_t triangle_line_count(CcsPoint gamma) noexcept {
  return (gamma.i1 < gamma.i2 ? gamma.i2 - gamma.i1 : gamma.i1 - gamma.i2) + 1;
}

ScanResult triangle_line(const CcsObjective& obj, CcsPoint gamma, std::size_t line) {
  ScanResult out;
  if (gamma.i1 < gamma.i2) {
    // Row j, west of the diagonal: x in [gamma1, min(j, m1)].
    const std::size_t j = gamma.i1 + line;
    const auto hi = static_cast<std::int64_t>(std::min(j, obj.m1()));
    UnimodalSequence row{[&obj, j](std::int64_t x) { return obj.key(static_cast<std::size_t>(x), j); },
                         static_cast<std::int64_t>(gamma.i1), hi};
    const auto r = ternary_search_max(row);
    out = {r.value.f, {static_cast<std::size_t>(r.index), j}, r.evaluations, r.rounds};
  } else {
    // Column i, south of the diagonal: y in [gamma2, min(i, m2)].
    const std::size_t i = gamma.i2 + line;
    const auto hi = static_cast<std::int64_t>(std::min(i, obj.m2()));
    UnimodalSequence col{[&obj, i](std::int64_t y) { return obj.key(i, static_cast<std::size_t>(y)); },
                         static_cast<std::int64_t>(gamma.i2), hi};
    const auto r = ternary_search_max(col);
    out = {r.value.f, {i, static_cast<std::size_t>(r.index)}, r.evaluations, r.rounds};
  }
  return out;
}

ScanResult triangle_max_serial(const CcsObjective& obj, CcsPoint gamma) {
  ScanResult best;
  const std::size_t lines = triangle_line_count(gamma);
  for (std::size_t line = 0; line < lines; ++line) merge_into(best, triangle_line(obj, gamma, line));
  return best;
}

}  // namespace rsd::kernels
