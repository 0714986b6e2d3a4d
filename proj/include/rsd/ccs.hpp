#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "rsd/selection.hpp"

namespace rsd {

/// A class count pair: i1 items of control class 0, i2 of class 1.
struct CcsPoint {
  std::size_t i1 = 0;
  std::size_t i2 = 0;

  std::size_t l1() const noexcept { return i1 + i2; }
  bool is_zero() const noexcept { return i1 == 0 && i2 == 0; }
  auto operator<=>(const CcsPoint&) const = default;
};

/// Value of the transformed objective at the zero point; below every real.
inline constexpr double kZeroPointValue = -std::numeric_limits<double>::infinity();

/// Ordering key used when searching rows and columns of the class count space:
/// the objective first, the unclamped impact second. The second component keeps
/// the clamped-to-zero tail of a row strictly ordered.
struct CcsKey {
  double f = kZeroPointValue;
  double covcent = 0.0;

  friend bool operator<(const CcsKey& a, const CcsKey& b) noexcept {
    if (a.f != b.f) return a.f < b.f;
    return a.covcent < b.covcent;
  }
};

/// Constant-time evaluation of the transformed impact, representativeness and
/// controlled impact over the class count space of one subgroup. Unchecked;
/// callers keep points within [0, m1] x [0, m2].
class CcsObjective {
 public:
  CcsObjective(const SubgroupView& q, double a);

  std::size_t m1() const noexcept { return prefix_[0].size() - 1; }
  std::size_t m2() const noexcept { return prefix_[1].size() - 1; }
  double weight() const noexcept { return a_; }

  double covcent(std::size_t i1, std::size_t i2) const noexcept {
    return beta_t_ * (prefix_[0][i1] + prefix_[1][i2]) - beta_c_ * static_cast<double>(i1 + i2);
  }

  double repr(std::size_t i1, std::size_t i2) const noexcept;

  double value(std::size_t i1, std::size_t i2) const noexcept;

  CcsKey key(std::size_t i1, std::size_t i2) const noexcept {
    return {value(i1, i2), covcent(i1, i2)};
  }

 private:
  std::span<const double> prefix_[2];
  double beta_t_;
  double beta_c_;
  double a_;
  std::uint64_t pop_c0_;
  std::uint64_t pop_n_;
};

/// The i1 best class-0 items plus the i2 best class-1 items, target-descending.
std::vector<std::uint32_t> equi_count_optimum(const SubgroupView& q, CcsPoint i);

double covcent_ccs(const SubgroupView& q, CcsPoint i);
/// Balanced-control closed form 1 - |1 - 2 i1 / (i1 + i2)|.
double repr_ccs(CcsPoint i);
double f_ccs(const SubgroupView& q, CcsPoint i, double a);

/// Class counts of the k items with the greatest target.
CcsPoint ct_path_point(const SubgroupView& q, std::size_t k);

}  // namespace rsd
