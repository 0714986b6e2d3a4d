#include <algorithm>
#include <cmath>

#include "rsd/ccs.hpp"
#include "rsd/error.hpp"
#include "rsd/scores.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "ccs";

void require_in_bounds(const SubgroupView& q, CcsPoint i) {
  if (i.i1 > q.class_count(0) || i.i2 > q.class_count(1))
    throw Error(Errc::OutOfBounds, kModule,
                "point (" + std::to_string(i.i1) + "," + std::to_string(i.i2) + ") outside (" +
                    std::to_string(q.class_count(0)) + "," + std::to_string(q.class_count(1)) + ")");
}

}  // namespace

CcsObjective::CcsObjective(const SubgroupView& q, double a)
    : beta_t_(q.population().beta_t()),
      beta_c_(q.population().beta_c()),
      a_(a),
      pop_c0_(q.population().class_count(0)),
      pop_n_(q.population().size()) {
  prefix_[0] = q.class_prefix(0);
  prefix_[1] = q.class_prefix(1);
}

double CcsObjective::repr(std::size_t i1, std::size_t i2) const noexcept {
  return representativeness_from_counts(i1, i1 + i2, pop_c0_, pop_n_);
}

double CcsObjective::value(std::size_t i1, std::size_t i2) const noexcept {
  if (i1 == 0 && i2 == 0) return kZeroPointValue;
  return combine_controlled(covcent(i1, i2), repr(i1, i2), a_);
}

std::vector<std::uint32_t> equi_count_optimum(const SubgroupView& q, CcsPoint i) {
  require_in_bounds(q, i);
  if (i.is_zero()) throw Error(Errc::ZeroPoint, kModule, "the zero point selects no items");
  std::vector<std::uint32_t> out;
  out.reserve(i.l1());
  std::size_t taken[2] = {0, 0};
  const std::size_t want[2] = {i.i1, i.i2};
  for (std::uint32_t item : q.items()) {
    const int c = q.population().cls(item);
    if (taken[c] < want[c]) {
      ++taken[c];
      out.push_back(item);
      if (out.size() == i.l1()) break;
    }
  }
  return out;
}

double covcent_ccs(const SubgroupView& q, CcsPoint i) {
  require_in_bounds(q, i);
  return CcsObjective(q, 0.0).covcent(i.i1, i.i2);
}

double repr_ccs(CcsPoint i) {
  if (i.is_zero()) throw Error(Errc::ZeroPoint, kModule, "representativeness undefined at the zero point");
  return 1.0 - std::abs(1.0 - 2.0 * static_cast<double>(i.i1) / static_cast<double>(i.l1()));
}

double f_ccs(const SubgroupView& q, CcsPoint i, double a) {
  validate_weight(a);
  require_in_bounds(q, i);
  return CcsObjective(q, a).value(i.i1, i.i2);
}

CcsPoint ct_path_point(const SubgroupView& q, std::size_t k) {
  if (k > q.size())
    throw Error(Errc::OutOfRange, kModule,
                "path index " + std::to_string(k) + " beyond subgroup size " + std::to_string(q.size()));
  const std::size_t c0 = q.class0_in_top(k);
  return {c0, k - c0};
}

}  // namespace rsd
