#include <algorithm>

#include "rsd/error.hpp"
#include "rsd/estimators.hpp"
#include "rsd/kernels.hpp"
#include "rsd/scores.hpp"
#include "rsd/ternary_search.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "estimators";

void require_nonempty(const SubgroupView& q) {
  if (q.empty()) throw Error(Errc::EmptySubgroup, kModule, "optimistic estimate of an empty subgroup");
}

}  // namespace

std::string_view to_string(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::naive: return "naive";
    case EstimatorKind::brig: return "brig";
    case EstimatorKind::rawr: return "rawr";
  }
  return "unknown";
}

EstimatorKind parse_estimator(std::string_view name) {
  if (name == "naive") return EstimatorKind::naive;
  if (name == "brig") return EstimatorKind::brig;
  if (name == "rawr") return EstimatorKind::rawr;
  throw Error(Errc::InvalidConfig, kModule, "unknown estimator '" + std::string(name) + "'");
}

Estimate naive_oest(const SubgroupView& q, double a, Exec exec) {
  validate_weight(a);
  require_nonempty(q);
  const CcsObjective obj(q, a);
  const auto scan = exec == Exec::parallel ? kernels::grid_max_omp(obj) : kernels::grid_max_serial(obj);
  return {scan.value, scan.argmax, {EstimatorKind::naive, scan.evaluations, 0, 0}};
}

Estimate brig_oest(const SubgroupView& q, double a) {
  validate_weight(a);
  require_nonempty(q);
  const Population& p = q.population();
  // Items at or above the population mean form a prefix of the sorted subgroup.
  std::size_t lo = 0;
  std::size_t hi = q.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (q.target_at(mid) >= p.mean_y())
      lo = mid + 1;
    else
      hi = mid;
  }
  const CcsPoint best = ct_path_point(q, lo);
  const double covcent = CcsObjective(q, a).covcent(best.i1, best.i2);
  return {combine_controlled(covcent, 1.0, a), best, {EstimatorKind::brig, 0, 0, 0}};
}

CtOptimum optimal_ct_point(const SubgroupView& q) {
  require_nonempty(q);
  const CcsObjective obj(q, 0.0);
  UnimodalSequence path{[&](std::int64_t k) {
                          const CcsPoint g = ct_path_point(q, static_cast<std::size_t>(k));
                          return obj.covcent(g.i1, g.i2);
                        },
                        1, static_cast<std::int64_t>(q.size())};
  const auto found = ternary_search_max(path);

  // Step k -> k+1 changes the impact by (y_{k+1} - mean) / D. Move to the
  // smallest k whose next item does not raise it and whose own item does.
  const double mean = q.population().mean_y();
  auto kappa = static_cast<std::size_t>(found.index);
  while (kappa > 1 && q.target_at(kappa - 1) <= mean) --kappa;
  while (kappa < q.size() && q.target_at(kappa) > mean) ++kappa;
  return {kappa, ct_path_point(q, kappa), found.evaluations, found.rounds};
}

Estimate rawr_oest(const SubgroupView& q, double a, Exec exec) {
  validate_weight(a);
  require_nonempty(q);
  if (!q.population().balanced())
    throw Error(Errc::UnbalancedPopulation, kModule, "rawr requires equal control class counts; stratify first");

  const CtOptimum opt = optimal_ct_point(q);
  const CcsObjective obj(q, a);
  const CcsPoint g = opt.point;

  kernels::ScanResult best =
      exec == Exec::parallel ? kernels::triangle_max_omp(obj, g) : kernels::triangle_max_serial(obj, g);

  // Triangle vertices, when they fall inside the class count space.
  auto probe = [&](CcsPoint p) {
    if (p.is_zero() || p.i1 > obj.m1() || p.i2 > obj.m2()) return;
    kernels::merge_into(best, {obj.value(p.i1, p.i2), p, 1, 0});
  };
  probe(g);
  probe({g.i1, g.i1});
  probe({g.i2, g.i2});

  return {best.value, best.argmax,
          {EstimatorKind::rawr, best.evaluations, opt.evaluations, best.rounds + opt.rounds}};
}

Estimate optimistic_estimate(EstimatorKind kind, const SubgroupView& q, double a, Exec exec) {
  switch (kind) {
    case EstimatorKind::naive: return naive_oest(q, a, exec);
    case EstimatorKind::brig: return brig_oest(q, a);
    case EstimatorKind::rawr: return rawr_oest(q, a, exec);
  }
  throw Error(Errc::InvalidConfig, kModule, "unknown estimator kind");
}

}  // namespace rsd
