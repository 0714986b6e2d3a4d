#include <algorithm>
#include <cmath>

#include "rsd/error.hpp"
#include "rsd/scores.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "scores";

void require_probability(const ProbPair& p) {
  constexpr double tol = 1e-9;
  if (!(p[0] >= 0.0) || !(p[1] >= 0.0) || std::abs(p[0] + p[1] - 1.0) > tol)
    throw Error(Errc::NotAProbabilityVector, kModule, "entries must be non-negative and sum to 1");
}

double tendency_of(const SubgroupCounts& q, const Population& p) {
  if (q.size == 0) throw Error(Errc::EmptySubgroup, kModule, "central tendency of an empty subgroup");
  const double mean_q = q.sum_y / static_cast<double>(q.size);
  return (mean_q - p.mean_y()) / (p.max_y() - p.mean_y());
}

}  // namespace

void to_json(nlohmann::json& j, const ScoreBreakdown& s) {
  j = nlohmann::json{{"coverage", s.coverage}, {"tendency", s.tendency}, {"covcent", s.covcent},
                     {"repr", s.repr},         {"f", s.f},               {"weight", s.weight}};
}

SubgroupCounts counts_of(const SubgroupView& q) {
  return {q.size(), q.sum_y(), q.class_count(0), q.class_count(1)};
}

void validate_weight(double a) {
  if (!(a >= 0.0 && a < 1.0)) throw Error(Errc::WeightOutOfRange, kModule, "weight must lie in [0, 1)");
}

double combine_controlled(double covcent, double repr, double a) noexcept {
  const double c = covcent > kImpactFloor ? covcent : 0.0;
  if (a == 0.0) return c;
  return std::pow(c, 1.0 - a) * std::pow(repr, a);
}

double coverage(const SubgroupView& q) {
  return static_cast<double>(q.size()) / static_cast<double>(q.population().size());
}

double central_tendency(const SubgroupView& q) { return tendency_of(counts_of(q), q.population()); }

double impact(const SubgroupCounts& q, const Population& p) {
  if (q.size == 0) return 0.0;
  return static_cast<double>(q.size) / static_cast<double>(p.size()) * tendency_of(q, p);
}

double impact(const SubgroupView& q) { return impact(counts_of(q), q.population()); }

double tvd(const ProbPair& p, const ProbPair& q) {
  require_probability(p);
  require_probability(q);
  return 0.5 * (std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]));
}

double representativeness(const SubgroupCounts& q, const Population& p) {
  if (q.size == 0) throw Error(Errc::EmptySubgroup, kModule, "representativeness of an empty subgroup");
  return representativeness_from_counts(q.m0, q.size, p.class_count(0), p.size());
}

double representativeness(const SubgroupView& q) { return representativeness(counts_of(q), q.population()); }

double controlled_impact(const SubgroupCounts& q, const Population& p, double a) {
  validate_weight(a);
  if (q.size == 0) return 0.0;
  return combine_controlled(impact(q, p), representativeness(q, p), a);
}

double controlled_impact(const SubgroupView& q, double a) {
  return controlled_impact(counts_of(q), q.population(), a);
}

ScoreBreakdown score(const SubgroupCounts& q, const Population& p, double a) {
  validate_weight(a);
  ScoreBreakdown s;
  s.weight = a;
  if (q.size == 0) return s;
  s.coverage = static_cast<double>(q.size) / static_cast<double>(p.size());
  s.tendency = tendency_of(q, p);
  s.covcent = s.coverage * s.tendency;
  s.repr = representativeness(q, p);
  s.f = combine_controlled(s.covcent, s.repr, a);
  return s;
}

ScoreBreakdown score(const SubgroupView& q, double a) { return score(counts_of(q), q.population(), a); }

}  // namespace rsd
