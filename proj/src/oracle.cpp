#include <algorithm>
#include <functional>
#include <limits>

#include "rsd/error.hpp"
#include "rsd/oracle.hpp"
#include "rsd/scores.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "oracle";

}  // namespace

double brute_force_oest(const SubgroupView& q, double a) {
  validate_weight(a);
  const std::size_t n = q.size();
  if (n == 0) throw Error(Errc::EmptySubgroup, kModule, "no non-empty subsets");
  if (n > kMaxBruteForceItems)
    throw Error(Errc::TooLarge, kModule, std::to_string(n) + " items exceed the enumeration cap");

  const Population& p = q.population();
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    SubgroupCounts c;
    for (std::size_t b = 0; b < n; ++b) {
      if (!(mask >> b & 1u)) continue;
      const std::uint32_t item = q.items()[b];
      ++c.size;
      c.sum_y += p.y(item);
      (p.cls(item) == 0 ? c.m0 : c.m1) += 1;
    }
    best = std::max(best, controlled_impact(c, p, a));
  }
  return best;
}

std::vector<ResultEntry> brute_force_topk(const Population& population, std::span<const Proposition> propositions,
                                          double a, std::size_t k, int max_depth) {
  validate_weight(a);
  if (k < 1) throw Error(Errc::InvalidConfig, kModule, "k must be at least 1");

  std::size_t language = 0;
  std::function<void(const Selector&)> count = [&](const Selector& s) {
    for (const Selector& child : refine(s, propositions, max_depth)) {
      if (++language > kMaxLanguageSize)
        throw Error(Errc::LanguageTooLarge, kModule, "more than " + std::to_string(kMaxLanguageSize) + " selectors");
      count(child);
    }
  };
  count(Selector{});

  std::vector<ResultEntry> all;
  std::function<void(const Selector&)> visit = [&](const Selector& s) {
    for (const Selector& child : refine(s, propositions, max_depth)) {
      SubgroupView view = extension(child, population, propositions);
      if (!view.empty()) all.push_back(make_result_entry(child, view, propositions, a));
      visit(child);
    }
  };
  visit(Selector{});

  std::sort(all.begin(), all.end(), result_before);
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace rsd
