#include <algorithm>
#include <chrono>
#include <limits>

#include "rsd/error.hpp"
#include "rsd/search.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "search";
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct QueueNode {
  Selector selector;
  double bound = 0.0;
  SubgroupCounts counts;
  std::vector<std::uint32_t> items;
};

// Heap order: larger bound first, then shallower, then lexicographically smaller.
bool lower_priority(const QueueNode& a, const QueueNode& b) noexcept {
  if (a.bound != b.bound) return a.bound < b.bound;
  if (a.selector.depth() != b.selector.depth()) return a.selector.depth() > b.selector.depth();
  return b.selector < a.selector;
}

class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {}

  double threshold() const noexcept { return entries_.size() < k_ ? kNegInf : entries_.back().scores.f; }

  void offer(ResultEntry entry) {
    if (entries_.size() == k_ && !result_before(entry, entries_.back())) return;
    auto pos = std::upper_bound(entries_.begin(), entries_.end(), entry, result_before);
    entries_.insert(pos, std::move(entry));
    if (entries_.size() > k_) entries_.pop_back();
  }

  std::vector<ResultEntry> take() && { return std::move(entries_); }

 private:
  std::size_t k_;
  std::vector<ResultEntry> entries_;
};

ResultEntry entry_from_counts(const Selector& selector, const SubgroupCounts& counts, const Population& population,
                              std::span<const Proposition> propositions, double weight) {
  ResultEntry e;
  e.selector = selector;
  e.descriptor = describe(selector, propositions);
  e.scores = score(counts, population, weight);
  e.m1 = counts.m0;
  e.m2 = counts.m1;
  e.size = counts.size;
  return e;
}

SubgroupCounts counts_of_items(const Population& p, std::span<const std::uint32_t> items) {
  SubgroupCounts c;
  c.size = items.size();
  for (std::uint32_t i : items) {
    c.sum_y += p.y(i);
    (p.cls(i) == 0 ? c.m0 : c.m1) += 1;
  }
  return c;
}

}  // namespace

void validate(const SearchConfig& config) {
  validate_weight(config.weight);
  if (!(config.alpha > 0.0 && config.alpha <= 1.0))
    throw Error(Errc::AlphaOutOfRange, kModule, "alpha must lie in (0, 1]");
  if (config.k < 1) throw Error(Errc::InvalidConfig, kModule, "k must be at least 1");
  if (config.max_depth < 0) throw Error(Errc::InvalidConfig, kModule, "max depth must be non-negative");
}

void to_json(nlohmann::json& j, const ResultEntry& e) {
  j = nlohmann::json{{"descriptor", e.descriptor}, {"coverage", e.scores.coverage},
                     {"tendency", e.scores.tendency}, {"covcent", e.scores.covcent},
                     {"repr", e.scores.repr},         {"f", e.scores.f},
                     {"m1", e.m1},                    {"m2", e.m2},
                     {"size", e.size}};
}

ResultEntry make_result_entry(const Selector& selector, const SubgroupView& view,
                              std::span<const Proposition> propositions, double weight) {
  return entry_from_counts(selector, counts_of(view), view.population(), propositions, weight);
}

bool result_before(const ResultEntry& a, const ResultEntry& b) noexcept {
  if (a.scores.f != b.scores.f) return a.scores.f > b.scores.f;
  return a.selector < b.selector;
}

SearchResult mine_topk(const Population& population, std::span<const Proposition> propositions,
                       const SearchConfig& config) {
  validate(config);
  if (config.estimator == EstimatorKind::rawr && !population.balanced())
    throw Error(Errc::UnbalancedPopulation, kModule, "rawr requires a balanced control; stratify first");

  const auto started = std::chrono::steady_clock::now();
  SearchStats stats;
  TopK top(config.k);

  std::vector<QueueNode> heap;
  {
    QueueNode root;
    root.bound = std::numeric_limits<double>::infinity();
    root.items.resize(population.size());
    for (std::uint32_t i = 0; i < population.size(); ++i) root.items[i] = i;
    root.counts = counts_of_items(population, root.items);
    heap.push_back(std::move(root));
    ++stats.nodes_generated;
  }

  while (!heap.empty()) {
    if (stats.nodes_expanded >= config.node_budget) {
      stats.budget_exhausted = true;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), lower_priority);
    QueueNode node = std::move(heap.back());
    heap.pop_back();

    if (!node.selector.is_root()) {
      if (config.alpha * node.bound <= top.threshold()) {
        ++stats.nodes_pruned;
        continue;
      }
      top.offer(entry_from_counts(node.selector, node.counts, population, propositions, config.weight));
    }
    ++stats.nodes_expanded;

    for (Selector& child : refine(node.selector, propositions, config.max_depth)) {
      ++stats.nodes_generated;
      std::vector<std::uint32_t> items =
          filter_items(node.items, population, propositions[child.indices().back()]);
      if (items.empty()) {
        ++stats.nodes_pruned;
        continue;
      }
      SubgroupView view(population, std::move(items));
      const Estimate est = optimistic_estimate(config.estimator, view, config.weight, config.exec);
      ++stats.estimator_calls;
      stats.fccs_evals += est.trace.fccs_evals;
      stats.ternary_rounds += est.trace.ternary_rounds;
      if (config.alpha * est.value <= top.threshold()) {
        ++stats.nodes_pruned;
        continue;
      }
      QueueNode next;
      next.selector = std::move(child);
      next.bound = est.value;
      next.counts = counts_of(view);
      next.items.assign(view.items().begin(), view.items().end());
      heap.push_back(std::move(next));
      std::push_heap(heap.begin(), heap.end(), lower_priority);
    }
  }

  stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return {std::move(top).take(), stats};
}

}  // namespace rsd
