#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsd/dataset.hpp"

namespace rsd {

enum class Polarity { equals, not_equals };

struct Proposition {
  std::size_t index = 0;  // position in the global proposition list
  std::size_t attribute = 0;
  Polarity polarity = Polarity::equals;
  int code = 0;
  std::string label;  // "Attr:Lo" or "Attr:¬Lo"

  /// Missing codes never match, under either polarity.
  bool matches(int value) const noexcept {
    if (value == kMissingCode) return false;
    return polarity == Polarity::equals ? value == code : value != code;
  }
};

/// For every descriptive attribute with b observed codes: b equality
/// propositions, then b negations when b > 2. Attribute-major order.
std::vector<Proposition> generate_propositions(const Population& population);

/// Canonical conjunction: strictly increasing proposition indices. Empty is the root.
class Selector {
 public:
  Selector() = default;
  /// Throws InvalidConfig when indices are not strictly increasing.
  explicit Selector(std::vector<std::uint32_t> indices);

  std::span<const std::uint32_t> indices() const noexcept { return indices_; }
  std::size_t depth() const noexcept { return indices_.size(); }
  bool is_root() const noexcept { return indices_.empty(); }
  /// The child selector obtained by appending a larger index.
  Selector with(std::uint32_t index) const;

  auto operator<=>(const Selector&) const = default;
  bool operator==(const Selector&) const = default;

 private:
  std::vector<std::uint32_t> indices_;
};

/// "A:Lo, B:¬Hi"; the root renders as "⊤".
std::string describe(const Selector& selector, std::span<const Proposition> propositions);

/// A subgroup with the per-class sorted target lists and prefix sums used by
/// the class count space. Items are population indices in ascending order,
/// which is target-descending order.
class SubgroupView {
 public:
  SubgroupView(const Population& population, std::vector<std::uint32_t> items);

  const Population& population() const noexcept { return *population_; }
  std::span<const std::uint32_t> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  std::size_t class_count(int c) const noexcept { return class_targets_[c].size(); }
  /// Targets of class-c items, descending.
  std::span<const double> class_targets(int c) const noexcept { return class_targets_[c]; }
  /// prefix[j] = sum of the j largest class-c targets; prefix[0] = 0.
  std::span<const double> class_prefix(int c) const noexcept { return class_prefix_[c]; }
  /// Number of class-0 items among the k items with greatest target.
  std::size_t class0_in_top(std::size_t k) const noexcept { return class0_top_[k]; }
  /// Target of the k-th item (0-based) in descending order.
  double target_at(std::size_t k) const noexcept { return population_->y(items_[k]); }
  double sum_y() const noexcept { return class_prefix_[0].back() + class_prefix_[1].back(); }

 private:
  const Population* population_;
  std::vector<std::uint32_t> items_;
  std::vector<double> class_targets_[2];
  std::vector<double> class_prefix_[2];
  std::vector<std::uint32_t> class0_top_;
};

/// Items of `items` that satisfy `proposition`, order preserved.
std::vector<std::uint32_t> filter_items(std::span<const std::uint32_t> items, const Population& population,
                                        const Proposition& proposition);

SubgroupView extension(const Selector& selector, const Population& population,
                       std::span<const Proposition> propositions);

/// Children with a larger last index, skipping attributes already fixed by an
/// equality. Empty at max depth. Generates each canonical selector once.
std::vector<Selector> refine(const Selector& selector, std::span<const Proposition> propositions, int max_depth);

}  // namespace rsd
