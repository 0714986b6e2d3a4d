#include <algorithm>
#include <set>

#include "rsd/error.hpp"
#include "rsd/selection.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "selection";

std::string code_label(const AttributeInfo& info, int code) {
  if (code >= 0 && static_cast<std::size_t>(code) < info.labels.size()) return info.labels[code];
  return std::to_string(code);
}

}  // namespace

std::vector<Proposition> generate_propositions(const Population& population) {
  std::vector<Proposition> props;
  for (std::size_t a = 0; a < population.attribute_count(); ++a) {
    std::set<int> observed;
    for (int c : population.codes(a))
      if (c != kMissingCode) observed.insert(c);
    const auto& info = population.attribute(a);
    for (int code : observed) {
      props.push_back({props.size(), a, Polarity::equals, code, info.name + ":" + code_label(info, code)});
    }
    if (observed.size() > 2) {
      for (int code : observed)
        props.push_back(
            {props.size(), a, Polarity::not_equals, code, info.name + ":¬" + code_label(info, code)});
    }
  }
  return props;
}

Selector::Selector(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 1; i < indices_.size(); ++i)
    if (indices_[i - 1] >= indices_[i])
      throw Error(Errc::InvalidConfig, kModule, "selector indices must be strictly increasing");
}

Selector Selector::with(std::uint32_t index) const {
  Selector child;
  child.indices_.reserve(indices_.size() + 1);
  child.indices_ = indices_;
  child.indices_.push_back(index);
  if (child.indices_.size() > 1 && child.indices_[child.indices_.size() - 2] >= index)
    throw Error(Errc::InvalidConfig, kModule, "refinement index must exceed the last index");
  return child;
}

std::string describe(const Selector& selector, std::span<const Proposition> propositions) {
  if (selector.is_root()) return "⊤";
  std::string out;
  for (std::uint32_t idx : selector.indices()) {
    if (!out.empty()) out += ", ";
    out += propositions[idx].label;
  }
  return out;
}

SubgroupView::SubgroupView(const Population& population, std::vector<std::uint32_t> items)
    : population_(&population), items_(std::move(items)) {
  for (std::size_t k = 1; k < items_.size(); ++k)
    if (items_[k - 1] >= items_[k])
      throw Error(Errc::InvalidConfig, kModule, "subgroup items must be strictly ascending");
  if (!items_.empty() && items_.back() >= population.size())
    throw Error(Errc::OutOfBounds, kModule, "subgroup item index beyond population");

  class0_top_.resize(items_.size() + 1);
  class0_top_[0] = 0;
  for (int c = 0; c < 2; ++c) {
    class_prefix_[c].reserve(items_.size() + 1);
    class_prefix_[c].push_back(0.0);
  }
  for (std::size_t k = 0; k < items_.size(); ++k) {
    const std::uint32_t item = items_[k];
    const int c = population.cls(item);
    const double y = population.y(item);
    class_targets_[c].push_back(y);
    class_prefix_[c].push_back(class_prefix_[c].back() + y);
    class0_top_[k + 1] = class0_top_[k] + (c == 0 ? 1u : 0u);
  }
}

std::vector<std::uint32_t> filter_items(std::span<const std::uint32_t> items, const Population& population,
                                        const Proposition& proposition) {
  std::vector<std::uint32_t> out;
  const auto codes = population.codes(proposition.attribute);
  for (std::uint32_t item : items)
    if (proposition.matches(codes[item])) out.push_back(item);
  return out;
}

SubgroupView extension(const Selector& selector, const Population& population,
                       std::span<const Proposition> propositions) {
  for (std::uint32_t idx : selector.indices())
    if (idx >= propositions.size()) throw Error(Errc::OutOfBounds, kModule, "unknown proposition index");

  std::vector<std::uint32_t> items;
  items.reserve(population.size());
  for (std::uint32_t item = 0; item < population.size(); ++item) {
    bool ok = true;
    for (std::uint32_t idx : selector.indices()) {
      const auto& p = propositions[idx];
      if (!p.matches(population.code(p.attribute, item))) {
        ok = false;
        break;
      }
    }
    if (ok) items.push_back(item);
  }
  return SubgroupView(population, std::move(items));
}

std::vector<Selector> refine(const Selector& selector, std::span<const Proposition> propositions, int max_depth) {
  std::vector<Selector> children;
  if (static_cast<int>(selector.depth()) >= max_depth) return children;

  std::vector<std::size_t> fixed;
  for (std::uint32_t idx : selector.indices())
    if (propositions[idx].polarity == Polarity::equals) fixed.push_back(propositions[idx].attribute);

  const std::size_t start = selector.is_root() ? 0 : selector.indices().back() + 1;
  for (std::size_t idx = start; idx < propositions.size(); ++idx) {
    if (std::find(fixed.begin(), fixed.end(), propositions[idx].attribute) != fixed.end()) continue;
    children.push_back(selector.with(static_cast<std::uint32_t>(idx)));
  }
  return children;
}

}  // namespace rsd
