#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "rsd/dataset.hpp"
#include "rsd/error.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "dataset";

std::string cell_text(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell)) {
    std::ostringstream os;
    os << *d;
    return os.str();
  }
  return {};
}

bool is_missing(const Cell& cell) { return std::holds_alternative<Missing>(cell); }

}  // namespace

std::string_view to_string(AttributeKind kind) noexcept {
  switch (kind) {
    case AttributeKind::numeric: return "numeric";
    case AttributeKind::categorical: return "categorical";
    case AttributeKind::target: return "target";
    case AttributeKind::control: return "control";
    case AttributeKind::ignore: return "ignore";
  }
  return "unknown";
}

std::vector<std::string> default_bin_labels(int bins) {
  switch (bins) {
    case 2: return {"Lo", "Hi"};
    case 3: return {"Lo", "Mid", "Hi"};
    case 4: return {"V.Lo", "Lo", "Hi", "V.Hi"};
    case 5: return {"V.Lo", "Lo", "Mid", "Hi", "V.Hi"};
    default: break;
  }
  std::vector<std::string> labels;
  for (int b = 0; b < bins; ++b) labels.push_back("Q" + std::to_string(b + 1));
  return labels;
}

AttributeSpec AttributeSpec::numeric(std::string name, int bins) {
  return {std::move(name), AttributeKind::numeric, bins, {}};
}
AttributeSpec AttributeSpec::categorical(std::string name) {
  return {std::move(name), AttributeKind::categorical, 4, {}};
}
AttributeSpec AttributeSpec::target(std::string name) {
  return {std::move(name), AttributeKind::target, 4, {}};
}
AttributeSpec AttributeSpec::control(std::string name) {
  return {std::move(name), AttributeKind::control, 4, {}};
}

void validate_specs(std::span<const AttributeSpec> specs) {
  int targets = 0;
  int controls = 0;
  std::set<std::string> names;
  for (const auto& s : specs) {
    if (!names.insert(s.name).second) throw Error(Errc::InvalidSpec, kModule, "duplicate attribute '" + s.name + "'");
    targets += s.kind == AttributeKind::target;
    controls += s.kind == AttributeKind::control;
    if (s.kind == AttributeKind::numeric) {
      if (s.bins < 2) throw Error(Errc::InvalidSpec, kModule, "'" + s.name + "' needs at least 2 bins");
      if (!s.bin_labels.empty() && static_cast<int>(s.bin_labels.size()) != s.bins)
        throw Error(Errc::InvalidSpec, kModule, "'" + s.name + "' bin label count differs from bins");
    }
  }
  if (targets != 1) throw Error(Errc::InvalidSpec, kModule, "exactly one target attribute required");
  if (controls != 1) throw Error(Errc::InvalidSpec, kModule, "exactly one control attribute required");
}

DiscreteTable discretize(const RawTable& raw, std::span<const AttributeSpec> specs) {
  validate_specs(specs);
  if (raw.rows.empty()) throw Error(Errc::EmptyTable, kModule, "no data rows");

  DiscreteTable out;
  std::size_t target_col = 0;
  std::size_t control_col = 0;
  for (const auto& s : specs) {
    if (s.kind == AttributeKind::target) {
      target_col = raw.column_index(s.name);
      out.target_name = s.name;
    } else if (s.kind == AttributeKind::control) {
      control_col = raw.column_index(s.name);
      out.control_name = s.name;
    }
  }

  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < raw.rows.size(); ++r) {
    const auto& row = raw.rows[r];
    if (!std::holds_alternative<double>(row[target_col]) || is_missing(row[control_col])) continue;
    kept.push_back(r);
  }
  if (kept.empty()) throw Error(Errc::EmptyTable, kModule, "every row lacks the target or control value");

  std::map<std::string, int> control_codes;
  for (std::size_t r : kept) {
    const auto& row = raw.rows[r];
    out.target.push_back(std::get<double>(row[target_col]));
    std::string label = cell_text(row[control_col]);
    auto [it, inserted] = control_codes.emplace(label, static_cast<int>(out.control_labels.size()));
    if (inserted) out.control_labels.push_back(label);
    out.control.push_back(it->second);
    out.row_ids.push_back(r);
  }

  for (const auto& spec : specs) {
    if (spec.kind != AttributeKind::numeric && spec.kind != AttributeKind::categorical) continue;
    const std::size_t col = raw.column_index(spec.name);
    DiscreteAttribute attr;
    attr.name = spec.name;
    attr.kind = spec.kind;
    attr.codes.assign(kept.size(), kMissingCode);

    if (spec.kind == AttributeKind::numeric) {
      std::vector<double> values;
      for (std::size_t r : kept)
        if (const auto* v = std::get_if<double>(&raw.rows[r][col])) values.push_back(*v);
      std::sort(values.begin(), values.end());
      std::set<double> uniq(values.begin(), values.end());
      if (static_cast<int>(uniq.size()) < spec.bins)
        throw Error(Errc::TooFewDistinctValues, kModule,
                    "'" + spec.name + "' has " + std::to_string(uniq.size()) + " distinct values, needs " +
                        std::to_string(spec.bins));
      // Cut b is the lower empirical quantile at b/bins; values equal to a cut go below it.
      const std::size_t n = values.size();
      for (int b = 1; b < spec.bins; ++b) {
        const std::size_t rank = (static_cast<std::size_t>(b) * n + spec.bins - 1) / spec.bins;
        attr.cut_points.push_back(values[rank - 1]);
      }
      attr.labels = spec.bin_labels.empty() ? default_bin_labels(spec.bins) : spec.bin_labels;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (const auto* v = std::get_if<double>(&raw.rows[kept[k]][col])) {
          auto it = std::lower_bound(attr.cut_points.begin(), attr.cut_points.end(), *v);
          attr.codes[k] = static_cast<int>(it - attr.cut_points.begin());
        }
      }
    } else {
      std::map<std::string, int> codes;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        const Cell& cell = raw.rows[kept[k]][col];
        if (is_missing(cell)) continue;
        std::string label = cell_text(cell);
        auto [it, inserted] = codes.emplace(label, static_cast<int>(attr.labels.size()));
        if (inserted) attr.labels.push_back(label);
        attr.codes[k] = it->second;
      }
    }
    out.attributes.push_back(std::move(attr));
  }
  return out;
}

DiscreteTable stratify(const DiscreteTable& table, std::uint64_t seed) {
  std::vector<std::size_t> counts(table.control_labels.size(), 0);
  for (int c : table.control) ++counts.at(static_cast<std::size_t>(c));
  const auto observed = std::count_if(counts.begin(), counts.end(), [](std::size_t n) { return n > 0; });
  if (table.control_labels.size() != 2)
    throw Error(Errc::NotBinaryControl, kModule,
                "control '" + table.control_name + "' has " + std::to_string(observed) + " classes");
  if (observed < 2)
    throw Error(Errc::EmptyClass, kModule, "control '" + table.control_name + "' has an empty class");
  if (counts[0] == counts[1]) return table;

  const int majority = counts[0] > counts[1] ? 0 : 1;
  const std::size_t keep_target = std::min(counts[0], counts[1]);

  // Selection sampling keeps survivors in their original order.
  std::mt19937_64 gen(seed);
  std::size_t needed = keep_target;
  std::size_t remaining = counts[static_cast<std::size_t>(majority)];
  std::vector<bool> keep(table.size(), true);
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (table.control[r] != majority) continue;
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (static_cast<double>(remaining) * u < static_cast<double>(needed))
      --needed;
    else
      keep[r] = false;
    --remaining;
  }

  DiscreteTable out;
  out.target_name = table.target_name;
  out.control_name = table.control_name;
  out.control_labels = table.control_labels;
  out.attributes.reserve(table.attributes.size());
  for (const auto& a : table.attributes) {
    DiscreteAttribute copy = a;
    copy.codes.clear();
    out.attributes.push_back(std::move(copy));
  }
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (!keep[r]) continue;
    out.target.push_back(table.target[r]);
    out.control.push_back(table.control[r]);
    out.row_ids.push_back(table.row_ids[r]);
    for (std::size_t a = 0; a < table.attributes.size(); ++a)
      out.attributes[a].codes.push_back(table.attributes[a].codes[r]);
  }
  return out;
}

Population Population::from_columns(std::vector<double> target, std::vector<int> control,
                                    std::vector<std::vector<int>> codes, std::vector<AttributeInfo> attributes,
                                    std::vector<std::string> control_labels, std::vector<std::size_t> row_ids) {
  const std::size_t n = target.size();
  if (n == 0) throw Error(Errc::EmptyTable, kModule, "population without items");
  if (control.size() != n) throw Error(Errc::InvalidSpec, kModule, "control column length differs from target");
  if (row_ids.empty()) {
    row_ids.resize(n);
    std::iota(row_ids.begin(), row_ids.end(), std::size_t{0});
  }
  if (row_ids.size() != n) throw Error(Errc::InvalidSpec, kModule, "row id column length differs from target");
  if (attributes.empty()) {
    for (std::size_t a = 0; a < codes.size(); ++a) attributes.push_back({"A" + std::to_string(a), {}});
  }
  if (attributes.size() != codes.size())
    throw Error(Errc::InvalidSpec, kModule, "attribute metadata does not match code columns");
  for (const auto& col : codes)
    if (col.size() != n) throw Error(Errc::InvalidSpec, kModule, "attribute column length differs from target");
  for (int c : control)
    if (c != 0 && c != 1) throw Error(Errc::NotBinaryControl, kModule, "control codes must be 0 or 1");

  const auto [min_it, max_it] = std::minmax_element(target.begin(), target.end());
  if (!(*max_it > *min_it)) throw Error(Errc::ConstantTarget, kModule, "target is constant");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (target[a] != target[b]) return target[a] > target[b];
    return row_ids[a] < row_ids[b];
  });

  Population p;
  p.y_.reserve(n);
  p.cls_.reserve(n);
  p.row_ids_.reserve(n);
  for (std::size_t i : order) {
    p.y_.push_back(target[i]);
    p.cls_.push_back(static_cast<std::uint8_t>(control[i]));
    p.row_ids_.push_back(row_ids[i]);
    ++p.counts_[control[i]];
  }
  p.codes_.resize(codes.size());
  for (std::size_t a = 0; a < codes.size(); ++a) {
    p.codes_[a].reserve(n);
    for (std::size_t i : order) p.codes_[a].push_back(codes[a][i]);
  }
  p.attributes_ = std::move(attributes);
  p.control_labels_ = std::move(control_labels);

  double sum = 0.0;
  for (double v : p.y_) sum += v;
  p.mean_y_ = sum / static_cast<double>(n);
  p.max_y_ = p.y_.front();
  p.denom_ = static_cast<double>(n) * (p.max_y_ - p.mean_y_);
  if (!(p.denom_ > 0.0)) throw Error(Errc::ConstantTarget, kModule, "max target does not exceed the mean");

  // A pure class-c subset reaches distance 1 - p_c; no subset does better.
  for (int c = 0; c < 2; ++c)
    if (p.counts_[c] > 0) p.d_max_ = std::max(p.d_max_, 1.0 - p.class_prob(c));
  return p;
}

Population build_population(const DiscreteTable& table) {
  if (table.control_labels.size() > 2)
    throw Error(Errc::NotBinaryControl, kModule,
                "control '" + table.control_name + "' has " + std::to_string(table.control_labels.size()) +
                    " classes");
  std::vector<std::vector<int>> codes;
  std::vector<AttributeInfo> infos;
  for (const auto& a : table.attributes) {
    codes.push_back(a.codes);
    infos.push_back({a.name, a.labels});
  }
  return Population::from_columns(table.target, table.control, std::move(codes), std::move(infos),
                                  table.control_labels, table.row_ids);
}

}  // namespace rsd
