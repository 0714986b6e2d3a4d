#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rsd {

enum class AttributeKind { numeric, categorical, target, control, ignore };

std::string_view to_string(AttributeKind kind) noexcept;

/// Labels used for numeric bins. Four bins give V.Lo / Lo / Hi / V.Hi.
std::vector<std::string> default_bin_labels(int bins);

struct AttributeSpec {
  std::string name;
  AttributeKind kind = AttributeKind::categorical;
  int bins = 4;                         // numeric only
  std::vector<std::string> bin_labels;  // empty means default_bin_labels(bins)

  static AttributeSpec numeric(std::string name, int bins = 4);
  static AttributeSpec categorical(std::string name);
  static AttributeSpec target(std::string name);
  static AttributeSpec control(std::string name);
};

/// Throws InvalidSpec unless there is exactly one target, exactly one control,
/// unique names, and bin label lists of the right length.
void validate_specs(std::span<const AttributeSpec> specs);

// ---------------------------------------------------------------------------
// CSV ingestion

/// Untyped CSV content: header plus string cells. Empty cell means missing.
struct CsvText {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvText parse_csv_text(std::istream& in);
CsvText read_csv_text(const std::filesystem::path& path);

struct Missing {
  bool operator==(const Missing&) const = default;
};
using Cell = std::variant<Missing, double, std::string>;

struct RawTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t row_count() const noexcept { return rows.size(); }
  /// Throws MissingColumn.
  std::size_t column_index(std::string_view name) const;
};

/// Types each cell according to its attribute spec: numeric and target columns are
/// parsed as reals (parse failures become missing), every other column stays
/// text. Columns without an attribute spec are kept as text.
RawTable type_table(const CsvText& text, std::span<const AttributeSpec> specs);

RawTable load_csv(const std::filesystem::path& path, std::span<const AttributeSpec> specs);

/// Builds the attribute specs for a CSV: the named target and control, every other
/// column numeric when all its non-empty cells parse as reals and it has at
/// least `bins` distinct values, categorical otherwise.
std::vector<AttributeSpec> infer_specs(const CsvText& text, std::string_view target,
                                       std::string_view control, int bins);

// ---------------------------------------------------------------------------
// Discretization

inline constexpr int kMissingCode = -1;

struct DiscreteAttribute {
  std::string name;
  AttributeKind kind = AttributeKind::categorical;  // numeric or categorical
  std::vector<std::string> labels;                  // one per code
  std::vector<double> cut_points;                   // numeric only, bins - 1 entries
  std::vector<int> codes;                           // per row; kMissingCode when missing
};

struct DiscreteTable {
  std::vector<DiscreteAttribute> attributes;
  std::string target_name;
  std::string control_name;
  std::vector<double> target;
  std::vector<int> control;  // 0-based code, first-appearance order
  std::vector<std::string> control_labels;
  std::vector<std::size_t> row_ids;  // row index in the source table

  std::size_t size() const noexcept { return target.size(); }
};

DiscreteTable discretize(const RawTable& raw, std::span<const AttributeSpec> specs);

/// Uniform without-replacement downsampling of the majority control class.
DiscreteTable stratify(const DiscreteTable& table, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Population

struct AttributeInfo {
  std::string name;
  std::vector<std::string> labels;
};

/// Immutable item table sorted by target descending (ties by source row).
/// Control classes are stored 0-based: class 0 is the first control label.
class Population {
 public:
  /// `codes` is attribute-major: codes[attr][row]. Rows are in source order.
  static Population from_columns(std::vector<double> target, std::vector<int> control,
                                 std::vector<std::vector<int>> codes = {},
                                 std::vector<AttributeInfo> attributes = {},
                                 std::vector<std::string> control_labels = {},
                                 std::vector<std::size_t> row_ids = {});

  std::size_t size() const noexcept { return y_.size(); }
  double y(std::size_t item) const noexcept { return y_[item]; }
  int cls(std::size_t item) const noexcept { return cls_[item]; }
  std::span<const double> targets() const noexcept { return y_; }
  std::span<const std::uint8_t> classes() const noexcept { return cls_; }
  std::size_t source_row(std::size_t item) const noexcept { return row_ids_[item]; }

  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const AttributeInfo& attribute(std::size_t a) const { return attributes_.at(a); }
  int code(std::size_t attr, std::size_t item) const noexcept { return codes_[attr][item]; }
  std::span<const int> codes(std::size_t attr) const { return codes_.at(attr); }
  const std::vector<std::string>& control_labels() const noexcept { return control_labels_; }

  double mean_y() const noexcept { return mean_y_; }
  double max_y() const noexcept { return max_y_; }
  /// |P| * (max y - mean y); strictly positive.
  double denom() const noexcept { return denom_; }
  double beta_t() const noexcept { return 1.0 / denom_; }
  double beta_c() const noexcept { return mean_y_ / denom_; }

  std::size_t class_count(int c) const noexcept { return counts_[c]; }
  double class_prob(int c) const noexcept {
    return static_cast<double>(counts_[c]) / static_cast<double>(size());
  }
  /// Largest total variation distance any non-empty subset can reach.
  double d_max() const noexcept { return d_max_; }
  bool balanced() const noexcept { return counts_[0] == counts_[1]; }

 private:
  Population() = default;

  std::vector<double> y_;
  std::vector<std::uint8_t> cls_;
  std::vector<std::size_t> row_ids_;
  std::vector<std::vector<int>> codes_;
  std::vector<AttributeInfo> attributes_;
  std::vector<std::string> control_labels_;
  double mean_y_ = 0.0;
  double max_y_ = 0.0;
  double denom_ = 0.0;
  std::size_t counts_[2] = {0, 0};
  double d_max_ = 0.0;
};

Population build_population(const DiscreteTable& table);

}  // namespace rsd
