#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

#include "rsd/dataset.hpp"
#include "rsd/error.hpp"

namespace rsd {

namespace {

constexpr std::string_view kModule = "dataset";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Splits one logical record; quoted fields may contain commas, doubled quotes
// and newlines. Returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  char ch = 0;
  while (in.get(ch)) {
    any = true;
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      break;
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

bool is_blank(const std::vector<std::string>& fields) {
  return fields.size() == 1 && trim(fields[0]).empty();
}

const AttributeSpec* find_spec(std::span<const AttributeSpec> specs, std::string_view name) {
  for (const auto& s : specs)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace

std::size_t RawTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw Error(Errc::MissingColumn, kModule, "column '" + std::string(name) + "' not in header");
}

CsvText parse_csv_text(std::istream& in) {
  CsvText text;
  std::vector<std::string> fields;
  if (!read_record(in, fields)) throw Error(Errc::EmptyTable, kModule, "no header row");
  // UTF-8 byte order mark
  if (!fields.empty() && fields[0].rfind("\xEF\xBB\xBF", 0) == 0) fields[0].erase(0, 3);
  for (auto& f : fields) text.header.emplace_back(trim(f));

  std::set<std::string> seen;
  for (const auto& h : text.header)
    if (!seen.insert(h).second)
      throw Error(Errc::InvalidSpec, kModule, "duplicate column '" + h + "'");

  std::size_t line = 1;
  while (read_record(in, fields)) {
    ++line;
    if (is_blank(fields)) continue;
    if (fields.size() != text.header.size())
      throw Error(Errc::InvalidSpec, kModule,
                  "record " + std::to_string(line) + " has " + std::to_string(fields.size()) +
                      " cells, header has " + std::to_string(text.header.size()));
    text.rows.push_back(fields);
  }
  return text;
}

CsvText read_csv_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::UnreadableFile, kModule, "cannot open '" + path.string() + "'");
  return parse_csv_text(in);
}

RawTable type_table(const CsvText& text, std::span<const AttributeSpec> specs) {
  RawTable table;
  table.columns = text.header;
  for (const auto& spec : specs) (void)table.column_index(spec.name);
  if (text.rows.empty()) throw Error(Errc::EmptyTable, kModule, "header without data rows");

  std::vector<bool> numeric(table.columns.size(), false);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const AttributeSpec* spec = find_spec(specs, table.columns[c]);
    numeric[c] = spec && (spec->kind == AttributeKind::numeric || spec->kind == AttributeKind::target);
  }

  table.rows.reserve(text.rows.size());
  for (const auto& src : text.rows) {
    std::vector<Cell> row;
    row.reserve(src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      std::string_view cell = trim(src[c]);
      if (cell.empty()) {
        row.emplace_back(Missing{});
      } else if (numeric[c]) {
        if (auto v = parse_real(cell))
          row.emplace_back(*v);
        else
          row.emplace_back(Missing{});
      } else {
        row.emplace_back(std::string(cell));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

RawTable load_csv(const std::filesystem::path& path, std::span<const AttributeSpec> specs) {
  return type_table(read_csv_text(path), specs);
}

std::vector<AttributeSpec> infer_specs(const CsvText& text, std::string_view target,
                                       std::string_view control, int bins) {
  auto has = [&](std::string_view name) {
    for (const auto& h : text.header)
      if (h == name) return true;
    return false;
  };
  if (!has(target)) throw Error(Errc::MissingColumn, kModule, "target column '" + std::string(target) + "'");
  if (!has(control))
    throw Error(Errc::MissingColumn, kModule, "control column '" + std::string(control) + "'");
  if (target == control) throw Error(Errc::InvalidSpec, kModule, "target and control are the same column");

  std::vector<AttributeSpec> specs;
  for (std::size_t c = 0; c < text.header.size(); ++c) {
    const auto& name = text.header[c];
    if (name == target) {
      specs.push_back(AttributeSpec::target(name));
      continue;
    }
    if (name == control) {
      specs.push_back(AttributeSpec::control(name));
      continue;
    }
    bool all_numeric = true;
    std::set<double> distinct;
    for (const auto& row : text.rows) {
      std::string_view cell = trim(row[c]);
      if (cell.empty()) continue;
      auto v = parse_real(cell);
      if (!v) {
        all_numeric = false;
        break;
      }
      distinct.insert(*v);
    }
    if (all_numeric && static_cast<int>(distinct.size()) >= bins)
      specs.push_back(AttributeSpec::numeric(name, bins));
    else
      specs.push_back(AttributeSpec::categorical(name));
  }
  return specs;
}

}  // namespace rsd
