#include "lassoinf/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace lassoinf {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_whitespace(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::vector<std::string> split_csv(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(trim(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw DataError("line " + std::to_string(line_no) + ": unterminated quoted field");
  fields.push_back(trim(field));
  return fields;
}

std::optional<double> parse_number(const std::string& text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

RowFilter parse_row_filter(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("row filter must look like column=value, got '" + spec + "'");
  return {spec.substr(0, eq), spec.substr(eq + 1)};
}

LoadedTable parse_table(std::istream& in, const TableOptions& options, const std::string& source) {
  if (options.response.empty()) throw ConfigError("no response column given");

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  bool csv = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    csv = line.find(',') != std::string::npos;
    header = csv ? split_csv(line, line_no) : split_whitespace(line);
    break;
  }
  if (header.empty()) throw DataError(source + ": no header row");

  bool header_has_index = !header.empty() && header.front().empty();
  if (header_has_index) header.erase(header.begin());

  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = csv ? split_csv(line, line_no) : split_whitespace(line);
    if (header_has_index || fields.size() == header.size() + 1) {
      if (fields.empty()) throw DataError(source + ":" + std::to_string(line_no) + ": empty row");
      fields.erase(fields.begin());
    }
    if (fields.size() != header.size())
      throw DataError(source + ":" + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                      " fields, found " + std::to_string(fields.size()));
    rows.emplace_back(line_no, std::move(fields));
  }
  if (rows.empty()) throw DataError(source + ": no data rows");

  auto find_column = [&](const std::string& name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };

  const auto response = find_column(options.response);
  if (!response) throw DataError(source + ": response column '" + options.response + "' not found");
  std::optional<std::size_t> filter_col;
  if (options.filter) {
    filter_col = find_column(options.filter->column);
    if (!filter_col) throw DataError(source + ": filter column '" + options.filter->column + "' not found");
  }
  for (const auto& name : options.drop)
    if (!find_column(name)) throw DataError(source + ": cannot drop unknown column '" + name + "'");

  LoadedTable out;
  out.digest.source = source;
  std::vector<std::size_t> predictors;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == *response || (filter_col && c == *filter_col)) continue;
    if (std::find(options.drop.begin(), options.drop.end(), header[c]) != options.drop.end()) {
      out.digest.dropped_columns.push_back(header[c]);
      continue;
    }
    predictors.push_back(c);
  }
  if (predictors.empty()) throw DataError(source + ": no predictor columns remain");

  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!filter_col || rows[r].second[*filter_col] == options.filter->value) kept.push_back(r);
  out.digest.rows_read = static_cast<Index>(rows.size());
  out.digest.rows_kept = static_cast<Index>(kept.size());
  if (kept.empty()) throw DataError(source + ": row filter keeps no rows");

  auto& data = out.data;
  data.y.resize(static_cast<Index>(kept.size()));
  data.X.resize(static_cast<Index>(kept.size()), static_cast<Index>(predictors.size()));
  for (std::size_t c : predictors) data.names.push_back(header[c]);

  auto cell = [&](std::size_t r, std::size_t c) {
    const auto& [row_line, fields] = rows[r];
    const auto value = parse_number(fields[c]);
    if (!value)
      throw DataError(source + ":" + std::to_string(row_line) + ": column '" + header[c] +
                      "' has non-numeric value '" + fields[c] + "'");
    return *value;
  };
  for (std::size_t i = 0; i < kept.size(); ++i) {
    data.y(static_cast<Index>(i)) = cell(kept[i], *response);
    for (std::size_t k = 0; k < predictors.size(); ++k)
      data.X(static_cast<Index>(i), static_cast<Index>(k)) = cell(kept[i], predictors[k]);
  }
  validate(data);
  return out;
}

LoadedTable load_table(const std::string& path, const TableOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return parse_table(in, options, path);
}

}  // namespace lassoinf
