#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lassoinf/dataset.hpp"

namespace lassoinf {

struct RowFilter {
  std::string column;
  std::string value;
};

/// Parses "column=value".
RowFilter parse_row_filter(const std::string& spec);

struct TableOptions {
  std::string response;
  std::vector<std::string> drop;
  std::optional<RowFilter> filter;
};

struct TableDigest {
  std::string source;
  Index rows_read = 0;
  Index rows_kept = 0;
  std::vector<std::string> dropped_columns;
};

struct LoadedTable {
  Dataset data;
  TableDigest digest;
};

/// Reads a delimited table with a header row. A header containing a comma
/// selects CSV (RFC 4180 quoting); otherwise fields are split on whitespace.
/// A leading unnamed column, or one extra leading field on every data row, is
/// taken to be a row index and discarded. The filter column is used only for
/// row selection and never becomes a predictor.
LoadedTable parse_table(std::istream& in, const TableOptions& options, const std::string& source = "<stream>");

LoadedTable load_table(const std::string& path, const TableOptions& options);

}  // namespace lassoinf
