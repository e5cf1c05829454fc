#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lassoinf {

/// Problem with the input data (bad cells, constant columns, rank deficiency).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or arguments.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstantColumnError : public DataError {
 public:
  ConstantColumnError(std::size_t column, const std::string& name)
      : DataError("constant column '" + name + "' (index " + std::to_string(column) +
                  ") has zero variance"),
        column_(column),
        name_(name) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t column_;
  std::string name_;
};

}  // namespace lassoinf
