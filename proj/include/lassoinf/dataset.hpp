#pragma once

#include <Eigen/Dense>

#include <string>
#include <unordered_set>
#include <vector>

#include "lassoinf/errors.hpp"

namespace lassoinf {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Response vector plus a named predictor matrix, one row per observation.
template <typename Scalar>
struct BasicDataset {
  VectorX<Scalar> y;
  MatrixX<Scalar> X;
  std::vector<std::string> names;

  Index rows() const { return X.rows(); }
  Index cols() const { return X.cols(); }
};

using Dataset = BasicDataset<double>;

/// Column labels "x1", "x2", ... for unnamed designs.
inline std::vector<std::string> default_names(Index p) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(p));
  for (Index j = 0; j < p; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

template <typename Scalar>
void validate(const BasicDataset<Scalar>& data) {
  if (data.X.rows() < 2) throw DataError("dataset needs at least 2 observations");
  if (data.X.cols() < 1) throw DataError("dataset needs at least 1 predictor");
  if (data.y.size() != data.X.rows())
    throw DataError("response length " + std::to_string(data.y.size()) +
                    " does not match " + std::to_string(data.X.rows()) + " rows");
  if (static_cast<Index>(data.names.size()) != data.X.cols())
    throw DataError("expected " + std::to_string(data.X.cols()) + " column names, got " +
                    std::to_string(data.names.size()));
  if (!data.y.allFinite()) throw DataError("response contains non-finite values");
  for (Index j = 0; j < data.X.cols(); ++j) {
    if (!data.X.col(j).allFinite())
      throw DataError("column '" + data.names[static_cast<std::size_t>(j)] +
                      "' contains non-finite values");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : data.names) {
    if (!seen.insert(name).second) throw DataError("duplicate column name '" + name + "'");
  }
}

/// Copy of `data` restricted to the given columns, in the given order.
template <typename Scalar>
BasicDataset<Scalar> select_columns(const BasicDataset<Scalar>& data,
                                    const std::vector<Index>& columns) {
  BasicDataset<Scalar> out;
  out.y = data.y;
  out.X.resize(data.X.rows(), static_cast<Index>(columns.size()));
  out.names.reserve(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    out.X.col(static_cast<Index>(k)) = data.X.col(columns[k]);
    out.names.push_back(data.names[static_cast<std::size_t>(columns[k])]);
  }
  return out;
}

}  // namespace lassoinf
