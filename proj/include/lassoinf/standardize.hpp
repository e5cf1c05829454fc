#pragma once

#include <cmath>
#include <vector>

#include "lassoinf/dataset.hpp"

namespace lassoinf {

enum class ConstantColumnPolicy { kThrow, kFlag };

/// Column centring/scaling that maps raw predictors onto the fitting scale.
/// SD uses the n-1 denominator. Flagged (constant) columns carry sd 0 and are
/// mapped to all-zero columns.
template <typename Scalar>
struct Standardization {
  VectorX<Scalar> column_mean;
  VectorX<Scalar> column_sd;
  Scalar y_mean{0};
  std::vector<bool> constant;

  bool any_constant() const {
    for (bool c : constant)
      if (c) return true;
    return false;
  }

  /// Maps raw rows (same column layout) onto the standardized scale.
  template <typename Derived>
  MatrixX<Scalar> apply(const Eigen::MatrixBase<Derived>& raw) const {
    MatrixX<Scalar> out(raw.rows(), raw.cols());
    for (Index j = 0; j < raw.cols(); ++j) {
      if (constant[static_cast<std::size_t>(j)]) {
        out.col(j).setZero();
      } else {
        out.col(j) = (raw.col(j).array() - column_mean(j)) / column_sd(j);
      }
    }
    return out;
  }

  /// Coefficients on the raw predictor scale.
  VectorX<Scalar> raw_coefficients(const VectorX<Scalar>& beta) const {
    VectorX<Scalar> out(beta.size());
    for (Index j = 0; j < beta.size(); ++j)
      out(j) = constant[static_cast<std::size_t>(j)] ? Scalar(0) : beta(j) / column_sd(j);
    return out;
  }

  Scalar raw_intercept(const VectorX<Scalar>& beta) const {
    return y_mean - raw_coefficients(beta).dot(column_mean);
  }
};

template <typename Scalar>
struct StandardizedData {
  BasicDataset<Scalar> data;
  Standardization<Scalar> transform;
};

template <typename Derived>
typename Derived::Scalar sample_sd(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Scalar mean = v.mean();
  const Scalar ss = (v.array() - mean).square().sum();
  return std::sqrt(ss / static_cast<Scalar>(v.size() - 1));
}

/// Centers y, centers and scales each predictor to unit sample SD.
/// A column is constant when every entry equals the first one.
template <typename Scalar>
StandardizedData<Scalar> standardize(const BasicDataset<Scalar>& data,
                                     ConstantColumnPolicy policy = ConstantColumnPolicy::kThrow) {
  const Index n = data.X.rows();
  const Index p = data.X.cols();
  StandardizedData<Scalar> out;
  auto& t = out.transform;
  t.column_mean.resize(p);
  t.column_sd.resize(p);
  t.constant.assign(static_cast<std::size_t>(p), false);
  out.data.names = data.names;
  out.data.X.resize(n, p);

  for (Index j = 0; j < p; ++j) {
    const auto col = data.X.col(j);
    const bool is_constant = (col.array() == col(0)).all();
    if (is_constant) {
      if (policy == ConstantColumnPolicy::kThrow)
        throw ConstantColumnError(static_cast<std::size_t>(j),
                                  data.names.empty() ? std::string("?")
                                                     : data.names[static_cast<std::size_t>(j)]);
      t.constant[static_cast<std::size_t>(j)] = true;
      t.column_mean(j) = col(0);
      t.column_sd(j) = Scalar(0);
      out.data.X.col(j).setZero();
      continue;
    }
    t.column_mean(j) = col.mean();
    t.column_sd(j) = sample_sd(col);
    out.data.X.col(j) = (col.array() - t.column_mean(j)) / t.column_sd(j);
  }

  t.y_mean = data.y.mean();
  if ((data.y.array() == data.y(0)).all()) {
    out.data.y = VectorX<Scalar>::Zero(n);
  } else {
    out.data.y = data.y.array() - t.y_mean;
  }
  return out;
}

}  // namespace lassoinf
