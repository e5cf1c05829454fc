#include "lassoinf/covariates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lassoinf/standardize.hpp"

namespace lassoinf {

ForcedPartition make_partition(const Dataset& data, const std::vector<Index>& forced, ForcingMode mode) {
  const Index p = data.cols();
  std::vector<bool> is_forced(static_cast<std::size_t>(p), false);
  ForcedPartition partition;
  partition.mode = mode;
  for (Index j : forced) {
    if (j < 0 || j >= p) throw ConfigError("forced column index " + std::to_string(j) + " out of range");
    if (is_forced[static_cast<std::size_t>(j)]) throw ConfigError("column forced twice: " + std::to_string(j));
    is_forced[static_cast<std::size_t>(j)] = true;
  }
  for (Index j = 0; j < p; ++j)
    (is_forced[static_cast<std::size_t>(j)] ? partition.forced : partition.selectable).push_back(j);
  if (static_cast<Index>(partition.forced.size()) >= data.rows())
    throw ConfigError("forced covariates must number fewer than the observations");
  return partition;
}

ForcedPartition make_partition(const Dataset& data, const std::vector<std::string>& forced_names,
                               ForcingMode mode) {
  std::vector<Index> forced;
  for (const auto& name : forced_names) {
    const auto it = std::find(data.names.begin(), data.names.end(), name);
    if (it == data.names.end()) throw ConfigError("unknown forced column '" + name + "'");
    forced.push_back(static_cast<Index>(it - data.names.begin()));
  }
  return make_partition(data, forced, mode);
}

Dataset residualize(const Dataset& data, const ForcedPartition& partition) {
  const Index n = data.rows();
  const auto q = static_cast<Index>(partition.forced.size());
  Eigen::MatrixXd design(n, q + 1);
  design.col(0).setOnes();
  for (Index k = 0; k < q; ++k) design.col(k + 1) = data.X.col(partition.forced[static_cast<std::size_t>(k)]);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < q + 1) {
    std::string dependent;
    const auto& perm = qr.colsPermutation().indices();
    for (Index k = qr.rank(); k < q + 1; ++k) {
      const Index c = perm(k);
      if (!dependent.empty()) dependent += ", ";
      dependent += c == 0 ? std::string("(intercept)")
                          : data.names[static_cast<std::size_t>(partition.forced[static_cast<std::size_t>(c - 1)])];
    }
    throw DataError("forced covariates are linearly dependent: " + dependent);
  }
  const Eigen::VectorXd coef = qr.solve(data.y);

  Dataset out = select_columns(data, partition.selectable);
  out.y = data.y - design * coef;
  return out;
}

Eigen::VectorXd forced_weights(Index p, const ForcedPartition& partition) {
  Eigen::VectorXd w = Eigen::VectorXd::Ones(p);
  for (Index j : partition.forced) w(j) = 0.0;
  return w;
}

AdaptiveWeights adaptive_weights(const Dataset& data, double nu, double cap) {
  if (!(nu > 0.0)) throw ConfigError("adaptive weight exponent must be positive");
  const auto scaled = standardize(data, ConstantColumnPolicy::kFlag);
  AdaptiveWeights out;
  out.weights.resize(data.cols());
  for (Index j = 0; j < data.cols(); ++j) {
    const auto col = scaled.data.X.col(j);
    const double norm_sq = col.squaredNorm();
    const double slope = norm_sq > 0.0 ? col.dot(scaled.data.y) / norm_sq : 0.0;
    if (slope == 0.0) {
      out.weights(j) = cap;
      out.capped.push_back(j);
    } else {
      out.weights(j) = std::min(cap, 1.0 / std::pow(std::abs(slope), nu));
    }
  }
  return out;
}

}  // namespace lassoinf
