#pragma once

#include <vector>

#include "lassoinf/dataset.hpp"

namespace lassoinf {

enum class ForcingMode { kResidualize, kZeroWeight };

/// Split of the columns into forced covariates and selectable predictors.
struct ForcedPartition {
  std::vector<Index> forced;
  std::vector<Index> selectable;
  ForcingMode mode = ForcingMode::kZeroWeight;
};

/// Partition of p columns with `forced` held out of selection.
ForcedPartition make_partition(const Dataset& data, const std::vector<Index>& forced, ForcingMode mode);
ForcedPartition make_partition(const Dataset& data, const std::vector<std::string>& forced_names,
                               ForcingMode mode);

/// Regresses y on the forced columns (with intercept) and returns the
/// residuals as the response over the selectable columns only.
Dataset residualize(const Dataset& data, const ForcedPartition& partition);

/// Weight 0 on forced columns, 1 elsewhere.
Eigen::VectorXd forced_weights(Index p, const ForcedPartition& partition);

struct AdaptiveWeights {
  Eigen::VectorXd weights;
  std::vector<Index> capped;  // columns whose univariate slope was zero
};

inline constexpr double kAdaptiveWeightCap = 1e8;

/// w_j = 1 / |slope_j|^nu from the univariate least-squares slope of y on
/// standardized column j. Zero slopes get `cap`.
AdaptiveWeights adaptive_weights(const Dataset& data, double nu, double cap = kAdaptiveWeightCap);

}  // namespace lassoinf
