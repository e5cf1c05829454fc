#pragma once

#include <cstdint>
#include <vector>

#include "lassoinf/dataset.hpp"
#include "lassoinf/lasso.hpp"

namespace lassoinf {

/// fold_of[i] is the fold that holds observation i out.
struct FoldAssignment {
  std::vector<int> fold_of;
  int K = 0;

  std::vector<Index> fold_sizes() const;
};

/// Random balanced partition of n observations into K folds.
FoldAssignment make_folds(Index n, int K, std::uint64_t seed);

struct DroppedColumn {
  int fold;
  Index column;

  friend bool operator==(const DroppedColumn&, const DroppedColumn&) = default;
};

struct CvCurve {
  std::vector<double> lambdas;  // descending
  std::vector<double> mae;
  double chosen_lambda = 0.0;
  std::size_t chosen_index = 0;
  // Columns constant within a fold's training rows, excluded from that fold.
  std::vector<DroppedColumn> dropped;
  int nonconverged = 0;
};

/// Cross-validated mean absolute error over a lambda grid. Every training split
/// is re-standardized on its own rows; held-out rows are mapped through the
/// training transform. Picks the minimum, ties to the larger lambda.
CvCurve cv_curve(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const std::vector<double>& grid,
                 const FoldAssignment& folds, const Eigen::VectorXd& weights,
                 const LassoOptions<double>& options = {});

inline CvCurve cv_curve(const Dataset& data, const std::vector<double>& grid, const FoldAssignment& folds,
                        const Eigen::VectorXd& weights, const LassoOptions<double>& options = {}) {
  return cv_curve(data.X, data.y, grid, folds, weights, options);
}

struct SelectionConfig {
  int folds = 10;
  int grid_size = 100;
  double grid_ratio = 1e-3;
  // When non-empty, replaces the grid built from lambda_max.
  std::vector<double> grid;
  LassoOptions<double> lasso;
};

struct LambdaSelection {
  double lambda = 0.0;
  CvCurve curve;
};

/// K-fold MAE cross-validation over a grid anchored at the full-data lambda_max.
/// If the response carries no signal at all (lambda_max == 0) the single
/// candidate lambda = 0 is returned.
LambdaSelection select_lambda(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                              const Eigen::VectorXd& weights, const SelectionConfig& config,
                              std::uint64_t seed);

inline LambdaSelection select_lambda(const Dataset& data, const Eigen::VectorXd& weights,
                                     const SelectionConfig& config, std::uint64_t seed) {
  return select_lambda(data.X, data.y, weights, config, seed);
}

}  // namespace lassoinf
