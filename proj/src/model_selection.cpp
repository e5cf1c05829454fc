#include "lassoinf/model_selection.hpp"

#include <cmath>
#include <string>

#include "lassoinf/rng.hpp"
#include "lassoinf/standardize.hpp"

namespace lassoinf {

std::vector<Index> FoldAssignment::fold_sizes() const {
  std::vector<Index> sizes(static_cast<std::size_t>(K), 0);
  for (int f : fold_of) ++sizes[static_cast<std::size_t>(f)];
  return sizes;
}

FoldAssignment make_folds(Index n, int K, std::uint64_t seed) {
  if (K < 2) throw ConfigError("cross-validation needs at least 2 folds");
  if (K > n)
    throw ConfigError("cannot split " + std::to_string(n) + " observations into " +
                      std::to_string(K) + " folds");
  FoldAssignment folds;
  folds.K = K;
  folds.fold_of.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) folds.fold_of[static_cast<std::size_t>(i)] = static_cast<int>(i % K);
  Rng rng(seed);
  shuffle_in_place(folds.fold_of, rng);
  return folds;
}

CvCurve cv_curve(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const std::vector<double>& grid,
                 const FoldAssignment& folds, const Eigen::VectorXd& weights,
                 const LassoOptions<double>& options) {
  const Index n = X.rows();
  const Index p = X.cols();
  if (y.size() != n) throw ConfigError("response length does not match design rows");
  if (grid.empty()) throw ConfigError("lambda grid is empty");
  if (static_cast<Index>(folds.fold_of.size()) != n)
    throw ConfigError("fold assignment does not match the number of observations");

  CvCurve curve;
  curve.lambdas = grid;
  const auto L = static_cast<Index>(grid.size());
  // abs_error(i, l): held-out error of observation i at grid[l]; summed in
  // observation order so the total does not depend on fold processing order.
  Eigen::MatrixXd abs_error(n, L);

  for (int k = 0; k < folds.K; ++k) {
    std::vector<Index> train;
    std::vector<Index> test;
    for (Index i = 0; i < n; ++i) (folds.fold_of[static_cast<std::size_t>(i)] == k ? test : train).push_back(i);
    if (test.empty()) continue;
    if (train.size() < 2) throw ConfigError("fold " + std::to_string(k) + " leaves fewer than 2 training rows");

    Dataset split;
    split.X = X(train, Eigen::all);
    split.y = y(train);
    const auto scaled = standardize(split, ConstantColumnPolicy::kFlag);
    for (Index j = 0; j < p; ++j)
      if (scaled.transform.constant[static_cast<std::size_t>(j)]) curve.dropped.push_back({k, j});

    const auto path = fit_lasso_path<double>(scaled.data.X, scaled.data.y, grid, weights, options);
    curve.nonconverged += path.nonconverged;

    const Eigen::MatrixXd test_x = scaled.transform.apply(X(test, Eigen::all));
    const Eigen::MatrixXd pred = (test_x * path.beta).array() + scaled.transform.y_mean;
    for (std::size_t t = 0; t < test.size(); ++t) {
      const Index i = test[t];
      abs_error.row(i) = (pred.row(static_cast<Index>(t)).array() - y(i)).abs();
    }
  }

  curve.mae.resize(grid.size());
  for (Index l = 0; l < L; ++l) {
    double total = 0.0;
    for (Index i = 0; i < n; ++i) total += abs_error(i, l);
    curve.mae[static_cast<std::size_t>(l)] = total / static_cast<double>(n);
  }
  curve.chosen_index = 0;
  for (std::size_t l = 1; l < grid.size(); ++l)
    if (curve.mae[l] < curve.mae[curve.chosen_index]) curve.chosen_index = l;
  curve.chosen_lambda = grid[curve.chosen_index];
  return curve;
}

LambdaSelection select_lambda(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                              const Eigen::VectorXd& weights, const SelectionConfig& config,
                              std::uint64_t seed) {
  std::vector<double> grid = config.grid;
  if (grid.empty()) {
    const double lmax = lambda_max<double>(X, y, weights);
    if (lmax > 0.0) {
      grid = lambda_grid(lmax, config.grid_size, config.grid_ratio);
    } else {
      grid = {0.0};
    }
  }
  const FoldAssignment folds = make_folds(X.rows(), config.folds, seed);
  LambdaSelection out;
  out.curve = cv_curve(X, y, grid, folds, weights, config.lasso);
  if (grid.size() == 1) {
    out.curve.chosen_index = 0;
    out.curve.chosen_lambda = grid[0];
  }
  out.lambda = out.curve.chosen_lambda;
  return out;
}

}  // namespace lassoinf
