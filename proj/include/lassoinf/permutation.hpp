#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lassoinf/dataset.hpp"
#include "lassoinf/lasso.hpp"
#include "lassoinf/model_selection.hpp"

namespace lassoinf {

/// (1 + #{b : null[b] >= observed}) / (B + 1)
double pvalue_from_null(double observed, std::span<const double> null);

struct HolmResult {
  std::vector<double> thresholds;
  std::vector<bool> reject;
};

/// Holm thresholds alpha / (m + 1 - k) applied in selection order: rank k is
/// rejected only if every earlier rank was.
HolmResult sequential_holm(std::span<const double> p_values, double alpha);

enum class LambdaPolicy {
  kCvPerPermutation,  // rerun cross-validation on every permuted response
  kFixedFromOriginal  // reuse the lambda chosen on the original data
};

struct InferenceConfig {
  int permutations = 100;
  double alpha = 0.05;
  // Cap on the number of ranks tested; 0 tests every selected feature.
  int max_ranks = 0;
  LambdaPolicy lambda_policy = LambdaPolicy::kCvPerPermutation;
  std::uint64_t seed = 1;
  SelectionConfig selection;
  // Penalty weights on the input columns; empty means all ones.
  Eigen::VectorXd weights;
  // Fixes the original-data lambda instead of cross-validating it.
  std::optional<double> lambda_override;
  int workers = 1;
  // Test hook, called before every fit with the design and response handed to
  // the solver; replicate 0 is the original data.
  std::function<void(int replicate, const Eigen::MatrixXd& X, const Eigen::VectorXd& y)> on_fit;
};

struct InferenceResult {
  Eigen::VectorXd observed;      // |beta_(k)|, k = 1..m
  Eigen::MatrixXd null_samples;  // m x B
  Eigen::VectorXd p_values;
  std::vector<double> holm_thresholds;
  std::vector<bool> holm_reject;
  double chosen_lambda_original = 0.0;
  CvCurve original_curve;
  LassoFit<double> original_fit;  // standardized scale
  std::vector<Index> selected_columns;
  std::vector<std::string> selected_names;
  std::vector<double> permutation_lambdas;
  int nonconverged_fits = 0;

  Index ranks() const { return observed.size(); }
};

/// Randomization test for the rank-k Lasso coefficient. Standardizes the data,
/// fits the original model, then refits on B uniformly permuted responses and
/// compares |beta_(k)| against the permutation distribution. When the
/// original fit selects nothing, every requested rank gets p = 1 and no
/// permutations are run (null_samples has zero columns).
InferenceResult permutation_test(const Dataset& data, const InferenceConfig& config);

}  // namespace lassoinf
