#include "lassoinf/permutation.hpp"

#include <algorithm>
#include <string>

#include "lassoinf/parallel.hpp"
#include "lassoinf/rng.hpp"
#include "lassoinf/standardize.hpp"

namespace lassoinf {

double pvalue_from_null(double observed, std::span<const double> null) {
  std::size_t exceed = 0;
  for (double v : null)
    if (v >= observed) ++exceed;
  return static_cast<double>(1 + exceed) / static_cast<double>(null.size() + 1);
}

HolmResult sequential_holm(std::span<const double> p_values, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  const std::size_t m = p_values.size();
  HolmResult out;
  out.thresholds.resize(m);
  out.reject.assign(m, false);
  bool open = true;
  for (std::size_t k = 0; k < m; ++k) {
    out.thresholds[k] = alpha / static_cast<double>(m - k);
    open = open && p_values[k] <= out.thresholds[k];
    out.reject[k] = open;
  }
  return out;
}

namespace {

void check_config(const InferenceConfig& config, Index p) {
  if (config.permutations < 1) throw ConfigError("number of permutations must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (config.max_ranks < 0 || config.max_ranks > p)
    throw ConfigError("max ranks must lie in [0, " + std::to_string(p) + "]");
  if (config.workers < 1) throw ConfigError("worker count must be at least 1");
  if (config.lambda_override && !(*config.lambda_override >= 0.0))
    throw ConfigError("lambda override must be >= 0");
}

}  // namespace

InferenceResult permutation_test(const Dataset& data, const InferenceConfig& config) {
  validate(data);
  check_config(config, data.cols());
  const Eigen::VectorXd weights =
      config.weights.size() > 0 ? config.weights : Eigen::VectorXd::Ones(data.cols());
  if (weights.size() != data.cols()) throw ConfigError("penalty weights do not match the columns");

  const auto scaled = standardize(data, ConstantColumnPolicy::kThrow);
  const Eigen::MatrixXd& X = scaled.data.X;
  const Eigen::VectorXd& y = scaled.data.y;
  const Index n = X.rows();
  const auto& lasso_options = config.selection.lasso;

  InferenceResult result;
  Rng original_stream = make_stream(config.seed, 0);
  if (config.lambda_override) {
    result.chosen_lambda_original = *config.lambda_override;
  } else {
    auto selection = select_lambda(X, y, weights, config.selection, original_stream());
    result.chosen_lambda_original = selection.lambda;
    result.original_curve = std::move(selection.curve);
  }
  if (config.on_fit) config.on_fit(0, X, y);
  result.original_fit = fit_lasso<double>(X, y, result.chosen_lambda_original, weights, lasso_options);
  result.nonconverged_fits = result.original_curve.nonconverged + (result.original_fit.converged ? 0 : 1);

  const auto& ranked = result.original_fit.ranked;
  const auto selected = static_cast<int>(ranked.size());
  int m = selected;
  if (config.max_ranks > 0) m = selected == 0 ? config.max_ranks : std::min(selected, config.max_ranks);

  result.observed.resize(m);
  for (int k = 0; k < m; ++k) result.observed(k) = result.original_fit.ranked_magnitude(static_cast<std::size_t>(k + 1));
  for (int k = 0; k < std::min(m, selected); ++k) {
    const Index column = ranked[static_cast<std::size_t>(k)].column;
    result.selected_columns.push_back(column);
    result.selected_names.push_back(data.names[static_cast<std::size_t>(column)]);
  }

  const int B = selected == 0 ? 0 : config.permutations;
  result.null_samples = Eigen::MatrixXd::Zero(m, B);
  result.permutation_lambdas.assign(static_cast<std::size_t>(B), 0.0);
  std::vector<int> nonconverged(static_cast<std::size_t>(B), 0);

  parallel_for(B, config.workers, [&](int b) {
    Rng stream = make_stream(config.seed, static_cast<std::uint64_t>(b) + 1);
    const auto perm = random_permutation(static_cast<std::size_t>(n), stream);
    Eigen::VectorXd y_perm(n);
    for (Index i = 0; i < n; ++i) y_perm(i) = y(static_cast<Index>(perm[static_cast<std::size_t>(i)]));

    double lambda = result.chosen_lambda_original;
    int bad = 0;
    if (config.lambda_policy == LambdaPolicy::kCvPerPermutation) {
      const auto selection = select_lambda(X, y_perm, weights, config.selection, stream());
      lambda = selection.lambda;
      bad += selection.curve.nonconverged;
    }
    if (config.on_fit) config.on_fit(b + 1, X, y_perm);
    const auto fit = fit_lasso<double>(X, y_perm, lambda, weights, lasso_options);
    if (!fit.converged) ++bad;
    for (int k = 0; k < m; ++k) result.null_samples(k, b) = fit.ranked_magnitude(static_cast<std::size_t>(k + 1));
    result.permutation_lambdas[static_cast<std::size_t>(b)] = lambda;
    nonconverged[static_cast<std::size_t>(b)] = bad;
  });
  for (int bad : nonconverged) result.nonconverged_fits += bad;

  result.p_values.resize(m);
  for (int k = 0; k < m; ++k) {
    const Eigen::VectorXd row = result.null_samples.row(k).transpose();
    result.p_values(k) = pvalue_from_null(result.observed(k), std::span<const double>(row.data(), static_cast<std::size_t>(row.size())));
  }
  const auto holm = sequential_holm(std::span<const double>(result.p_values.data(), static_cast<std::size_t>(m)), config.alpha);
  result.holm_thresholds = holm.thresholds;
  result.holm_reject = holm.reject;
  return result;
}

}  // namespace lassoinf
