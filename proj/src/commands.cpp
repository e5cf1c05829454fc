#include "lassoinf/commands.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "lassoinf/permutation.hpp"
#include "lassoinf/standardize.hpp"

namespace lassoinf {

namespace {

/// Drops columns whose values never change; their names go to `dropped`.
Dataset drop_constant_columns(const Dataset& data, std::vector<std::string>& dropped) {
  std::vector<Index> keep;
  for (Index j = 0; j < data.cols(); ++j) {
    const auto col = data.X.col(j);
    if ((col.array() == col(0)).all()) {
      dropped.push_back(data.names[static_cast<std::size_t>(j)]);
    } else {
      keep.push_back(j);
    }
  }
  if (keep.empty()) throw DataError("every predictor column is constant");
  if (static_cast<Index>(keep.size()) == data.cols()) return data;
  return select_columns(data, keep);
}

}  // namespace

RunReport run_infer(const InferOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  TableOptions table_options;
  table_options.response = options.response;
  table_options.drop = options.drop;
  table_options.filter = options.filter;
  LoadedTable table = load_table(options.input, table_options);

  RunReport report;
  report.input.path = options.input;
  report.input.response = options.response;
  report.input.filter = options.filter ? options.filter->column + "=" + options.filter->value : "";
  report.input.rows_read = table.digest.rows_read;
  report.input.dropped_columns = table.digest.dropped_columns;
  Dataset data = drop_constant_columns(table.data, report.input.dropped_columns);
  report.input.rows = data.rows();
  report.input.columns = data.cols();

  const Eigen::VectorXd correlation = marginal_correlation(data);
  for (Index j = 0; j < data.cols(); ++j) {
    const double c = correlation(j);
    report.marginal_correlations.push_back(
        {data.names[static_cast<std::size_t>(j)], std::isnan(c) ? std::nullopt : std::optional<double>(c)});
  }

  InferenceConfig config;
  config.permutations = options.permutations;
  config.alpha = options.alpha;
  config.max_ranks = options.max_ranks;
  config.seed = options.seed;
  config.lambda_policy = options.reuse_lambda ? LambdaPolicy::kFixedFromOriginal : LambdaPolicy::kCvPerPermutation;
  config.lambda_override = options.lambda;
  config.selection.folds = options.folds;
  config.selection.grid_size = options.grid_size;
  config.selection.grid_ratio = options.grid_ratio;
  config.selection.lasso.tol = options.tol;
  config.selection.lasso.max_iter = options.max_iter;
  config.workers = options.workers;

  Dataset analysed = data;
  Eigen::VectorXd weights = Eigen::VectorXd::Ones(data.cols());
  if (!options.forced.empty()) {
    const auto partition = make_partition(data, options.forced, options.forced_mode);
    if (options.forced_mode == ForcingMode::kResidualize) {
      analysed = residualize(data, partition);
      weights = Eigen::VectorXd::Ones(analysed.cols());
    } else {
      weights = forced_weights(data.cols(), partition);
    }
  }
  if (options.adaptive_nu) {
    const auto adaptive = adaptive_weights(analysed, *options.adaptive_nu);
    weights = weights.cwiseProduct(adaptive.weights);
  }
  config.weights = weights;
  if (config.max_ranks > analysed.cols()) config.max_ranks = static_cast<int>(analysed.cols());

  const InferenceResult result = permutation_test(analysed, config);

  auto& rc = report.config;
  rc.permutations = options.permutations;
  rc.alpha = options.alpha;
  rc.max_ranks = options.max_ranks;
  rc.lambda_policy = options.reuse_lambda ? "fixed_from_original" : "cv_per_permutation";
  rc.seed = options.seed;
  rc.folds = options.folds;
  rc.grid_size = options.grid_size;
  rc.grid_ratio = options.grid_ratio;
  rc.lambda = options.lambda;
  rc.forced = options.forced;
  rc.forced_mode = options.forced.empty() ? ""
                   : options.forced_mode == ForcingMode::kResidualize ? "residualize"
                                                                      : "zero-weight";
  rc.tol = options.tol;
  rc.max_iter = options.max_iter;
  rc.workers = options.workers;

  report.chosen_lambda = result.chosen_lambda_original;
  report.cv_lambdas = result.original_curve.lambdas;
  report.cv_mae = result.original_curve.mae;
  report.cv_chosen_index = result.original_curve.chosen_index;
  for (Index k = 0; k < result.ranks(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    report.ranks.push_back({static_cast<int>(k + 1),
                            uk < result.selected_names.size() ? result.selected_names[uk] : std::string(),
                            result.observed(k), result.p_values(k), result.holm_thresholds[uk],
                            static_cast<bool>(result.holm_reject[uk])});
  }
  report.permutations_run = static_cast<int>(result.null_samples.cols());
  report.nonconverged_fits = result.nonconverged_fits;
  if (options.include_timing)
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SimulateOptions simulate_preset(const std::string& name) {
  SimulateOptions o;
  o.p = {1000, 5000};
  o.beta = {0.0, 0.5, 1.0, 1.5};
  o.rho = {0.0, 0.5, 0.95};
  o.replications = 50;
  o.permutations = 100;
  auto base = name;
  if (name.ends_with("-full")) {
    o.p = {1000, 5000, 10000, 50000, 100000, 250000};
    o.replications = 100;
    base = name.substr(0, name.size() - 5) + "-desk";
  }
  if (base == "fig1-desk") {
    o.study = StudyKind::kPowerRank1;
  } else if (base == "fig2-desk") {
    o.study = StudyKind::kPowerRank2;
  } else if (base == "fig3-desk") {
    o.study = StudyKind::kPrecision;
    o.replications = 100;
  } else if (base == "fig1-n30") {
    o.study = StudyKind::kPowerRank1;
    o.n = 30;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return o;
}

std::vector<std::string> simulate_preset_names() {
  return {"fig1-desk", "fig2-desk", "fig3-desk", "fig1-n30", "fig1-full", "fig2-full", "fig3-full"};
}

std::vector<StudyRow> run_simulate(const SimulateOptions& o, std::ostream& csv, std::ostream* progress) {
  if (o.p.empty() || o.beta.empty() || o.rho.empty()) throw ConfigError("study grid is empty");
  SimConfig base;
  base.n = o.n;
  base.sigma = o.sigma;
  base.replications = o.replications;
  base.permutations = o.permutations;
  base.alpha = o.alpha;
  base.seed = o.seed;
  base.workers = o.workers;
  base.lambda_policy = o.reuse_lambda ? LambdaPolicy::kFixedFromOriginal : LambdaPolicy::kCvPerPermutation;
  base.selection.folds = o.folds;
  base.selection.grid_size = o.grid_size;
  base.selection.grid_ratio = o.grid_ratio;

  std::vector<StudyCell> cells;
  for (Index p : o.p)
    for (double rho : o.rho)
      for (double beta : o.beta) cells.push_back({p, beta, rho});
  for (const auto& cell : cells) cell_config(base, cell, o.study);  // validate the whole grid up front

  write_csv_header(csv, o.study);
  csv.flush();
  std::size_t done = 0;
  return run_study(base, cells, o.study, [&](const StudyRow& row) {
    write_csv_row(csv, row, o.study);
    csv.flush();
    ++done;
    if (progress)
      *progress << "[" << done << "/" << cells.size() << "] p=" << row.p << " beta=" << row.beta
                << " rho=" << row.rho << " estimate=" << row.estimate << std::endl;
  });
}

}  // namespace lassoinf
