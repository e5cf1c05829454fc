#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lassoinf/dataset.hpp"

namespace lassoinf {

struct RankReport {
  int rank = 0;
  std::string name;  // empty when the original fit selected fewer than `rank` features
  double observed = 0.0;
  double p_value = 1.0;
  double holm_threshold = 0.0;
  bool holm_reject = false;

  friend bool operator==(const RankReport&, const RankReport&) = default;
};

struct CorrelationReport {
  std::string name;
  std::optional<double> correlation;  // empty for a constant column

  friend bool operator==(const CorrelationReport&, const CorrelationReport&) = default;
};

/// Everything needed to interpret and reproduce one inference run.
struct RunReport {
  struct Input {
    std::string path;
    std::string response;
    std::string filter;
    Index rows_read = 0;
    Index rows = 0;
    Index columns = 0;
    std::vector<std::string> dropped_columns;
    friend bool operator==(const Input&, const Input&) = default;
  } input;

  struct Config {
    int permutations = 100;
    double alpha = 0.05;
    int max_ranks = 0;
    std::string lambda_policy;
    std::uint64_t seed = 0;
    int folds = 10;
    int grid_size = 100;
    double grid_ratio = 1e-3;
    std::optional<double> lambda;
    std::vector<std::string> forced;
    std::string forced_mode;
    double tol = 1e-7;
    int max_iter = 10000;
    int workers = 1;
    friend bool operator==(const Config&, const Config&) = default;
  } config;

  double chosen_lambda = 0.0;
  std::vector<double> cv_lambdas;
  std::vector<double> cv_mae;
  std::size_t cv_chosen_index = 0;

  std::vector<RankReport> ranks;
  int permutations_run = 0;
  int nonconverged_fits = 0;
  std::vector<CorrelationReport> marginal_correlations;
  std::optional<double> elapsed_seconds;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string to_json_text(const RunReport& report);
RunReport report_from_json_text(const std::string& text);

}  // namespace lassoinf
