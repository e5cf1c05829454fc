#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lassoinf/covariates.hpp"
#include "lassoinf/report.hpp"
#include "lassoinf/simulation.hpp"
#include "lassoinf/table_io.hpp"

namespace lassoinf {

struct InferOptions {
  std::string input;
  std::string response;
  std::vector<std::string> drop;
  std::optional<RowFilter> filter;
  int permutations = 100;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  int max_ranks = 0;
  bool reuse_lambda = false;
  std::optional<double> lambda;
  std::vector<std::string> forced;
  ForcingMode forced_mode = ForcingMode::kZeroWeight;
  std::optional<double> adaptive_nu;
  int folds = 10;
  int grid_size = 100;
  double grid_ratio = 1e-3;
  double tol = 1e-7;
  int max_iter = 10000;
  int workers = 1;
  bool include_timing = false;
};

/// Load, standardize, select lambda and run the permutation test. Constant
/// predictor columns are dropped and listed in the report.
RunReport run_infer(const InferOptions& options);

struct SimulateOptions {
  StudyKind study = StudyKind::kPowerRank1;
  std::vector<Index> p{1000};
  std::vector<double> beta{0.0, 0.5, 1.0, 1.5};
  std::vector<double> rho{0.0};
  Index n = 50;
  double sigma = 1.0;
  int replications = 50;
  int permutations = 100;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  int folds = 10;
  int grid_size = 100;
  double grid_ratio = 1e-3;
  bool reuse_lambda = false;
  int workers = 1;
};

/// Named study setups: fig1-desk, fig2-desk, fig3-desk, fig1-n30 and the
/// full-size fig1-full, fig2-full, fig3-full.
SimulateOptions simulate_preset(const std::string& name);
std::vector<std::string> simulate_preset_names();

/// Writes the study table as CSV, flushing after every row. Progress lines go
/// to `progress` when given.
std::vector<StudyRow> run_simulate(const SimulateOptions& options, std::ostream& csv, std::ostream* progress = nullptr);

}  // namespace lassoinf
