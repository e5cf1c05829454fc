#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lassoinf/dataset.hpp"
#include "lassoinf/permutation.hpp"

namespace lassoinf {

/// Equicorrelated block of columns [first, first + size) with pairwise correlation rho.
struct Cluster {
  Index first = 0;
  Index size = 10;
  double rho = 0.0;
};

struct CausalEffect {
  Index column = 0;
  double beta = 0.0;
};

struct SimConfig {
  Index n = 50;
  Index p = 1000;
  std::vector<Cluster> clusters;
  std::vector<CausalEffect> causal;
  double sigma = 1.0;
  int replications = 50;
  int permutations = 100;
  double alpha = 0.05;
  int rank = 1;  // rank whose p-value is scored
  LambdaPolicy lambda_policy = LambdaPolicy::kCvPerPermutation;
  SelectionConfig selection;
  std::uint64_t seed = 1;
  int workers = 1;
};

void validate(const SimConfig& config);

/// Standard normal design; cluster columns share a latent factor,
/// X_j = sqrt(rho) Z + sqrt(1 - rho) Z_j.
Eigen::MatrixXd gen_design(const SimConfig& config, int replicate);

/// y = sum_j beta_j X_j + sigma * eps.
Eigen::VectorXd gen_response(const Eigen::MatrixXd& X, const SimConfig& config, int replicate);

/// Design and response of one replicate, columns named x1..xp.
Dataset simulate_dataset(const SimConfig& config, int replicate);

enum class StudyKind { kPowerRank1, kPowerRank2, kPrecision };

StudyKind parse_study_kind(const std::string& name);
std::string to_string(StudyKind kind);

/// One (p, beta, rho) point of a study grid. rho == 0 means independent columns.
struct StudyCell {
  Index p = 1000;
  double beta = 0.0;
  double rho = 0.0;
};

/// Configuration of one cell: causal column 0 carries `beta` (rank-1 and
/// precision studies); for rank 2, column 0 carries 1.5 and column 1 `beta`.
/// With rho > 0 the causal columns sit in a ten-column cluster at column 0.
SimConfig cell_config(const SimConfig& base, const StudyCell& cell, StudyKind kind);

struct StudyRow {
  Index p = 0;
  double beta = 0.0;
  double rho = 0.0;
  int rank = 1;
  double estimate = 0.0;  // power, or exact-column precision
  double se = 0.0;
  int replicates = 0;
  double cluster_rate = 0.0;  // precision studies only
};

double binomial_se(double rate, int replicates);

/// Fraction of replicates whose rank-k p-value is <= alpha.
StudyRow power_cell(const SimConfig& config, const StudyCell& cell);

/// Fraction of replicates whose rank-1 selected column is the causal column,
/// and whose rank-1 column falls in the causal column's cluster.
StudyRow precision_cell(const SimConfig& config, const StudyCell& cell);

using RowCallback = std::function<void(const StudyRow&)>;

/// Power table over a grid for a rank-1 or rank-2 study; `on_row` sees each
/// finished row so long runs can be flushed incrementally.
std::vector<StudyRow> power_study(const SimConfig& base, const std::vector<StudyCell>& cells, StudyKind kind,
                                  const RowCallback& on_row = {});

std::vector<StudyRow> precision_study(const SimConfig& base, const std::vector<StudyCell>& cells,
                                      const RowCallback& on_row = {});

std::vector<StudyRow> run_study(const SimConfig& base, const std::vector<StudyCell>& cells, StudyKind kind,
                                const RowCallback& on_row = {});

void write_csv_header(std::ostream& out, StudyKind kind);
void write_csv_row(std::ostream& out, const StudyRow& row, StudyKind kind);

}  // namespace lassoinf
