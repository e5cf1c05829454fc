#include "lassoinf/simulation.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "lassoinf/parallel.hpp"
#include "lassoinf/rng.hpp"
#include "lassoinf/standardize.hpp"

namespace lassoinf {

namespace {

enum Stream : std::uint64_t { kDesign = 0, kNoise = 1, kInference = 2, kFactor = 3 };

Rng replicate_stream(const SimConfig& config, int replicate, Stream which) {
  return make_stream(substream_seed(config.seed, static_cast<std::uint64_t>(replicate)), which);
}

const Cluster* cluster_of(const SimConfig& config, Index column) {
  for (const auto& c : config.clusters)
    if (column >= c.first && column < c.first + c.size) return &c;
  return nullptr;
}

}  // namespace

void validate(const SimConfig& config) {
  if (config.n < 2) throw ConfigError("simulation needs n >= 2");
  if (config.p < 1) throw ConfigError("simulation needs p >= 1");
  if (!(config.sigma > 0.0)) throw ConfigError("noise sigma must be positive");
  if (config.replications < 1) throw ConfigError("replications must be at least 1");
  if (config.permutations < 1) throw ConfigError("permutations must be at least 1");
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (config.rank < 1) throw ConfigError("tested rank must be at least 1");
  std::vector<bool> used(static_cast<std::size_t>(config.p), false);
  for (const auto& c : config.clusters) {
    if (!(c.rho >= 0.0 && c.rho < 1.0)) throw ConfigError("cluster rho must lie in [0, 1)");
    if (c.size < 1 || c.first < 0 || c.first + c.size > config.p) throw ConfigError("cluster exceeds the design");
    for (Index j = c.first; j < c.first + c.size; ++j) {
      if (used[static_cast<std::size_t>(j)]) throw ConfigError("clusters overlap");
      used[static_cast<std::size_t>(j)] = true;
    }
  }
  for (const auto& e : config.causal)
    if (e.column < 0 || e.column >= config.p) throw ConfigError("causal column out of range");
}

Eigen::MatrixXd gen_design(const SimConfig& config, int replicate) {
  validate(config);
  Rng rng = replicate_stream(config, replicate, kDesign);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd X(config.n, config.p);
  for (Index j = 0; j < config.p; ++j)
    for (Index i = 0; i < config.n; ++i) X(i, j) = normal(rng);

  Rng factor_rng = replicate_stream(config, replicate, kFactor);
  for (const auto& c : config.clusters) {
    Eigen::VectorXd common(config.n);
    for (Index i = 0; i < config.n; ++i) common(i) = normal(factor_rng);
    if (c.rho == 0.0) continue;
    const double shared = std::sqrt(c.rho);
    const double own = std::sqrt(1.0 - c.rho);
    for (Index j = c.first; j < c.first + c.size; ++j) X.col(j) = shared * common + own * X.col(j);
  }
  return X;
}

Eigen::VectorXd gen_response(const Eigen::MatrixXd& X, const SimConfig& config, int replicate) {
  Rng rng = replicate_stream(config, replicate, kNoise);
  std::normal_distribution<double> normal;
  Eigen::VectorXd y(X.rows());
  for (Index i = 0; i < X.rows(); ++i) y(i) = config.sigma * normal(rng);
  for (const auto& e : config.causal) y += e.beta * X.col(e.column);
  return y;
}

Dataset simulate_dataset(const SimConfig& config, int replicate) {
  Dataset data;
  data.X = gen_design(config, replicate);
  data.y = gen_response(data.X, config, replicate);
  data.names = default_names(config.p);
  return data;
}

StudyKind parse_study_kind(const std::string& name) {
  if (name == "power-rank1") return StudyKind::kPowerRank1;
  if (name == "power-rank2") return StudyKind::kPowerRank2;
  if (name == "precision") return StudyKind::kPrecision;
  throw ConfigError("unknown study kind '" + name + "'");
}

std::string to_string(StudyKind kind) {
  switch (kind) {
    case StudyKind::kPowerRank1: return "power-rank1";
    case StudyKind::kPowerRank2: return "power-rank2";
    case StudyKind::kPrecision: return "precision";
  }
  return "?";
}

SimConfig cell_config(const SimConfig& base, const StudyCell& cell, StudyKind kind) {
  SimConfig config = base;
  config.p = cell.p;
  config.clusters.clear();
  if (cell.rho > 0.0) config.clusters.push_back({0, std::min<Index>(10, cell.p), cell.rho});
  if (kind == StudyKind::kPowerRank2) {
    config.causal = {{0, 1.5}, {1, cell.beta}};
    config.rank = 2;
  } else {
    config.causal = {{0, cell.beta}};
    config.rank = 1;
  }
  validate(config);
  return config;
}

double binomial_se(double rate, int replicates) {
  return std::sqrt(rate * (1.0 - rate) / static_cast<double>(replicates));
}

StudyRow power_cell(const SimConfig& config, const StudyCell& cell) {
  validate(config);
  std::vector<char> hit(static_cast<std::size_t>(config.replications), 0);
  parallel_for(config.replications, config.workers, [&](int r) {
    const Dataset data = simulate_dataset(config, r);
    InferenceConfig inference;
    inference.permutations = config.permutations;
    inference.alpha = config.alpha;
    inference.max_ranks = config.rank;
    inference.lambda_policy = config.lambda_policy;
    inference.selection = config.selection;
    inference.seed = substream_seed(substream_seed(config.seed, static_cast<std::uint64_t>(r)), kInference);
    const auto result = permutation_test(data, inference);
    const auto k = static_cast<Index>(config.rank);
    hit[static_cast<std::size_t>(r)] = result.p_values.size() >= k && result.p_values(k - 1) <= config.alpha;
  });
  int hits = 0;
  for (char h : hit) hits += h;
  StudyRow row{cell.p, cell.beta, cell.rho, config.rank, 0.0, 0.0, config.replications, 0.0};
  row.estimate = static_cast<double>(hits) / config.replications;
  row.se = binomial_se(row.estimate, config.replications);
  return row;
}

StudyRow precision_cell(const SimConfig& config, const StudyCell& cell) {
  validate(config);
  if (config.causal.empty()) throw ConfigError("precision study needs a causal column");
  const Index target = config.causal.front().column;
  const Cluster* cluster = cluster_of(config, target);
  std::vector<char> exact(static_cast<std::size_t>(config.replications), 0);
  std::vector<char> near(static_cast<std::size_t>(config.replications), 0);
  parallel_for(config.replications, config.workers, [&](int r) {
    const Dataset data = simulate_dataset(config, r);
    const auto scaled = standardize(data);
    const Eigen::VectorXd weights = Eigen::VectorXd::Ones(data.cols());
    const std::uint64_t seed = substream_seed(substream_seed(config.seed, static_cast<std::uint64_t>(r)), kInference);
    Rng stream = make_stream(seed, 0);
    const auto selection = select_lambda(scaled.data, weights, config.selection, stream());
    const auto fit = fit_lasso<double>(scaled.data.X, scaled.data.y, selection.lambda, weights, config.selection.lasso);
    if (fit.ranked.empty()) return;
    const Index top = fit.ranked.front().column;
    exact[static_cast<std::size_t>(r)] = top == target;
    near[static_cast<std::size_t>(r)] =
        cluster ? (top >= cluster->first && top < cluster->first + cluster->size) : top == target;
  });
  int exact_hits = 0;
  int near_hits = 0;
  for (std::size_t r = 0; r < exact.size(); ++r) {
    exact_hits += exact[r];
    near_hits += near[r];
  }
  StudyRow row{cell.p, cell.beta, cell.rho, 1, 0.0, 0.0, config.replications, 0.0};
  row.estimate = static_cast<double>(exact_hits) / config.replications;
  row.se = binomial_se(row.estimate, config.replications);
  row.cluster_rate = static_cast<double>(near_hits) / config.replications;
  return row;
}

std::vector<StudyRow> power_study(const SimConfig& base, const std::vector<StudyCell>& cells, StudyKind kind,
                                  const RowCallback& on_row) {
  if (kind == StudyKind::kPrecision) throw ConfigError("power_study takes a power study kind");
  std::vector<StudyRow> rows;
  for (const auto& cell : cells) {
    rows.push_back(power_cell(cell_config(base, cell, kind), cell));
    if (on_row) on_row(rows.back());
  }
  return rows;
}

std::vector<StudyRow> precision_study(const SimConfig& base, const std::vector<StudyCell>& cells,
                                      const RowCallback& on_row) {
  std::vector<StudyRow> rows;
  for (const auto& cell : cells) {
    rows.push_back(precision_cell(cell_config(base, cell, StudyKind::kPrecision), cell));
    if (on_row) on_row(rows.back());
  }
  return rows;
}

std::vector<StudyRow> run_study(const SimConfig& base, const std::vector<StudyCell>& cells, StudyKind kind,
                                const RowCallback& on_row) {
  return kind == StudyKind::kPrecision ? precision_study(base, cells, on_row)
                                       : power_study(base, cells, kind, on_row);
}

void write_csv_header(std::ostream& out, StudyKind kind) {
  if (kind == StudyKind::kPrecision) {
    out << "p,beta,rho,rank,precision,se,replicates,cluster_precision\n";
  } else {
    out << "p,beta,rho,rank,power,se,replicates\n";
  }
}

void write_csv_row(std::ostream& out, const StudyRow& row, StudyKind kind) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(10) << row.p << ',' << row.beta << ',' << row.rho << ',' << row.rank << ','
      << row.estimate << ',' << row.se << ',' << row.replicates;
  if (kind == StudyKind::kPrecision) out << ',' << row.cluster_rate;
  out << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace lassoinf
