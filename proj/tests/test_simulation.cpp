#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lassoinf/simulation.hpp"

using namespace lassoinf;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

double correlation(const VectorXd& a, const VectorXd& b) {
  const VectorXd ac = a.array() - a.mean();
  const VectorXd bc = b.array() - b.mean();
  return ac.dot(bc) / (ac.norm() * bc.norm());
}

SimConfig cluster_config(Index n, Index p, double rho) {
  SimConfig c;
  c.n = n;
  c.p = p;
  c.clusters = {{0, 10, rho}};
  c.seed = 21;
  return c;
}

}  // namespace

TEST_CASE("a cluster with rho 0 is the independent design") {
  SimConfig plain;
  plain.n = 30;
  plain.p = 40;
  SimConfig clustered = plain;
  clustered.clusters = {{5, 10, 0.0}};
  CHECK(gen_design(plain, 3) == gen_design(clustered, 3));
}

TEST_CASE("equicorrelated cluster at rho 0.95") {
  const MatrixXd X = gen_design(cluster_config(5000, 12, 0.95), 0);
  for (Index a = 0; a < 10; ++a)
    for (Index b = a + 1; b < 10; ++b) CHECK(std::abs(correlation(X.col(a), X.col(b)) - 0.95) <= 0.02);
  CHECK(std::abs(correlation(X.col(0), X.col(11))) <= 0.05);
  CHECK(std::abs(correlation(X.col(10), X.col(11))) <= 0.05);
}

TEST_CASE("cluster covariance converges to its target") {
  const Index n = 100000;
  const MatrixXd X = gen_design(cluster_config(n, 10, 0.5), 1);
  const MatrixXd centered = X.rowwise() - X.colwise().mean();
  const MatrixXd cov = centered.transpose() * centered / static_cast<double>(n - 1);
  for (Index a = 0; a < 10; ++a)
    for (Index b = 0; b < 10; ++b) CHECK(std::abs(cov(a, b) - (a == b ? 1.0 : 0.5)) <= 0.01);
}

TEST_CASE("marginal variance is one for any rho") {
  for (double rho : {0.0, 0.3, 0.95}) {
    const MatrixXd X = gen_design(cluster_config(20000, 10, rho), 2);
    for (Index j = 0; j < 10; ++j) {
      const VectorXd c = X.col(j).array() - X.col(j).mean();
      CHECK(std::abs(c.squaredNorm() / 19999.0 - 1.0) <= 0.05);
    }
  }
}

TEST_CASE("gen_response") {
  SimConfig c;
  c.n = 40;
  c.p = 6;
  c.causal = {{2, 1.5}};
  const MatrixXd X = gen_design(c, 0);

  SUBCASE("vanishing noise leaves the causal column") {
    SimConfig quiet = c;
    quiet.sigma = 1e-12;
    const VectorXd y = gen_response(X, quiet, 0);
    CHECK((y - 1.5 * X.col(2)).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("noise is shared across effect sizes") {
    SimConfig null = c;
    null.causal = {{2, 0.0}};
    CHECK((gen_response(X, c, 4) - gen_response(X, null, 4) - 1.5 * X.col(2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("effect 1.5 gives correlation near 0.83") {
    SimConfig big = c;
    big.n = 50000;
    big.p = 3;
    const Dataset d = simulate_dataset(big, 0);
    CHECK(std::abs(correlation(d.X.col(2), d.y) - 0.83) <= 0.01);
  }
}

TEST_CASE("replicates are reproducible and distinct") {
  SimConfig c;
  c.n = 20;
  c.p = 15;
  c.causal = {{0, 1.0}};
  const Dataset a = simulate_dataset(c, 2);
  const Dataset b = simulate_dataset(c, 2);
  CHECK(a.X == b.X);
  CHECK(a.y == b.y);
  CHECK(simulate_dataset(c, 3).X != a.X);
  c.seed = 2;
  CHECK(simulate_dataset(c, 2).X != a.X);
  CHECK(a.names.front() == "x1");
  CHECK(a.names.back() == "x15");
}

TEST_CASE("config validation") {
  SimConfig c;
  c.p = 30;
  c.clusters = {{0, 10, 0.5}, {5, 10, 0.5}};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.clusters = {{25, 10, 0.5}};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.clusters = {{0, 10, 1.0}};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.clusters = {{0, 10, 0.5}, {10, 10, 0.95}};
  CHECK_NOTHROW(validate(c));
  c.sigma = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.sigma = 1.0;
  c.causal = {{30, 1.0}};
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("cell_config") {
  SimConfig base;
  const auto r1 = cell_config(base, {500, 0.5, 0.95}, StudyKind::kPowerRank1);
  CHECK(r1.p == 500);
  REQUIRE(r1.clusters.size() == 1);
  CHECK(r1.clusters[0].first == 0);
  CHECK(r1.clusters[0].size == 10);
  CHECK(r1.clusters[0].rho == 0.95);
  REQUIRE(r1.causal.size() == 1);
  CHECK(r1.causal[0].beta == 0.5);
  CHECK(r1.rank == 1);

  const auto r2 = cell_config(base, {1000, 0.0, 0.0}, StudyKind::kPowerRank2);
  CHECK(r2.clusters.empty());
  REQUIRE(r2.causal.size() == 2);
  CHECK(r2.causal[0].column == 0);
  CHECK(r2.causal[0].beta == 1.5);
  CHECK(r2.causal[1].column == 1);
  CHECK(r2.causal[1].beta == 0.0);
  CHECK(r2.rank == 2);

  CHECK(parse_study_kind("precision") == StudyKind::kPrecision);
  CHECK(to_string(StudyKind::kPowerRank2) == "power-rank2");
  CHECK_THROWS_AS(parse_study_kind("power"), ConfigError);
}

TEST_CASE("binomial_se") {
  CHECK(binomial_se(0.5, 100) == 0.05);
  CHECK(binomial_se(0.0, 50) == 0.0);
  CHECK(binomial_se(1.0, 50) == 0.0);
  CHECK(binomial_se(0.2, 25) == doctest::Approx(0.08));
}

TEST_CASE("power cell is reproducible and worker independent") {
  SimConfig base;
  base.n = 30;
  base.replications = 6;
  base.permutations = 19;
  base.selection.folds = 5;
  base.selection.grid_size = 15;
  const StudyCell cell{20, 2.0, 0.0};
  const auto config = cell_config(base, cell, StudyKind::kPowerRank1);
  const auto a = power_cell(config, cell);
  auto parallel = config;
  parallel.workers = 3;
  const auto b = power_cell(parallel, cell);
  CHECK(a.estimate == b.estimate);
  CHECK(a.estimate >= 0.0);
  CHECK(a.estimate <= 1.0);
  CHECK(a.estimate * 6 == doctest::Approx(std::round(a.estimate * 6)));
  CHECK(a.se == binomial_se(a.estimate, 6));
  CHECK(a.replicates == 6);
  CHECK(a.estimate >= 5.0 / 6.0);
}

TEST_CASE("precision cell") {
  SimConfig base;
  base.replications = 30;
  base.selection.grid_size = 30;
  SUBCASE("chance level without signal") {
    const StudyCell cell{200, 0.0, 0.0};
    const auto row = precision_cell(cell_config(base, cell, StudyKind::kPrecision), cell);
    CHECK(row.estimate <= 0.1);
    CHECK(row.cluster_rate == row.estimate);
  }
  SUBCASE("cluster hits contain exact hits") {
    const StudyCell cell{200, 1.0, 0.95};
    const auto row = precision_cell(cell_config(base, cell, StudyKind::kPrecision), cell);
    CHECK(row.cluster_rate >= row.estimate);
    CHECK(row.cluster_rate >= 0.8);
  }
}

TEST_CASE("csv rows") {
  std::ostringstream out;
  write_csv_header(out, StudyKind::kPowerRank1);
  write_csv_row(out, StudyRow{1000, 1.5, 0.0, 1, 0.96, binomial_se(0.96, 50), 50, 0.0}, StudyKind::kPowerRank1);
  CHECK(out.str() == "p,beta,rho,rank,power,se,replicates\n1000,1.5,0,1,0.96,0.02771281292,50\n");

  std::ostringstream prec;
  write_csv_header(prec, StudyKind::kPrecision);
  write_csv_row(prec, StudyRow{1000, 1, 0.95, 1, 0.25, 0.0, 4, 0.75}, StudyKind::kPrecision);
  CHECK(prec.str() == "p,beta,rho,rank,precision,se,replicates,cluster_precision\n1000,1,0.95,1,0.25,0,4,0.75\n");
}
