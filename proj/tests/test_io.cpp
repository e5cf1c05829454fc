#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lassoinf/commands.hpp"
#include "lassoinf/report.hpp"
#include "lassoinf/table_io.hpp"
#include "oracles.hpp"

using namespace lassoinf;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

LoadedTable parse(const std::string& text, const TableOptions& options) {
  std::istringstream in(text);
  return parse_table(in, options, "mem");
}

std::string error_of(const std::string& text, const TableOptions& options) {
  try {
    parse(text, options);
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

// Writes a small CSV with one informative column to a temporary file.
std::filesystem::path write_csv(const std::string& stem, Index n, Index p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const MatrixXd X = oracle::gaussian_matrix(n, p, rng);
  const VectorXd y = 1.5 * X.col(1) + oracle::gaussian_vector(n, rng);
  const auto path = std::filesystem::temp_directory_path() / (stem + ".csv");
  std::ofstream out(path);
  out.precision(17);
  out << "y";
  for (Index j = 0; j < p; ++j) out << ",v" << j;
  out << '\n';
  for (Index i = 0; i < n; ++i) {
    out << y(i);
    for (Index j = 0; j < p; ++j) out << ',' << X(i, j);
    out << '\n';
  }
  return path;
}

}  // namespace

TEST_CASE("whitespace table with row index and train flag") {
  const std::string text =
      "\tlcavol\tage\tlpsa\ttrain\n"
      "1\t-0.58\t50\t-0.43\tT\n"
      "2\t-0.99\t58\t-0.16\tF\n"
      "3\t-0.51\t74\t-0.16\tT\n"
      "4\t-1.20\t58\t-0.16\tT\n";
  TableOptions options;
  options.response = "lpsa";
  options.filter = parse_row_filter("train=T");
  const auto t = parse(text, options);
  CHECK(t.data.rows() == 3);
  CHECK(t.data.cols() == 2);
  CHECK(t.data.names == std::vector<std::string>{"lcavol", "age"});
  CHECK(t.data.X(2, 0) == -1.20);
  CHECK(t.data.X(1, 1) == 74.0);
  CHECK(t.data.y(0) == -0.43);
  CHECK(t.digest.rows_read == 4);
  CHECK(t.digest.rows_kept == 3);
}

TEST_CASE("csv table") {
  const std::string text = "a,\"b\",y\n1,2,3\n4,5,6\n7,8,10\n";
  TableOptions options;
  options.response = "y";
  const auto t = parse(text, options);
  CHECK(t.data.cols() == 2);
  CHECK(t.data.names == std::vector<std::string>{"a", "b"});
  CHECK(t.data.y == (VectorXd(3) << 3, 6, 10).finished());

  options.drop = {"a"};
  const auto dropped = parse(text, options);
  CHECK(dropped.data.names == std::vector<std::string>{"b"});
  CHECK(dropped.digest.dropped_columns == std::vector<std::string>{"a"});
}

TEST_CASE("table errors name the offending place") {
  TableOptions options;
  options.response = "y";
  const std::string bad_cell = error_of("a,y\n1,2\nfoo,3\n", options);
  CHECK(bad_cell.find(":3:") != std::string::npos);
  CHECK(bad_cell.find("'a'") != std::string::npos);
  CHECK(bad_cell.find("foo") != std::string::npos);

  const std::string ragged = error_of("a,b,y\n1,2,3\n1,2,3\n1,2\n", options);
  CHECK(ragged.find(":4:") != std::string::npos);

  options.response = "z";
  CHECK(error_of("a,y\n1,2\n", options).find("'z'") != std::string::npos);
  options.response = "y";
  CHECK_THROWS_AS(parse("", options), DataError);
  CHECK_THROWS_AS(parse("a,y\n", options), DataError);
  options.filter = RowFilter{"a", "9"};
  CHECK_THROWS_AS(parse("a,b,y\n1,2,3\n4,5,6\n", options), DataError);
  options.filter = RowFilter{"q", "9"};
  CHECK_THROWS_AS(parse("a,b,y\n1,2,3\n4,5,6\n", options), DataError);
  options.filter.reset();
  options.drop = {"nope"};
  CHECK_THROWS_AS(parse("a,b,y\n1,2,3\n4,5,6\n", options), DataError);
  CHECK_THROWS_AS(load_table("/nonexistent/table.csv", TableOptions{"y", {}, {}}), DataError);
}

TEST_CASE("parse_row_filter") {
  const auto f = parse_row_filter("train=T");
  CHECK(f.column == "train");
  CHECK(f.value == "T");
  CHECK(parse_row_filter("k=").value.empty());
  CHECK_THROWS_AS(parse_row_filter("train"), ConfigError);
  CHECK_THROWS_AS(parse_row_filter("=T"), ConfigError);
}

TEST_CASE("report json round trip") {
  RunReport r;
  r.input = {"data.csv", "y", "train=T", 97, 67, 8, {"id"}};
  r.config.lambda_policy = "cv_per_permutation";
  r.config.seed = 18446744073709551557ULL;
  r.config.forced = {"age"};
  r.config.forced_mode = "zero-weight";
  r.chosen_lambda = 0.123456789012345678;
  r.cv_lambdas = {1.0, 0.1};
  r.cv_mae = {0.9, 0.7};
  r.cv_chosen_index = 1;
  r.ranks = {{1, "lcavol", 3.25, 1.0 / 1000.0, 0.05 / 2, true}, {2, "", 0.0, 1.0, 0.05, false}};
  r.permutations_run = 999;
  r.marginal_correlations = {{"lcavol", 0.7344603}, {"flat", std::nullopt}};
  const std::string text = to_json_text(r);
  CHECK(report_from_json_text(text) == r);
  CHECK(to_json_text(report_from_json_text(text)) == text);
  CHECK(text.find("elapsed_seconds") == std::string::npos);

  r.config.lambda = 0.5;
  r.elapsed_seconds = 1.25;
  CHECK(report_from_json_text(to_json_text(r)) == r);
}

TEST_CASE("run_infer end to end") {
  const auto path = write_csv("lassoinf_infer_test", 40, 12, 3);
  InferOptions options;
  options.input = path.string();
  options.response = "y";
  options.permutations = 19;
  options.folds = 5;
  options.grid_size = 20;
  options.seed = 7;
  const auto a = run_infer(options);
  CHECK(a.input.rows == 40);
  CHECK(a.input.columns == 12);
  REQUIRE_FALSE(a.ranks.empty());
  CHECK(a.ranks[0].name == "v1");
  CHECK(a.ranks[0].p_value == 1.0 / 20.0);
  CHECK(a.permutations_run == 19);
  CHECK(a.marginal_correlations.size() == 12);
  CHECK_FALSE(a.elapsed_seconds.has_value());

  options.workers = 2;
  const auto b = run_infer(options);
  CHECK(b.config.workers == 2);
  auto b_same = b;
  b_same.config.workers = 1;
  CHECK(to_json_text(b_same) == to_json_text(a));

  options.max_ranks = 2;
  options.forced = {"v0"};
  const auto forced = run_infer(options);
  for (const auto& rank : forced.ranks) CHECK(rank.name != "v0");
  CHECK(forced.config.forced == std::vector<std::string>{"v0"});

  options.forced = {"missing"};
  CHECK_THROWS_AS(run_infer(options), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("run_simulate writes a reproducible table") {
  SimulateOptions options;
  options.p = {15};
  options.beta = {0.0, 2.0};
  options.n = 25;
  options.replications = 3;
  options.permutations = 9;
  options.folds = 5;
  options.grid_size = 10;
  std::ostringstream a;
  std::ostringstream b;
  const auto rows = run_simulate(options, a);
  run_simulate(options, b);
  CHECK(a.str() == b.str());
  CHECK(rows.size() == 2);
  CHECK(a.str().rfind("p,beta,rho,rank,power,se,replicates\n", 0) == 0);

  CHECK_THROWS_AS(simulate_preset("no-such-preset"), ConfigError);
  for (const auto& name : simulate_preset_names()) CHECK_NOTHROW(simulate_preset(name));
}
