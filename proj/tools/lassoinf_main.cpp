// Command-line front end: `lassoinf infer` and `lassoinf simulate`.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lassoinf/commands.hpp"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lassoinf::DataError("cannot write '" + path + "'");
  out << text;
}

/// Overlays keys from a JSON study description onto `o`.
void apply_sim_config(const std::string& path, lassoinf::SimulateOptions& o) {
  std::ifstream in(path);
  if (!in) throw lassoinf::ConfigError("cannot open config '" + path + "'");
  const auto doc = nlohmann::json::parse(in);
  if (doc.contains("preset")) o = lassoinf::simulate_preset(doc["preset"].get<std::string>());
  if (doc.contains("study")) o.study = lassoinf::parse_study_kind(doc["study"].get<std::string>());
  if (doc.contains("p")) o.p = doc["p"].get<std::vector<lassoinf::Index>>();
  if (doc.contains("beta")) o.beta = doc["beta"].get<std::vector<double>>();
  if (doc.contains("rho")) o.rho = doc["rho"].get<std::vector<double>>();
  if (doc.contains("n")) o.n = doc["n"].get<lassoinf::Index>();
  if (doc.contains("sigma")) o.sigma = doc["sigma"].get<double>();
  if (doc.contains("replications")) o.replications = doc["replications"].get<int>();
  if (doc.contains("permutations")) o.permutations = doc["permutations"].get<int>();
  if (doc.contains("alpha")) o.alpha = doc["alpha"].get<double>();
  if (doc.contains("seed")) o.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("folds")) o.folds = doc["folds"].get<int>();
  if (doc.contains("grid_size")) o.grid_size = doc["grid_size"].get<int>();
  if (doc.contains("grid_ratio")) o.grid_ratio = doc["grid_ratio"].get<double>();
  if (doc.contains("reuse_lambda")) o.reuse_lambda = doc["reuse_lambda"].get<bool>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation p-values for features selected by the Lasso"};
  app.require_subcommand(1);

  lassoinf::InferOptions infer;
  std::string infer_output = "-";
  std::string filter_text;
  std::string forced_text;
  std::string drop_text;
  std::string forced_mode = "zero-weight";
  auto* infer_cmd = app.add_subcommand("infer", "Run the randomization test on a data table");
  infer_cmd->add_option("--input", infer.input, "Delimited table with a header row")->required();
  infer_cmd->add_option("--response", infer.response, "Response column name")->required();
  infer_cmd->add_option("--filter", filter_text, "Keep rows where column=value (e.g. train=T)");
  infer_cmd->add_option("--drop", drop_text, "Comma-separated columns to ignore");
  infer_cmd->add_option("--perms", infer.permutations, "Number of permutations B")->default_val(100);
  infer_cmd->add_option("--alpha", infer.alpha, "Family-wise significance level")->default_val(0.05);
  infer_cmd->add_option("--seed", infer.seed, "Master random seed")->default_val(1);
  infer_cmd->add_option("--max-ranks", infer.max_ranks, "Highest rank to test (0: all selected)")->default_val(0);
  infer_cmd->add_flag("--reuse-lambda", infer.reuse_lambda, "Reuse the original lambda for every permutation");
  infer_cmd->add_option("--lambda", infer.lambda, "Fixed lambda for the original fit (skips cross-validation)");
  infer_cmd->add_option("--forced", forced_text, "Comma-separated covariates forced into the model");
  infer_cmd->add_option("--forced-mode", forced_mode, "How forced covariates enter")
      ->check(CLI::IsMember({"residualize", "zero-weight"}));
  infer_cmd->add_option("--adaptive-nu", infer.adaptive_nu, "Use adaptive weights 1/|slope|^nu");
  infer_cmd->add_option("--folds", infer.folds, "Cross-validation folds")->default_val(10);
  infer_cmd->add_option("--grid-size", infer.grid_size, "Lambda grid length")->default_val(100);
  infer_cmd->add_option("--grid-ratio", infer.grid_ratio, "Smallest/largest lambda")->default_val(1e-3);
  infer_cmd->add_option("--tol", infer.tol, "Coordinate descent tolerance")->default_val(1e-7);
  infer_cmd->add_option("--max-iter", infer.max_iter, "Coordinate descent sweep cap")->default_val(10000);
  infer_cmd->add_option("--workers", infer.workers, "Worker threads")->default_val(1);
  infer_cmd->add_flag("--timing", infer.include_timing, "Record elapsed time in the report");
  infer_cmd->add_option("--output", infer_output, "Report path ('-' for stdout)");

  lassoinf::SimulateOptions sim;
  std::string sim_study = "power-rank1";
  std::string sim_preset;
  std::string sim_config;
  std::string sim_output = "-";
  std::vector<lassoinf::Index> sim_p;
  std::vector<double> sim_beta;
  std::vector<double> sim_rho;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a power or precision study");
  sim_cmd->add_option("--study", sim_study, "power-rank1 | power-rank2 | precision")
      ->check(CLI::IsMember({"power-rank1", "power-rank2", "precision"}));
  sim_cmd->add_option("--preset", sim_preset, "Named study setup")
      ->check(CLI::IsMember(lassoinf::simulate_preset_names()));
  sim_cmd->add_option("--config", sim_config, "JSON file with study settings");
  sim_cmd->add_option("--p", sim_p, "Predictor counts")->delimiter(',');
  sim_cmd->add_option("--beta", sim_beta, "Effect sizes")->delimiter(',');
  sim_cmd->add_option("--rho", sim_rho, "Cluster correlations (0: independent)")->delimiter(',');
  auto* opt_n = sim_cmd->add_option("--n", sim.n, "Observations per data set");
  auto* opt_sigma = sim_cmd->add_option("--sigma", sim.sigma, "Noise SD");
  auto* opt_reps = sim_cmd->add_option("--reps", sim.replications, "Replicates per cell");
  auto* opt_perms = sim_cmd->add_option("--perms", sim.permutations, "Permutations per replicate");
  auto* opt_alpha = sim_cmd->add_option("--alpha", sim.alpha, "Significance level");
  auto* opt_seed = sim_cmd->add_option("--seed", sim.seed, "Master random seed");
  auto* opt_folds = sim_cmd->add_option("--folds", sim.folds, "Cross-validation folds");
  auto* opt_grid = sim_cmd->add_option("--grid-size", sim.grid_size, "Lambda grid length");
  auto* opt_ratio = sim_cmd->add_option("--grid-ratio", sim.grid_ratio, "Smallest/largest lambda");
  auto* opt_reuse = sim_cmd->add_flag("--reuse-lambda", sim.reuse_lambda, "Reuse the original lambda");
  auto* opt_workers = sim_cmd->add_option("--workers", sim.workers, "Worker threads");
  sim_cmd->add_option("--output", sim_output, "CSV path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*infer_cmd) {
      if (infer.permutations < 1) throw lassoinf::ConfigError("--perms must be at least 1");
      if (!filter_text.empty()) infer.filter = lassoinf::parse_row_filter(filter_text);
      infer.drop = split_list(drop_text);
      infer.forced = split_list(forced_text);
      infer.forced_mode = forced_mode == "residualize" ? lassoinf::ForcingMode::kResidualize
                                                       : lassoinf::ForcingMode::kZeroWeight;
      const auto report = lassoinf::run_infer(infer);
      write_output(infer_output, lassoinf::to_json_text(report));
      return 0;
    }

    // Precedence: preset, then config file, then explicit flags.
    lassoinf::SimulateOptions options;
    if (!sim_preset.empty()) options = lassoinf::simulate_preset(sim_preset);
    if (!sim_config.empty()) apply_sim_config(sim_config, options);
    if (sim_cmd->count("--study")) options.study = lassoinf::parse_study_kind(sim_study);
    if (!sim_p.empty()) options.p = sim_p;
    if (!sim_beta.empty()) options.beta = sim_beta;
    if (!sim_rho.empty()) options.rho = sim_rho;
    if (opt_n->count()) options.n = sim.n;
    if (opt_sigma->count()) options.sigma = sim.sigma;
    if (opt_reps->count()) options.replications = sim.replications;
    if (opt_perms->count()) options.permutations = sim.permutations;
    if (opt_alpha->count()) options.alpha = sim.alpha;
    if (opt_seed->count()) options.seed = sim.seed;
    if (opt_folds->count()) options.folds = sim.folds;
    if (opt_grid->count()) options.grid_size = sim.grid_size;
    if (opt_ratio->count()) options.grid_ratio = sim.grid_ratio;
    if (opt_reuse->count()) options.reuse_lambda = sim.reuse_lambda;
    if (opt_workers->count()) options.workers = sim.workers;

    if (sim_output.empty() || sim_output == "-") {
      lassoinf::run_simulate(options, std::cout, &std::cerr);
    } else {
      std::ofstream out(sim_output, std::ios::binary);
      if (!out) throw lassoinf::DataError("cannot write '" + sim_output + "'");
      lassoinf::run_simulate(options, out, &std::cerr);
    }
    return 0;
  } catch (const lassoinf::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}
