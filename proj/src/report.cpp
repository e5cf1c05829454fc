#include "lassoinf/report.hpp"

#include <json.hpp>

namespace lassoinf {

using json = nlohmann::ordered_json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

std::string to_json_text(const RunReport& r) {
  json doc;
  doc["input"] = {{"path", r.input.path},
                  {"response", r.input.response},
                  {"filter", r.input.filter},
                  {"rows_read", r.input.rows_read},
                  {"rows", r.input.rows},
                  {"columns", r.input.columns},
                  {"dropped_columns", r.input.dropped_columns}};
  const auto& c = r.config;
  doc["config"] = {{"permutations", c.permutations},
                   {"alpha", c.alpha},
                   {"max_ranks", c.max_ranks},
                   {"lambda_policy", c.lambda_policy},
                   {"seed", c.seed},
                   {"folds", c.folds},
                   {"grid_size", c.grid_size},
                   {"grid_ratio", c.grid_ratio},
                   {"lambda", optional_number(c.lambda)},
                   {"forced", c.forced},
                   {"forced_mode", c.forced_mode},
                   {"tol", c.tol},
                   {"max_iter", c.max_iter},
                   {"workers", c.workers}};
  doc["lambda"] = {{"chosen", r.chosen_lambda},
                   {"cv", {{"lambdas", r.cv_lambdas}, {"mae", r.cv_mae}, {"chosen_index", r.cv_chosen_index}}}};
  json ranks = json::array();
  for (const auto& k : r.ranks) {
    ranks.push_back({{"rank", k.rank},
                     {"name", k.name},
                     {"observed", k.observed},
                     {"p_value", k.p_value},
                     {"holm_threshold", k.holm_threshold},
                     {"holm_reject", k.holm_reject}});
  }
  doc["inference"] = {{"ranks", ranks},
                      {"permutations_run", r.permutations_run},
                      {"nonconverged_fits", r.nonconverged_fits}};
  json corr = json::array();
  for (const auto& m : r.marginal_correlations)
    corr.push_back({{"name", m.name}, {"correlation", optional_number(m.correlation)}});
  doc["marginal_correlations"] = corr;
  if (r.elapsed_seconds) doc["elapsed_seconds"] = *r.elapsed_seconds;
  return doc.dump(2) + "\n";
}

RunReport report_from_json_text(const std::string& text) {
  const json doc = json::parse(text);
  RunReport r;
  const auto& in = doc.at("input");
  r.input.path = in.at("path").get<std::string>();
  r.input.response = in.at("response").get<std::string>();
  r.input.filter = in.at("filter").get<std::string>();
  r.input.rows_read = in.at("rows_read").get<Index>();
  r.input.rows = in.at("rows").get<Index>();
  r.input.columns = in.at("columns").get<Index>();
  r.input.dropped_columns = in.at("dropped_columns").get<std::vector<std::string>>();

  const auto& c = doc.at("config");
  r.config.permutations = c.at("permutations").get<int>();
  r.config.alpha = c.at("alpha").get<double>();
  r.config.max_ranks = c.at("max_ranks").get<int>();
  r.config.lambda_policy = c.at("lambda_policy").get<std::string>();
  r.config.seed = c.at("seed").get<std::uint64_t>();
  r.config.folds = c.at("folds").get<int>();
  r.config.grid_size = c.at("grid_size").get<int>();
  r.config.grid_ratio = c.at("grid_ratio").get<double>();
  r.config.lambda = read_optional(c.at("lambda"));
  r.config.forced = c.at("forced").get<std::vector<std::string>>();
  r.config.forced_mode = c.at("forced_mode").get<std::string>();
  r.config.tol = c.at("tol").get<double>();
  r.config.max_iter = c.at("max_iter").get<int>();
  r.config.workers = c.at("workers").get<int>();

  const auto& lam = doc.at("lambda");
  r.chosen_lambda = lam.at("chosen").get<double>();
  r.cv_lambdas = lam.at("cv").at("lambdas").get<std::vector<double>>();
  r.cv_mae = lam.at("cv").at("mae").get<std::vector<double>>();
  r.cv_chosen_index = lam.at("cv").at("chosen_index").get<std::size_t>();

  const auto& inf = doc.at("inference");
  for (const auto& k : inf.at("ranks")) {
    r.ranks.push_back({k.at("rank").get<int>(), k.at("name").get<std::string>(), k.at("observed").get<double>(),
                       k.at("p_value").get<double>(), k.at("holm_threshold").get<double>(),
                       k.at("holm_reject").get<bool>()});
  }
  r.permutations_run = inf.at("permutations_run").get<int>();
  r.nonconverged_fits = inf.at("nonconverged_fits").get<int>();
  for (const auto& m : doc.at("marginal_correlations"))
    r.marginal_correlations.push_back({m.at("name").get<std::string>(), read_optional(m.at("correlation"))});
  if (doc.contains("elapsed_seconds")) r.elapsed_seconds = doc.at("elapsed_seconds").get<double>();
  return r;
}

}  // namespace lassoinf
