// Runs the built executable as a subprocess.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LASSOINF_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "lassoinf_cli_test";
  fs::create_directories(dir);
  return dir;
}

// Whitespace table with a row index and a train flag, like the usual public data sets.
fs::path write_table() {
  const auto path = scratch() / "table.txt";
  std::mt19937_64 rng(4);
  std::normal_distribution<double> z;
  std::ofstream out(path);
  out.precision(12);
  out << "\tx1\tx2\tx3\tx4\tx5\ty\ttrain\n";
  for (int i = 0; i < 40; ++i) {
    double x[5];
    for (double& v : x) v = z(rng);
    out << i + 1;
    for (double v : x) out << '\t' << v;
    out << '\t' << 2.0 * x[2] + z(rng) << '\t' << (i % 4 == 3 ? 'F' : 'T') << '\n';
  }
  return path;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  const auto table = write_table().string();
  CHECK(run("infer --input " + table + " --response y --perms 0").code == 2);
  CHECK(run("infer --input " + table).code == 2);
  CHECK(run("infer --input " + table + " --response y --filter train").code == 2);
  CHECK(run("simulate --study power").code == 2);
}

TEST_CASE("data errors exit with 1") {
  CHECK(run("infer --input /nonexistent/x.csv --response y").code == 1);
  const auto bad = scratch() / "bad.csv";
  std::ofstream(bad) << "a,y\n1,2\nzz,3\n";
  CHECK(run("infer --input " + bad.string() + " --response y").code == 1);
  const auto table = write_table().string();
  CHECK(run("infer --input " + table + " --response nope").code == 1);
}

TEST_CASE("infer writes identical reports for identical runs") {
  const auto table = write_table().string();
  const std::string args = "infer --input " + table +
                           " --response y --filter train=T --perms 49 --folds 5 --grid-size 20 --seed 3";
  const auto a = run(args);
  REQUIRE(a.code == 0);
  const auto out = scratch() / "report.json";
  REQUIRE(run(args + " --output " + out.string()).code == 0);
  CHECK(slurp(out) == a.out);
  CHECK(run(args + " --workers 1").out == a.out);
  CHECK(a.out.find("\"rows\": 30") != std::string::npos);
  CHECK(a.out.find("\"name\": \"x3\"") != std::string::npos);
  CHECK(a.out.find("\"train\"") == std::string::npos);
  CHECK(a.out.find("elapsed_seconds") == std::string::npos);
  CHECK(run(args + " --timing").out.find("elapsed_seconds") != std::string::npos);
}

TEST_CASE("simulate output is reproducible") {
  const std::string args = "simulate --p 20 --beta 0,2 --n 25 --reps 3 --perms 9 --folds 5 --grid-size 10";
  const auto a = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out.rfind("p,beta,rho,rank,power,se,replicates\n", 0) == 0);
  CHECK(run(args + " --workers 2").out == a.out);

  const auto config = scratch() / "study.json";
  std::ofstream(config) << R"({"study": "precision", "p": [50], "beta": [0.0], "n": 30, "replications": 20,
                               "folds": 5, "grid_size": 15})";
  const auto prec = run("simulate --config " + config.string());
  REQUIRE(prec.code == 0);
  CHECK(prec.out.rfind("p,beta,rho,rank,precision,se,replicates,cluster_precision\n", 0) == 0);
  CHECK(run("simulate --config " + (scratch() / "missing.json").string()).code == 2);
}
