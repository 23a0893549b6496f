#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string out_path =
      std::string(KORN_CLI_PATH) + "_out_" + std::to_string(rand()) + ".txt";
  std::string command =
      std::string(KORN_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream text;
  text << in.rdbuf();
  result.output = text.str();
  std::remove(out_path.c_str());
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TEST_CASE("analyze reports a bounded sweep on the chain") {
  RunResult r = run_cli(
      "analyze --structure chain --norm-a patch-iso --norm-b patch-iso0 "
      "--periods 4,8,16 --quiet");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("N,c_min,c_max") != std::string::npos);

  RunResult loud = run_cli(
      "analyze --structure chain --norm-a patch-iso --norm-b patch-iso0 "
      "--periods 4,8,16 --out /dev/null");
  CHECK(loud.exit_code == 0);
  CHECK(loud.output.find("BOUNDED exponent=") != std::string::npos);
}

TEST_CASE("analyze diagnoses the buckling pair as growing") {
  RunResult r = run_cli(
      "analyze --structure chain --norm-a patch-iso --norm-b patch-iso00 "
      "--periods 8,16,32,64 --out /dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("GROWING exponent=") != std::string::npos);
}

TEST_CASE("numerical guard failures exit with code 3") {
  // d |C_N| = 2 * 20002 blows the quadratic-form size guard
  RunResult r = run_cli(
      "analyze --structure chain --norm-a patch-iso --norm-b patch-iso0 "
      "--periods 20002 --quiet");
  CHECK(r.exit_code == 3);
}

TEST_CASE("config errors exit with code 2") {
  CHECK(run_cli("analyze --structure unobtainium --periods 4,8").exit_code ==
        2);
  CHECK(run_cli("analyze --structure chain --periods 4,3").exit_code == 2);
  CHECK(run_cli("analyze --structure zigzag --periods 3,5").exit_code == 2);
  CHECK(run_cli("analyze --structure chain --periods 4,8 --format yaml")
            .exit_code == 2);
  CHECK(run_cli("kernel --structure chain").exit_code == 2);  // no periods
  CHECK(run_cli("fourier-check --structure chain --periods 8 --trials 0")
            .exit_code == 2);
  CHECK(run_cli("fourier-check --structure helix --periods 8").exit_code ==
        2);
  CHECK(run_cli("analyze --structure chain --spec-file x.json --periods 4")
            .exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("kernel summary with and without the closed-form dimension") {
  RunResult with_formula = run_cli(
      "kernel --structure chain --norm-a patch-iso --periods 4,8 --quiet");
  CHECK(with_formula.exit_code == 0);
  auto doc = nlohmann::json::parse(with_formula.output);
  REQUIRE(doc["records"].size() == 2);
  CHECK(doc["records"][0]["dim"] == 2);
  CHECK(doc["records"][0]["formula_dim"] == 2);
  CHECK(doc["records"][0]["match"] == true);

  RunResult no_formula = run_cli(
      "kernel --structure chain --range id,t --norm-a patch-iso --periods 8");
  CHECK(no_formula.exit_code == 0);
  auto doc2 = nlohmann::json::parse(no_formula.output);
  CHECK(doc2["records"][0]["dim"] == 9);
  CHECK(doc2["records"][0]["formula_dim"].is_null());
  CHECK(doc2["records"][0]["match"].is_null());

  RunResult grad = run_cli(
      "kernel --structure square-lattice --norm-a grad-plain --periods 4");
  CHECK(grad.exit_code == 0);
  auto doc3 = nlohmann::json::parse(grad.output);
  CHECK(doc3["records"][0]["dim"] == 2);
}

TEST_CASE("fourier-check emits finite positive ratios") {
  RunResult r = run_cli(
      "fourier-check --structure zigzag --periods 8 --trials 20 --seed 5");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  for (const char* variant : {"grad", "seminorm"}) {
    double lo = doc["records"][0][variant]["min_ratio"].get<double>();
    double hi = doc["records"][0][variant]["max_ratio"].get<double>();
    CHECK(lo > 0.0);
    CHECK(hi >= lo);
  }
}

TEST_CASE("identical config and seed give byte-identical output") {
  std::string out_a = std::string(KORN_CLI_PATH) + "_det_a.csv";
  std::string out_b = std::string(KORN_CLI_PATH) + "_det_b.csv";
  std::string base =
      "fourier-check --structure chain --periods 8,16 --trials 10 --seed 42 "
      "--format csv --quiet --out ";
  CHECK(run_cli(base + out_a).exit_code == 0);
  CHECK(run_cli(base + out_b).exit_code == 0);
  std::string a = slurp(out_a);
  std::string b = slurp(out_b);
  CHECK(!a.empty());
  CHECK(a == b);
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());

  // different seed changes the ratios
  std::string out_c = std::string(KORN_CLI_PATH) + "_det_c.csv";
  CHECK(run_cli("fourier-check --structure chain --periods 8,16 --trials 10 "
                "--seed 43 --format csv --quiet --out " +
                out_c)
            .exit_code == 0);
  CHECK(slurp(out_c) != a);
  std::remove(out_c.c_str());
}

TEST_CASE("spec files work through the CLI") {
  std::string spec_path = std::string(KORN_CLI_PATH) + "_chain.json";
  {
    std::ofstream out(spec_path);
    out << R"({
      "dimension": {"d": 2, "d1": 1, "d2": 1},
      "generators": [{"name": "t", "rotation": [1,0,0,1],
                      "translation": [0,1]}],
      "translation_basis": [{"rotation": [1,0,0,1], "translation": [0,1]}],
      "m0": 1,
      "coset_reps": [{"rotation": [1,0,0,1], "translation": [0,0]}],
      "base_point": [0,0]
    })";
  }
  RunResult r = run_cli("kernel --spec-file " + spec_path +
                        " --range id,t,t^2 --norm-a patch-iso --periods 4");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["records"][0]["dim"] == 2);

  // --range is mandatory for file-based structures
  CHECK(run_cli("kernel --spec-file " + spec_path +
                " --norm-a patch-iso --periods 4")
            .exit_code == 2);
  std::remove(spec_path.c_str());
}

TEST_CASE("catalog directory override") {
  std::string dir = std::string(KORN_CLI_PATH) + "_catalog";
  std::string file = dir + "/chain.json";
  std::string cleanup = "rm -rf " + dir;
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  {
    std::ofstream out(file);
    // a chain with a doubled lattice step
    out << R"({
      "name": "chain",
      "dimension": {"d": 2, "d1": 1, "d2": 1},
      "generators": [{"name": "t", "rotation": [1,0,0,1],
                      "translation": [0,2]}],
      "translation_basis": [{"rotation": [1,0,0,1], "translation": [0,2]}],
      "m0": 1,
      "coset_reps": [{"rotation": [1,0,0,1], "translation": [0,0]}],
      "base_point": [0,0],
      "ranges": {"p2": "id,t,t^2"}
    })";
  }
  RunResult r = run_cli("kernel --structure chain --catalog-dir " + dir +
                        " --norm-a patch-iso --periods 4");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["records"][0]["dim"] == 2);

  // same override through the environment variable
  std::string env_out =
      std::string(KORN_CLI_PATH) + "_env_out.json";
  std::string env_command = "KORN_CATALOG_DIR=" + dir + " " + KORN_CLI_PATH +
                            " kernel --structure chain --norm-a patch-iso "
                            "--periods 4 > " +
                            env_out + " 2>&1";
  CHECK(WEXITSTATUS(std::system(env_command.c_str())) == 0);
  auto env_doc = nlohmann::json::parse(slurp(env_out));
  CHECK(env_doc["records"][0]["dim"] == 2);
  std::remove(env_out.c_str());
  CHECK(std::system(cleanup.c_str()) == 0);
}
