// End-to-end checks of the command-line tool: spawns the built binary on
// the sample inputs and inspects outputs and exit codes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int failures = 0;

#define REQUIRE_CLI(cond, msg)                                                  \
  do {                                                                          \
    if (!(cond)) {                                                              \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg       \
                << "\n";                                                        \
      ++failures;                                                               \
    }                                                                           \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("SCREENOPT_BIN");
  if (bin == nullptr) {
    std::cerr << "SCREENOPT_BIN not set\n";
    std::exit(2);
  }
  const std::string command = env_prefix + std::string(bin) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "cannot spawn " << command << "\n";
    std::exit(2);
  }
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    result.output += buffer.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("SCREENOPT_DATA");
  if (dir == nullptr) {
    std::cerr << "SCREENOPT_DATA not set\n";
    std::exit(2);
  }
  return std::string(dir) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

void test_solve_and_eval_round_trip() {
  const std::string game = data_path("example1_game.json");
  const std::string solved = temp_path("screenopt_solved.json");

  RunResult solve = run("solve -i " + game + " -o " + solved);
  REQUIRE_CLI(solve.exit_code == 0, "solve should succeed: " << solve.output);

  const json result = json::parse(std::ifstream(solved));
  REQUIRE_CLI(result["best_candidate"]["kind"] == "no_jump_line", "line wins this instance");
  const double best_value = result["best_value"].get<double>();

  RunResult eval = run("eval -i " + game + " --rule " + solved);
  REQUIRE_CLI(eval.exit_code == 0, "eval should succeed: " << eval.output);
  const json report = json::parse(eval.output);
  const double replayed = report["principal_utility"].get<double>();
  REQUIRE_CLI(std::abs(replayed - best_value) <= 1e-12,
              "re-evaluated value drifted: " << replayed << " vs " << best_value);

  RunResult csv = run("eval -i " + game + " --rule " + solved + " --format csv");
  REQUIRE_CLI(csv.exit_code == 0, "csv eval should succeed");
  REQUIRE_CLI(csv.output.rfind("skill_tier,", 0) == 0, "csv header expected");
}

void test_best_response() {
  const std::string solved = temp_path("screenopt_solved.json");
  RunResult r = run("best-response --rule " + solved + " --skill 2.0 --budget 0.5");
  REQUIRE_CLI(r.exit_code == 0, "best-response should succeed: " << r.output);
  const json j = json::parse(r.output);
  REQUIRE_CLI(j.contains("utility") && j.contains("allocation"), "response fields present");
}

void test_oracle_and_guard() {
  const std::string game = data_path("example1_game.json");
  RunResult ok = run("oracle -i " + game + " --k 8");
  REQUIRE_CLI(ok.exit_code == 0, "oracle should succeed: " << ok.output);

  RunResult lemmas = run("oracle -i " + game + " --k 6 --lemmas");
  REQUIRE_CLI(lemmas.exit_code == 0, "lemma suite should pass here: " << lemmas.output);

  // the evaluation cap is tunable through the environment
  RunResult guarded = run("oracle -i " + game + " --k 4000", "SCREENOPT_MAX_EVALS=100000 ");
  REQUIRE_CLI(guarded.exit_code == 2, "oversized search must exit 2, got "
                                          << guarded.exit_code << ": " << guarded.output);
  REQUIRE_CLI(guarded.output.find("SearchTooLarge") != std::string::npos,
              "guard error should be structured");
  RunResult relaxed = run("oracle -i " + game + " --k 4000", "SCREENOPT_MAX_EVALS=5000000 ");
  REQUIRE_CLI(relaxed.exit_code == 0, "raised cap should let the same search run");
}

void test_seeded_batch_determinism() {
  const std::string args = "oracle --random-games 3 --n-budgets 2 --seed 7 --k 5";
  RunResult first = run(args);
  RunResult second = run(args);
  REQUIRE_CLI(first.exit_code == 0, "seeded batch should succeed: " << first.output);
  REQUIRE_CLI(first.output == second.output, "same seed must reproduce the same report");
}

void test_subsidy_commands() {
  const std::string game = data_path("example1_game.json");
  RunResult swept = run("subsidy -i " + game + " --grid 41");
  REQUIRE_CLI(swept.exit_code == 0, "subsidy should succeed: " << swept.output);
  const json j = json::parse(swept.output);
  REQUIRE_CLI(j["sweep"].size() >= 41, "sweep ledger present");

  RunResult min_d = run("min-subsidy -i " + game);
  REQUIRE_CLI(min_d.exit_code == 0, "min-subsidy should succeed: " << min_d.output);
  REQUIRE_CLI(json::parse(min_d.output).contains("min_subsidy"), "bound reported");
}

void test_example1_command() {
  RunResult r = run("example1 --eps-l 0.01 --eps-x 0.001");
  REQUIRE_CLI(r.exit_code == 0, "example1 should succeed: " << r.output);
  const json j = json::parse(r.output);
  REQUIRE_CLI(j["lottery"]["utility_low"].get<double>() < 0.0, "low tier priced out");
  REQUIRE_CLI(j["lottery"]["utility_high"].get<double>() > 0.0, "high tier stays");
  REQUIRE_CLI(j["solve"]["best_value"].get<double>() >
                  j["best_threshold_value"].get<double>() + 0.05,
              "optimum clears cutoffs");

  RunResult bad = run("example1 --eps-l 0.5");
  REQUIRE_CLI(bad.exit_code == 1, "epsilon out of range must exit 1");
}

void test_plot() {
  const std::string solved = temp_path("screenopt_solved.json");
  const std::string game = data_path("example1_game.json");
  const std::string svg = temp_path("screenopt_rule.svg");
  RunResult r = run("plot --rule " + solved + " -i " + game + " -o " + svg);
  REQUIRE_CLI(r.exit_code == 0, "plot should succeed: " << r.output);
  std::ifstream in(svg);
  std::string head;
  std::getline(in, head);
  REQUIRE_CLI(head.find("<svg") == 0, "svg header expected");

  RunResult csv = run("plot --rule " + solved + " --format csv --samples 32");
  REQUIRE_CLI(csv.exit_code == 0, "csv plot should succeed");
  REQUIRE_CLI(csv.output.rfind("q,allocation", 0) == 0, "csv header expected");
}

void test_malformed_input() {
  const std::string broken = temp_path("screenopt_broken.json");
  std::ofstream(broken) << "{ not json";
  RunResult r = run("solve -i " + broken);
  REQUIRE_CLI(r.exit_code == 1, "malformed JSON must exit 1, got " << r.exit_code);
  REQUIRE_CLI(r.output.find("ParseError") != std::string::npos, "structured parse error");
}

}  // namespace

int main() {
  test_solve_and_eval_round_trip();
  test_best_response();
  test_oracle_and_guard();
  test_seeded_batch_determinism();
  test_subsidy_commands();
  test_example1_command();
  test_plot();
  test_malformed_input();

  if (failures == 0) {
    std::cout << "[PASS] cli end-to-end checks\n";
    return 0;
  }
  std::cerr << failures << " cli check(s) failed\n";
  return 1;
}
