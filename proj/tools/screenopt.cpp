// Command-line front end: reads admission games as JSON, solves them,
// evaluates rules, runs the exhaustive verification searches, sweeps
// subsidies, and exports curves for plotting.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "screenopt/example1.hpp"
#include "screenopt/io.hpp"
#include "screenopt/oracle.hpp"
#include "screenopt/random.hpp"
#include "screenopt/solver.hpp"

namespace {

using nlohmann::json;
using namespace screenopt;

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::SearchTooLarge ? 2 : 1;
}

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content << '\n';
  } else {
    io::write_file(output_path, content);
  }
}

void emit_json(const std::string& output_path, const json& j) { emit(output_path, j.dump(2)); }

std::size_t max_evals_from_env() {
  const char* raw = std::getenv("SCREENOPT_MAX_EVALS");
  if (raw == nullptr) return OracleConfig{}.max_evals;
  return static_cast<std::size_t>(std::strtoull(raw, nullptr, 10));
}

struct Options {
  std::string input;
  std::string output;
  std::string rule_path;
  std::string format = "json";
  std::string curve_path;
  std::string family = "multi-stair";
  std::size_t samples = 256;
  std::size_t k = 10;
  std::size_t grid = 1000;
  std::size_t max_jumps = 0;  // 0 = unlimited
  std::size_t random_games = 0;
  std::size_t n_budgets = 2;
  double skill = 0.0;
  double budget = 0.0;
  double eps_l = 0.01;
  double eps_x = 0.001;
  std::optional<double> d_min;
  std::optional<double> d_max;
  std::uint64_t seed = 1;
  bool lemmas = false;
};

OracleConfig oracle_config(const Options& opt) {
  OracleConfig config;
  config.grid_resolution = opt.k;
  config.max_evals = max_evals_from_env();
  if (opt.max_jumps > 0) config.max_jumps = opt.max_jumps;
  return config;
}

int cmd_solve(const Options& opt) {
  const auto input = io::load_game(opt.input);
  const SolveResult result = solve(input.game);
  emit_json(opt.output, io::solve_result_to_json(result));
  if (!opt.curve_path.empty()) {
    const double q_max = result.best_rule.knots().back().q * 1.25 + 1e-9;
    io::write_file(opt.curve_path, io::rule_to_csv(result.best_rule, opt.samples, q_max));
  }
  return 0;
}

int cmd_eval(const Options& opt) {
  const auto input = io::load_game(opt.input);
  const AllocationRule rule = io::load_rule(opt.rule_path);
  const EvaluationReport report = per_type_report(input.game, rule);
  if (opt.format == "csv") {
    emit(opt.output, io::report_to_csv(report));
  } else {
    emit_json(opt.output, io::report_to_json(report));
  }
  return 0;
}

int cmd_best_response(const Options& opt) {
  const AllocationRule rule = io::load_rule(opt.rule_path);
  if (!(opt.skill > 0.0)) {
    throw Error(ErrorCode::BadRange, "--skill must be positive");
  }
  if (!(opt.budget >= 0.0)) {
    throw Error(ErrorCode::BadRange, "--budget must be non-negative");
  }
  const BestResponse response = best_respond(rule, AgentType{opt.skill, opt.budget});
  emit_json(opt.output, io::best_response_to_json(response));
  return 0;
}

json oracle_report_for(const AdmissionGame& game, const Options& opt, bool* pass) {
  const OracleConfig config = oracle_config(opt);
  if (opt.lemmas) {
    const LemmaReport report = lemma_suite(game, config);
    *pass = report.all_pass();
    return io::lemma_report_to_json(report);
  }
  const OracleResult result =
      opt.family == "flat-step" ? step_oracle(game, config) : grid_oracle(game, config);
  *pass = true;
  return json{{"family", opt.family},
              {"best_value", result.best_value},
              {"rules_evaluated", result.rules_evaluated},
              {"best_rule", io::rule_to_json(result.best_rule)}};
}

int cmd_oracle(const Options& opt) {
  bool all_pass = true;
  if (opt.random_games > 0) {
    std::mt19937_64 rng(opt.seed);
    json reports = json::array();
    for (std::size_t g = 0; g < opt.random_games; ++g) {
      const AdmissionGame game = random_game(rng, opt.n_budgets);
      bool pass = true;
      reports.push_back(oracle_report_for(game, opt, &pass));
      all_pass = all_pass && pass;
    }
    emit_json(opt.output, json{{"games", opt.random_games}, {"all_pass", all_pass},
                               {"reports", reports}});
  } else {
    const auto input = io::load_game(opt.input);
    emit_json(opt.output, oracle_report_for(input.game, opt, &all_pass));
  }
  if (!all_pass) {
    std::cerr << json{{"error", to_string(ErrorCode::LemmaViolation)},
                      {"message", "one or more structural assertions failed; see the report"}}
                     .dump()
              << '\n';
    return 1;
  }
  return 0;
}

int cmd_subsidy(const Options& opt) {
  const auto input = io::load_game(opt.input);
  double d_min = 0.0, d_max = 0.0;
  if (opt.d_min || opt.d_max) {
    if (!opt.d_min || !opt.d_max) {
      throw Error(ErrorCode::BadRange, "--d-min and --d-max must be given together");
    }
    d_min = *opt.d_min;
    d_max = *opt.d_max;
  } else if (input.subsidy_range) {
    d_min = input.subsidy_range->first;
    d_max = input.subsidy_range->second;
  } else {
    throw Error(ErrorCode::BadRange,
                "subsidy bounds required: d_min/d_max in the game file or --d-min/--d-max");
  }
  const SubsidizedGame sub = SubsidizedGame::validated(input.game, d_min, d_max);
  emit_json(opt.output, io::subsidy_result_to_json(solve_subsidized(sub, opt.grid)));
  return 0;
}

int cmd_min_subsidy(const Options& opt) {
  const auto input = io::load_game(opt.input);
  const double d = minimal_offline_subsidy(input.game);
  emit_json(opt.output, json{{"min_subsidy", d},
                             {"offline_optimal", offline_optimal(input.game)}});
  return 0;
}

int cmd_example1(const Options& opt) {
  const Example1Report report = run_example1({opt.eps_l, opt.eps_x, 0.5});
  json thresholds = json::array();
  for (const ThresholdEntry& t : report.thresholds) {
    thresholds.push_back(json{{"q_th", t.q_th}, {"strict", t.strict}, {"value", t.value}});
  }
  emit_json(opt.output,
            json{{"game", io::game_to_json(report.game)},
                 {"offline_optimal", report.offline},
                 {"thresholds", thresholds},
                 {"best_threshold_value", report.best_threshold_value},
                 {"lottery",
                  json{{"allocation", report.lottery_allocation},
                       {"value", report.lottery_value},
                       {"utility_high", report.lottery_utility_high},
                       {"utility_low", report.lottery_utility_low}}},
                 {"loss_from_high_cutoffs", report.loss_from_high_cutoffs},
                 {"loss_from_low_cutoffs", report.loss_from_low_cutoffs},
                 {"solve", io::solve_result_to_json(report.solved)}});
  return 0;
}

int cmd_plot(const Options& opt) {
  const AllocationRule rule = io::load_rule(opt.rule_path);
  std::optional<AdmissionGame> game;
  if (!opt.input.empty()) game = io::load_game(opt.input).game;
  if (opt.format == "csv") {
    double q_max = rule.knots().back().q * 1.25 + 1e-9;
    if (game) {
      for (std::size_t i = 0; i < game->num_budgets(); ++i) {
        q_max = std::max(q_max, game->quality_product(i, SkillTier::High) * 1.1);
      }
    }
    emit(opt.output, io::rule_to_csv(rule, opt.samples, q_max));
  } else {
    emit(opt.output, io::rule_to_svg(rule, game ? &*game : nullptr, opt.samples));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal stochastic screening for budget-constrained agents"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* cmd, bool need_input) {
    auto* in = cmd->add_option("-i,--input", opt.input, "game JSON file");
    if (need_input) in->required();
    cmd->add_option("-o,--output", opt.output, "output file (stdout when omitted)");
  };

  auto* c_solve = app.add_subcommand("solve", "find the optimal allocation rule");
  add_io(c_solve, true);
  c_solve->add_option("--curve", opt.curve_path, "also write the winning rule as CSV samples");
  c_solve->add_option("--samples", opt.samples, "curve sample count");

  auto* c_eval = app.add_subcommand("eval", "evaluate a rule against a game");
  add_io(c_eval, true);
  c_eval->add_option("--rule", opt.rule_path, "rule JSON (or a solve output)")->required();
  c_eval->add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* c_br = app.add_subcommand("best-response", "one agent's optimal choice under a rule");
  c_br->add_option("--rule", opt.rule_path, "rule JSON (or a solve output)")->required();
  c_br->add_option("--skill", opt.skill, "agent skill")->required();
  c_br->add_option("--budget", opt.budget, "agent effort budget")->required();
  c_br->add_option("-o,--output", opt.output, "output file (stdout when omitted)");

  auto* c_oracle = app.add_subcommand("oracle", "exhaustive search over broader rule families");
  add_io(c_oracle, false);
  c_oracle->add_option("--family", opt.family, "multi-stair or flat-step")
      ->check(CLI::IsMember({"multi-stair", "flat-step"}));
  c_oracle->add_option("--k,--grid-resolution", opt.k, "height grid resolution");
  c_oracle->add_option("--max-jumps", opt.max_jumps, "cap on jumps (0 = unlimited)");
  c_oracle->add_flag("--lemmas", opt.lemmas, "run the structural assertion suite");
  c_oracle->add_option("--random-games", opt.random_games,
                       "run on this many random games instead of --input");
  c_oracle->add_option("--n-budgets", opt.n_budgets, "budget count for random games");
  c_oracle->add_option("--seed", opt.seed, "seed for random games");

  auto* c_subsidy = app.add_subcommand("subsidy", "optimize the uniform budget subsidy");
  add_io(c_subsidy, true);
  c_subsidy->add_option("--grid", opt.grid, "subsidy grid points");
  c_subsidy->add_option("--d-min", opt.d_min, "lower subsidy bound (overrides the file)");
  c_subsidy->add_option("--d-max", opt.d_max, "upper subsidy bound (overrides the file)");

  auto* c_min = app.add_subcommand("min-subsidy",
                                   "smallest subsidy enabling perfect screening");
  add_io(c_min, true);

  auto* c_ex = app.add_subcommand("example1", "reference instance: cutoffs vs a lottery");
  c_ex->add_option("--eps-l", opt.eps_l, "low-skill offset above 1");
  c_ex->add_option("--eps-x", opt.eps_x, "lottery allocation slack");
  c_ex->add_option("-o,--output", opt.output, "output file (stdout when omitted)");

  auto* c_plot = app.add_subcommand("plot", "export a rule as SVG or CSV samples");
  c_plot->add_option("--rule", opt.rule_path, "rule JSON (or a solve output)")->required();
  c_plot->add_option("-i,--input", opt.input, "game JSON for skill lines and markers");
  c_plot->add_option("-o,--output", opt.output, "output file (stdout when omitted)");
  c_plot->add_option("--format", opt.format, "svg or csv")
      ->check(CLI::IsMember({"svg", "csv"}));
  c_plot->add_option("--samples", opt.samples, "sample count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_solve->parsed()) return cmd_solve(opt);
    if (c_eval->parsed()) return cmd_eval(opt);
    if (c_br->parsed()) return cmd_best_response(opt);
    if (c_oracle->parsed()) return cmd_oracle(opt);
    if (c_subsidy->parsed()) return cmd_subsidy(opt);
    if (c_min->parsed()) return cmd_min_subsidy(opt);
    if (c_ex->parsed()) return cmd_example1(opt);
    if (c_plot->parsed()) return cmd_plot(opt);
  } catch (const Error& e) {
    std::cerr << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Unhandled"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
