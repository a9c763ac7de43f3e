#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "screenopt/agent.hpp"
#include "screenopt/evaluation.hpp"
#include "screenopt/game.hpp"
#include "screenopt/oracle.hpp"
#include "screenopt/solver.hpp"

namespace screenopt::io {

using nlohmann::json;

/// A parsed game file: the validated instance plus the subsidy range when
/// the file carries `d_min`/`d_max`.
struct GameInput {
  AdmissionGame game;
  std::optional<std::pair<double, double>> subsidy_range;
};

/// Parses the game schema: skill_low, skill_high, tau, budgets, prob_high,
/// budget_dist_low, budget_dist_high, optional d_min/d_max. Throws
/// ParseError on malformed JSON and the validation errors otherwise.
GameInput parse_game(const json& j);
GameInput load_game(const std::string& path);

json game_to_json(const AdmissionGame& game);

json rule_to_json(const AllocationRule& rule);
AllocationRule rule_from_json(const json& j);
AllocationRule load_rule(const std::string& path);

json best_response_to_json(const BestResponse& response);
json report_to_json(const EvaluationReport& report);
std::string report_to_csv(const EvaluationReport& report);

json solve_result_to_json(const SolveResult& result);
json subsidy_result_to_json(const SubsidySolveResult& result);
json lemma_report_to_json(const LemmaReport& report);

/// `q,allocation` samples at the given resolution, with both the attained
/// value and the right limit emitted at every knot so plots show the jumps.
std::string rule_to_csv(const AllocationRule& rule, std::size_t samples, double q_max);

/// Minimal static SVG: the rule's curve, the zero-utility skill lines when a
/// game is supplied, and each type's best-response marker.
std::string rule_to_svg(const AllocationRule& rule, const AdmissionGame* game,
                        std::size_t samples);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace screenopt::io
