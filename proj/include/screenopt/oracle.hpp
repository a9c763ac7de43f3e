#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "screenopt/agent.hpp"
#include "screenopt/allocation.hpp"
#include "screenopt/game.hpp"

namespace screenopt {

/// Sizing and shape of the exhaustive searches. Jump/step heights are drawn
/// from {0, 1/K, ..., 1} with K = grid_resolution; breakpoints default to
/// {0} plus every type product skill * budget of both tiers, and
/// extra_breakpoints (e.g. midpoints) stress where the optimum may sit.
struct OracleConfig {
  std::size_t grid_resolution = 10;
  std::vector<double> extra_breakpoints;
  std::size_t max_jumps = std::numeric_limits<std::size_t>::max();
  std::size_t max_evals = 10'000'000;
};

struct OracleResult {
  AllocationRule best_rule = AllocationRule::reject_all();
  double best_value = 0.0;
  std::size_t rules_evaluated = 0;
};

/// Numeric check of the structural claims behind the search family, at grid
/// resolution. Each flag is an existence statement over the rules that tie
/// the family optimum within 1e-9.
struct LemmaReport {
  double grid_value = 0.0;
  double step_value = 0.0;
  double best_single_jump_value = 0.0;
  // best value over rules that leave (skill_low, b_1) at zero allocation;
  // when the bottom-exclusion assertion fails, grid_value - this is the
  // price of excluding the bottom type
  double best_zero_bottom_value = 0.0;
  bool first_step_on_line = false;      // some optimum starts on the low-skill line
  bool single_jump_sufficient = false;  // one jump matches the multi-jump optimum
  bool zero_allocation_bottom = false;  // some optimum allocates 0 to (skill_low, b_1)
  bool steps_dominated = false;         // flat steps never beat the slanted family
  std::size_t rules_evaluated = 0;

  bool all_pass() const {
    return first_step_on_line && single_jump_sufficient && zero_allocation_bottom &&
           steps_dominated;
  }
};

/// Breakpoint set used by both searches: {0}, all type products, extras.
std::vector<double> oracle_breakpoints(const AdmissionGame& game, const OracleConfig& config);

/// Exhausts monotone rules that run with slope 1/skill_low between
/// breakpoints and jump by grid heights at them (truncated at allocation 1;
/// the zero rule is included as a baseline), and returns the best by
/// principal utility. Throws SearchTooLarge past 4 budgets or when the
/// enumeration would exceed max_evals rules.
OracleResult grid_oracle(const AdmissionGame& game, const OracleConfig& config);

/// Same search over monotone piecewise-constant rules with grid values that
/// switch on at the breakpoints themselves.
OracleResult step_oracle(const AdmissionGame& game, const OracleConfig& config);

/// Reference maximizer for best responses: evaluates grid_size uniform
/// qualities in [0, max quality] plus every knot and attainable right limit,
/// with the same tie-breaking as best_respond. grid_size must be >= 10.
BestResponse dense_best_response(const AllocationRule& rule, const AgentType& agent,
                                 std::size_t grid_size);

/// Runs both searches and reports the four structural assertions.
LemmaReport lemma_suite(const AdmissionGame& game, const OracleConfig& config);

/// Throws LemmaViolation when a report assertion failed. A violation signals
/// an implementation inconsistency (or a genuinely adversarial instance),
/// not a refutation of the characterization; see the README.
void require_lemmas(const LemmaReport& report);

}  // namespace screenopt
