#pragma once

#include <cstddef>
#include <vector>

#include "screenopt/agent.hpp"
#include "screenopt/allocation.hpp"
#include "screenopt/game.hpp"

namespace screenopt {

/// One line per (skill tier, budget index): the type's mass, its best
/// response, and its signed contribution to the principal's objective.
struct TypeRow {
  SkillTier tier = SkillTier::Low;
  std::size_t budget_index = 0;  // 1-based, matching the external schema
  double probability = 0.0;
  double chosen_quality = 0.0;
  bool at_right_limit = false;
  double effort = 0.0;
  double allocation = 0.0;
  double agent_utility = 0.0;
  double contribution = 0.0;  // probability * allocation * (skill - tau)
};

struct EvaluationReport {
  std::vector<TypeRow> rows;
  double principal_utility = 0.0;
  double offline_optimal = 0.0;
  double gap = 0.0;  // offline_optimal - principal_utility, floored at -1e-9
};

/// Expected allocation-weighted surplus sum over all 2n types of
/// P(type) * allocation(best response) * (skill - tau). The allocation used
/// is the one the agent attains, including right-limit choices at jumps.
double principal_utility(const AdmissionGame& game, const AllocationRule& rule);

/// Full-information benchmark: admit exactly the above-threshold skill tier,
/// so prob_high * (skill_high - tau).
double offline_optimal(const AdmissionGame& game);

/// The fairness objective coincides with the principal's objective: higher
/// allocation to higher skill is scored identically by both.
double fairness_measure(const AdmissionGame& game, const AllocationRule& rule);

/// Tabulates every type's best response. A rule beating the offline optimal
/// by more than 1e-9 indicates a best-response bug and raises InternalError.
EvaluationReport per_type_report(const AdmissionGame& game, const AllocationRule& rule);

struct ThresholdEntry {
  bool strict = false;
  double q_th = 0.0;
  double value = 0.0;
};

/// Evaluates every weak and strict cutoff whose outcome can differ: cutoffs
/// at 0 and at each type product (between products the admitted set cannot
/// change). Returns entries sorted by (q_th, strict).
std::vector<ThresholdEntry> threshold_sweep(const AdmissionGame& game);

}  // namespace screenopt
