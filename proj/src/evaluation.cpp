#include "screenopt/evaluation.hpp"

#include <algorithm>
#include <string>

namespace screenopt {

namespace {
constexpr double kGapFloor = -1e-9;
}

EvaluationReport per_type_report(const AdmissionGame& game, const AllocationRule& rule) {
  EvaluationReport report;
  const std::size_t n = game.num_budgets();
  report.rows.reserve(2 * n);
  for (SkillTier tier : {SkillTier::Low, SkillTier::High}) {
    const double margin = game.skill(tier) - game.tau();
    for (std::size_t i = 0; i < n; ++i) {
      const BestResponse br = best_respond(rule, game.agent(i, tier));
      TypeRow row;
      row.tier = tier;
      row.budget_index = i + 1;
      row.probability = game.type_probability(tier, i + 1);
      row.chosen_quality = br.chosen_quality;
      row.at_right_limit = br.at_right_limit;
      row.effort = br.effort;
      row.allocation = br.allocation;
      row.agent_utility = br.utility;
      row.contribution = row.probability * br.allocation * margin;
      report.principal_utility += row.contribution;
      report.rows.push_back(row);
    }
  }
  report.offline_optimal = offline_optimal(game);
  const double gap = report.offline_optimal - report.principal_utility;
  if (gap < kGapFloor) {
    throw Error(ErrorCode::InternalError,
                "rule beats the offline optimal by " + std::to_string(-gap) +
                    "; best-response computation is inconsistent");
  }
  report.gap = std::max(gap, kGapFloor);
  return report;
}

double principal_utility(const AdmissionGame& game, const AllocationRule& rule) {
  double total = 0.0;
  const std::size_t n = game.num_budgets();
  for (SkillTier tier : {SkillTier::Low, SkillTier::High}) {
    const double margin = game.skill(tier) - game.tau();
    for (std::size_t i = 0; i < n; ++i) {
      const BestResponse br = best_respond(rule, game.agent(i, tier));
      total += game.type_probability(tier, i + 1) * br.allocation * margin;
    }
  }
  return total;
}

double offline_optimal(const AdmissionGame& game) {
  return game.prob_high() * (game.skill_high() - game.tau());
}

double fairness_measure(const AdmissionGame& game, const AllocationRule& rule) {
  return principal_utility(game, rule);
}

std::vector<ThresholdEntry> threshold_sweep(const AdmissionGame& game) {
  std::vector<double> cutoffs{0.0};
  for (std::size_t i = 0; i < game.num_budgets(); ++i) {
    cutoffs.push_back(game.quality_product(i, SkillTier::Low));
    cutoffs.push_back(game.quality_product(i, SkillTier::High));
  }
  std::sort(cutoffs.begin(), cutoffs.end());
  cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());

  std::vector<ThresholdEntry> out;
  out.reserve(2 * cutoffs.size());
  for (double q_th : cutoffs) {
    for (bool strict : {false, true}) {
      const AllocationRule rule = AllocationRule::threshold(q_th, strict);
      out.push_back({strict, q_th, principal_utility(game, rule)});
    }
  }
  return out;
}

}  // namespace screenopt
