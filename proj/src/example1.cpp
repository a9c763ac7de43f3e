#include "screenopt/example1.hpp"

#include <algorithm>

namespace screenopt {

Example1Report run_example1(const Example1Config& config) {
  if (!(config.eps_skill > 0.0) || config.eps_skill > 0.1 || !(config.eps_alloc > 0.0) ||
      config.eps_alloc > 0.1) {
    throw Error(ErrorCode::BadEpsilon, "both epsilons must lie in (0, 0.1]");
  }
  const double skill_low = 1.0 + config.eps_skill;
  const double skill_high = 2.0;
  const double tau = 1.5;

  Example1Report report{
      AdmissionGame::validated(skill_low, skill_high, tau, {0.5, 1.0}, config.prob_high,
                               {0.5, 0.5}, {0.5, 0.5}),
      0.0, {}, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, SolveResult{}};
  const AdmissionGame& game = report.game;
  report.offline = offline_optimal(game);

  report.thresholds = threshold_sweep(game);
  report.best_threshold_value = 0.0;
  for (const ThresholdEntry& t : report.thresholds) {
    report.best_threshold_value = std::max(report.best_threshold_value, t.value);
  }

  // Lottery at the pivot quality 1 (the largest quality the low-budget high
  // tier can exhibit): allocation low enough that the low tier's minimal
  // effort 1/skill_low exceeds it by eps_alloc.
  const double x = 1.0 - config.eps_skill / (1.0 + config.eps_skill) - config.eps_alloc;
  report.lottery_allocation = x;
  report.lottery_utility_high = x - 1.0 / skill_high;
  report.lottery_utility_low = x - 1.0 / skill_low;
  report.lottery_value = principal_utility(game, AllocationRule::single_option(1.0, x));

  // Cutoffs above 1 pass over the low-budget high tier; cutoffs at or below
  // 1 admit the high-budget low tier.
  report.loss_from_high_cutoffs =
      game.prob_high() * game.budget_dist(SkillTier::High)[0] * (skill_high - tau);
  report.loss_from_low_cutoffs =
      (1.0 - game.prob_high()) * game.budget_dist(SkillTier::Low)[1] * (tau - skill_low);

  report.solved = solve(game);
  return report;
}

}  // namespace screenopt
