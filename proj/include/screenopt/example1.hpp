#pragma once

#include <vector>

#include "screenopt/evaluation.hpp"
#include "screenopt/game.hpp"
#include "screenopt/solver.hpp"

namespace screenopt {

/// The reference two-skill, two-budget instance on which every deterministic
/// cutoff is dominated by a lottery: skills 1 + eps_skill and 2 around a
/// threshold of 3/2, budgets 1/2 and 1. Masses are uniform unless overridden.
struct Example1Config {
  double eps_skill = 0.01;  // how far the low skill sits above 1
  double eps_alloc = 0.001; // how far the lottery sits below the low tier's break-even
  double prob_high = 0.5;
};

struct Example1Report {
  AdmissionGame game;
  double offline = 0.0;

  std::vector<ThresholdEntry> thresholds;
  double best_threshold_value = 0.0;

  // single lottery option at quality 1 with allocation just low enough that
  // only the high tier keeps a strictly positive surplus
  double lottery_allocation = 0.0;
  double lottery_value = 0.0;
  double lottery_utility_high = 0.0;  // positive
  double lottery_utility_low = 0.0;   // negative

  // additive amounts by which cutoffs above/below quality 1 trail the
  // offline optimum: mass * (skill gap on the forfeited side)
  double loss_from_high_cutoffs = 0.0;
  double loss_from_low_cutoffs = 0.0;

  SolveResult solved;
};

/// Builds the instance and evaluates cutoffs, the lottery, and the optimum.
/// Requires both epsilons in (0, 0.1].
Example1Report run_example1(const Example1Config& config = {});

}  // namespace screenopt
