#pragma once

#include <cstddef>
#include <vector>

#include "screenopt/errors.hpp"

namespace screenopt {

/// One realized agent: a skill level and an effort budget. Quality is
/// produced multiplicatively, so the largest signal the agent can exhibit
/// is skill * budget.
struct AgentType {
  double skill = 0.0;
  double budget = 0.0;

  double max_quality() const { return skill * budget; }
};

enum class SkillTier { Low, High };

/// An admission instance: two skill levels straddling the principal's
/// threshold, a common support of n effort budgets, and per-skill budget
/// distributions (the budget mix may be correlated with skill).
///
/// Instances are immutable once validated; every operation on them is pure.
/// Budgets are stored as base values plus an accumulated uniform subsidy so
/// that stacking subsidies is exact: the effective budget is always the one
/// float expression `base[i] + subsidy()`.
class AdmissionGame {
 public:
  /// Validates and builds an instance. Throws Error with code SkillOrdering,
  /// BudgetOrdering or BadDistribution. Budget distributions are accepted
  /// when they sum to 1 within 1e-12 and are renormalized on ingestion.
  static AdmissionGame validated(double skill_low, double skill_high, double tau,
                                 std::vector<double> budgets, double prob_high,
                                 std::vector<double> budget_dist_low,
                                 std::vector<double> budget_dist_high);

  double skill_low() const { return skill_low_; }
  double skill_high() const { return skill_high_; }
  double skill(SkillTier tier) const { return tier == SkillTier::Low ? skill_low_ : skill_high_; }
  double tau() const { return tau_; }
  double prob_high() const { return prob_high_; }
  double subsidy() const { return subsidy_; }
  std::size_t num_budgets() const { return base_budgets_.size(); }
  const std::vector<double>& base_budgets() const { return base_budgets_; }
  const std::vector<double>& budget_dist(SkillTier tier) const {
    return tier == SkillTier::Low ? dist_low_ : dist_high_;
  }

  /// Effective budget of index i (0-based) including any applied subsidy.
  double budget(std::size_t i) const { return base_budgets_.at(i) + subsidy_; }

  /// The agent of a given tier and 0-based budget index.
  AgentType agent(std::size_t i, SkillTier tier) const { return {skill(tier), budget(i)}; }

  /// skill(tier) * budget(i); the canonical expression for type products, so
  /// equality against rule breakpoints built from the same call is exact.
  double quality_product(std::size_t i, SkillTier tier) const { return skill(tier) * budget(i); }

  /// Probability of the joint type (tier, budget index). `index` is 1-based
  /// to match the external schema; throws IndexOutOfRange otherwise.
  double type_probability(SkillTier tier, std::size_t index) const;

  /// Same game with every budget raised by d >= 0. The (0,1] budget bound is
  /// relaxed to (0, 1+d] for the result; rational agents never convert more
  /// than one unit of effort anyway.
  AdmissionGame with_subsidy(double d) const;

 private:
  AdmissionGame() = default;

  double skill_low_ = 0.0;
  double skill_high_ = 0.0;
  double tau_ = 0.0;
  double prob_high_ = 0.0;
  double subsidy_ = 0.0;
  std::vector<double> base_budgets_;
  std::vector<double> dist_low_;
  std::vector<double> dist_high_;
};

/// An admission game together with the allowed uniform-subsidy range.
struct SubsidizedGame {
  AdmissionGame base;
  double d_min = 0.0;
  double d_max = 0.0;

  static SubsidizedGame validated(AdmissionGame base, double d_min, double d_max);
};

inline AdmissionGame apply_subsidy(const AdmissionGame& game, double d) {
  return game.with_subsidy(d);
}

}  // namespace screenopt
