#include "screenopt/game.hpp"

#include <cmath>
#include <string>

namespace screenopt {

namespace {

constexpr double kDistTolerance = 1e-12;

void check_distribution(const std::vector<double>& dist, std::size_t n, const char* name) {
  if (dist.size() != n) {
    throw Error(ErrorCode::BadDistribution,
                std::string(name) + " must have one entry per budget");
  }
  double sum = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::BadDistribution, std::string(name) + " has negative or non-finite mass");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > kDistTolerance) {
    throw Error(ErrorCode::BadDistribution,
                std::string(name) + " sums to " + std::to_string(sum) + ", expected 1");
  }
}

void renormalize(std::vector<double>& dist) {
  double sum = 0.0;
  for (double p : dist) sum += p;
  for (double& p : dist) p /= sum;
}

}  // namespace

AdmissionGame AdmissionGame::validated(double skill_low, double skill_high, double tau,
                                       std::vector<double> budgets, double prob_high,
                                       std::vector<double> budget_dist_low,
                                       std::vector<double> budget_dist_high) {
  if (!(skill_low > 0.0) || !std::isfinite(skill_low) || !std::isfinite(skill_high) ||
      !std::isfinite(tau) || !(skill_low < tau)) {
    throw Error(ErrorCode::SkillOrdering, "requires 0 < skill_low < tau");
  }
  if (!(tau < skill_high)) {
    throw Error(ErrorCode::SkillOrdering, "requires tau < skill_high");
  }
  if (budgets.empty()) {
    throw Error(ErrorCode::BudgetOrdering, "at least one budget is required");
  }
  double prev = 0.0;
  for (double b : budgets) {
    if (!(b > prev) || !std::isfinite(b)) {
      throw Error(ErrorCode::BudgetOrdering, "budgets must be strictly increasing and positive");
    }
    if (b > 1.0) {
      throw Error(ErrorCode::BudgetOrdering, "budgets must lie in (0, 1]");
    }
    prev = b;
  }
  if (!(prob_high >= 0.0) || !(prob_high <= 1.0)) {
    throw Error(ErrorCode::BadDistribution, "prob_high must lie in [0, 1]");
  }
  check_distribution(budget_dist_low, budgets.size(), "budget_dist_low");
  check_distribution(budget_dist_high, budgets.size(), "budget_dist_high");
  renormalize(budget_dist_low);
  renormalize(budget_dist_high);

  AdmissionGame g;
  g.skill_low_ = skill_low;
  g.skill_high_ = skill_high;
  g.tau_ = tau;
  g.prob_high_ = prob_high;
  g.base_budgets_ = std::move(budgets);
  g.dist_low_ = std::move(budget_dist_low);
  g.dist_high_ = std::move(budget_dist_high);
  return g;
}

double AdmissionGame::type_probability(SkillTier tier, std::size_t index) const {
  if (index < 1 || index > base_budgets_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "budget index " + std::to_string(index) + " out of 1.." +
                    std::to_string(base_budgets_.size()));
  }
  const double marginal = tier == SkillTier::High ? prob_high_ : 1.0 - prob_high_;
  return marginal * budget_dist(tier)[index - 1];
}

AdmissionGame AdmissionGame::with_subsidy(double d) const {
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw Error(ErrorCode::NegativeSubsidy, "subsidy must be a non-negative real");
  }
  AdmissionGame g = *this;
  g.subsidy_ = subsidy_ + d;
  return g;
}

SubsidizedGame SubsidizedGame::validated(AdmissionGame base, double d_min, double d_max) {
  if (!(d_min >= 0.0) || !(d_min <= d_max) || !std::isfinite(d_max)) {
    throw Error(ErrorCode::BadRange, "subsidy range requires 0 <= d_min <= d_max");
  }
  return SubsidizedGame{std::move(base), d_min, d_max};
}

}  // namespace screenopt
