#pragma once

#include "screenopt/allocation.hpp"
#include "screenopt/game.hpp"

namespace screenopt {

/// A quality/allocation pair offered by a rule.
struct MenuOption {
  double quality = 0.0;
  double allocation = 0.0;
};

/// An agent's utility-maximizing choice under a rule.
///
/// `at_right_limit` marks choices taken just above an upward discontinuity:
/// the agent exhibits quality chosen_quality + epsilon for vanishing epsilon
/// and collects the post-jump allocation. The recorded effort and utility are
/// the limits themselves.
struct BestResponse {
  double chosen_quality = 0.0;
  bool at_right_limit = false;
  double effort = 0.0;
  double allocation = 0.0;
  double utility = 0.0;
};

/// Absolute tolerance under which two candidate utilities count as tied.
inline constexpr double kTieTolerance = 1e-9;

/// A menu option is feasible when its minimal effort quality/skill is both
/// affordable (within budget) and rational (utility would be non-negative):
/// quality/skill <= min(budget, allocation).
bool is_feasible(const MenuOption& option, const AgentType& agent);

/// Maximizes allocation - quality/skill over qualities in [0, skill*budget].
/// Jumps are graded at their right limit, attainable whenever the jump sits
/// strictly below the agent's maximum quality. Ties within kTieTolerance go
/// to the smallest quality, preferring the exactly-attained point over the
/// right-limit point at the same quality. The option (0, 0) is always
/// available, so the returned utility is never negative.
///
/// Works for any piecewise rule with non-negative segment slopes (the
/// running-maximum invariance checks evaluate rules before they are made
/// monotone); within each segment utility is linear, so the proper candidate
/// set is the knots, their right limits, and the quality cap.
BestResponse best_respond(const AllocationRule& rule, const AgentType& agent);

/// A candidate choice in the maximization: quality, allocation, and whether
/// the allocation is only approached from above.
struct ChoiceCandidate {
  double quality = 0.0;
  double allocation = 0.0;
  bool at_right_limit = false;
};

/// Shared selection step: the utility maximum over candidates (never below
/// 0; callers include (0,0)), tie-broken to the smallest quality with the
/// exactly-attained point preferred over the limit point at equal quality.
BestResponse select_response(const std::vector<ChoiceCandidate>& candidates, double skill);

/// skill * budget.
double max_quality(const AgentType& agent);

/// The lowest skill that can feasibly and rationally take the option
/// (q_bar, x_bar): quality q_bar at zero utility requires effort x_bar,
/// hence skill q_bar / x_bar. Throws ZeroAllocation when x_bar <= 0.
double marginal_skill(double q_bar, double x_bar);

}  // namespace screenopt
