#include "screenopt/agent.hpp"

#include <algorithm>
#include <cmath>

namespace screenopt {

bool is_feasible(const MenuOption& option, const AgentType& agent) {
  const double effort = option.quality / agent.skill;
  return effort <= std::min(agent.budget, option.allocation);
}

BestResponse select_response(const std::vector<ChoiceCandidate>& candidates, double skill) {
  double best_u = 0.0;
  for (const ChoiceCandidate& c : candidates) {
    best_u = std::max(best_u, c.allocation - c.quality / skill);
  }
  const ChoiceCandidate* chosen = nullptr;
  for (const ChoiceCandidate& c : candidates) {
    if (c.allocation - c.quality / skill < best_u - kTieTolerance) continue;
    if (chosen == nullptr || c.quality < chosen->quality ||
        (c.quality == chosen->quality && !c.at_right_limit && chosen->at_right_limit)) {
      chosen = &c;
    }
  }
  BestResponse r;
  if (chosen == nullptr) return r;  // empty candidate list: stay at (0, 0)
  r.chosen_quality = chosen->quality;
  r.at_right_limit = chosen->at_right_limit;
  r.allocation = chosen->allocation;
  r.effort = chosen->quality / skill;
  r.utility = chosen->allocation - r.effort;
  return r;
}

BestResponse best_respond(const AllocationRule& rule, const AgentType& agent) {
  const double q_max = agent.max_quality();
  std::vector<ChoiceCandidate> candidates;
  candidates.reserve(2 * rule.knots().size() + 2);
  candidates.push_back({0.0, 0.0, false});
  if (q_max > 0.0) {
    bool cap_is_knot = false;
    for (const Knot& k : rule.knots()) {
      if (k.q > q_max) break;
      if (k.q > 0.0) candidates.push_back({k.q, k.value, false});
      if (k.q == q_max) cap_is_knot = true;
      // a jump's supremum is attainable only with slack above it
      if (k.q < q_max && k.right_value > k.value) {
        candidates.push_back({k.q, k.right_value, true});
      }
    }
    if (!cap_is_knot) candidates.push_back({q_max, rule.value_at(q_max), false});
  }
  return select_response(candidates, agent.skill);
}

double max_quality(const AgentType& agent) { return agent.max_quality(); }

double marginal_skill(double q_bar, double x_bar) {
  if (!(x_bar > 0.0)) {
    throw Error(ErrorCode::ZeroAllocation, "marginal skill needs a positive allocation");
  }
  return q_bar / x_bar;
}

}  // namespace screenopt
