#include "screenopt/random.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace screenopt {

namespace {

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> mass(n);
  double sum = 0.0;
  for (double& m : mass) {
    m = uniform(rng, 0.05, 1.0);
    sum += m;
  }
  for (double& m : mass) m /= sum;
  return mass;
}

// closes the rule at the last knot with full allocation from there on
void close_at_one(std::vector<Knot>& knots) {
  knots.back().right_value = 1.0;
  knots.back().slope = 0.0;
}

}  // namespace

AdmissionGame random_game(std::mt19937_64& rng, std::size_t num_budgets) {
  const double skill_low = uniform(rng, 0.5, 2.0);
  const double skill_high = skill_low + uniform(rng, 0.2, 2.0);
  const double tau = skill_low + uniform(rng, 0.1, 0.9) * (skill_high - skill_low);

  std::vector<double> budgets;
  while (budgets.size() < num_budgets) {
    const double b = uniform(rng, 0.05, 1.0);
    bool distinct = true;
    for (double existing : budgets) {
      if (std::fabs(existing - b) < 0.02) distinct = false;
    }
    if (distinct) budgets.push_back(b);
  }
  std::sort(budgets.begin(), budgets.end());

  return AdmissionGame::validated(skill_low, skill_high, tau, std::move(budgets),
                                  uniform(rng, 0.1, 0.9), random_simplex(rng, num_budgets),
                                  random_simplex(rng, num_budgets));
}

AllocationRule random_monotone_rule(std::mt19937_64& rng) {
  const std::size_t pieces = 2 + static_cast<std::size_t>(canonical(rng) * 4);
  std::vector<Knot> knots;
  knots.push_back({0.0, 0.0, 0.0, 0.0});
  double q = 0.0;
  double value = 0.0;
  for (std::size_t i = 0; i < pieces; ++i) {
    const double width = uniform(rng, 0.1, 0.8);
    const double slope = canonical(rng) < 0.3 ? 0.0 : uniform(rng, 0.1, 1.5);
    const double jump = canonical(rng) < 0.5 ? 0.0 : uniform(rng, 0.0, 0.35);
    const double post = std::min(value + jump, 1.0);
    if (q == 0.0) {
      knots[0].right_value = post;
      knots[0].slope = slope;
    } else {
      knots.push_back({q, value, post, slope});
    }
    if (post >= 1.0) {
      close_at_one(knots);
      return AllocationRule::from_knots(std::move(knots));
    }
    const double top = post + slope * width;
    if (top >= 1.0 && slope > 0.0) {
      const double q_full = q + (1.0 - post) / slope;
      if (q_full > q) {
        knots.push_back({q_full, 1.0, 1.0, 0.0});
      } else {
        close_at_one(knots);
      }
      return AllocationRule::from_knots(std::move(knots));
    }
    q += width;
    value = top;
  }
  knots.push_back({q, value, value, 0.0});
  return AllocationRule::from_knots(std::move(knots));
}

AllocationRule random_piecewise_rule(std::mt19937_64& rng) {
  const std::size_t pieces = 3 + static_cast<std::size_t>(canonical(rng) * 4);
  std::vector<Knot> knots;
  knots.push_back({0.0, 0.0, 0.0, 0.0});
  double q = 0.0;
  double value = 0.0;
  for (std::size_t i = 0; i < pieces; ++i) {
    const double width = uniform(rng, 0.1, 0.8);
    const double slope = canonical(rng) < 0.3 ? 0.0 : uniform(rng, 0.1, 1.2);
    const double jump = uniform(rng, -0.5, 0.5);
    const double post = std::clamp(value + jump, 0.0, 1.0);
    if (q == 0.0) {
      knots[0].right_value = post;
      knots[0].slope = slope;
    } else {
      knots.push_back({q, value, post, slope});
    }
    if (post >= 1.0) {
      close_at_one(knots);
      return AllocationRule::from_knots(std::move(knots));
    }
    double top = post + slope * width;
    double w = width;
    if (top > 1.0 && slope > 0.0) {
      w = (1.0 - post) / slope;
      top = 1.0;
    }
    if (q + w <= q) {
      close_at_one(knots);
      return AllocationRule::from_knots(std::move(knots));
    }
    q += w;
    value = top;
    if (top >= 1.0) break;
  }
  knots.push_back({q, value, value, 0.0});
  return AllocationRule::from_knots(std::move(knots));
}

AgentType random_agent(std::mt19937_64& rng) {
  AgentType agent;
  agent.skill = uniform(rng, 0.3, 3.0);
  agent.budget = canonical(rng) < 0.1 ? 0.0 : uniform(rng, 0.05, 1.0);
  return agent;
}

}  // namespace screenopt
