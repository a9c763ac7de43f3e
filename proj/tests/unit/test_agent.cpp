#include <doctest.h>

#include <random>

#include "screenopt/agent.hpp"
#include "screenopt/oracle.hpp"
#include "screenopt/random.hpp"

using namespace screenopt;

TEST_CASE("feasibility characterization") {
  CHECK(is_feasible({1.0, 1.0}, {2.0, 0.5}));         // effort 0.5 affordable and rational
  CHECK_FALSE(is_feasible({1.01, 1.0}, {2.0, 0.5}));  // effort 0.505 exceeds the budget
  CHECK_FALSE(is_feasible({1.0, 0.4}, {2.0, 1.0}));   // effort 0.5 exceeds the allocation
  CHECK(is_feasible({0.0, 0.0}, {1.0, 0.0}));         // the null option is always feasible
}

TEST_CASE("max quality and marginal skill") {
  CHECK(max_quality({2.0, 0.5}) == 1.0);
  CHECK(max_quality({3.0, 0.0}) == 0.0);
  CHECK(max_quality({1.01, 1.0}) == 1.01);

  CHECK(marginal_skill(1.0, 0.5) == 2.0);
  CHECK(marginal_skill(0.0, 0.5) == 0.0);
  CHECK(marginal_skill(1.0, 0.25) == 4.0);  // halving the allocation doubles the bar
  CHECK_THROWS_WITH_AS(marginal_skill(1.0, 0.0), doctest::Contains("ZeroAllocation"), Error);
}

TEST_CASE("best response on a slanted stair") {
  const double skill_low = 1.0;
  const AllocationRule stair = AllocationRule::slanted_stair(skill_low, 0.5, 0.9);

  SUBCASE("low tier capped at the jump stays home") {
    const BestResponse r = best_respond(stair, {skill_low, 0.5});
    CHECK(r.chosen_quality == 0.0);
    CHECK(r.allocation == 0.0);
    CHECK(r.utility == 0.0);
    CHECK_FALSE(r.at_right_limit);
  }
  SUBCASE("low tier past the jump takes the right limit") {
    const BestResponse r = best_respond(stair, {skill_low, 0.8});
    CHECK(r.chosen_quality == 0.5);
    CHECK(r.at_right_limit);
    CHECK(r.allocation == doctest::Approx(0.6).epsilon(1e-12));  // post-jump value
    CHECK(r.utility == doctest::Approx(0.1).epsilon(1e-12));     // the jump height
  }
  SUBCASE("high tier rides to full allocation") {
    const BestResponse r = best_respond(stair, {2.0, 0.45});  // q_max = 0.9
    CHECK(r.chosen_quality == 0.9);
    CHECK(r.allocation == 1.0);
    CHECK_FALSE(r.at_right_limit);
    CHECK(r.utility == doctest::Approx(1.0 - 0.45).epsilon(1e-12));
  }
  SUBCASE("high tier never over-exerts past the crossing") {
    const BestResponse r = best_respond(stair, {2.0, 1.0});  // q_max = 2
    CHECK(r.chosen_quality == 0.9);
    CHECK(r.allocation == 1.0);
  }
}

TEST_CASE("best response degenerate cases") {
  SUBCASE("zero rule") {
    const BestResponse r = best_respond(AllocationRule::reject_all(), {1.5, 0.7});
    CHECK(r.chosen_quality == 0.0);
    CHECK(r.utility == 0.0);
  }
  SUBCASE("zero budget always answers (0, 0)") {
    const BestResponse r =
        best_respond(AllocationRule::slanted_stair(1.0, 0.0, 0.9), {2.0, 0.0});
    CHECK(r.chosen_quality == 0.0);
    CHECK(r.allocation == 0.0);
  }
  SUBCASE("weak cutoff admits an agent capped exactly at it") {
    const BestResponse r = best_respond(AllocationRule::threshold(1.0, false), {2.0, 0.5});
    CHECK(r.chosen_quality == 1.0);
    CHECK(r.allocation == 1.0);
    CHECK(r.utility == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("strict cutoff shuts out an agent capped exactly at it") {
    const BestResponse r = best_respond(AllocationRule::threshold(1.0, true), {2.0, 0.5});
    CHECK(r.chosen_quality == 0.0);
    CHECK(r.allocation == 0.0);
  }
}

TEST_CASE("tie-breaking picks the smallest quality, attained point first") {
  const double skill = 1.2;
  // every point of the line is utility 0 for this skill; (0, 0) is smallest
  const BestResponse r = best_respond(AllocationRule::low_skill_line(skill), {skill, 1.0});
  CHECK(r.chosen_quality == 0.0);
  CHECK_FALSE(r.at_right_limit);

  // on a stair, the low tier is indifferent along the step above the jump
  // and settles at its left end, which is the limit point
  const AllocationRule stair = AllocationRule::slanted_stair(skill, 0.3, 0.9);
  const BestResponse s = best_respond(stair, {skill, 1.0});
  CHECK(s.chosen_quality == 0.3);
  CHECK(s.at_right_limit);
}

TEST_CASE("best-response invariants on random monotone rules") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const AllocationRule rule = random_monotone_rule(rng);
    const AgentType agent = random_agent(rng);
    const BestResponse r = best_respond(rule, agent);
    CHECK(r.utility >= 0.0);
    CHECK(r.allocation >= 0.0);
    CHECK(r.allocation <= 1.0);
    CHECK(r.effort <= agent.budget * (1.0 + 1e-12) + 1e-15);
    CHECK(r.utility == r.allocation - r.chosen_quality / agent.skill);  // exact identity
  }
}

TEST_CASE("skill dominance at a fixed budget") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const AllocationRule rule = random_monotone_rule(rng);
    const double budget = uniform(rng, 0.05, 1.0);
    const double s_lo = uniform(rng, 0.3, 2.0);
    const double s_hi = s_lo + uniform(rng, 0.05, 1.5);
    const BestResponse lo = best_respond(rule, {s_lo, budget});
    const BestResponse hi = best_respond(rule, {s_hi, budget});
    CHECK(hi.utility >= lo.utility - 1e-9);
  }
}

TEST_CASE("agreement with the dense reference") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const AllocationRule rule = random_monotone_rule(rng);
    const AgentType agent = random_agent(rng);
    const BestResponse fast = best_respond(rule, agent);
    const BestResponse dense = dense_best_response(rule, agent, 2000);
    CHECK(fast.utility == doctest::Approx(dense.utility).epsilon(1e-6));
    if (std::fabs(fast.utility - dense.utility) <= 1e-9) {
      CHECK(fast.chosen_quality == dense.chosen_quality);
    }
  }
}
