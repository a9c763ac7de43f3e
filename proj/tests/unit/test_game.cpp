#include <doctest.h>

#include <random>

#include "screenopt/game.hpp"
#include "screenopt/random.hpp"

using namespace screenopt;

namespace {

AdmissionGame uniform_2x2(double skill_low = 1.01, double skill_high = 2.0, double tau = 1.5) {
  return AdmissionGame::validated(skill_low, skill_high, tau, {0.5, 1.0}, 0.5, {0.5, 0.5},
                                  {0.5, 0.5});
}

}  // namespace

TEST_CASE("validation accepts a well-formed instance") {
  const AdmissionGame g = uniform_2x2();
  CHECK(g.num_budgets() == 2);
  CHECK(g.skill_low() == 1.01);
  CHECK(g.budget(1) == 1.0);
}

TEST_CASE("validation rejects skill orderings") {
  CHECK_THROWS_WITH_AS(AdmissionGame::validated(2.0, 2.0, 1.5, {0.5}, 0.5, {1.0}, {1.0}),
                       doctest::Contains("SkillOrdering"), Error);
  CHECK_THROWS_AS(AdmissionGame::validated(1.0, 1.2, 1.3, {0.5}, 0.5, {1.0}, {1.0}), Error);
  CHECK_THROWS_AS(AdmissionGame::validated(-1.0, 2.0, 1.5, {0.5}, 0.5, {1.0}, {1.0}), Error);
}

TEST_CASE("validation rejects bad budgets") {
  CHECK_THROWS_WITH_AS(
      AdmissionGame::validated(1.0, 2.0, 1.5, {0.5, 0.5}, 0.5, {0.5, 0.5}, {0.5, 0.5}),
      doctest::Contains("BudgetOrdering"), Error);
  CHECK_THROWS_AS(AdmissionGame::validated(1.0, 2.0, 1.5, {0.5, 1.2}, 0.5, {0.5, 0.5}, {0.5, 0.5}),
                  Error);
  CHECK_THROWS_AS(AdmissionGame::validated(1.0, 2.0, 1.5, {}, 0.5, {}, {}), Error);
}

TEST_CASE("validation rejects bad distributions") {
  CHECK_THROWS_WITH_AS(
      AdmissionGame::validated(1.0, 2.0, 1.5, {0.5, 1.0}, 0.5, {0.7, 0.2}, {0.5, 0.5}),
      doctest::Contains("BadDistribution"), Error);
  CHECK_THROWS_AS(
      AdmissionGame::validated(1.0, 2.0, 1.5, {0.5, 1.0}, 0.5, {1.2, -0.2}, {0.5, 0.5}), Error);
  CHECK_THROWS_AS(
      AdmissionGame::validated(1.0, 2.0, 1.5, {0.5, 1.0}, 1.5, {0.5, 0.5}, {0.5, 0.5}), Error);
}

TEST_CASE("type probabilities") {
  SUBCASE("uniform 2x2 gives a quarter each") {
    const AdmissionGame g = uniform_2x2();
    for (SkillTier tier : {SkillTier::Low, SkillTier::High}) {
      for (std::size_t i = 1; i <= 2; ++i) {
        CHECK(g.type_probability(tier, i) == doctest::Approx(0.25).epsilon(1e-12));
      }
    }
  }
  SUBCASE("correlated mix") {
    const AdmissionGame g = AdmissionGame::validated(1.0, 2.0, 1.5, {0.5, 1.0}, 0.4, {0.5, 0.5},
                                                     {0.25, 0.75});
    CHECK(g.type_probability(SkillTier::High, 2) == doctest::Approx(0.30).epsilon(1e-12));
  }
  SUBCASE("out-of-range index throws") {
    const AdmissionGame g = uniform_2x2();
    CHECK_THROWS_AS(g.type_probability(SkillTier::Low, 0), Error);
    CHECK_THROWS_AS(g.type_probability(SkillTier::Low, 3), Error);
  }
  SUBCASE("masses sum to one on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const AdmissionGame g = random_game(rng, 1 + trial % 4);
      double total = 0.0;
      for (SkillTier tier : {SkillTier::Low, SkillTier::High}) {
        for (std::size_t i = 1; i <= g.num_budgets(); ++i) total += g.type_probability(tier, i);
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("subsidy application") {
  const AdmissionGame g = uniform_2x2();
  SUBCASE("zero subsidy is the identity") {
    const AdmissionGame same = apply_subsidy(g, 0.0);
    CHECK(same.budget(0) == g.budget(0));
    CHECK(same.budget(1) == g.budget(1));
  }
  SUBCASE("budgets shift elementwise and may exceed 1") {
    const AdmissionGame shifted = apply_subsidy(g, 0.25);
    CHECK(shifted.budget(0) == 0.75);
    CHECK(shifted.budget(1) == 1.25);
    CHECK(shifted.prob_high() == g.prob_high());
  }
  SUBCASE("negative subsidy throws") {
    CHECK_THROWS_WITH_AS(apply_subsidy(g, -0.1), doctest::Contains("NegativeSubsidy"), Error);
  }
  SUBCASE("stacking is exact") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const double d1 = canonical(rng);
      const double d2 = canonical(rng);
      const AdmissionGame once = apply_subsidy(g, d1 + d2);
      const AdmissionGame twice = apply_subsidy(apply_subsidy(g, d1), d2);
      for (std::size_t i = 0; i < g.num_budgets(); ++i) {
        CHECK(once.budget(i) == twice.budget(i));  // bitwise
      }
    }
  }
}

TEST_CASE("subsidized game range validation") {
  const AdmissionGame g = uniform_2x2();
  CHECK_THROWS_AS(SubsidizedGame::validated(g, 0.5, 0.2), Error);
  CHECK_THROWS_AS(SubsidizedGame::validated(g, -0.1, 0.2), Error);
  const SubsidizedGame ok = SubsidizedGame::validated(g, 0.1, 0.4);
  CHECK(ok.d_min == 0.1);
}
