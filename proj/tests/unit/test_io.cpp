#include <doctest.h>

#include <random>
#include <sstream>

#include "screenopt/io.hpp"
#include "screenopt/random.hpp"

using namespace screenopt;
using nlohmann::json;

TEST_CASE("game schema round trip") {
  const json j = {{"skill_low", 1.01},         {"skill_high", 2.0},
                  {"tau", 1.5},                {"budgets", {0.5, 1.0}},
                  {"prob_high", 0.5},          {"budget_dist_low", {0.5, 0.5}},
                  {"budget_dist_high", {0.5, 0.5}}};
  const io::GameInput input = io::parse_game(j);
  CHECK(input.game.skill_low() == 1.01);
  CHECK(!input.subsidy_range.has_value());
  const json back = io::game_to_json(input.game);
  CHECK(back["tau"] == 1.5);
  CHECK(back["budgets"][1] == 1.0);
}

TEST_CASE("game schema subsidy range") {
  json j = {{"skill_low", 1.0},  {"skill_high", 2.0},        {"tau", 1.5},
            {"budgets", {0.5}},  {"prob_high", 0.5},         {"budget_dist_low", {1.0}},
            {"budget_dist_high", {1.0}}, {"d_min", 0.1},     {"d_max", 0.6}};
  const io::GameInput input = io::parse_game(j);
  REQUIRE(input.subsidy_range.has_value());
  CHECK(input.subsidy_range->second == 0.6);
  j["d_max"] = 0.05;
  CHECK_THROWS_AS(io::parse_game(j), Error);
}

TEST_CASE("game schema rejects malformed fields") {
  CHECK_THROWS_WITH_AS(io::parse_game(json{{"skill_low", "x"}}),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(io::parse_game(json::object()), Error);
}

TEST_CASE("rules serialize losslessly") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    AllocationRule rule = AllocationRule::reject_all();
    switch (trial % 6) {
      case 0: rule = AllocationRule::slanted_stair(1.01, 0.505, 1.0); break;
      case 1: rule = AllocationRule::threshold(0.75, trial % 2 == 0); break;
      case 2: rule = AllocationRule::low_skill_line(1.3); break;
      case 3: rule = random_monotone_rule(rng); break;
      case 4: rule = random_piecewise_rule(rng); break;
      default: break;  // reject-all
    }
    const json j = io::rule_to_json(rule);
    const AllocationRule back = io::rule_from_json(json::parse(j.dump()));
    CHECK(back == rule);  // bitwise knot equality after a text round trip
  }
}

TEST_CASE("declared monotone flag is enforced on load") {
  std::mt19937_64 rng(67);
  AllocationRule wavy = random_piecewise_rule(rng);
  while (wavy.monotone()) wavy = random_piecewise_rule(rng);
  json j = io::rule_to_json(wavy);
  CHECK(j["monotone"] == false);
  j["monotone"] = true;
  CHECK_THROWS_WITH_AS(io::rule_from_json(j), doctest::Contains("NonMonotoneRule"), Error);
}

TEST_CASE("curve csv carries both sides of a jump") {
  const AllocationRule stair = AllocationRule::slanted_stair(1.0, 0.5, 0.9);
  const std::string csv = io::rule_to_csv(stair, 16, 1.2);
  CHECK(csv.find("q,allocation") == 0);
  std::vector<double> at_jump;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    if (std::stod(line.substr(0, comma)) == 0.5) {
      at_jump.push_back(std::stod(line.substr(comma + 1)));
    }
  }
  REQUIRE(at_jump.size() == 2);  // pre- and post-jump rows at the same quality
  CHECK(at_jump[0] == 0.5);
  CHECK(at_jump[1] == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("svg export mentions the curve and the skill lines") {
  const AdmissionGame game =
      AdmissionGame::validated(1.01, 2.0, 1.5, {0.5, 1.0}, 0.5, {0.5, 0.5}, {0.5, 0.5});
  const AllocationRule stair = AllocationRule::slanted_stair(1.01, 0.505, 1.0);
  const std::string svg = io::rule_to_svg(stair, &game, 128);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}
