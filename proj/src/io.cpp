#include "screenopt/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace screenopt::io {

namespace {

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw Error(ErrorCode::ParseError, std::string("missing or non-numeric field '") + key + "'");
  }
  return j[key].get<double>();
}

std::vector<double> require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(ErrorCode::ParseError, std::string("missing or non-array field '") + key + "'");
  }
  std::vector<double> out;
  for (const auto& v : j[key]) {
    if (!v.is_number()) {
      throw Error(ErrorCode::ParseError, std::string("non-numeric entry in '") + key + "'");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

GameInput parse_game(const json& j) {
  GameInput input{AdmissionGame::validated(
                      require_number(j, "skill_low"), require_number(j, "skill_high"),
                      require_number(j, "tau"), require_array(j, "budgets"),
                      require_number(j, "prob_high"), require_array(j, "budget_dist_low"),
                      require_array(j, "budget_dist_high")),
                  std::nullopt};
  if (j.contains("d_min") || j.contains("d_max")) {
    const double d_min = require_number(j, "d_min");
    const double d_max = require_number(j, "d_max");
    SubsidizedGame::validated(input.game, d_min, d_max);  // range check
    input.subsidy_range = {d_min, d_max};
  }
  return input;
}

GameInput load_game(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return parse_game(j);
}

json game_to_json(const AdmissionGame& game) {
  std::vector<double> budgets;
  for (std::size_t i = 0; i < game.num_budgets(); ++i) budgets.push_back(game.budget(i));
  return json{{"skill_low", game.skill_low()},
              {"skill_high", game.skill_high()},
              {"tau", game.tau()},
              {"budgets", budgets},
              {"prob_high", game.prob_high()},
              {"budget_dist_low", game.budget_dist(SkillTier::Low)},
              {"budget_dist_high", game.budget_dist(SkillTier::High)}};
}

json rule_to_json(const AllocationRule& rule) {
  const auto& knots = rule.knots();
  json segments = json::array();
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    segments.push_back(json{{"q_lo", knots[i].q},
                            {"q_hi", knots[i + 1].q},
                            {"value_at_open", knots[i].right_value},
                            {"slope", knots[i].slope},
                            {"value_at_close", knots[i + 1].value}});
  }
  json j{{"segments", segments},
         {"origin_right_value", knots.front().right_value},
         {"extends_with", knots.back().right_value},
         {"monotone", rule.monotone()}};
  j["terminal_one_from"] =
      rule.reaches_one() ? json(rule.terminal_one_from()) : json(nullptr);
  return j;
}

AllocationRule rule_from_json(const json& j) {
  if (!j.contains("segments") || !j["segments"].is_array()) {
    throw Error(ErrorCode::ParseError, "rule JSON needs a 'segments' array");
  }
  std::vector<Knot> knots;
  knots.push_back({0.0, 0.0, require_number(j, "origin_right_value"), 0.0});
  for (const auto& seg : j["segments"]) {
    const double q_lo = require_number(seg, "q_lo");
    const double q_hi = require_number(seg, "q_hi");
    const double open_value = require_number(seg, "value_at_open");
    const double slope = require_number(seg, "slope");
    const double close_value = require_number(seg, "value_at_close");
    if (knots.back().q != q_lo) {
      throw Error(ErrorCode::ParseError, "rule segments must tile without gaps");
    }
    knots.back().right_value = open_value;
    knots.back().slope = slope;
    knots.push_back({q_hi, close_value, close_value, 0.0});
  }
  knots.back().right_value = require_number(j, "extends_with");
  AllocationRule rule = AllocationRule::from_knots(std::move(knots));
  if (j.contains("monotone") && j["monotone"].is_boolean() && j["monotone"].get<bool>() &&
      !rule.monotone()) {
    throw Error(ErrorCode::NonMonotoneRule, "rule declares monotone but is not");
  }
  return rule;
}

AllocationRule load_rule(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  // accept either a bare rule or a solve result
  if (j.contains("best_rule")) return rule_from_json(j["best_rule"]);
  return rule_from_json(j);
}

json best_response_to_json(const BestResponse& r) {
  return json{{"quality", r.chosen_quality},
              {"at_right_limit", r.at_right_limit},
              {"effort", r.effort},
              {"allocation", r.allocation},
              {"utility", r.utility}};
}

namespace {
const char* tier_name(SkillTier tier) { return tier == SkillTier::Low ? "low" : "high"; }
}  // namespace

json report_to_json(const EvaluationReport& report) {
  json rows = json::array();
  for (const TypeRow& row : report.rows) {
    rows.push_back(json{{"skill_tier", tier_name(row.tier)},
                        {"budget_index", row.budget_index},
                        {"probability", row.probability},
                        {"quality", row.chosen_quality},
                        {"at_right_limit", row.at_right_limit},
                        {"effort", row.effort},
                        {"allocation", row.allocation},
                        {"agent_utility", row.agent_utility},
                        {"contribution", row.contribution}});
  }
  return json{{"rows", rows},
              {"principal_utility", report.principal_utility},
              {"offline_optimal", report.offline_optimal},
              {"gap", report.gap}};
}

std::string report_to_csv(const EvaluationReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "skill_tier,budget_index,probability,quality,effort,allocation,agent_utility,"
         "contribution\n";
  for (const TypeRow& row : report.rows) {
    out << tier_name(row.tier) << ',' << row.budget_index << ',' << row.probability << ','
        << row.chosen_quality << ',' << row.effort << ',' << row.allocation << ','
        << row.agent_utility << ',' << row.contribution << '\n';
  }
  return out.str();
}

namespace {

json candidate_to_json(const CandidateRecord& c) {
  json j{{"kind", to_string(c.kind)}, {"value", c.value}};
  if (c.kind == CandidateKind::Stair) {
    j["q_jump"] = c.q_jump;
    j["q_one"] = c.q_one;
    j["jump_height"] = c.jump_height;
  }
  return j;
}

}  // namespace

json solve_result_to_json(const SolveResult& result) {
  json candidates = json::array();
  for (const CandidateRecord& c : result.candidates) candidates.push_back(candidate_to_json(c));
  return json{{"best_value", result.best_value},
              {"best_candidate", candidate_to_json(result.best_candidate)},
              {"best_rule", rule_to_json(result.best_rule)},
              {"candidates", candidates}};
}

json subsidy_result_to_json(const SubsidySolveResult& result) {
  json sweep = json::array();
  for (const auto& [d, value] : result.sweep) {
    sweep.push_back(json{{"d", d}, {"value", value}});
  }
  return json{{"best_d", result.best_d},
              {"result", solve_result_to_json(result.inner)},
              {"sweep", sweep}};
}

json lemma_report_to_json(const LemmaReport& report) {
  return json{{"grid_value", report.grid_value},
              {"step_value", report.step_value},
              {"best_single_jump_value", report.best_single_jump_value},
              {"best_zero_bottom_value", report.best_zero_bottom_value},
              {"first_step_on_line", report.first_step_on_line},
              {"single_jump_sufficient", report.single_jump_sufficient},
              {"zero_allocation_bottom", report.zero_allocation_bottom},
              {"steps_dominated", report.steps_dominated},
              {"rules_evaluated", report.rules_evaluated},
              {"all_pass", report.all_pass()}};
}

std::string rule_to_csv(const AllocationRule& rule, std::size_t samples, double q_max) {
  std::ostringstream out;
  out.precision(17);
  out << "q,allocation\n";
  std::vector<std::pair<double, double>> points;
  for (std::size_t k = 0; k <= samples; ++k) {
    const double q = q_max * static_cast<double>(k) / static_cast<double>(samples);
    points.emplace_back(q, rule.value_at(q));
  }
  for (const Knot& knot : rule.knots()) {
    if (knot.q > q_max) break;
    points.emplace_back(knot.q, knot.value);
    if (knot.right_value != knot.value) points.emplace_back(knot.q, knot.right_value);
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [q, x] : points) out << q << ',' << x << '\n';
  return out.str();
}

namespace {

struct SvgMapper {
  double q_max;
  static constexpr double kWidth = 640.0, kHeight = 420.0;
  static constexpr double kLeft = 50.0, kRight = 20.0, kTop = 20.0, kBottom = 40.0;

  double x(double q) const { return kLeft + (kWidth - kLeft - kRight) * q / q_max; }
  double y(double v) const { return kHeight - kBottom - (kHeight - kTop - kBottom) * v; }
};

void svg_polyline(std::ostringstream& out, const std::vector<std::pair<double, double>>& pts,
                  const SvgMapper& m, const char* color, const char* dash) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
  if (dash != nullptr) out << " stroke-dasharray=\"" << dash << "\"";
  out << " points=\"";
  for (const auto& [q, v] : pts) out << m.x(q) << ',' << m.y(v) << ' ';
  out << "\"/>\n";
}

}  // namespace

std::string rule_to_svg(const AllocationRule& rule, const AdmissionGame* game,
                        std::size_t samples) {
  double q_max = rule.knots().back().q * 1.25;
  if (game != nullptr) {
    q_max = std::max(q_max, game->skill_low() * 1.1);
    for (std::size_t i = 0; i < game->num_budgets(); ++i) {
      q_max = std::max(q_max, game->quality_product(i, SkillTier::High) * 1.1);
    }
  }
  if (q_max <= 0.0) q_max = 1.0;
  SvgMapper m{q_max};

  std::ostringstream out;
  out.precision(8);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << SvgMapper::kWidth
      << "\" height=\"" << SvgMapper::kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << m.x(0) << "\" y1=\"" << m.y(0) << "\" x2=\"" << m.x(q_max)
      << "\" y2=\"" << m.y(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << m.x(0) << "\" y1=\"" << m.y(0) << "\" x2=\"" << m.x(0) << "\" y2=\""
      << m.y(1) << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double v = tick / 4.0;
    out << "<line x1=\"" << m.x(0) - 4 << "\" y1=\"" << m.y(v) << "\" x2=\"" << m.x(0)
        << "\" y2=\"" << m.y(v) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << m.x(0) - 30 << "\" y=\"" << m.y(v) + 4 << "\" font-size=\"11\">" << v
        << "</text>\n";
    const double q = q_max * v;
    out << "<line x1=\"" << m.x(q) << "\" y1=\"" << m.y(0) << "\" x2=\"" << m.x(q) << "\" y2=\""
        << m.y(0) + 4 << "\" stroke=\"black\"/>\n";
    std::ostringstream label;
    label.precision(3);
    label << q;
    out << "<text x=\"" << m.x(q) - 10 << "\" y=\"" << m.y(0) + 18 << "\" font-size=\"11\">"
        << label.str() << "</text>\n";
  }

  if (game != nullptr) {
    // zero-utility lines of both skills
    for (SkillTier tier : {SkillTier::Low, SkillTier::High}) {
      const double s = game->skill(tier);
      std::vector<std::pair<double, double>> line{{0.0, 0.0},
                                                  {std::min(q_max, s), std::min(q_max / s, 1.0)}};
      svg_polyline(out, line, m, tier == SkillTier::Low ? "#c03030" : "#3050c0", "6,4");
    }
  }

  // the rule itself, one polyline per continuous piece
  const auto& knots = rule.knots();
  for (std::size_t i = 0; i < knots.size(); ++i) {
    std::vector<std::pair<double, double>> piece;
    piece.emplace_back(knots[i].q, knots[i].right_value);
    const double q_end = i + 1 < knots.size() ? knots[i + 1].q : q_max;
    const std::size_t inner = std::max<std::size_t>(2, samples / std::max<std::size_t>(knots.size(), 1));
    for (std::size_t k = 1; k <= inner; ++k) {
      const double q = knots[i].q + (q_end - knots[i].q) * static_cast<double>(k) / inner;
      piece.emplace_back(q, knots[i].right_value + knots[i].slope * (q - knots[i].q));
    }
    svg_polyline(out, piece, m, "#208040", nullptr);
    // mark the attained value at the knot
    out << "<circle cx=\"" << m.x(knots[i].q) << "\" cy=\"" << m.y(knots[i].value)
        << "\" r=\"3\" fill=\"#208040\"/>\n";
    if (knots[i].right_value != knots[i].value) {
      out << "<circle cx=\"" << m.x(knots[i].q) << "\" cy=\"" << m.y(knots[i].right_value)
          << "\" r=\"3\" fill=\"white\" stroke=\"#208040\"/>\n";
    }
  }

  if (game != nullptr) {
    for (SkillTier tier : {SkillTier::Low, SkillTier::High}) {
      for (std::size_t i = 0; i < game->num_budgets(); ++i) {
        const BestResponse br = best_respond(rule, game->agent(i, tier));
        out << "<circle cx=\"" << m.x(br.chosen_quality) << "\" cy=\"" << m.y(br.allocation)
            << "\" r=\"4\" fill=\"" << (tier == SkillTier::Low ? "#c03030" : "#3050c0")
            << "\" fill-opacity=\"0.7\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot open " + path + " for writing");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace screenopt::io
