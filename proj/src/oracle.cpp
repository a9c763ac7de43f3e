#include "screenopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "screenopt/evaluation.hpp"

namespace screenopt {

namespace {

constexpr double kOne = 1.0 - 1e-12;
constexpr std::size_t kMaxOracleBudgets = 4;

void check_config(const AdmissionGame& game, const OracleConfig& config) {
  if (game.num_budgets() > kMaxOracleBudgets) {
    throw Error(ErrorCode::SearchTooLarge,
                "exhaustive search supports at most " + std::to_string(kMaxOracleBudgets) +
                    " budgets, got " + std::to_string(game.num_budgets()));
  }
  if (config.grid_resolution < 1) {
    throw Error(ErrorCode::BadRange, "grid resolution must be at least 1");
  }
}

[[noreturn]] void search_too_large(std::size_t cap) {
  throw Error(ErrorCode::SearchTooLarge, "search exceeds " + std::to_string(cap) +
                                             " rules; lower the resolution or raise the cap");
}

/// Shape facts about an enumerated rule the structural checks care about.
struct RuleShape {
  std::size_t jumps = 0;
  bool jump_at_zero = false;
};

using GridEmit = std::function<void(const AllocationRule&, const RuleShape&)>;
using StepEmit = std::function<void(const AllocationRule&)>;

/// Enumerates every slope-1/skill_low rule with grid jumps at the
/// breakpoints, truncated at allocation 1, plus the zero-rule baseline.
/// With a null emitter only counts, for the sizing guard.
class GridWalker {
 public:
  GridWalker(double skill_low, const OracleConfig& config, const std::vector<double>& breakpoints)
      : config_(config),
        breakpoints_(breakpoints),
        skill_(skill_low),
        step_(1.0 / static_cast<double>(config.grid_resolution)) {}

  std::size_t run(const GridEmit* emit) {
    emit_ = emit;
    count_ = 0;
    gaps_.assign(breakpoints_.size(), 0.0);
    if (emit_ != nullptr) {
      RuleShape none;
      (*emit_)(AllocationRule::reject_all(), none);
    }
    bump();
    descend(0, 0.0, 0.0, RuleShape{});
    return count_;
  }

 private:
  void bump() {
    if (++count_ > config_.max_evals) search_too_large(config_.max_evals);
  }

  void leaf(std::size_t upto, const RuleShape& shape) {
    bump();
    if (emit_ == nullptr) return;
    std::vector<double> bps(breakpoints_.begin(), breakpoints_.begin() + upto);
    std::vector<double> gaps(gaps_.begin(), gaps_.begin() + upto);
    (*emit_)(AllocationRule::multi_stair(skill_, bps, gaps), shape);
  }

  // `value` is the allocation just above breakpoint t-1.
  void descend(std::size_t t, double from_q, double value, RuleShape shape) {
    if (t == breakpoints_.size()) {
      leaf(t, shape);
      return;
    }
    const double q = breakpoints_[t];
    const double pre = value + (q - from_q) / skill_;
    if (pre >= kOne) {  // full allocation reached before this breakpoint
      leaf(t, shape);
      return;
    }
    const double room = (1.0 - pre) * static_cast<double>(config_.grid_resolution);
    std::size_t top = std::min(static_cast<std::size_t>(std::floor(room + 1e-9)),
                               config_.grid_resolution);
    // one extra branch jumps straight to 1 when the grid cannot land on it
    if (pre + static_cast<double>(top) * step_ < kOne && top < config_.grid_resolution) {
      ++top;
    }
    for (std::size_t j = 0; j <= top; ++j) {
      RuleShape next = shape;
      if (j > 0) {
        if (shape.jumps == config_.max_jumps) break;
        next.jumps = shape.jumps + 1;
        next.jump_at_zero = shape.jump_at_zero || q == 0.0;
      }
      gaps_[t] = static_cast<double>(j) * step_;
      descend(t + 1, q, std::min(pre + gaps_[t], 1.0), next);
    }
    gaps_[t] = 0.0;
  }

  const OracleConfig& config_;
  const std::vector<double>& breakpoints_;
  const double skill_;
  const double step_;
  std::vector<double> gaps_;
  std::size_t count_ = 0;
  const GridEmit* emit_ = nullptr;
};

/// Enumerates every monotone flat-step rule with grid levels at breakpoints.
class StepWalker {
 public:
  StepWalker(const OracleConfig& config, const std::vector<double>& breakpoints)
      : config_(config),
        breakpoints_(breakpoints),
        step_(1.0 / static_cast<double>(config.grid_resolution)) {}

  std::size_t run(const StepEmit* emit) {
    emit_ = emit;
    count_ = 0;
    levels_.assign(breakpoints_.size(), 0.0);
    descend(0, 0);
    return count_;
  }

 private:
  void descend(std::size_t t, std::size_t floor_level) {
    if (t == breakpoints_.size()) {
      if (++count_ > config_.max_evals) search_too_large(config_.max_evals);
      if (emit_ != nullptr) (*emit_)(AllocationRule::flat_steps(breakpoints_, levels_));
      return;
    }
    for (std::size_t level = floor_level; level <= config_.grid_resolution; ++level) {
      levels_[t] = static_cast<double>(level) * step_;
      descend(t + 1, level);
    }
  }

  const OracleConfig& config_;
  const std::vector<double>& breakpoints_;
  const double step_;
  std::vector<double> levels_;
  std::size_t count_ = 0;
  const StepEmit* emit_ = nullptr;
};

/// Counts first when the naive bound is too big; throws SearchTooLarge early.
template <typename Walker>
void guard(Walker& walker, const OracleConfig& config, std::size_t breakpoint_count) {
  const double naive = std::pow(static_cast<double>(config.grid_resolution) + 1.0,
                                static_cast<double>(breakpoint_count));
  if (naive <= static_cast<double>(config.max_evals)) return;
  walker.run(nullptr);
}

}  // namespace

std::vector<double> oracle_breakpoints(const AdmissionGame& game, const OracleConfig& config) {
  std::set<double> points;
  points.insert(0.0);
  for (std::size_t i = 0; i < game.num_budgets(); ++i) {
    points.insert(game.quality_product(i, SkillTier::Low));
    points.insert(game.quality_product(i, SkillTier::High));
  }
  for (double q : config.extra_breakpoints) {
    if (q >= 0.0 && std::isfinite(q)) points.insert(q);
  }
  return {points.begin(), points.end()};
}

OracleResult grid_oracle(const AdmissionGame& game, const OracleConfig& config) {
  check_config(game, config);
  const auto breakpoints = oracle_breakpoints(game, config);
  GridWalker walker(game.skill_low(), config, breakpoints);
  guard(walker, config, breakpoints.size());

  OracleResult result;
  bool have_best = false;
  GridEmit emit = [&](const AllocationRule& rule, const RuleShape&) {
    const double value = principal_utility(game, rule);
    if (!have_best || value > result.best_value) {
      have_best = true;
      result.best_value = value;
      result.best_rule = rule;
    }
  };
  result.rules_evaluated = walker.run(&emit);
  return result;
}

OracleResult step_oracle(const AdmissionGame& game, const OracleConfig& config) {
  check_config(game, config);
  const auto breakpoints = oracle_breakpoints(game, config);
  StepWalker walker(config, breakpoints);
  guard(walker, config, breakpoints.size());

  OracleResult result;
  bool have_best = false;
  StepEmit emit = [&](const AllocationRule& rule) {
    const double value = principal_utility(game, rule);
    if (!have_best || value > result.best_value) {
      have_best = true;
      result.best_value = value;
      result.best_rule = rule;
    }
  };
  result.rules_evaluated = walker.run(&emit);
  return result;
}

BestResponse dense_best_response(const AllocationRule& rule, const AgentType& agent,
                                 std::size_t grid_size) {
  if (grid_size < 10) {
    throw Error(ErrorCode::BadRange, "dense reference needs a grid of at least 10");
  }
  const double q_max = agent.max_quality();
  std::vector<ChoiceCandidate> grid;
  std::vector<ChoiceCandidate> structural;
  structural.push_back({0.0, 0.0, false});
  if (q_max > 0.0) {
    for (std::size_t k = 0; k <= grid_size; ++k) {
      const double q = q_max * static_cast<double>(k) / static_cast<double>(grid_size);
      grid.push_back({q, rule.value_at(q), false});
    }
    bool cap_is_knot = false;
    for (const Knot& knot : rule.knots()) {
      if (knot.q > q_max) break;
      if (knot.q > 0.0) structural.push_back({knot.q, knot.value, false});
      if (knot.q == q_max) cap_is_knot = true;
      if (knot.q < q_max && knot.right_value > knot.value) {
        structural.push_back({knot.q, knot.right_value, true});
      }
    }
    if (!cap_is_knot) structural.push_back({q_max, rule.value_at(q_max), false});
  }
  // utility is linear between knots, so some endpoint or limit attains the
  // maximum; interior grid points only corroborate it and are never returned
  double best = 0.0;
  for (const ChoiceCandidate& c : grid) {
    best = std::max(best, c.allocation - c.quality / agent.skill);
  }
  for (const ChoiceCandidate& c : structural) {
    best = std::max(best, c.allocation - c.quality / agent.skill);
  }
  std::vector<ChoiceCandidate> tied;
  for (const ChoiceCandidate& c : structural) {
    if (c.allocation - c.quality / agent.skill >= best - kTieTolerance) tied.push_back(c);
  }
  return select_response(tied.empty() ? structural : tied, agent.skill);
}

LemmaReport lemma_suite(const AdmissionGame& game, const OracleConfig& config) {
  check_config(game, config);
  const auto breakpoints = oracle_breakpoints(game, config);
  constexpr double kNearTie = 1e-9;
  const AgentType bottom = game.agent(0, SkillTier::Low);

  struct Summary {
    double value = 0.0;
    bool line_start = false;
    bool zero_bottom = false;
  };

  GridWalker walker(game.skill_low(), config, breakpoints);
  guard(walker, config, breakpoints.size());

  LemmaReport report;
  std::vector<Summary> near_best;
  double best = 0.0;
  double best_single = 0.0;
  bool have_best = false;
  double best_zero_bottom = 0.0;
  GridEmit emit = [&](const AllocationRule& rule, const RuleShape& shape) {
    const double value = principal_utility(game, rule);
    const bool zero_bottom = best_respond(rule, bottom).allocation <= 1e-12;
    if (zero_bottom) best_zero_bottom = std::max(best_zero_bottom, value);
    if (!have_best || value > best) {
      have_best = true;
      best = value;
      near_best.erase(
          std::remove_if(near_best.begin(), near_best.end(),
                         [&](const Summary& s) { return s.value < best - kNearTie; }),
          near_best.end());
    }
    if (shape.jumps <= 1) best_single = std::max(best_single, value);
    if (value >= best - kNearTie) {
      Summary s;
      s.value = value;
      // a jump at the origin is part of the one-jump family; only a rule
      // that combines it with later jumps leaves the line before jumping
      s.line_start = !(shape.jump_at_zero && shape.jumps >= 2);
      s.zero_bottom = zero_bottom;
      near_best.push_back(s);
    }
  };
  report.rules_evaluated = walker.run(&emit);
  report.grid_value = best;
  report.best_single_jump_value = best_single;
  report.best_zero_bottom_value = best_zero_bottom;
  report.single_jump_sufficient = best <= best_single + kNearTie;
  for (const Summary& s : near_best) {
    if (s.value < best - kNearTie) continue;
    report.first_step_on_line = report.first_step_on_line || s.line_start;
    report.zero_allocation_bottom = report.zero_allocation_bottom || s.zero_bottom;
  }

  report.step_value = step_oracle(game, config).best_value;
  report.steps_dominated = report.step_value <= report.grid_value + kNearTie;
  return report;
}

void require_lemmas(const LemmaReport& report) {
  if (report.all_pass()) return;
  std::string failed;
  if (!report.first_step_on_line) failed += " first_step_on_line";
  if (!report.single_jump_sufficient) failed += " single_jump_sufficient";
  if (!report.zero_allocation_bottom) failed += " zero_allocation_bottom";
  if (!report.steps_dominated) failed += " steps_dominated";
  throw Error(ErrorCode::LemmaViolation, "failed assertions:" + failed);
}

}  // namespace screenopt
