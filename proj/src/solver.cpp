#include "screenopt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace screenopt {

const char* to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::RejectAll: return "reject_all";
    case CandidateKind::NoJumpLine: return "no_jump_line";
    case CandidateKind::Stair: return "stair";
  }
  return "unknown";
}

std::vector<std::pair<CandidateRecord, AllocationRule>> enumerate_candidates(
    const AdmissionGame& game) {
  const double s_low = game.skill_low();
  const std::size_t n = game.num_budgets();

  std::vector<std::pair<CandidateRecord, AllocationRule>> out;
  out.reserve(n * n + n + 2);
  out.emplace_back(CandidateRecord{CandidateKind::RejectAll, 0.0, 0.0, 0.0, 0.0},
                   AllocationRule::reject_all());
  out.emplace_back(CandidateRecord{CandidateKind::NoJumpLine, 0.0, 0.0, 0.0, 0.0},
                   AllocationRule::low_skill_line(s_low));

  std::vector<double> jump_sites;
  jump_sites.reserve(n + 1);
  jump_sites.push_back(0.0);
  for (std::size_t i = 0; i < n; ++i) jump_sites.push_back(game.quality_product(i, SkillTier::Low));

  for (double q_jump : jump_sites) {
    for (std::size_t j = 0; j < n; ++j) {
      const double q_one = game.quality_product(j, SkillTier::High);
      if (!(q_jump < q_one)) continue;
      const double height = 1.0 - q_one / s_low;
      if (!(height > 0.0)) continue;
      out.emplace_back(CandidateRecord{CandidateKind::Stair, q_jump, q_one, height, 0.0},
                       AllocationRule::slanted_stair(s_low, q_jump, q_one));
    }
  }
  return out;
}

SolveResult solve(const AdmissionGame& game) {
  auto candidates = enumerate_candidates(game);
  SolveResult result;
  result.candidates.reserve(candidates.size());
  bool have_best = false;
  for (auto& [record, rule] : candidates) {
    record.value = principal_utility(game, rule);
    result.candidates.push_back(record);
    if (!have_best || record.value > result.best_value) {
      have_best = true;
      result.best_value = record.value;
      result.best_rule = rule;
      result.best_candidate = record;
    }
  }
  return result;
}

SubsidySolveResult solve_subsidized(const SubsidizedGame& sub_game, std::size_t grid_points) {
  const AdmissionGame& base = sub_game.base;
  const double d_min = sub_game.d_min;
  const double d_max = sub_game.d_max;
  if (d_min < d_max && grid_points < 2) {
    throw Error(ErrorCode::BadRange, "a non-degenerate subsidy range needs grid_points >= 2");
  }

  std::set<double> ds;
  ds.insert(d_min);
  ds.insert(d_max);
  if (d_min < d_max) {
    for (std::size_t k = 0; k < grid_points; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(grid_points - 1);
      ds.insert(d_min + t * (d_max - d_min));
    }
    // Subsidies where a high-tier product overtakes a low-tier product are
    // where the candidate geometry reshuffles.
    const double s_low = base.skill_low();
    const double s_high = base.skill_high();
    const std::size_t n = base.num_budgets();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double d =
            (s_low * base.budget(i) - s_high * base.budget(j)) / (s_high - s_low);
        if (d >= d_min && d <= d_max) ds.insert(d);
      }
    }
    const double d_screen = minimal_offline_subsidy_bound(base);
    if (d_screen >= d_min && d_screen <= d_max) ds.insert(d_screen);
  }

  SubsidySolveResult result;
  result.sweep.reserve(ds.size());
  bool have_best = false;
  for (double d : ds) {
    SolveResult r = solve(apply_subsidy(base, d));
    result.sweep.emplace_back(d, r.best_value);
    if (!have_best || r.best_value > result.inner.best_value) {
      have_best = true;
      result.best_d = d;
      result.inner = std::move(r);
    }
  }
  return result;
}

double minimal_offline_subsidy_bound(const AdmissionGame& game) {
  const double s_low = game.skill_low();
  const double s_high = game.skill_high();
  const double b_first = game.budget(0);
  const double b_last = game.budget(game.num_budgets() - 1);

  // Effort above 1 is never rational, so only min(b + d, 1) of a budget is
  // usable. Screening becomes possible once the weakest high-tier type can
  // usefully out-signal the strongest low-tier type.
  const auto margin = [&](double d) {
    return s_high * std::min(b_first + d, 1.0) - s_low * std::min(b_last + d, 1.0);
  };
  if (margin(0.0) > 0.0) return 0.0;

  // Piecewise-linear in d with breaks where each budget saturates at 1.
  const double cap_last = std::max(0.0, 1.0 - b_last);
  const double cap_first = std::max(0.0, 1.0 - b_first);
  if (b_last < 1.0) {
    const double root = (s_low * b_last - s_high * b_first) / (s_high - s_low);
    if (root >= 0.0 && root <= cap_last) return root;
  }
  const double root = s_low / s_high - b_first;
  if (root >= cap_last && root <= cap_first) return root;
  if (margin(10.0) <= 0.0) {
    throw Error(ErrorCode::Unattainable, "no subsidy d <= 10 enables perfect screening");
  }
  return cap_first;
}

double minimal_offline_subsidy(const AdmissionGame& game) {
  const double bound = minimal_offline_subsidy_bound(game);
  constexpr double kProbe = 1e-6;
  const AdmissionGame probe_game = apply_subsidy(game, bound + kProbe);
  const double attained = solve(probe_game).best_value;
  if (std::fabs(attained - offline_optimal(game)) > 1e-6) {
    throw Error(ErrorCode::InternalError,
                "screening bound failed verification: value " + std::to_string(attained) +
                    " vs offline " + std::to_string(offline_optimal(game)));
  }
  return bound;
}

}  // namespace screenopt
