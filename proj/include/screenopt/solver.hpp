#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "screenopt/allocation.hpp"
#include "screenopt/evaluation.hpp"
#include "screenopt/game.hpp"

namespace screenopt {

enum class CandidateKind { RejectAll, NoJumpLine, Stair };

const char* to_string(CandidateKind kind);

/// An entry of the search ledger. For stairs, `q_jump`/`q_one` locate the
/// jump and the full-allocation crossing and `jump_height` is the vertical
/// gap 1 - q_one/skill_low; both coordinates are 0 for the baselines.
struct CandidateRecord {
  CandidateKind kind = CandidateKind::RejectAll;
  double q_jump = 0.0;
  double q_one = 0.0;
  double jump_height = 0.0;
  double value = 0.0;
};

struct SolveResult {
  AllocationRule best_rule = AllocationRule::reject_all();
  double best_value = 0.0;
  CandidateRecord best_candidate;
  std::vector<CandidateRecord> candidates;
};

struct SubsidySolveResult {
  double best_d = 0.0;
  SolveResult inner;
  std::vector<std::pair<double, double>> sweep;  // (d, value), ascending in d
};

/// The finite family that contains an optimum: the zero rule, the low-skill
/// line, and every single-jump stair with the jump at 0 or at a low-tier
/// type product and the full-allocation crossing at a high-tier type
/// product. Stairs whose implied jump height is non-positive are skipped.
/// At most n^2 + n + 2 rules.
std::vector<std::pair<CandidateRecord, AllocationRule>> enumerate_candidates(
    const AdmissionGame& game);

/// Evaluates every candidate and returns the maximizer. Candidates are
/// scanned in a fixed order (baselines first, stairs by ascending jump then
/// crossing) and replaced only on strict improvement, so equal-value ties
/// resolve to the lexicographically smallest rule and the result is
/// bit-for-bit deterministic.
SolveResult solve(const AdmissionGame& game);

/// Sweeps the subsidy range: a uniform grid of `grid_points` values over
/// [d_min, d_max], both endpoints, every product-crossing subsidy
/// (skill_high*(b_j+d) = skill_low*(b_i+d)), and the minimal full-screening
/// subsidy when it falls in range. Solves the shifted game at each and keeps
/// the best (smallest d on ties). Throws BadRange when grid_points < 2 on a
/// non-degenerate range.
SubsidySolveResult solve_subsidized(const SubsidizedGame& sub_game, std::size_t grid_points = 1000);

/// Smallest d >= 0 from which the principal can screen perfectly, i.e.
/// skill_high * min(b_1 + d, 1) > skill_low * min(b_n + d, 1) for every
/// d above it (effort beyond 1 is never rational, hence the caps). Verified
/// by solving at d + 1e-6 and checking the offline optimum is reached within
/// 1e-6; diagnoses Unattainable if no d <= 10 works.
double minimal_offline_subsidy(const AdmissionGame& game);

/// The closed form alone, without the verification solve.
double minimal_offline_subsidy_bound(const AdmissionGame& game);

}  // namespace screenopt
