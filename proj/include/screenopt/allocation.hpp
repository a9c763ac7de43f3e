#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "screenopt/errors.hpp"

namespace screenopt {

/// Breakpoint of a piecewise-linear allocation rule.
///
/// `value` is the allocation attained exactly at quality `q`; `right_value`
/// is the limit from above. Keeping both first-class lets a rule express the
/// two discontinuity styles that matter here: a segment that is closed at its
/// upper endpoint and jumps afterwards (value == left limit < right_value),
/// and a step that switches on at the point itself (value == right_value >
/// left limit, the weak-threshold convention). `slope` applies on (q, next q).
struct Knot {
  double q = 0.0;
  double value = 0.0;
  double right_value = 0.0;
  double slope = 0.0;
};

/// A recorded upward discontinuity: allocation at q and its right limit.
struct JumpPoint {
  double q = 0.0;
  double pre_value = 0.0;
  double post_value = 0.0;
};

/// Allocation rule beta: quality -> [0,1], piecewise linear with
/// open-below/closed-above segments between knots. beta(0) = 0 always.
/// Past the last knot the rule is constant (1 for rules that reach full
/// allocation; the final right value otherwise). Rules are immutable values.
class AllocationRule {
 public:
  static constexpr double kNeverOne = std::numeric_limits<double>::infinity();

  /// beta identically 0.
  static AllocationRule reject_all();

  /// The zero-utility line of skill s: beta(q) = q/s on (0, s], then 1.
  static AllocationRule low_skill_line(double skill);

  /// Single-jump rule: the line q/skill up to q_jump (closed), a jump of
  /// height 1 - q_one/skill, then slope 1/skill again until the rule meets
  /// allocation 1 exactly at q_one. Throws BadOrdering when q_jump >= q_one
  /// and NonPositiveJump when the jump height would not be positive
  /// (q_one >= skill).
  static AllocationRule slanted_stair(double skill, double q_jump, double q_one);

  /// Deterministic cutoff. Weak: beta(q) = 1 iff q >= q_th. Strict:
  /// beta(q) = 1 iff q > q_th, so full allocation at the cutoff itself is
  /// available only as a right limit. A weak cutoff at 0 still has
  /// beta(0) = 0; exhibiting quality 0 costs nothing and awards nothing.
  static AllocationRule threshold(double q_th, bool strict = false);

  /// Slope-1/skill rule with the given upward gaps at the given qualities,
  /// truncated once allocation 1 is reached (search families for the
  /// oracles). Breakpoints must be strictly increasing and non-negative;
  /// gaps must be non-negative. A gap overshooting 1 is truncated.
  static AllocationRule multi_stair(double skill, const std::vector<double>& breakpoints,
                                    const std::vector<double>& gaps);

  /// Piecewise-constant rule: value steps[i] on [breakpoints[i],
  /// breakpoints[i+1]), attained at the point itself. Values must be
  /// non-decreasing in [0,1]; breakpoints strictly increasing and > 0
  /// unless the first is 0 (whose step starts just above 0).
  static AllocationRule flat_steps(const std::vector<double>& breakpoints,
                                   const std::vector<double>& steps);

  /// Single lottery option: allocation x exactly at quality q (and beyond),
  /// 0 below.
  static AllocationRule single_option(double q, double x);

  /// Builds from raw knots after validating the representation invariants:
  /// first knot at q = 0 with value 0, strictly increasing qualities, finite
  /// slopes >= 0, all values within [0,1], zero slope after the last knot.
  static AllocationRule from_knots(std::vector<Knot> knots);

  const std::vector<Knot>& knots() const { return knots_; }

  /// Allocation attained at quality q. Always 0 at q = 0.
  double value_at(double q) const;

  /// lim_{q' -> q+} of the rule; differs from value_at only at knots.
  double right_limit_at(double q) const;

  /// Quality from which the rule is identically 1 (kNeverOne if it never is).
  double terminal_one_from() const;
  bool reaches_one() const;

  /// True when the rule is weakly increasing (checked on construction).
  bool monotone() const { return monotone_; }

  /// Upward discontinuities (right limit strictly above the attained value).
  std::vector<JumpPoint> jump_points() const;

  bool operator==(const AllocationRule& other) const;

 private:
  explicit AllocationRule(std::vector<Knot> knots);

  /// Index of the last knot with knots_[i].q <= q (q > 0 assumed).
  std::size_t bracket(double q) const;

  std::vector<Knot> knots_;
  bool monotone_ = true;
};

/// Pointwise running maximum from the left. Flattens every decreasing region
/// of the input to the value already achieved, yielding a weakly monotone
/// rule; monotone inputs are returned unchanged. Agents' best responses are
/// unaffected because every flattened quality was dominated by the earlier
/// quality that set the running maximum.
AllocationRule ratchet(const AllocationRule& rule);

}  // namespace screenopt
