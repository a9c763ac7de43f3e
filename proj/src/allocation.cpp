#include "screenopt/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace screenopt {

namespace {

constexpr double kValueSlack = 1e-9;   // tolerated FP overshoot above 1 inside segments
constexpr double kMonotoneTol = 1e-12;

bool close_to_one(double v) { return std::fabs(v - 1.0) <= 1e-12; }

}  // namespace

AllocationRule::AllocationRule(std::vector<Knot> knots) : knots_(std::move(knots)) {
  if (knots_.empty() || knots_[0].q != 0.0 || knots_[0].value != 0.0) {
    throw Error(ErrorCode::BadOrdering, "rule must start with a knot (0, 0)");
  }
  double prev_q = -1.0;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Knot& k = knots_[i];
    if (!std::isfinite(k.q) || !(k.q > prev_q)) {
      throw Error(ErrorCode::BadOrdering, "knot qualities must be strictly increasing");
    }
    prev_q = k.q;
    if (!std::isfinite(k.slope) || k.slope < 0.0) {
      throw Error(ErrorCode::BadOrdering, "segment slopes must be non-negative");
    }
    for (double v : {k.value, k.right_value}) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0 + kValueSlack) {
        throw Error(ErrorCode::BadOrdering, "allocations must lie in [0, 1]");
      }
    }
    if (i + 1 < knots_.size()) {
      const double top = k.right_value + k.slope * (knots_[i + 1].q - k.q);
      if (top > 1.0 + kValueSlack) {
        throw Error(ErrorCode::BadOrdering, "segment exceeds allocation 1");
      }
    } else if (k.slope != 0.0) {
      throw Error(ErrorCode::BadOrdering, "the final segment must be flat");
    }
  }
  monotone_ = true;
  for (std::size_t i = 0; i < knots_.size() && monotone_; ++i) {
    const Knot& k = knots_[i];
    if (i > 0) {
      const Knot& p = knots_[i - 1];
      const double left_limit = p.right_value + p.slope * (k.q - p.q);
      if (k.value < left_limit - kMonotoneTol) monotone_ = false;
    }
    if (k.right_value < k.value - kMonotoneTol) monotone_ = false;
  }
}

AllocationRule AllocationRule::from_knots(std::vector<Knot> knots) {
  return AllocationRule(std::move(knots));
}

AllocationRule AllocationRule::reject_all() {
  return AllocationRule({{0.0, 0.0, 0.0, 0.0}});
}

AllocationRule AllocationRule::low_skill_line(double skill) {
  if (!(skill > 0.0) || !std::isfinite(skill)) {
    throw Error(ErrorCode::BadOrdering, "skill must be positive");
  }
  return AllocationRule({{0.0, 0.0, 0.0, 1.0 / skill}, {skill, 1.0, 1.0, 0.0}});
}

AllocationRule AllocationRule::slanted_stair(double skill, double q_jump, double q_one) {
  if (!(skill > 0.0) || !std::isfinite(skill)) {
    throw Error(ErrorCode::BadOrdering, "skill must be positive");
  }
  if (!(q_jump >= 0.0) || !(q_jump < q_one)) {
    throw Error(ErrorCode::BadOrdering, "requires 0 <= q_jump < q_one");
  }
  // The segment after the jump runs with slope 1/skill into (q_one, 1), so
  // the gap it opens over the line is fixed by q_one alone.
  const double gap = 1.0 - q_one / skill;
  if (!(gap > 0.0)) {
    throw Error(ErrorCode::NonPositiveJump,
                "jump height 1 - q_one/skill = " + std::to_string(gap) + " must be positive");
  }
  const double slope = 1.0 / skill;
  if (q_jump == 0.0) {
    return AllocationRule({{0.0, 0.0, gap, slope}, {q_one, 1.0, 1.0, 0.0}});
  }
  const double pre = q_jump / skill;
  const double post = std::min(pre + gap, 1.0);
  return AllocationRule(
      {{0.0, 0.0, 0.0, slope}, {q_jump, pre, post, slope}, {q_one, 1.0, 1.0, 0.0}});
}

AllocationRule AllocationRule::threshold(double q_th, bool strict) {
  if (!(q_th >= 0.0) || !std::isfinite(q_th)) {
    throw Error(ErrorCode::BadOrdering, "threshold quality must be non-negative");
  }
  if (q_th == 0.0) {
    // beta(0) = 0 wins over the degenerate cutoff; everything above gets 1.
    return AllocationRule({{0.0, 0.0, 1.0, 0.0}});
  }
  if (strict) {
    return AllocationRule({{0.0, 0.0, 0.0, 0.0}, {q_th, 0.0, 1.0, 0.0}});
  }
  return AllocationRule({{0.0, 0.0, 0.0, 0.0}, {q_th, 1.0, 1.0, 0.0}});
}

AllocationRule AllocationRule::multi_stair(double skill, const std::vector<double>& breakpoints,
                                           const std::vector<double>& gaps) {
  if (!(skill > 0.0)) throw Error(ErrorCode::BadOrdering, "skill must be positive");
  if (breakpoints.size() != gaps.size()) {
    throw Error(ErrorCode::BadOrdering, "one gap per breakpoint required");
  }
  const double slope = 1.0 / skill;
  std::vector<Knot> knots;
  knots.push_back({0.0, 0.0, 0.0, slope});
  double value = 0.0;  // running value approaching the current quality
  double at = 0.0;
  double prev_bp = -1.0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double q = breakpoints[i];
    const double gap = gaps[i];
    if (!(q >= 0.0) || !(q > prev_bp)) {
      throw Error(ErrorCode::BadOrdering, "breakpoints must be strictly increasing");
    }
    prev_bp = q;
    if (!(gap >= 0.0)) throw Error(ErrorCode::BadOrdering, "gaps must be non-negative");
    const double pre = value + slope * (q - at);
    if (pre >= 1.0) break;  // already full before this breakpoint
    const double post = std::min(pre + gap, 1.0);
    if (q == 0.0) {
      knots[0].right_value = post;
    } else if (gap > 0.0) {
      knots.push_back({q, pre, post, slope});
    }
    value = post;
    at = q;
    if (post >= 1.0) break;
  }
  if (value < 1.0) {
    const double q_full = at + skill * (1.0 - value);
    if (q_full > knots.back().q) {
      knots.back().slope = slope;
      knots.push_back({q_full, 1.0, 1.0, 0.0});
    } else {  // within one ulp of full already
      knots.back().right_value = 1.0;
      knots.back().slope = 0.0;
    }
  } else {
    knots.back().value = knots.back().q == 0.0 ? 0.0 : knots.back().value;
    knots.back().right_value = 1.0;
    knots.back().slope = 0.0;
  }
  return AllocationRule(std::move(knots));
}

AllocationRule AllocationRule::flat_steps(const std::vector<double>& breakpoints,
                                          const std::vector<double>& steps) {
  if (breakpoints.size() != steps.size()) {
    throw Error(ErrorCode::BadOrdering, "one step value per breakpoint required");
  }
  std::vector<Knot> knots;
  knots.push_back({0.0, 0.0, 0.0, 0.0});
  double value = 0.0;
  double prev_bp = -1.0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double q = breakpoints[i];
    const double x = steps[i];
    if (!(q >= 0.0) || !(q > prev_bp)) {
      throw Error(ErrorCode::BadOrdering, "breakpoints must be strictly increasing");
    }
    prev_bp = q;
    if (!(x >= value)) throw Error(ErrorCode::BadOrdering, "step values must be non-decreasing");
    if (x > 1.0) throw Error(ErrorCode::BadOrdering, "step values must lie in [0, 1]");
    if (x == value) continue;
    if (q == 0.0) {
      knots[0].right_value = x;  // the step switches on just above 0
    } else {
      knots.push_back({q, x, x, 0.0});
    }
    value = x;
  }
  return AllocationRule(std::move(knots));
}

AllocationRule AllocationRule::single_option(double q, double x) {
  if (!(q > 0.0)) throw Error(ErrorCode::BadOrdering, "option quality must be positive");
  if (!(x >= 0.0) || x > 1.0) throw Error(ErrorCode::BadOrdering, "option allocation in [0,1]");
  return AllocationRule({{0.0, 0.0, 0.0, 0.0}, {q, x, x, 0.0}});
}

std::size_t AllocationRule::bracket(double q) const {
  // last knot with knot.q <= q
  std::size_t lo = 0, hi = knots_.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (knots_[mid].q <= q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double AllocationRule::value_at(double q) const {
  if (q <= 0.0) return 0.0;
  const std::size_t i = bracket(q);
  const Knot& k = knots_[i];
  if (k.q == q) return k.value;
  return std::min(k.right_value + k.slope * (q - k.q), 1.0);
}

double AllocationRule::right_limit_at(double q) const {
  if (q < 0.0) return 0.0;
  const std::size_t i = q <= 0.0 ? 0 : bracket(q);
  const Knot& k = knots_[i];
  if (k.q == q) return k.right_value;
  return std::min(k.right_value + k.slope * (q - k.q), 1.0);
}

double AllocationRule::terminal_one_from() const {
  const Knot& last = knots_.back();
  if (close_to_one(last.value) && close_to_one(last.right_value)) return last.q;
  if (close_to_one(last.right_value) && last.slope == 0.0) return last.q;
  return kNeverOne;
}

bool AllocationRule::reaches_one() const { return terminal_one_from() != kNeverOne; }

std::vector<JumpPoint> AllocationRule::jump_points() const {
  std::vector<JumpPoint> jumps;
  for (const Knot& k : knots_) {
    if (k.right_value > k.value) {
      jumps.push_back({k.q, k.value, k.right_value});
    }
  }
  return jumps;
}

bool AllocationRule::operator==(const AllocationRule& other) const {
  if (knots_.size() != other.knots_.size()) return false;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Knot& a = knots_[i];
    const Knot& b = other.knots_[i];
    if (a.q != b.q || a.value != b.value || a.right_value != b.right_value || a.slope != b.slope) {
      return false;
    }
  }
  return true;
}

AllocationRule ratchet(const AllocationRule& rule) {
  if (rule.monotone()) return rule;

  const auto& ks = rule.knots();
  std::vector<Knot> out;
  out.reserve(ks.size() + 2);
  double run = 0.0;  // sup of attained values so far
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Knot& k = ks[i];
    const double v = std::max(k.value, run);
    run = std::max(run, v);
    if (i + 1 == ks.size()) {
      out.push_back({k.q, v, std::max(k.right_value, run), 0.0});
      break;
    }
    const double span = ks[i + 1].q - k.q;
    const double end_limit = k.right_value + k.slope * span;
    if (k.right_value >= run) {
      // segment is at or above everything seen; keep it
      out.push_back({k.q, v, k.right_value, k.slope});
      run = std::max(run, end_limit);
    } else if (k.slope > 0.0 && end_limit > run) {
      // flat at the running max until the original curve re-crosses it
      const double q_cross = k.q + (run - k.right_value) / k.slope;
      out.push_back({k.q, v, run, 0.0});
      if (q_cross < ks[i + 1].q) {
        out.push_back({q_cross, run, run, k.slope});
      }
      run = end_limit;
    } else {
      // entire segment dominated
      out.push_back({k.q, v, run, 0.0});
    }
  }
  return AllocationRule::from_knots(std::move(out));
}

}  // namespace screenopt
