#pragma once

#include <cstdint>
#include <random>

#include "screenopt/allocation.hpp"
#include "screenopt/game.hpp"

namespace screenopt {

/// Deterministic uniform draw in [0, 1). Uses the raw engine bits instead of
/// std::uniform_real_distribution so sequences are identical across standard
/// library implementations.
inline double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * canonical(rng);
}

/// Well-separated random instance: skills straddle the threshold with real
/// margins, budgets are distinct with a minimum spacing, and every type has
/// at least a few percent of mass.
AdmissionGame random_game(std::mt19937_64& rng, std::size_t num_budgets);

/// Random weakly increasing rule: a handful of slope segments and upward
/// jumps, sometimes reaching full allocation.
AllocationRule random_monotone_rule(std::mt19937_64& rng);

/// Random piecewise rule with non-negative slopes but jumps of either sign.
AllocationRule random_piecewise_rule(std::mt19937_64& rng);

AgentType random_agent(std::mt19937_64& rng);

}  // namespace screenopt
