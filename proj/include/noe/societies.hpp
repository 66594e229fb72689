#pragma once

#include <vector>

#include "noe/core.hpp"
#include "noe/decision.hpp"
#include "noe/norms.hpp"
#include "noe/rng.hpp"

namespace noe {

SocietyPolicy make_policy(SocietyKind kind);

// Society-specific action choice over the pre-scored candidates.
//   Obedient:    the norm-satisfying goal action, never Jump.
//   Anarchy:     Jump whenever queued, hungry and not already at the head.
//   Sanctioning: epsilon-greedy over Q plus a crowd-sized impatience prior;
//                forecasts (including the death term) are ignored.
//   Noe:         argmax of the amplified utility estimates.
// Ties resolve in action-enum order. `rng` is drawn only by Sanctioning.
Action choose(const SocietyPolicy& policy, const Beliefs& beliefs, Intention intention,
              const std::vector<ActiveNorm>& active_norms,
              const std::vector<UtilityEstimate>& utilities, const SimConfig& config,
              Rng& rng);

// Q[a] += learning_rate * (realized_reward - Q[a]) for the in-queue actions of
// learning societies; no-op otherwise.
void update_experience(SocietyPolicy& policy, Action action_taken, double realized_reward,
                       const SimConfig& config);

// Impatience prior added to the greedy value of Jump for Sanctioning agents.
double sanctioning_jump_prior(const Beliefs& beliefs, Intention intention,
                              const SimConfig& config);

}  // namespace noe
