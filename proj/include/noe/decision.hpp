#pragma once

#include <optional>
#include <span>
#include <vector>

#include "noe/core.hpp"
#include "noe/emotions.hpp"
#include "noe/norms.hpp"
#include "noe/rng.hpp"

namespace noe {

// Per-agent observation snapshot assembled by the environment once per step.
struct WorldView {
    AgentId self = kNoAgent;
    Location location = Location::Home;
    int queue_position = 0;
    int health = 0;
    int packets = 0;
    std::shared_ptr<const std::vector<AgentId>> queue;
    std::shared_ptr<const std::vector<Emotion>> co_located_emotions;
    long co_located_valence = 0;
    std::shared_ptr<const std::vector<std::pair<AgentId, Action>>> co_located_prev_actions;
};

Beliefs form_beliefs(const WorldView& view);

// Hungry below the threshold, wandering otherwise.
Intention generate_intention(const Beliefs& beliefs, const DesireSet& desires,
                             const SimConfig& config);

// Legal actions for the believed location. ConsumeFood requires held packets.
std::vector<Action> available_actions(const Beliefs& beliefs);

// The unique action that advances the intention, when one exists. In the queue
// neither Stay nor Jump counts as goal progress.
std::optional<Action> goal_action(const Beliefs& beliefs, Intention intention);

struct UtilityEstimate {
    Action action = Action::Noop;
    double extrinsic = 0.0;
    double intrinsic = 0.0;
    double total = 0.0;
};

// Steps until service assuming the batch rate, from a 1-based queue position.
int expected_wait(int position, const SimConfig& config);

// Forecast utility of one action. Extrinsic: death forecast (service arriving
// later than remaining health) plus the goal bonus. Intrinsic: compliance or
// violation payoff per active norm, plus the learned Q prior for Noe agents.
UtilityEstimate result_utility(const Beliefs& beliefs, Intention intention, Action action,
                               const std::vector<ActiveNorm>& active_norms,
                               const SocietyPolicy& policy, const SimConfig& config);

// 1 + min(|negative part of valence|, 8) / 4, in [1, 3].
double amplifier(std::span<const Emotion> observed_and_self);
double amplifier_from_valence(long valence);

// Scales the negative components of a norm-violating action's estimate.
void apply_amplifier(UtilityEstimate& estimate, double factor, bool violates_norms);

// Full per-agent decision: instantiate norms, score available actions (amplified
// when norms are active), then let the society policy choose.
Action select_action(const Beliefs& beliefs, Intention intention, const DesireSet& desires,
                     const SocietyPolicy& policy, const std::vector<Norm>& base,
                     const SimConfig& config, Rng& rng);

}  // namespace noe
