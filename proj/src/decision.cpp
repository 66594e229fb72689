#include "noe/decision.hpp"

#include <algorithm>

#include "noe/societies.hpp"

namespace noe {

Beliefs form_beliefs(const WorldView& view) {
    Beliefs b;
    b.location = view.location;
    b.queue_position = view.queue_position;
    b.own_health = view.health;
    b.own_packets = view.packets;
    b.queue = view.queue;
    b.observed_emotions = view.co_located_emotions;
    b.observed_valence = view.co_located_valence;
    b.observed_actions = view.co_located_prev_actions;
    return b;
}

Intention generate_intention(const Beliefs& beliefs, const DesireSet& desires,
                             const SimConfig& config) {
    const bool hungry = beliefs.own_health < config.intention_threshold;
    // Holding packets keeps the episode alive while another packet still fits
    // under the health cap; otherwise food strands in the pantry and expires.
    const bool pantry_usable =
        beliefs.own_packets > 0 && beliefs.own_health + config.restore_per_packet <= 100;
    if (desires.have_food && (hungry || pantry_usable)) return Intention::GetFood;
    return Intention::Wandering;
}

std::vector<Action> available_actions(const Beliefs& beliefs) {
    std::vector<Action> actions;
    switch (beliefs.location) {
        case Location::Home:
            actions.push_back(Action::GoToStore);
            if (beliefs.own_packets > 0) actions.push_back(Action::ConsumeFood);
            actions.push_back(Action::Wander);
            break;
        case Location::InQueue:
            actions.push_back(Action::Stay);
            if (beliefs.queue_position > 1) actions.push_back(Action::Jump);
            break;
        case Location::InStore:
            actions.push_back(Action::GoHome);
            break;
        case Location::Traveling:
            actions.push_back(Action::Noop);
            break;
    }
    return actions;
}

std::optional<Action> goal_action(const Beliefs& beliefs, Intention intention) {
    switch (beliefs.location) {
        case Location::Home:
            if (intention == Intention::GetFood) {
                return beliefs.own_packets > 0 ? Action::ConsumeFood : Action::GoToStore;
            }
            return Action::Wander;
        case Location::InStore:
            return Action::GoHome;  // the store is a pickup point, not a place to linger
        case Location::InQueue:
        case Location::Traveling:
            return std::nullopt;
    }
    return std::nullopt;
}

int expected_wait(int position, const SimConfig& config) {
    return (position + config.service_capacity - 1) / config.service_capacity;
}

UtilityEstimate result_utility(const Beliefs& beliefs, Intention intention, Action action,
                               const std::vector<ActiveNorm>& active_norms,
                               const SocietyPolicy& policy, const SimConfig& config) {
    UtilityEstimate estimate;
    estimate.action = action;

    if (beliefs.location == Location::InQueue) {
        // Survival forecast: service arriving no sooner than the health runs out.
        // A jump is scored from the head of the line.
        const int position = action == Action::Jump ? 1 : beliefs.queue_position;
        if (action == Action::Stay || action == Action::Jump) {
            if (expected_wait(position, config) >= beliefs.own_health) {
                estimate.extrinsic += config.payoff_deceased;
            }
        }
    }
    if (goal_action(beliefs, intention) == action) estimate.extrinsic += config.goal_bonus;

    for (const FulfillmentOutcome& outcome : check_fulfillment(active_norms, action)) {
        estimate.intrinsic += outcome.outcome == OutcomeKind::Satisfied
                                  ? config.payoff_compliance
                                  : config.payoff_violation;
    }
    if (policy.kind == SocietyKind::Noe) {
        if (action == Action::Stay) estimate.intrinsic += policy.q_stay;
        if (action == Action::Jump) estimate.intrinsic += policy.q_jump;
    }

    estimate.total = estimate.extrinsic + estimate.intrinsic;
    return estimate;
}

double amplifier_from_valence(long valence) {
    const long negative = valence < 0 ? -valence : 0;
    return 1.0 + static_cast<double>(std::min(negative, 8L)) / 4.0;
}

double amplifier(std::span<const Emotion> observed_and_self) {
    return amplifier_from_valence(aggregate_valence(observed_and_self));
}

void apply_amplifier(UtilityEstimate& estimate, double factor, bool violates_norms) {
    if (violates_norms) {
        if (estimate.extrinsic < 0.0) estimate.extrinsic *= factor;
        if (estimate.intrinsic < 0.0) estimate.intrinsic *= factor;
    }
    estimate.total = estimate.extrinsic + estimate.intrinsic;
}

namespace {

bool violates_any(const std::vector<ActiveNorm>& active, Action action) {
    for (const ActiveNorm& norm : active) {
        if (!norm.norm->consequent(action)) return true;
    }
    return false;
}

}  // namespace

Action select_action(const Beliefs& beliefs, Intention intention, const DesireSet&,
                     const SocietyPolicy& policy, const std::vector<Norm>& base,
                     const SimConfig& config, Rng& rng) {
    const std::vector<ActiveNorm> active = identify_and_instantiate(beliefs, kNoAgent, base);
    const double factor =
        active.empty() ? 1.0 : amplifier_from_valence(beliefs.observed_valence);

    std::vector<UtilityEstimate> estimates;
    const std::vector<Action> actions = available_actions(beliefs);
    estimates.reserve(actions.size());
    for (Action action : actions) {
        UtilityEstimate estimate =
            result_utility(beliefs, intention, action, active, policy, config);
        apply_amplifier(estimate, factor, violates_any(active, action));
        estimates.push_back(estimate);
    }
    return choose(policy, beliefs, intention, active, estimates, config, rng);
}

}  // namespace noe
