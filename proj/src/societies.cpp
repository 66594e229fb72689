#include "noe/societies.hpp"

#include <algorithm>

namespace noe {

SocietyPolicy make_policy(SocietyKind kind) {
    SocietyPolicy policy;
    policy.kind = kind;
    return policy;
}

namespace {

bool violates_any(const std::vector<ActiveNorm>& active, Action action) {
    for (const ActiveNorm& norm : active) {
        if (!norm.norm->consequent(action)) return true;
    }
    return false;
}

bool offered(const std::vector<UtilityEstimate>& utilities, Action action) {
    for (const UtilityEstimate& u : utilities) {
        if (u.action == action) return true;
    }
    return false;
}

Action goal_or_first(const Beliefs& beliefs, Intention intention,
                     const std::vector<UtilityEstimate>& utilities) {
    if (const std::optional<Action> goal = goal_action(beliefs, intention)) return *goal;
    return utilities.front().action;
}

}  // namespace

Action choose(const SocietyPolicy& policy, const Beliefs& beliefs, Intention intention,
              const std::vector<ActiveNorm>& active_norms,
              const std::vector<UtilityEstimate>& utilities, const SimConfig& config,
              Rng& rng) {
    switch (policy.kind) {
        case SocietyKind::Obedient: {
            if (const std::optional<Action> goal = goal_action(beliefs, intention)) {
                if (!violates_any(active_norms, *goal)) return *goal;
            }
            for (const UtilityEstimate& u : utilities) {
                if (!violates_any(active_norms, u.action)) return u.action;
            }
            return utilities.front().action;
        }
        case SocietyKind::Anarchy: {
            if (beliefs.location == Location::InQueue && intention == Intention::GetFood &&
                offered(utilities, Action::Jump)) {
                return Action::Jump;
            }
            return goal_or_first(beliefs, intention, utilities);
        }
        case SocietyKind::Sanctioning: {
            if (beliefs.location != Location::InQueue) {
                return goal_or_first(beliefs, intention, utilities);
            }
            if (!offered(utilities, Action::Jump)) return Action::Stay;
            if (rng.next_double() < config.epsilon) {
                return rng.next_below(2) == 0 ? Action::Stay : Action::Jump;
            }
            const double stay_value = policy.q_stay;
            const double jump_value =
                policy.q_jump + sanctioning_jump_prior(beliefs, intention, config);
            return stay_value >= jump_value ? Action::Stay : Action::Jump;
        }
        case SocietyKind::Noe: {
            const UtilityEstimate* best = &utilities.front();
            for (const UtilityEstimate& u : utilities) {
                if (u.total > best->total) best = &u;
            }
            return best->action;
        }
    }
    return utilities.front().action;
}

void update_experience(SocietyPolicy& policy, Action action_taken, double realized_reward,
                       const SimConfig& config) {
    if (policy.kind != SocietyKind::Sanctioning && policy.kind != SocietyKind::Noe) return;
    if (action_taken == Action::Stay) {
        policy.q_stay += config.learning_rate * (realized_reward - policy.q_stay);
    } else if (action_taken == Action::Jump) {
        policy.q_jump += config.learning_rate * (realized_reward - policy.q_jump);
    }
}

double sanctioning_jump_prior(const Beliefs& beliefs, Intention intention,
                              const SimConfig& config) {
    if (intention != Intention::GetFood) return 0.0;
    if (beliefs.location != Location::InQueue || !beliefs.queue) return 0.0;
    const std::size_t members = beliefs.queue->size();
    if (members < 2) return 0.0;
    return config.jump_prior_scale * static_cast<double>(members - 1);
}

}  // namespace noe
