#include "noe/core.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "noe/emotions.hpp"

namespace noe {

const char* to_string(Action a) {
    switch (a) {
        case Action::Stay: return "stay";
        case Action::Jump: return "jump";
        case Action::GoToStore: return "go_to_store";
        case Action::GoHome: return "go_home";
        case Action::ConsumeFood: return "consume_food";
        case Action::Wander: return "wander";
        case Action::Noop: return "noop";
    }
    return "?";
}

const char* to_string(Location l) {
    switch (l) {
        case Location::Home: return "home";
        case Location::Traveling: return "traveling";
        case Location::InQueue: return "in_queue";
        case Location::InStore: return "in_store";
    }
    return "?";
}

const char* to_string(SocietyKind s) {
    switch (s) {
        case SocietyKind::Obedient: return "obedient";
        case SocietyKind::Anarchy: return "anarchy";
        case SocietyKind::Sanctioning: return "sanctioning";
        case SocietyKind::Noe: return "noe";
    }
    return "?";
}

bool society_from_string(const std::string& name, SocietyKind& out) {
    if (name == "obedient") out = SocietyKind::Obedient;
    else if (name == "anarchy") out = SocietyKind::Anarchy;
    else if (name == "sanctioning") out = SocietyKind::Sanctioning;
    else if (name == "noe") out = SocietyKind::Noe;
    else return false;
    return true;
}

void validate_config(const SimConfig& config) {
    auto positive = [](long v, const char* field) {
        if (v <= 0) throw std::invalid_argument(std::string(field) + " must be positive");
    };
    positive(config.n_agents, "n_agents");
    positive(config.queue_size, "queue_size");
    positive(config.service_capacity, "service_capacity");
    positive(config.packets_per_service, "packets_per_service");
    positive(config.restore_per_packet, "restore_per_packet");
    positive(config.food_max, "food_max");
    positive(config.food_expiry_window, "food_expiry_window");
    positive(config.emotion_unit, "emotion_unit");
    positive(config.emotion_duration, "emotion_duration");
    positive(config.emotion_decay, "emotion_decay");
    positive(config.health_sd, "health_sd");
    if (config.n_steps < 0) throw std::invalid_argument("n_steps must be non-negative");
    if (config.intention_threshold < 1 || config.intention_threshold > 100)
        throw std::invalid_argument("intention_threshold must be in [1, 100]");
    if (config.health_mean < 1 || config.health_mean > 100)
        throw std::invalid_argument("health_mean must be in [1, 100]");
    if (config.learning_rate <= 0.0 || config.learning_rate > 1.0)
        throw std::invalid_argument("learning_rate must be in (0, 1]");
    if (config.epsilon < 0.0 || config.epsilon > 1.0)
        throw std::invalid_argument("epsilon must be in [0, 1]");
    if (config.jump_prior_scale < 0.0)
        throw std::invalid_argument("jump_prior_scale must be non-negative");
    if (config.payoff_deceased > 0)
        throw std::invalid_argument("payoff_deceased must not be positive");
}

int clamp_health(int value) {
    if (value < 0) return 0;
    if (value > 100) return 100;
    return value;
}

int initial_health_sample(const SimConfig& config, Rng& rng) {
    const double draw =
        static_cast<double>(config.health_mean) + static_cast<double>(config.health_sd) * rng.next_normal();
    return static_cast<int>(std::lround(draw));
}

AgentState init_agent(AgentId id, const SimConfig& config, Rng& rng) {
    AgentState agent;
    agent.id = id;
    int h = initial_health_sample(config, rng);
    if (h < 1) h = 1;
    if (h > 100) h = 100;
    agent.health = h;
    agent.deceased = false;
    agent.food_packets = 0;
    agent.food_expiry = 0;
    agent.desires = DesireSet{};
    agent.intention =
        (h < config.intention_threshold) ? Intention::GetFood : Intention::Wandering;
    agent.policy.kind = config.society;
    agent.beliefs.own_health = h;
    return agent;
}

void tick_agent(AgentState& agent, int current_step, const SimConfig& config) {
    assert(!agent.deceased && "tick_agent on a deceased agent");
    (void)config;
    agent.health -= 1;
    if (agent.health <= 0) {
        agent.health = 0;
        agent.deceased = true;
    }
    if (agent.food_expiry > 0) {
        agent.food_expiry -= 1;
        if (agent.food_expiry == 0) agent.food_packets = 0;
    }
    decay_emotions_in_place(agent.emotions, current_step);
}

}  // namespace noe
