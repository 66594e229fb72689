#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "noe/rng.hpp"

namespace noe {

using AgentId = std::uint32_t;
inline constexpr AgentId kNoAgent = 0xffffffffu;

enum class Action : std::uint8_t { Stay, Jump, GoToStore, GoHome, ConsumeFood, Wander, Noop };
enum class Location : std::uint8_t { Home, Traveling, InQueue, InStore };
enum class Intention : std::uint8_t { GetFood, Wandering };
enum class SocietyKind : std::uint8_t { Obedient, Anarchy, Sanctioning, Noe };

const char* to_string(Action a);
const char* to_string(Location l);
const char* to_string(SocietyKind s);

// Parse a society name as used by the CLI. Returns false on unknown names.
bool society_from_string(const std::string& name, SocietyKind& out);

struct DesireSet {
    bool have_food = true;
    bool wander = true;
};

struct Emotion {
    AgentId source = kNoAgent;
    AgentId target = kNoAgent;  // equal to source for self-directed emotions
    int intensity = 0;          // sign carries valence, magnitude the strength
    int duration = 0;           // remaining steps before expiry
    int decay = 1;              // magnitude lost per decay pass
    int born_step = -1;         // elicitation step; newborns skip that step's decay pass

    bool self_directed() const { return source == target; }
};

// Everything an agent can see when deciding. Shared pointers alias per-step
// world snapshots so belief formation stays O(1) per agent.
struct Beliefs {
    Location location = Location::Home;
    int queue_position = 0;  // 1-based when in queue, else 0
    int own_health = 0;
    int own_packets = 0;
    std::shared_ptr<const std::vector<AgentId>> queue;
    // Emotions expressed at the agent's location, own emotions included
    // (what is felt is expressed, so the pool is symmetric for all occupants).
    std::shared_ptr<const std::vector<Emotion>> observed_emotions;
    long observed_valence = 0;  // sum of intensities over observed_emotions
    // Actions taken at this location on the previous step.
    std::shared_ptr<const std::vector<std::pair<AgentId, Action>>> observed_actions;
};

// Per-agent learning state. Q values exist only for the in-queue pair of
// actions; the other actions have no experience slot.
struct SocietyPolicy {
    SocietyKind kind = SocietyKind::Noe;
    double q_stay = 0.0;
    double q_jump = 0.0;
};

struct SimConfig {
    int n_agents = 400;
    int queue_size = 80;
    int n_steps = 3000;
    SocietyKind society = SocietyKind::Noe;
    std::uint64_t seed = 1;

    // payoffs
    int payoff_deceased = -500;
    int payoff_compliance = 1;
    int payoff_violation = -1;
    int goal_bonus = 10;

    // emotion mechanics
    int emotion_unit = 1;
    int emotion_duration = 2;
    int emotion_decay = 1;
    bool valence_scaled_elicitation = false;  // experimental, off by default

    // food economy; one serving must be consumable inside the expiry window
    int packets_per_service = 15;
    int restore_per_packet = 3;
    int food_max = 15;
    int food_expiry_window = 15;

    // environment
    int service_capacity = 8;
    int intention_threshold = 80;
    int health_mean = 70;
    int health_sd = 15;

    // learning (Sanctioning and Noe)
    double learning_rate = 0.1;
    double epsilon = 0.1;          // Sanctioning exploration rate
    double jump_prior_scale = 1.2; // impatience prior per co-queued agent

    bool log_events = false;
    bool verify_invariants = false;
};

// Throws std::invalid_argument naming the offending field.
void validate_config(const SimConfig& config);

struct AgentState {
    AgentId id = kNoAgent;
    // Physical position, owned by the environment. Beliefs carry the copy formed
    // at observation time and stay frozen while a step is in flight.
    Location location = Location::Home;
    int health = 0;
    bool deceased = false;
    int food_packets = 0;
    int food_expiry = 0;  // steps until held packets are discarded; 0 when none held
    DesireSet desires;
    Intention intention = Intention::Wandering;
    Beliefs beliefs;
    SocietyPolicy policy;
    std::vector<Emotion> emotions;       // felt (and therefore expressed) emotions
    std::vector<Emotion> received_now;   // sanctions delivered this step
    std::vector<Emotion> received_prev;  // last step's deliveries; echoed next elicitation
    int enqueue_step = -1;               // step the current queue stint began, -1 outside
    Action last_action = Action::Noop;
};

// Rounded draw from Normal(health_mean, health_sd), before clamping.
int initial_health_sample(const SimConfig& config, Rng& rng);

// Fresh agent: clamped initial health, no food, both desires, intention from health.
AgentState init_agent(AgentId id, const SimConfig& config, Rng& rng);

// End-of-step upkeep: health decays by 1 (0 means deceased), held food moves one
// step closer to expiry (discarded at 0), emotions born on earlier steps decay.
// Must not be called on a deceased agent.
void tick_agent(AgentState& agent, int current_step, const SimConfig& config);

int clamp_health(int value);

}  // namespace noe
