#pragma once

#include <optional>
#include <vector>

#include "noe/core.hpp"
#include "noe/norms.hpp"
#include "noe/rng.hpp"
#include "noe/stats.hpp"

namespace noe {

// One row per acting agent per step, recorded when event logging is on.
// Health and location are end-of-step values.
struct Event {
    int step = 0;
    AgentId agent = kNoAgent;
    Action action = Action::Noop;
    std::optional<OutcomeKind> outcome;
    long sanctions_received = 0;  // sum of delivered sanction intensities
    int health = 0;
    Location location = Location::Home;
};

namespace detail {
// Reusable per-step buffers; contents are valid only within one step.
struct StepScratch {
    std::vector<Action> action;
    std::vector<signed char> acted;    // alive at decision time this step
    std::vector<long> received_sum;
    std::vector<long> self_sum;
    std::vector<signed char> outcome;  // -1 none, 0 satisfied, 1 violated
    std::vector<int> queue_pos;        // 1-based, 0 when not queued
    std::vector<AgentId> joiners;
    std::vector<AgentId> jumpers;
};
}  // namespace detail

struct World {
    SimConfig config;
    std::vector<AgentState> agents;
    std::vector<AgentId> queue;  // index 0 is the head (position 1)
    std::vector<AgentId> store;  // occupants being served; emptied next step
    int step = 0;                // completed steps
    Rng rng;

    long deceased_total = 0;
    long satisfied_total = 0;
    long violated_total = 0;
    long services_total = 0;
    int max_served_one_step = 0;
    int max_queue_len = 0;

    std::vector<StepMetrics> metrics;  // one entry per completed step
    std::vector<Event> events;         // populated when config.log_events

    detail::StepScratch scratch;

    explicit World(Rng runtime_rng) : rng(runtime_rng) {}
};

// Builds agents with an init stream derived from the seed alone, so initial
// populations match across societies for paired-seed comparisons. The runtime
// stream is derived separately.
World make_world(const SimConfig& config);

// Advances one step: observe, decide (agent-id order), apply actions, serve the
// queue head, check fulfillment, elicit and deliver emotions, update experience,
// tick, record metrics.
void step_world(World& world);

// Runs the configured number of steps.
void run_world(World& world);

// One packet eaten: health restored (capped at 100), packet count reduced.
void consume_food(AgentState& agent, const SimConfig& config);

// Structural invariant scan; throws std::logic_error on violation.
void verify_world(const World& world);

}  // namespace noe
