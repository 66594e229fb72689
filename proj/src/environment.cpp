#include "noe/environment.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>

#include "noe/decision.hpp"
#include "noe/emotions.hpp"
#include "noe/societies.hpp"

namespace noe {

namespace {

constexpr std::uint64_t kRuntimeStreamSalt = 0x9e3779b97f4a7c15ull;

std::size_t loc_index(Location location) { return static_cast<std::size_t>(location); }

bool uses_emotions(SocietyKind kind) {
    return kind == SocietyKind::Noe || kind == SocietyKind::Sanctioning;
}

}  // namespace

World make_world(const SimConfig& config) {
    validate_config(config);
    // Two streams: agent initialization depends on the seed alone so paired-seed
    // runs start from identical populations; everything run-time uses the salted
    // stream.
    World world(Rng(config.seed ^ kRuntimeStreamSalt));
    world.config = config;
    Rng init_rng(config.seed);
    world.agents.reserve(static_cast<std::size_t>(config.n_agents));
    for (int id = 0; id < config.n_agents; ++id) {
        world.agents.push_back(init_agent(static_cast<AgentId>(id), config, init_rng));
    }
    return world;
}

void consume_food(AgentState& agent, const SimConfig& config) {
    if (agent.food_packets <= 0) return;
    agent.health = clamp_health(agent.health + config.restore_per_packet);
    agent.food_packets -= 1;
    if (agent.food_packets == 0) agent.food_expiry = 0;
}

void step_world(World& world) {
    const SimConfig& config = world.config;
    const std::vector<Norm>& base = default_norm_base();
    const std::size_t n = world.agents.size();
    const int now = world.step;

    detail::StepScratch& scratch = world.scratch;
    scratch.action.assign(n, Action::Noop);
    scratch.acted.assign(n, 0);
    scratch.received_sum.assign(n, 0);
    scratch.self_sum.assign(n, 0);
    scratch.outcome.assign(n, -1);
    scratch.queue_pos.assign(n, 0);
    scratch.joiners.clear();
    scratch.jumpers.clear();

    // 1. Observation: location-shared snapshots, then per-agent beliefs.
    auto queue_snapshot = std::make_shared<const std::vector<AgentId>>(world.queue);
    for (std::size_t i = 0; i < queue_snapshot->size(); ++i) {
        scratch.queue_pos[(*queue_snapshot)[i]] = static_cast<int>(i) + 1;
    }

    std::array<std::shared_ptr<std::vector<Emotion>>, 4> pools;
    std::array<std::shared_ptr<std::vector<std::pair<AgentId, Action>>>, 4> action_pools;
    for (std::size_t l = 0; l < 4; ++l) {
        pools[l] = std::make_shared<std::vector<Emotion>>();
        action_pools[l] = std::make_shared<std::vector<std::pair<AgentId, Action>>>();
    }
    for (const AgentState& agent : world.agents) {
        if (agent.deceased) continue;
        const std::size_t l = loc_index(agent.location);
        pools[l]->insert(pools[l]->end(), agent.emotions.begin(), agent.emotions.end());
        if (now > 0) action_pools[l]->emplace_back(agent.id, agent.last_action);
    }
    std::array<long, 4> pool_valence{};
    for (std::size_t l = 0; l < 4; ++l) pool_valence[l] = aggregate_valence(*pools[l]);

    for (AgentState& agent : world.agents) {
        if (agent.deceased) continue;
        const std::size_t l = loc_index(agent.location);
        WorldView view;
        view.self = agent.id;
        view.location = agent.location;
        view.queue_position = scratch.queue_pos[agent.id];
        view.health = agent.health;
        view.packets = agent.food_packets;
        view.queue = queue_snapshot;
        view.co_located_emotions = pools[l];
        view.co_located_valence = pool_valence[l];
        view.co_located_prev_actions = action_pools[l];
        agent.beliefs = form_beliefs(view);
    }

    // 2. Deliberation in agent-id order.
    for (AgentState& agent : world.agents) {
        if (agent.deceased) continue;
        agent.intention = generate_intention(agent.beliefs, agent.desires, config);
        const Action action = select_action(agent.beliefs, agent.intention, agent.desires,
                                            agent.policy, base, config, world.rng);
        scratch.action[agent.id] = action;
        scratch.acted[agent.id] = 1;
        agent.last_action = action;
    }

    // 3a. In-place actions in id order; movements are collected for 3b/3c.
    for (AgentState& agent : world.agents) {
        if (agent.deceased) continue;
        switch (scratch.action[agent.id]) {
            case Action::ConsumeFood:
                consume_food(agent, config);
                break;
            case Action::GoHome:
                agent.location = Location::Home;
                break;
            case Action::GoToStore:
                scratch.joiners.push_back(agent.id);
                break;
            case Action::Noop:
                // Travelers keep trying the door until a slot opens.
                if (agent.location == Location::Traveling) scratch.joiners.push_back(agent.id);
                break;
            case Action::Jump:
                scratch.jumpers.push_back(agent.id);
                break;
            case Action::Stay:
            case Action::Wander:
                break;
        }
    }
    world.store.clear();

    // 3b. Queue admission in a fresh shuffled order each step.
    world.rng.shuffle(scratch.joiners);
    for (AgentId id : scratch.joiners) {
        AgentState& agent = world.agents[id];
        if (static_cast<int>(world.queue.size()) < config.queue_size) {
            world.queue.push_back(id);
            agent.location = Location::InQueue;
            agent.enqueue_step = now;
        } else {
            agent.location = Location::Traveling;
        }
    }
    world.max_queue_len = std::max(world.max_queue_len, static_cast<int>(world.queue.size()));

    // 3c. Jumps move to the head, shuffled so simultaneous jumpers scramble.
    world.rng.shuffle(scratch.jumpers);
    for (AgentId id : scratch.jumpers) {
        auto it = std::find(world.queue.begin(), world.queue.end(), id);
        world.queue.erase(it);
        world.queue.insert(world.queue.begin(), id);
    }

    // 4. Service: the head of the line collects packets with a fresh expiry.
    const int served =
        std::min<int>(config.service_capacity, static_cast<int>(world.queue.size()));
    double wait_sum = 0.0;
    for (int k = 0; k < served; ++k) {
        AgentState& agent = world.agents[world.queue[static_cast<std::size_t>(k)]];
        agent.food_packets = std::min(config.food_max, agent.food_packets + config.packets_per_service);
        agent.food_expiry = config.food_expiry_window;
        agent.location = Location::InStore;
        world.store.push_back(agent.id);
        wait_sum += static_cast<double>(now - agent.enqueue_step);
        agent.enqueue_step = -1;
    }
    world.queue.erase(world.queue.begin(), world.queue.begin() + served);
    world.services_total += served;
    world.max_served_one_step = std::max(world.max_served_one_step, served);

    // 5. Fulfillment for everyone who held a queue spot when the step began.
    long step_satisfied = 0;
    long step_violated = 0;
    std::vector<FulfillmentOutcome> step_outcomes;
    step_outcomes.reserve(queue_snapshot->size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> outcome_slice(n, {0, 0});
    for (AgentId id : *queue_snapshot) {
        const AgentState& agent = world.agents[id];
        const std::vector<ActiveNorm> active = identify_and_instantiate(agent.beliefs, id, base);
        const std::vector<FulfillmentOutcome> outcomes =
            check_fulfillment(active, scratch.action[id]);
        outcome_slice[id] = {static_cast<std::uint32_t>(step_outcomes.size()),
                             static_cast<std::uint32_t>(outcomes.size())};
        for (const FulfillmentOutcome& outcome : outcomes) {
            step_outcomes.push_back(outcome);
            if (outcome.outcome == OutcomeKind::Satisfied) {
                ++step_satisfied;
                scratch.outcome[id] = 0;
            } else {
                ++step_violated;
                scratch.outcome[id] = 1;
            }
        }
    }
    world.satisfied_total += step_satisfied;
    world.violated_total += step_violated;

    // 6. Self-directed appraisal (Noe): own outcomes plus echoes of what was
    // received last step.
    if (config.society == SocietyKind::Noe) {
        for (AgentState& agent : world.agents) {
            if (agent.deceased) continue;
            const auto [start, count] = outcome_slice[agent.id];
            if (count == 0 && agent.received_prev.empty()) continue;
            const std::span<const FulfillmentOutcome> own{step_outcomes.data() + start, count};
            std::vector<Emotion> elicited =
                elicit_self_directed(agent, own, agent.received_prev, config);
            for (Emotion e : elicited) {
                e.born_step = now;
                scratch.self_sum[agent.id] += e.intensity;
                agent.emotions.push_back(e);
            }
        }
    }

    // 7. Other-directed appraisal and delivery: queue co-members react to each
    // outcome; the reaction is felt by the caster and delivered to the bearer.
    if (uses_emotions(config.society)) {
        for (const FulfillmentOutcome& outcome : step_outcomes) {
            for (AgentId observer_id : *queue_snapshot) {
                if (observer_id == outcome.bearer) continue;
                AgentState& observer = world.agents[observer_id];
                std::vector<Emotion> cast =
                    elicit_other_directed(observer, outcome, base, config);
                for (Emotion e : cast) {
                    e.born_step = now;
                    observer.emotions.push_back(e);
                    world.agents[outcome.bearer].received_now.push_back(e);
                    scratch.received_sum[outcome.bearer] += e.intensity;
                }
            }
        }
    }

    // 8. Experience: realized reward is what came back from the crowd plus what
    // the agent made itself feel.
    if (uses_emotions(config.society)) {
        for (AgentId id : *queue_snapshot) {
            const double reward = static_cast<double>(scratch.received_sum[id]) +
                                  static_cast<double>(scratch.self_sum[id]);
            update_experience(world.agents[id].policy, scratch.action[id], reward, config);
        }
    }

    // 9. Upkeep: decay health and held food, retire expired emotions, collect
    // the dead, rotate the received ledger.
    bool any_death = false;
    for (AgentState& agent : world.agents) {
        if (agent.deceased) continue;
        tick_agent(agent, now, config);
        if (agent.deceased) {
            any_death = true;
            world.deceased_total += 1;
            update_experience(agent.policy, agent.last_action,
                              static_cast<double>(config.payoff_deceased), config);
        } else {
            agent.received_prev = std::move(agent.received_now);
            agent.received_now.clear();
        }
    }
    if (any_death) {
        auto dead = [&](AgentId id) { return world.agents[id].deceased; };
        world.queue.erase(std::remove_if(world.queue.begin(), world.queue.end(), dead),
                          world.queue.end());
        world.store.erase(std::remove_if(world.store.begin(), world.store.end(), dead),
                          world.store.end());
    }

    // 10. Metrics, 1-based step numbering.
    StepMetrics metrics;
    metrics.step = now + 1;
    metrics.cohesion = cohesion_value(step_satisfied, step_satisfied + step_violated);
    metrics.deceased_total = world.deceased_total;
    long alive = 0;
    long health_sum = 0;
    for (const AgentState& agent : world.agents) {
        if (agent.deceased) continue;
        ++alive;
        health_sum += agent.health;
    }
    if (alive > 0) {
        metrics.avg_health = static_cast<double>(health_sum) / static_cast<double>(alive);
    }
    if (served > 0) metrics.avg_waiting = wait_sum / static_cast<double>(served);
    metrics.served = served;
    world.metrics.push_back(metrics);

    if (config.log_events) {
        for (const AgentState& agent : world.agents) {
            if (!scratch.acted[agent.id]) continue;
            Event event;
            event.step = now + 1;
            event.agent = agent.id;
            event.action = scratch.action[agent.id];
            if (scratch.outcome[agent.id] == 0) event.outcome = OutcomeKind::Satisfied;
            if (scratch.outcome[agent.id] == 1) event.outcome = OutcomeKind::Violated;
            event.sanctions_received = scratch.received_sum[agent.id];
            event.health = agent.health;
            event.location = agent.location;
            world.events.push_back(event);
        }
    }

    world.step += 1;
    if (config.verify_invariants) verify_world(world);
}

void run_world(World& world) {
    while (world.step < world.config.n_steps) step_world(world);
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error(what); }

}  // namespace

void verify_world(const World& world) {
    const SimConfig& config = world.config;
    if (static_cast<int>(world.queue.size()) > config.queue_size) fail("queue over capacity");
    if (static_cast<int>(world.store.size()) > config.service_capacity) {
        fail("store over capacity");
    }

    std::vector<char> queued(world.agents.size(), 0);
    for (AgentId id : world.queue) {
        if (queued[id]) fail("duplicate queue entry");
        queued[id] = 1;
        const AgentState& agent = world.agents[id];
        if (agent.deceased) fail("deceased agent in queue");
        if (agent.location != Location::InQueue) fail("queue entry not located in queue");
        if (agent.enqueue_step < 0) fail("queue entry without enqueue step");
    }
    std::vector<char> in_store(world.agents.size(), 0);
    for (AgentId id : world.store) {
        if (in_store[id]) fail("duplicate store entry");
        in_store[id] = 1;
        const AgentState& agent = world.agents[id];
        if (agent.deceased) fail("deceased agent in store");
        if (agent.location != Location::InStore) fail("store entry not located in store");
    }

    long deceased = 0;
    for (const AgentState& agent : world.agents) {
        if (agent.deceased) {
            ++deceased;
            continue;
        }
        if (agent.health < 1 || agent.health > 100) fail("health out of range");
        if (agent.food_packets < 0 || agent.food_packets > config.food_max) {
            fail("packets out of range");
        }
        if (agent.food_expiry < 0 || agent.food_expiry > config.food_expiry_window) {
            fail("expiry out of range");
        }
        if ((agent.food_packets > 0) != (agent.food_expiry > 0)) {
            fail("packet and expiry state disagree");
        }
        if (agent.location == Location::InQueue && !queued[agent.id]) {
            fail("agent located in queue without a slot");
        }
        if (agent.location == Location::InStore && !in_store[agent.id]) {
            fail("agent located in store without being served");
        }
        for (const Emotion& emotion : agent.emotions) {
            if (emotion.intensity == 0) fail("stored emotion with zero intensity");
            if (emotion.duration < 1) fail("stored emotion past its duration");
        }
    }
    if (deceased != world.deceased_total) fail("deceased count out of sync");
    if (static_cast<int>(world.metrics.size()) != world.step) fail("metrics row per step");
    if (world.max_served_one_step > config.service_capacity) fail("service over capacity");
}

}  // namespace noe
