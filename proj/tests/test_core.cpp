#include "doctest.h"

#include <stdexcept>

#include "noe/core.hpp"

using namespace noe;

TEST_CASE("society names round-trip through parse and print") {
    for (SocietyKind kind : {SocietyKind::Obedient, SocietyKind::Anarchy,
                             SocietyKind::Sanctioning, SocietyKind::Noe}) {
        SocietyKind parsed;
        REQUIRE(society_from_string(to_string(kind), parsed));
        CHECK(parsed == kind);
    }
    SocietyKind parsed;
    CHECK_FALSE(society_from_string("chaos", parsed));
    CHECK_FALSE(society_from_string("", parsed));
}

TEST_CASE("config validation rejects out-of-range fields") {
    SimConfig config;
    CHECK_NOTHROW(validate_config(config));

    SimConfig bad = config;
    bad.n_agents = 0;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.queue_size = -1;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.epsilon = 1.5;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.learning_rate = 0.0;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.health_mean = 0;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.intention_threshold = 101;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.payoff_deceased = 5;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = config;
    bad.jump_prior_scale = -0.1;
    CHECK_THROWS_AS(validate_config(bad), std::invalid_argument);
}

TEST_CASE("clamp_health pins values between death and full health") {
    CHECK(clamp_health(-5) == 0);
    CHECK(clamp_health(0) == 0);
    CHECK(clamp_health(1) == 1);
    CHECK(clamp_health(50) == 50);
    CHECK(clamp_health(100) == 100);
    CHECK(clamp_health(140) == 100);
}

TEST_CASE("initial health draws are deterministic per seed") {
    SimConfig config;
    Rng a(42);
    Rng b(42);
    Rng c(43);
    bool any_differs = false;
    for (int i = 0; i < 64; ++i) {
        const int x = initial_health_sample(config, a);
        const int y = initial_health_sample(config, b);
        const int z = initial_health_sample(config, c);
        CHECK(x == y);
        any_differs = any_differs || (x != z);
    }
    CHECK(any_differs);
}

TEST_CASE("fresh agents start healthy, hungry below the threshold, and empty-handed") {
    SimConfig config;
    Rng rng(7);
    for (AgentId id = 0; id < 200; ++id) {
        const AgentState agent = init_agent(id, config, rng);
        CHECK(agent.id == id);
        CHECK(agent.location == Location::Home);
        CHECK(agent.health >= 1);
        CHECK(agent.health <= 100);
        CHECK_FALSE(agent.deceased);
        CHECK(agent.food_packets == 0);
        CHECK(agent.desires.have_food);
        CHECK(agent.desires.wander);
        const Intention expected = agent.health < config.intention_threshold
                                       ? Intention::GetFood
                                       : Intention::Wandering;
        CHECK(agent.intention == expected);
    }
}

TEST_CASE("tick drains one health point and kills at zero") {
    SimConfig config;
    Rng rng(1);
    AgentState agent = init_agent(0, config, rng);
    agent.health = 2;
    tick_agent(agent, 0, config);
    CHECK(agent.health == 1);
    CHECK_FALSE(agent.deceased);
    tick_agent(agent, 1, config);
    CHECK(agent.health == 0);
    CHECK(agent.deceased);
}

TEST_CASE("tick walks held food toward expiry and discards it at zero") {
    SimConfig config;
    config.food_expiry_window = 2;
    Rng rng(1);
    AgentState agent = init_agent(0, config, rng);
    agent.health = 50;
    agent.food_packets = 4;
    agent.food_expiry = 2;
    tick_agent(agent, 0, config);
    CHECK(agent.food_packets == 4);
    CHECK(agent.food_expiry == 1);
    tick_agent(agent, 1, config);
    CHECK(agent.food_packets == 0);
    CHECK(agent.food_expiry == 0);
}

TEST_CASE("tick decays older emotions but spares ones born this step") {
    SimConfig config;
    Rng rng(1);
    AgentState agent = init_agent(0, config, rng);
    agent.health = 50;

    Emotion fresh;
    fresh.source = fresh.target = agent.id;
    fresh.intensity = 1;
    fresh.duration = config.emotion_duration;
    fresh.decay = config.emotion_decay;
    fresh.born_step = 5;

    Emotion old = fresh;
    old.born_step = 4;
    old.intensity = -2;

    agent.emotions = {fresh, old};
    tick_agent(agent, 5, config);
    REQUIRE(agent.emotions.size() == 2);
    CHECK(agent.emotions[0].intensity == 1);   // newborn untouched
    CHECK(agent.emotions[1].intensity == -1);  // older one decayed toward zero
    CHECK(agent.emotions[1].duration == config.emotion_duration - 1);
}
