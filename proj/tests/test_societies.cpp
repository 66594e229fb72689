#include "doctest.h"

#include <memory>
#include <vector>

#include "noe/decision.hpp"
#include "noe/norms.hpp"
#include "noe/societies.hpp"

using namespace noe;

namespace {

std::shared_ptr<const std::vector<AgentId>> make_queue(std::size_t n) {
    std::vector<AgentId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<AgentId>(i);
    return std::make_shared<const std::vector<AgentId>>(std::move(ids));
}

Beliefs queued(int position, std::size_t queue_len, int health = 50) {
    Beliefs b;
    b.location = Location::InQueue;
    b.queue_position = position;
    b.own_health = health;
    b.queue = make_queue(queue_len);
    return b;
}

struct Scored {
    std::vector<ActiveNorm> active;
    std::vector<UtilityEstimate> utilities;
};

Scored score(const Beliefs& beliefs, Intention intention, const SocietyPolicy& policy,
             const SimConfig& config) {
    Scored s;
    s.active = identify_and_instantiate(beliefs, kNoAgent, default_norm_base());
    for (Action a : available_actions(beliefs)) {
        s.utilities.push_back(
            result_utility(beliefs, intention, a, s.active, policy, config));
    }
    return s;
}

}  // namespace

TEST_CASE("policies start with blank experience of the matching kind") {
    for (SocietyKind kind : {SocietyKind::Obedient, SocietyKind::Anarchy,
                             SocietyKind::Sanctioning, SocietyKind::Noe}) {
        const SocietyPolicy policy = make_policy(kind);
        CHECK(policy.kind == kind);
        CHECK(policy.q_stay == doctest::Approx(0.0));
        CHECK(policy.q_jump == doctest::Approx(0.0));
    }
}

TEST_CASE("obedient agents take the goal action and never break the line") {
    SimConfig config;
    Rng rng(1);
    const SocietyPolicy policy = make_policy(SocietyKind::Obedient);

    Beliefs home;
    home.location = Location::Home;
    home.own_health = 40;
    const Scored at_home = score(home, Intention::GetFood, policy, config);
    CHECK(choose(policy, home, Intention::GetFood, at_home.active, at_home.utilities, config,
                 rng) == Action::GoToStore);

    // Even a lethal queue position never provokes a jump.
    const Beliefs doomed = queued(40, 45, 3);
    const Scored in_line = score(doomed, Intention::GetFood, policy, config);
    CHECK(choose(policy, doomed, Intention::GetFood, in_line.active, in_line.utilities,
                 config, rng) == Action::Stay);
}

TEST_CASE("anarchic agents jump whenever hunger and a forward spot allow") {
    SimConfig config;
    Rng rng(1);
    const SocietyPolicy policy = make_policy(SocietyKind::Anarchy);

    const Beliefs mid = queued(5, 12);
    const Scored hungry = score(mid, Intention::GetFood, policy, config);
    CHECK(choose(policy, mid, Intention::GetFood, hungry.active, hungry.utilities, config,
                 rng) == Action::Jump);

    // At the head there is nothing to jump over.
    const Beliefs head = queued(1, 12);
    const Scored at_head = score(head, Intention::GetFood, policy, config);
    CHECK(choose(policy, head, Intention::GetFood, at_head.active, at_head.utilities, config,
                 rng) == Action::Stay);

    // Without the hunger goal the line is respected.
    const Scored idle = score(mid, Intention::Wandering, policy, config);
    CHECK(choose(policy, mid, Intention::Wandering, idle.active, idle.utilities, config,
                 rng) == Action::Stay);
}

TEST_CASE("fresh sanctioning agents jump on the impatience prior, then learn better") {
    SimConfig config;
    config.epsilon = 0.0;  // isolate the greedy rule
    Rng rng(1);
    SocietyPolicy policy = make_policy(SocietyKind::Sanctioning);

    const Beliefs mid = queued(5, 12);
    const Scored s = score(mid, Intention::GetFood, policy, config);

    // Blank experience: prior alone favors jumping in a crowd.
    CHECK(choose(policy, mid, Intention::GetFood, s.active, s.utilities, config, rng) ==
          Action::Jump);

    // Learned censure outweighs the prior: value(stay) >= value(jump) picks stay.
    policy.q_jump = -2.0 * config.jump_prior_scale * 11.0;
    CHECK(choose(policy, mid, Intention::GetFood, s.active, s.utilities, config, rng) ==
          Action::Stay);

    // Ties go to staying.
    policy.q_jump = -sanctioning_jump_prior(mid, Intention::GetFood, config);
    CHECK(choose(policy, mid, Intention::GetFood, s.active, s.utilities, config, rng) ==
          Action::Stay);
}

TEST_CASE("sanctioning exploration stays within the queue pair") {
    SimConfig config;
    config.epsilon = 1.0;  // always explore
    Rng rng(123);
    const SocietyPolicy policy = make_policy(SocietyKind::Sanctioning);
    const Beliefs mid = queued(5, 12);
    const Scored s = score(mid, Intention::GetFood, policy, config);

    bool saw_stay = false;
    bool saw_jump = false;
    for (int i = 0; i < 64; ++i) {
        const Action a =
            choose(policy, mid, Intention::GetFood, s.active, s.utilities, config, rng);
        saw_stay = saw_stay || a == Action::Stay;
        saw_jump = saw_jump || a == Action::Jump;
        CHECK((a == Action::Stay || a == Action::Jump));
    }
    CHECK(saw_stay);
    CHECK(saw_jump);
}

TEST_CASE("the impatience prior needs hunger, a queue and company") {
    SimConfig config;  // jump_prior_scale 1.2
    const Beliefs mid = queued(5, 12);
    CHECK(sanctioning_jump_prior(mid, Intention::GetFood, config) ==
          doctest::Approx(1.2 * 11.0));
    CHECK(sanctioning_jump_prior(mid, Intention::Wandering, config) == doctest::Approx(0.0));

    const Beliefs alone = queued(1, 1);
    CHECK(sanctioning_jump_prior(alone, Intention::GetFood, config) == doctest::Approx(0.0));

    Beliefs home;
    home.location = Location::Home;
    home.own_health = 40;
    CHECK(sanctioning_jump_prior(home, Intention::GetFood, config) == doctest::Approx(0.0));
}

TEST_CASE("argmax selection follows the amplified totals and breaks ties in order") {
    SimConfig config;
    Rng rng(1);
    const SocietyPolicy policy = make_policy(SocietyKind::Noe);
    const Beliefs mid = queued(5, 12);

    std::vector<UtilityEstimate> utilities(2);
    utilities[0].action = Action::Stay;
    utilities[0].total = 1.0;
    utilities[1].action = Action::Jump;
    utilities[1].total = 4.0;
    CHECK(choose(policy, mid, Intention::GetFood, {}, utilities, config, rng) ==
          Action::Jump);

    utilities[1].total = 1.0;  // tie: first entry wins
    CHECK(choose(policy, mid, Intention::GetFood, {}, utilities, config, rng) ==
          Action::Stay);
}

TEST_CASE("experience updates move queue values by the learning rate") {
    SimConfig config;  // learning_rate 0.1
    SocietyPolicy policy = make_policy(SocietyKind::Sanctioning);

    update_experience(policy, Action::Jump, -10.0, config);
    CHECK(policy.q_jump == doctest::Approx(-1.0));
    update_experience(policy, Action::Jump, -10.0, config);
    CHECK(policy.q_jump == doctest::Approx(-1.9));
    CHECK(policy.q_stay == doctest::Approx(0.0));

    update_experience(policy, Action::Stay, 5.0, config);
    CHECK(policy.q_stay == doctest::Approx(0.5));

    // Off-queue actions leave the values alone.
    update_experience(policy, Action::GoToStore, 100.0, config);
    CHECK(policy.q_stay == doctest::Approx(0.5));
    CHECK(policy.q_jump == doctest::Approx(-1.9));
}

TEST_CASE("only learning societies accumulate experience") {
    SimConfig config;
    SocietyPolicy obedient = make_policy(SocietyKind::Obedient);
    update_experience(obedient, Action::Stay, 7.0, config);
    CHECK(obedient.q_stay == doctest::Approx(0.0));

    SocietyPolicy anarchic = make_policy(SocietyKind::Anarchy);
    update_experience(anarchic, Action::Jump, 7.0, config);
    CHECK(anarchic.q_jump == doctest::Approx(0.0));

    SocietyPolicy noe = make_policy(SocietyKind::Noe);
    update_experience(noe, Action::Stay, 7.0, config);
    CHECK(noe.q_stay == doctest::Approx(0.7));
}
