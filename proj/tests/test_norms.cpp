#include "doctest.h"

#include <memory>
#include <vector>

#include "noe/norms.hpp"

using namespace noe;

namespace {

Beliefs queue_beliefs(int position, std::shared_ptr<const std::vector<AgentId>> queue) {
    Beliefs b;
    b.location = Location::InQueue;
    b.queue_position = position;
    b.own_health = 50;
    b.queue = std::move(queue);
    return b;
}

}  // namespace

TEST_CASE("the built-in norm base holds one commitment and a sanction pair") {
    const std::vector<Norm>& base = default_norm_base();
    REQUIRE(base.size() == 3);

    int commitments = 0;
    int negative_sanctions = 0;
    int positive_sanctions = 0;
    for (const Norm& norm : base) {
        if (norm.kind == NormKind::Commitment) {
            ++commitments;
            CHECK(norm.name == "line-up");
            // Staying satisfies the commitment, jumping breaks it.
            CHECK(norm.consequent(Action::Stay));
            CHECK_FALSE(norm.consequent(Action::Jump));
        }
        if (norm.kind == NormKind::Sanction) {
            CHECK(norm.sanction_sign != 0);
            if (norm.sanction_sign < 0) {
                ++negative_sanctions;
                CHECK(norm.consequent(Action::Jump));   // triggers on the breach
                CHECK_FALSE(norm.consequent(Action::Stay));
            } else {
                ++positive_sanctions;
                CHECK(norm.consequent(Action::Stay));   // triggers on compliance
                CHECK_FALSE(norm.consequent(Action::Jump));
            }
        }
    }
    CHECK(commitments == 1);
    CHECK(negative_sanctions == 1);
    CHECK(positive_sanctions == 1);
}

TEST_CASE("queue membership activates the commitment; home does not") {
    const std::vector<Norm>& base = default_norm_base();
    auto queue = std::make_shared<const std::vector<AgentId>>(std::vector<AgentId>{3, 7, 9});

    const std::vector<ActiveNorm> active = identify_and_instantiate(queue_beliefs(2, queue), 7, base);
    REQUIRE(active.size() == 1);
    CHECK(active[0].norm->kind == NormKind::Commitment);
    CHECK(active[0].bearer == 7);

    Beliefs home;
    home.location = Location::Home;
    home.own_health = 50;
    CHECK(identify_and_instantiate(home, 7, base).empty());
}

TEST_CASE("sanction norms never activate as behavioral norms") {
    const std::vector<Norm>& base = default_norm_base();
    auto queue = std::make_shared<const std::vector<AgentId>>(std::vector<AgentId>{1, 2});
    for (const ActiveNorm& active : identify_and_instantiate(queue_beliefs(1, queue), 1, base)) {
        CHECK(active.norm->kind != NormKind::Sanction);
    }
}

TEST_CASE("counterparty iteration walks the queue snapshot minus the bearer") {
    const std::vector<Norm>& base = default_norm_base();
    auto queue = std::make_shared<const std::vector<AgentId>>(std::vector<AgentId>{3, 7, 9});
    const std::vector<ActiveNorm> active = identify_and_instantiate(queue_beliefs(2, queue), 7, base);
    REQUIRE(active.size() == 1);

    std::vector<AgentId> seen;
    active[0].for_each_counterparty([&](AgentId id) { seen.push_back(id); });
    CHECK(seen == std::vector<AgentId>{3, 9});
}

TEST_CASE("fulfillment checking grades the taken action against each active norm") {
    const std::vector<Norm>& base = default_norm_base();
    auto queue = std::make_shared<const std::vector<AgentId>>(std::vector<AgentId>{1, 2});
    const std::vector<ActiveNorm> active = identify_and_instantiate(queue_beliefs(2, queue), 2, base);
    REQUIRE(active.size() == 1);

    const std::vector<FulfillmentOutcome> stayed = check_fulfillment(active, Action::Stay);
    REQUIRE(stayed.size() == 1);
    CHECK(stayed[0].outcome == OutcomeKind::Satisfied);
    CHECK(stayed[0].bearer == 2);
    CHECK(stayed[0].action == Action::Stay);

    const std::vector<FulfillmentOutcome> jumped = check_fulfillment(active, Action::Jump);
    REQUIRE(jumped.size() == 1);
    CHECK(jumped[0].outcome == OutcomeKind::Violated);

    CHECK(check_fulfillment({}, Action::Stay).empty());
}
