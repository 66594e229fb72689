#include "noe/norms.hpp"

namespace noe {

const char* to_string(OutcomeKind o) {
    return o == OutcomeKind::Satisfied ? "satisfied" : "violated";
}

namespace {

bool in_queue(const Beliefs& beliefs) { return beliefs.location == Location::InQueue; }

bool not_jump(Action a) { return a != Action::Jump; }
bool is_jump(Action a) { return a == Action::Jump; }
bool is_stay(Action a) { return a == Action::Stay; }

}  // namespace

const std::vector<Norm>& default_norm_base() {
    static const std::vector<Norm> base = {
        // Queue members commit to holding their place toward everyone queued.
        Norm{NormKind::Commitment, "line-up", &in_queue, &not_jump, 0},
        // Witnesses react negatively to a jump...
        Norm{NormKind::Sanction, "censure-jump", &in_queue, &is_jump, -1},
        // ...and positively to visible compliance.
        Norm{NormKind::Sanction, "praise-stay", &in_queue, &is_stay, +1},
    };
    return base;
}

std::vector<ActiveNorm> identify_and_instantiate(const Beliefs& beliefs, AgentId bearer,
                                                 const std::vector<Norm>& base) {
    std::vector<ActiveNorm> active;
    for (const Norm& norm : base) {
        if (norm.kind == NormKind::Sanction) continue;  // reactions, not obligations
        if (!norm.antecedent(beliefs)) continue;
        active.push_back(ActiveNorm{&norm, bearer, beliefs.queue});
    }
    return active;
}

std::vector<FulfillmentOutcome> check_fulfillment(const std::vector<ActiveNorm>& active,
                                                  Action action) {
    std::vector<FulfillmentOutcome> outcomes;
    outcomes.reserve(active.size());
    for (const ActiveNorm& an : active) {
        outcomes.push_back(FulfillmentOutcome{
            an.norm, an.bearer, action,
            an.norm->consequent(action) ? OutcomeKind::Satisfied : OutcomeKind::Violated});
    }
    return outcomes;
}

}  // namespace noe
