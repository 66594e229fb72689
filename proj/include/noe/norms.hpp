#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "noe/core.hpp"

namespace noe {

enum class NormKind : std::uint8_t { Commitment, Prohibition, Sanction };
enum class OutcomeKind : std::uint8_t { Satisfied, Violated };

const char* to_string(OutcomeKind o);

// Antecedents and consequents are closed predicates over the belief and action
// enums; plain function pointers keep norms value-semantic and comparable.
using AntecedentFn = bool (*)(const Beliefs&);
using ConsequentFn = bool (*)(Action);

struct Norm {
    NormKind kind = NormKind::Commitment;
    std::string_view name;
    AntecedentFn antecedent = nullptr;  // when the norm applies
    ConsequentFn consequent = nullptr;  // behavioral norms: actions that satisfy;
                                        // sanction norms: actions that trigger the sanction
    int sanction_sign = 0;              // sanction norms only: valence of the reaction
};

// A behavioral norm bound to a bearer for one step. The counterparty list is the
// queue snapshot shared across bearers; the bearer itself is excluded by readers.
struct ActiveNorm {
    const Norm* norm = nullptr;
    AgentId bearer = kNoAgent;
    std::shared_ptr<const std::vector<AgentId>> counterparties;

    template <typename Fn>
    void for_each_counterparty(Fn&& fn) const {
        if (!counterparties) return;
        for (AgentId id : *counterparties) {
            if (id != bearer) fn(id);
        }
    }
};

struct FulfillmentOutcome {
    const Norm* norm = nullptr;
    AgentId bearer = kNoAgent;
    Action action = Action::Noop;
    OutcomeKind outcome = OutcomeKind::Satisfied;
};

// The built-in norm base: one line-up commitment for queue members plus the two
// sanction reactions (negative toward observed jumps, positive toward observed
// compliance). Stable storage; pointers into it stay valid for program lifetime.
const std::vector<Norm>& default_norm_base();

// Behavioral norms (commitments/prohibitions) whose antecedent holds for these
// beliefs, bound to the bearer. Sanction norms never activate as behavior.
std::vector<ActiveNorm> identify_and_instantiate(const Beliefs& beliefs, AgentId bearer,
                                                 const std::vector<Norm>& base);

// One outcome per active norm for the action actually taken.
std::vector<FulfillmentOutcome> check_fulfillment(const std::vector<ActiveNorm>& active,
                                                  Action action);

}  // namespace noe
