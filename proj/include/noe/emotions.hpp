#pragma once

#include <span>
#include <vector>

#include "noe/core.hpp"
#include "noe/norms.hpp"

namespace noe {

// Expectation-versus-reality rule: which action was expected and which emotion
// templates fire on compliance or breach.
struct ElicitedEmotionRule {
    std::string_view name;
    Action expected_action = Action::Stay;
    Emotion on_satisfaction;  // positive template
    Emotion on_violation;     // negative template
};

struct AppraisalInput {
    AgentId actor = kNoAgent;
    OutcomeKind outcome = OutcomeKind::Satisfied;
    const ElicitedEmotionRule* rule = nullptr;
    long elicitor_valence = 0;  // used only when valence-scaled elicitation is on
};

// The rule used for the line-up commitment, with templates sized from config.
ElicitedEmotionRule line_up_rule(const SimConfig& config);

// Outcome -> emotion instance from the rule's matching template. Source and
// target are stamped by the caller; born_step by the engine.
Emotion appraise(const AppraisalInput& input, const SimConfig& config);

// Self-directed emotions for one step: one per own outcome, plus one negative
// echo per negative emotion received on the previous step.
std::vector<Emotion> elicit_self_directed(const AgentState& actor,
                                          std::span<const FulfillmentOutcome> own_outcomes,
                                          std::span<const Emotion> received,
                                          const SimConfig& config);

// Other-directed reactions of one observer to one observed outcome, driven by
// the sanction norms in the base. Empty when observer and actor are not at the
// same place (the observer's beliefs must place it in the queue).
std::vector<Emotion> elicit_other_directed(const AgentState& observer,
                                           const FulfillmentOutcome& observed,
                                           const std::vector<Norm>& base,
                                           const SimConfig& config);

// Pure decay pass: every emotion loses `decay` magnitude and one step of
// duration; entries at zero magnitude or duration are dropped.
std::vector<Emotion> decay_emotions(const std::vector<Emotion>& emotions);

// In-place engine variant: emotions born on `current_step` are left untouched
// so a fresh emotion survives into the following step.
void decay_emotions_in_place(std::vector<Emotion>& emotions, int current_step);

// Signed sum of intensities; the amplifier input.
long aggregate_valence(std::span<const Emotion> emotions);

}  // namespace noe
