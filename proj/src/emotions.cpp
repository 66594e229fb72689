#include "noe/emotions.hpp"

#include <cstdlib>

namespace noe {

namespace {

Emotion make_template(int signed_intensity, const SimConfig& config) {
    Emotion e;
    e.intensity = signed_intensity;
    e.duration = config.emotion_duration;
    e.decay = config.emotion_decay;
    return e;
}

int scaled_magnitude(int magnitude, long elicitor_valence, const SimConfig& config) {
    if (config.valence_scaled_elicitation && elicitor_valence < 0) return magnitude * 2;
    return magnitude;
}

}  // namespace

ElicitedEmotionRule line_up_rule(const SimConfig& config) {
    ElicitedEmotionRule rule;
    rule.name = "line-up";
    rule.expected_action = Action::Stay;
    rule.on_satisfaction = make_template(config.emotion_unit, config);
    rule.on_violation = make_template(-config.emotion_unit, config);
    return rule;
}

Emotion appraise(const AppraisalInput& input, const SimConfig& config) {
    const Emotion& tpl = input.outcome == OutcomeKind::Satisfied ? input.rule->on_satisfaction
                                                                 : input.rule->on_violation;
    Emotion e = tpl;
    const int sign = e.intensity < 0 ? -1 : 1;
    e.intensity = sign * scaled_magnitude(std::abs(e.intensity), input.elicitor_valence, config);
    return e;
}

std::vector<Emotion> elicit_self_directed(const AgentState& actor,
                                          std::span<const FulfillmentOutcome> own_outcomes,
                                          std::span<const Emotion> received,
                                          const SimConfig& config) {
    std::vector<Emotion> out;
    const ElicitedEmotionRule rule = line_up_rule(config);
    const long valence =
        config.valence_scaled_elicitation ? aggregate_valence(actor.emotions) : 0;
    for (const FulfillmentOutcome& outcome : own_outcomes) {
        AppraisalInput input{actor.id, outcome.outcome, &rule, valence};
        Emotion e = appraise(input, config);
        e.source = actor.id;
        e.target = actor.id;
        out.push_back(e);
    }
    // Receiving disapproval hurts by itself: one negative echo per negative receipt.
    for (const Emotion& r : received) {
        if (r.intensity >= 0) continue;
        Emotion echo = make_template(-config.emotion_unit, config);
        echo.source = actor.id;
        echo.target = actor.id;
        out.push_back(echo);
    }
    return out;
}

std::vector<Emotion> elicit_other_directed(const AgentState& observer,
                                           const FulfillmentOutcome& observed,
                                           const std::vector<Norm>& base,
                                           const SimConfig& config) {
    std::vector<Emotion> out;
    if (observer.beliefs.location != Location::InQueue) return out;  // cannot witness
    if (observer.id == observed.bearer) return out;
    const long valence =
        config.valence_scaled_elicitation ? aggregate_valence(observer.emotions) : 0;
    for (const Norm& norm : base) {
        if (norm.kind != NormKind::Sanction) continue;
        if (!norm.consequent(observed.action)) continue;
        Emotion e = make_template(norm.sanction_sign * config.emotion_unit, config);
        const int sign = e.intensity < 0 ? -1 : 1;
        e.intensity = sign * scaled_magnitude(std::abs(e.intensity), valence, config);
        e.source = observer.id;
        e.target = observed.bearer;
        out.push_back(e);
    }
    return out;
}

namespace {

// Returns false when the emotion expires.
bool decay_one(Emotion& e) {
    const int magnitude = std::abs(e.intensity) - e.decay;
    e.duration -= 1;
    if (magnitude <= 0 || e.duration <= 0) return false;
    e.intensity = (e.intensity < 0 ? -magnitude : magnitude);
    return true;
}

}  // namespace

std::vector<Emotion> decay_emotions(const std::vector<Emotion>& emotions) {
    std::vector<Emotion> out;
    out.reserve(emotions.size());
    for (Emotion e : emotions) {
        if (decay_one(e)) out.push_back(e);
    }
    return out;
}

void decay_emotions_in_place(std::vector<Emotion>& emotions, int current_step) {
    std::size_t keep = 0;
    for (std::size_t i = 0; i < emotions.size(); ++i) {
        Emotion e = emotions[i];
        if (e.born_step == current_step || decay_one(e)) {
            emotions[keep++] = e;
        }
    }
    emotions.resize(keep);
}

long aggregate_valence(std::span<const Emotion> emotions) {
    long sum = 0;
    for (const Emotion& e : emotions) sum += e.intensity;
    return sum;
}

}  // namespace noe
