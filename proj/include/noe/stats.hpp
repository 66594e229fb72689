#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace noe {

// Per-step simulation metrics. Cohesion is undefined on steps with no active
// norms, health when nobody is alive, waiting when nobody was served.
struct StepMetrics {
    int step = 0;
    std::optional<double> cohesion;
    long deceased_total = 0;
    std::optional<double> avg_health;
    std::optional<double> avg_waiting;
    long served = 0;  // services this step; weights avg_waiting in run aggregates
};

// Satisfied share of norm outcomes; empty when there were no outcomes.
std::optional<double> cohesion_value(long satisfied, long total);

// Trailing moving average with prefix warm-up (first k points average the
// available history). Undefined inputs are skipped, not zero-filled; a window
// with no defined points yields an undefined output point.
std::vector<std::optional<double>> moving_average(
    const std::vector<std::optional<double>>& series, int window);

double sample_mean(const std::vector<double>& xs);
// Unbiased (n-1) standard deviation; requires at least two values.
double sample_sd(const std::vector<double>& xs);

enum class TTestFlag {
    Ok,
    DegenerateIdentical,  // both samples constant with equal means: no test
    DegenerateSeparated,  // both samples constant with unequal means: p -> 0
};

struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;
    TTestFlag flag = TTestFlag::Ok;
};

// Two-sided Welch t-test (unequal variances). Requires n >= 2 per sample.
TTestResult independent_t_test(const std::vector<double>& a, const std::vector<double>& b);

// P(|T_df| >= |t|) via the regularized incomplete beta function.
double student_t_two_sided_p(double t, double df);

// (mean(treatment) - mean(control)) / sd(control). Throws when the control
// variance is zero or either sample has fewer than two values.
double glass_delta(const std::vector<double>& treatment, const std::vector<double>& control);

// |delta| < 0.2 negligible, [0.2, 0.5) small, [0.5, 0.8) medium, >= 0.8 large.
std::string_view cohen_label(double delta);

}  // namespace noe
