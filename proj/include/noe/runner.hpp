#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noe/core.hpp"
#include "noe/environment.hpp"
#include "noe/stats.hpp"

namespace noe {

struct RunResult {
    SimConfig config;
    SocietyKind society = SocietyKind::Noe;
    std::uint64_t seed = 0;
    std::vector<StepMetrics> metrics;
    std::vector<Event> events;  // when event logging was on

    // Aggregates over the post-warm-up window (steps >= warmup, 1-based).
    std::optional<double> cohesion_mean;
    std::optional<double> health_mean;
    std::optional<double> waiting_mean;  // per-service, not per-step
    long deceased_final = 0;
    long satisfied_total = 0;
    long violated_total = 0;

    // Run-final alternatives to the window means.
    std::optional<double> cohesion_final;
    std::optional<double> health_final;
};

struct ExperimentPlan {
    SimConfig base;  // society and seed fields are overwritten per run
    std::vector<SocietyKind> societies;
    int iterations = 10;
    std::uint64_t base_seed = 1;  // run i uses base_seed + i
    int ma_window = 100;
    int warmup_steps = 100;
    bool aggregate_final = false;  // summary reports run-final values
    std::string out_dir;           // empty: keep results in memory only
};

struct ComparisonCell {
    std::optional<double> t;
    std::optional<double> p;
    std::optional<double> delta;  // (mean(Noe) - mean(baseline)) / sd(baseline)
    std::string label;
};

struct SummaryRow {
    SocietyKind society;
    int iterations = 0;
    std::optional<double> cohesion;  // empty for Obedient: trivially all-satisfied
    std::optional<double> deceased;
    std::optional<double> health;
    std::optional<double> waiting;
    ComparisonCell vs_noe[4];  // cohesion, deceased, health, waiting
};

struct BatchResult {
    ExperimentPlan plan;
    std::vector<RunResult> runs;
    std::vector<SummaryRow> summary;
    double wall_seconds = 0.0;
};

// Per-seed aggregate samples for one society and metric, in seed order.
enum class MetricId { Cohesion, Deceased, Health, Waiting };
std::vector<double> metric_samples(const BatchResult& batch, SocietyKind society,
                                   MetricId metric);

RunResult run_simulation(const SimConfig& config, int warmup_steps = 100,
                         bool keep_events = false);

// Runs iterations x societies (seeds base_seed + i, shared across societies),
// builds the summary, and writes CSV outputs when out_dir is set.
BatchResult run_batch(const ExperimentPlan& plan);

// First 1-based step whose trailing moving average exceeds the threshold.
std::optional<int> first_ma_crossing(const std::vector<std::optional<double>>& series,
                                     int window, double threshold);

// Per-step cohesion column of a run.
std::vector<std::optional<double>> cohesion_series(const RunResult& run);

// File writers; paths are created under out_dir by run_batch.
void write_metrics_csv(const RunResult& run, const std::string& path);
void write_events_csv(const RunResult& run, const std::string& path);
void write_summary_csv(const BatchResult& batch, const std::string& path);

// One CSV per metric: step column plus one column per society holding the
// across-iteration mean smoothed by moving_average(window).
void export_timeseries(const BatchResult& batch, int window, const std::string& dir);

}  // namespace noe
