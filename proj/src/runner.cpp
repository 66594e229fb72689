#include "noe/runner.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "noe/csv.hpp"

namespace noe {

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

}  // namespace

RunResult run_simulation(const SimConfig& config, int warmup_steps, bool keep_events) {
    SimConfig effective = config;
    effective.log_events = config.log_events || keep_events;

    World world = make_world(effective);
    run_world(world);

    RunResult result;
    result.config = effective;
    result.society = effective.society;
    result.seed = effective.seed;
    result.metrics = std::move(world.metrics);
    result.events = std::move(world.events);
    result.deceased_final = world.deceased_total;
    result.satisfied_total = world.satisfied_total;
    result.violated_total = world.violated_total;

    double cohesion_sum = 0.0;
    long cohesion_n = 0;
    double health_sum = 0.0;
    long health_n = 0;
    double wait_sum = 0.0;
    long wait_services = 0;
    for (const StepMetrics& m : result.metrics) {
        if (m.step < warmup_steps) continue;
        if (m.cohesion) {
            cohesion_sum += *m.cohesion;
            ++cohesion_n;
        }
        if (m.avg_health) {
            health_sum += *m.avg_health;
            ++health_n;
        }
        if (m.avg_waiting && m.served > 0) {
            wait_sum += *m.avg_waiting * static_cast<double>(m.served);
            wait_services += m.served;
        }
    }
    if (cohesion_n > 0) result.cohesion_mean = cohesion_sum / static_cast<double>(cohesion_n);
    if (health_n > 0) result.health_mean = health_sum / static_cast<double>(health_n);
    if (wait_services > 0) {
        result.waiting_mean = wait_sum / static_cast<double>(wait_services);
    }
    if (!result.metrics.empty()) {
        result.cohesion_final = result.metrics.back().cohesion;
        result.health_final = result.metrics.back().avg_health;
    }
    return result;
}

std::vector<double> metric_samples(const BatchResult& batch, SocietyKind society,
                                   MetricId metric) {
    std::vector<double> samples;
    for (const RunResult& run : batch.runs) {
        if (run.society != society) continue;
        std::optional<double> value;
        switch (metric) {
            case MetricId::Cohesion:
                value = batch.plan.aggregate_final ? run.cohesion_final : run.cohesion_mean;
                break;
            case MetricId::Deceased:
                value = static_cast<double>(run.deceased_final);
                break;
            case MetricId::Health:
                value = batch.plan.aggregate_final ? run.health_final : run.health_mean;
                break;
            case MetricId::Waiting:
                value = run.waiting_mean;
                break;
        }
        if (value) samples.push_back(*value);
    }
    return samples;
}

namespace {

ComparisonCell compare_vs_noe(const std::vector<double>& noe,
                              const std::vector<double>& baseline) {
    ComparisonCell cell;
    if (noe.size() < 2 || baseline.size() < 2) return cell;
    const TTestResult test = independent_t_test(noe, baseline);
    if (test.flag == TTestFlag::Ok) {
        cell.t = test.t;
        cell.p = test.p;
    } else {
        cell.p = test.p;  // degenerate: report the limit p, leave t empty
    }
    try {
        const double delta = glass_delta(noe, baseline);
        cell.delta = delta;
        cell.label = std::string(cohen_label(delta));
    } catch (const std::invalid_argument&) {
        // zero-variance baseline: no standardized effect size
    }
    return cell;
}

std::string society_file_tag(SocietyKind society) { return to_string(society); }

}  // namespace

BatchResult run_batch(const ExperimentPlan& plan) {
    const auto t0 = std::chrono::steady_clock::now();
    BatchResult batch;
    batch.plan = plan;

    if (!plan.out_dir.empty()) std::filesystem::create_directories(plan.out_dir);

    for (SocietyKind society : plan.societies) {
        for (int i = 0; i < plan.iterations; ++i) {
            SimConfig config = plan.base;
            config.society = society;
            config.seed = plan.base_seed + static_cast<std::uint64_t>(i);
            RunResult run = run_simulation(config, plan.warmup_steps, plan.base.log_events);
            if (!plan.out_dir.empty()) {
                const std::string tag =
                    society_file_tag(society) + "_seed" + std::to_string(config.seed);
                write_metrics_csv(run, join(plan.out_dir, "metrics_" + tag + ".csv"));
                if (run.config.log_events) {
                    write_events_csv(run, join(plan.out_dir, "events_" + tag + ".csv"));
                }
            }
            batch.runs.push_back(std::move(run));
        }
    }

    const bool has_noe =
        std::find(plan.societies.begin(), plan.societies.end(), SocietyKind::Noe) !=
        plan.societies.end();
    std::vector<double> noe_samples[4];
    if (has_noe) {
        noe_samples[0] = metric_samples(batch, SocietyKind::Noe, MetricId::Cohesion);
        noe_samples[1] = metric_samples(batch, SocietyKind::Noe, MetricId::Deceased);
        noe_samples[2] = metric_samples(batch, SocietyKind::Noe, MetricId::Health);
        noe_samples[3] = metric_samples(batch, SocietyKind::Noe, MetricId::Waiting);
    }

    for (SocietyKind society : plan.societies) {
        SummaryRow row;
        row.society = society;
        row.iterations = plan.iterations;
        const std::vector<double> samples[4] = {
            metric_samples(batch, society, MetricId::Cohesion),
            metric_samples(batch, society, MetricId::Deceased),
            metric_samples(batch, society, MetricId::Health),
            metric_samples(batch, society, MetricId::Waiting),
        };
        // Obedient compliance is structural, so its cohesion column stays blank.
        if (society != SocietyKind::Obedient && !samples[0].empty()) {
            row.cohesion = sample_mean(samples[0]);
        }
        if (!samples[1].empty()) row.deceased = sample_mean(samples[1]);
        if (!samples[2].empty()) row.health = sample_mean(samples[2]);
        if (!samples[3].empty()) row.waiting = sample_mean(samples[3]);
        if (has_noe && society != SocietyKind::Noe) {
            for (int m = 0; m < 4; ++m) {
                if (m == 0 && society == SocietyKind::Obedient) continue;
                row.vs_noe[m] = compare_vs_noe(noe_samples[m], samples[m]);
            }
        }
        batch.summary.push_back(std::move(row));
    }

    batch.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!plan.out_dir.empty()) {
        write_summary_csv(batch, join(plan.out_dir, "summary.csv"));
        export_timeseries(batch, plan.ma_window, plan.out_dir);
    }
    return batch;
}

std::optional<int> first_ma_crossing(const std::vector<std::optional<double>>& series,
                                     int window, double threshold) {
    const std::vector<std::optional<double>> ma = moving_average(series, window);
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (ma[i] && *ma[i] > threshold) return static_cast<int>(i) + 1;
    }
    return std::nullopt;
}

std::vector<std::optional<double>> cohesion_series(const RunResult& run) {
    std::vector<std::optional<double>> series;
    series.reserve(run.metrics.size());
    for (const StepMetrics& m : run.metrics) series.push_back(m.cohesion);
    return series;
}

void write_metrics_csv(const RunResult& run, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "step,cohesion,deceased_total,avg_health,avg_waiting,served\n";
    for (const StepMetrics& m : run.metrics) {
        out << m.step << ',' << format_optional(m.cohesion) << ',' << m.deceased_total << ','
            << format_optional(m.avg_health) << ',' << format_optional(m.avg_waiting) << ','
            << m.served << '\n';
    }
}

void write_events_csv(const RunResult& run, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "step,agent,action,outcome,sanctions_received,health,location\n";
    for (const Event& e : run.events) {
        out << e.step << ',' << e.agent << ',' << to_string(e.action) << ','
            << (e.outcome ? to_string(*e.outcome) : "") << ',' << e.sanctions_received << ','
            << e.health << ',' << to_string(e.location) << '\n';
    }
}

void write_summary_csv(const BatchResult& batch, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "society,iterations,cohesion_mean,deceased_final_mean,health_mean,waiting_mean";
    static const char* kMetricNames[4] = {"cohesion", "deceased", "health", "waiting"};
    for (const char* name : kMetricNames) {
        out << ',' << name << "_t_vs_noe" << ',' << name << "_p_vs_noe" << ',' << name
            << "_delta_vs_noe" << ',' << name << "_label_vs_noe";
    }
    out << '\n';
    for (const SummaryRow& row : batch.summary) {
        out << to_string(row.society) << ',' << row.iterations << ','
            << format_optional(row.cohesion) << ',' << format_optional(row.deceased) << ','
            << format_optional(row.health) << ',' << format_optional(row.waiting);
        for (int m = 0; m < 4; ++m) {
            const ComparisonCell& cell = row.vs_noe[m];
            out << ',' << format_optional(cell.t) << ',' << format_optional(cell.p) << ','
                << format_optional(cell.delta) << ',' << csv_escape(cell.label);
        }
        out << '\n';
    }
}

void export_timeseries(const BatchResult& batch, int window, const std::string& dir) {
    const int steps = batch.plan.base.n_steps;
    struct Column {
        SocietyKind society;
        std::vector<std::optional<double>> smoothed;
    };

    for (int metric = 0; metric < 4; ++metric) {
        static const char* kFileNames[4] = {"cohesion.csv", "deceased.csv", "health.csv",
                                            "waiting.csv"};
        std::vector<Column> columns;
        for (SocietyKind society : batch.plan.societies) {
            // Across-iteration mean of the per-step values, then smoothed.
            std::vector<double> sum(static_cast<std::size_t>(steps), 0.0);
            std::vector<long> count(static_cast<std::size_t>(steps), 0);
            for (const RunResult& run : batch.runs) {
                if (run.society != society) continue;
                for (const StepMetrics& m : run.metrics) {
                    const std::size_t i = static_cast<std::size_t>(m.step - 1);
                    std::optional<double> value;
                    switch (metric) {
                        case 0: value = m.cohesion; break;
                        case 1: value = static_cast<double>(m.deceased_total); break;
                        case 2: value = m.avg_health; break;
                        case 3: value = m.avg_waiting; break;
                    }
                    if (value) {
                        sum[i] += *value;
                        count[i] += 1;
                    }
                }
            }
            std::vector<std::optional<double>> mean(static_cast<std::size_t>(steps));
            for (std::size_t i = 0; i < mean.size(); ++i) {
                if (count[i] > 0) mean[i] = sum[i] / static_cast<double>(count[i]);
            }
            columns.push_back({society, moving_average(mean, window)});
        }

        std::ofstream out = open_for_write(join(dir, kFileNames[metric]));
        out << "step";
        for (const Column& c : columns) out << ',' << to_string(c.society);
        out << '\n';
        for (int s = 0; s < steps; ++s) {
            out << (s + 1);
            for (const Column& c : columns) {
                out << ',' << format_optional(c.smoothed[static_cast<std::size_t>(s)]);
            }
            out << '\n';
        }
    }
}

}  // namespace noe
