#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noe/csv.hpp"
#include "noe/runner.hpp"

namespace {

std::vector<noe::SocietyKind> society_list(const std::string& name) {
    if (name == "all") {
        return {noe::SocietyKind::Obedient, noe::SocietyKind::Anarchy,
                noe::SocietyKind::Sanctioning, noe::SocietyKind::Noe};
    }
    noe::SocietyKind kind;
    if (!noe::society_from_string(name, kind)) {
        throw std::runtime_error("unknown society '" + name +
                                 "' (expected obedient|anarchy|sanctioning|noe|all)");
    }
    return {kind};
}

std::string normalize_key(std::string key) {
    for (char& c : key) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c == '-') c = '_';
    }
    return key;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long parsed = 0;
    try {
        parsed = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty()) {
        throw std::runtime_error("config key '" + key + "': not an integer: '" + value + "'");
    }
    return parsed;
}

double parse_real(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty()) {
        throw std::runtime_error("config key '" + key + "': not a number: '" + value + "'");
    }
    return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw std::runtime_error("config key '" + key + "': not a boolean: '" + value + "'");
}

// Settings shared by flags, env vars and the config file; applied in
// precedence order by the caller.
struct Settings {
    noe::ExperimentPlan plan;
    std::string society = "noe";
    bool events = false;
    bool verify = false;
};

void apply_config_entry(Settings& s, const std::string& raw_key, const std::string& value) {
    const std::string key = normalize_key(raw_key);
    noe::SimConfig& c = s.plan.base;
    if (key == "agents") {
        c.n_agents = static_cast<int>(parse_int(key, value));
    } else if (key == "queue_size") {
        c.queue_size = static_cast<int>(parse_int(key, value));
    } else if (key == "steps") {
        c.n_steps = static_cast<int>(parse_int(key, value));
    } else if (key == "society") {
        s.society = value;
        society_list(value);  // validate now so the error names the config key
    } else if (key == "iterations") {
        s.plan.iterations = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
        s.plan.base_seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "window") {
        s.plan.ma_window = static_cast<int>(parse_int(key, value));
    } else if (key == "warmup") {
        s.plan.warmup_steps = static_cast<int>(parse_int(key, value));
    } else if (key == "out") {
        s.plan.out_dir = value;
    } else if (key == "service_capacity") {
        c.service_capacity = static_cast<int>(parse_int(key, value));
    } else if (key == "events") {
        s.events = parse_bool(key, value);
    } else if (key == "run_final") {
        s.plan.aggregate_final = parse_bool(key, value);
    } else if (key == "verify") {
        s.verify = parse_bool(key, value);
    } else if (key == "packets_per_service") {
        c.packets_per_service = static_cast<int>(parse_int(key, value));
    } else if (key == "restore_per_packet") {
        c.restore_per_packet = static_cast<int>(parse_int(key, value));
    } else if (key == "food_max") {
        c.food_max = static_cast<int>(parse_int(key, value));
    } else if (key == "food_expiry_window") {
        c.food_expiry_window = static_cast<int>(parse_int(key, value));
    } else if (key == "intention_threshold") {
        c.intention_threshold = static_cast<int>(parse_int(key, value));
    } else if (key == "health_mean") {
        c.health_mean = static_cast<int>(parse_int(key, value));
    } else if (key == "health_sd") {
        c.health_sd = static_cast<int>(parse_int(key, value));
    } else if (key == "learning_rate") {
        c.learning_rate = parse_real(key, value);
    } else if (key == "epsilon") {
        c.epsilon = parse_real(key, value);
    } else if (key == "jump_prior_scale") {
        c.jump_prior_scale = parse_real(key, value);
    } else if (key == "payoff_deceased") {
        c.payoff_deceased = static_cast<int>(parse_int(key, value));
    } else if (key == "goal_bonus") {
        c.goal_bonus = static_cast<int>(parse_int(key, value));
    } else if (key == "emotion_duration") {
        c.emotion_duration = static_cast<int>(parse_int(key, value));
    } else if (key == "emotion_decay") {
        c.emotion_decay = static_cast<int>(parse_int(key, value));
    } else if (key == "valence_scaled_elicitation") {
        c.valence_scaled_elicitation = parse_bool(key, value);
    } else {
        throw std::runtime_error("unknown config key '" + raw_key + "'");
    }
}

void apply_config_file(Settings& s, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": empty key");
        }
        try {
            apply_config_entry(s, key, value);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
}

std::string cell_text(const std::optional<double>& value) {
    return value ? noe::format_double(*value) : std::string("-");
}

void print_summary(const noe::BatchResult& batch) {
    std::printf("%-12s %10s %10s %10s %10s\n", "society", "cohesion", "deceased", "health",
                "waiting");
    for (const noe::SummaryRow& row : batch.summary) {
        std::printf("%-12s %10s %10s %10s %10s\n", noe::to_string(row.society),
                    cell_text(row.cohesion).c_str(), cell_text(row.deceased).c_str(),
                    cell_text(row.health).c_str(), cell_text(row.waiting).c_str());
    }
    static const char* kMetricNames[4] = {"cohesion", "deceased", "health", "waiting"};
    for (const noe::SummaryRow& row : batch.summary) {
        if (row.society == noe::SocietyKind::Noe) continue;
        for (int m = 0; m < 4; ++m) {
            const noe::ComparisonCell& cell = row.vs_noe[m];
            if (!cell.t && !cell.p && !cell.delta) continue;
            std::printf("noe vs %-11s %-8s t=%-12s p=%-12s delta=%-12s %s\n",
                        noe::to_string(row.society), kMetricNames[m],
                        cell_text(cell.t).c_str(), cell_text(cell.p).c_str(),
                        cell_text(cell.delta).c_str(), cell.label.c_str());
        }
    }
    std::printf("%d runs in %.1f s\n",
                static_cast<int>(batch.runs.size()), batch.wall_seconds);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noe: line-up societies simulation"};

    int agents = 0;
    int queue_size = 0;
    int steps = 0;
    std::string society;
    int iterations = 0;
    std::uint64_t seed = 0;
    int window = 0;
    int warmup = 0;
    std::string out_dir;
    std::string config_path;
    std::string preset;
    int service_capacity = 0;
    bool events = false;
    bool run_final = false;
    bool verify = false;

    app.add_option("--agents", agents, "population size");
    app.add_option("--queue-size", queue_size, "maximum queue length");
    app.add_option("--steps", steps, "simulation steps per run");
    app.add_option("--society", society, "obedient|anarchy|sanctioning|noe|all");
    app.add_option("--iterations", iterations, "runs per society (seeds seed..seed+n-1)");
    app.add_option("--seed", seed, "base seed");
    app.add_option("--window", window, "moving-average window for exports");
    app.add_option("--warmup", warmup, "first step included in run aggregates");
    app.add_option("--out", out_dir, "output directory for CSV files");
    app.add_option("--config", config_path, "key = value file overriding flags");
    app.add_option("--preset", preset, "bundled configuration: desk");
    app.add_option("--service-capacity", service_capacity, "agents served per step");
    app.add_flag("--events", events, "write per-agent event CSVs");
    app.add_flag("--run-final", run_final, "aggregate run-final values instead of window means");
    app.add_flag("--verify", verify, "check engine invariants every step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Settings settings;

        // Defaults, then env, then preset, then explicit flags, then the config
        // file: later layers win.
        if (const char* env_seed = std::getenv("NOE_SEED")) {
            settings.plan.base_seed =
                static_cast<std::uint64_t>(parse_int("NOE_SEED", env_seed));
        }
        if (const char* env_out = std::getenv("NOE_OUT")) {
            settings.plan.out_dir = env_out;
        }

        if (app.count("--preset") > 0) {
            if (preset != "desk") {
                throw std::runtime_error("unknown preset '" + preset + "' (expected: desk)");
            }
            settings.plan.base.n_agents = 100;
            settings.plan.base.queue_size = 20;
            settings.plan.base.n_steps = 1000;
            settings.plan.base.service_capacity = 2;
            settings.plan.iterations = 5;
        }

        if (app.count("--agents") > 0) settings.plan.base.n_agents = agents;
        if (app.count("--queue-size") > 0) settings.plan.base.queue_size = queue_size;
        if (app.count("--steps") > 0) settings.plan.base.n_steps = steps;
        if (app.count("--society") > 0) settings.society = society;
        if (app.count("--iterations") > 0) settings.plan.iterations = iterations;
        if (app.count("--seed") > 0) settings.plan.base_seed = seed;
        if (app.count("--window") > 0) settings.plan.ma_window = window;
        if (app.count("--warmup") > 0) settings.plan.warmup_steps = warmup;
        if (app.count("--out") > 0) settings.plan.out_dir = out_dir;
        if (app.count("--service-capacity") > 0) {
            settings.plan.base.service_capacity = service_capacity;
        }
        if (events) settings.events = true;
        if (run_final) settings.plan.aggregate_final = true;
        if (verify) settings.verify = true;

        if (app.count("--config") > 0) apply_config_file(settings, config_path);

        if (settings.plan.iterations < 1) {
            throw std::runtime_error("iterations must be at least 1");
        }
        if (settings.plan.ma_window < 1) throw std::runtime_error("window must be at least 1");
        if (settings.plan.warmup_steps < 0) throw std::runtime_error("warmup must be >= 0");

        settings.plan.societies = society_list(settings.society);
        settings.plan.base.log_events = settings.events;
        settings.plan.base.verify_invariants = settings.verify;
        noe::validate_config(settings.plan.base);

        const noe::BatchResult batch = noe::run_batch(settings.plan);
        print_summary(batch);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
