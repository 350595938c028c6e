// Command-line front end: run, baseline, sweep, compare, summarize, config.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swarmpos/experiment.hpp"

namespace {

using namespace swarmpos;
namespace fs = std::filesystem;

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

/// Flags shared by the simulation subcommands; unset flags keep the config value.
struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::vector<std::uint64_t> seeds;
    std::optional<std::size_t> n_seeds;
    std::optional<std::size_t> n_uavs;
    std::optional<std::int64_t> n_steps;
    std::optional<std::string> out;
    std::optional<std::size_t> threads;
    std::optional<std::string> region;
    std::optional<std::size_t> n_objects;
    std::optional<std::size_t> n_obstacles;
    std::optional<std::string> layout;
    std::optional<std::uint64_t> world_seed;
    std::optional<std::size_t> candidates;
    std::optional<double> failure_probability;
    bool no_noise = false;
    bool wall_time = false;

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "Experiment config file (JSON)")->check(CLI::ExistingFile);
        app->add_option("--seed", seed, "Master seed of a single run");
        app->add_option("--seeds", seeds, "Seed list")->delimiter(',');
        app->add_option("--n-seeds", n_seeds, "Use seeds 1..N");
        app->add_option("--n-uavs", n_uavs, "Swarm size");
        app->add_option("--n-steps", n_steps, "Time steps per run");
        app->add_option("--out", out, "Output directory");
        app->add_option("--threads", threads, "Worker threads");
        app->add_option("--region", region, "Region preset: area1, area2, area3");
        app->add_option("--n-objects", n_objects, "Objects of interest in the world");
        app->add_option("--n-obstacles", n_obstacles, "Buildings in the world");
        app->add_option("--layout", layout, "World layout: road-grid or uniform");
        app->add_option("--world-seed", world_seed, "Seed of the generated world");
        app->add_option("--candidates", candidates, "Joint candidates per baseline step");
        app->add_option("--failure-probability", failure_probability, "Per-step agent failure probability");
        app->add_flag("--no-noise", no_noise, "Disable sensing noise and dropout");
        app->add_flag("--wall-time", wall_time, "Log per-step wall time in records");
    }

    ExperimentConfig resolve() const {
        ExperimentConfig c = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
        if (n_uavs) c.n_uavs = *n_uavs;
        if (n_steps) c.n_steps = *n_steps;
        if (out) c.output_dir = *out;
        if (threads) c.threads = *threads;
        if (region) {
            c.world.region = Region::preset(*region);
            c.region_preset = *region;
        }
        if (n_objects) c.world.n_objects = *n_objects;
        if (n_obstacles) c.world.n_obstacles = *n_obstacles;
        if (layout) {
            if (*layout == "road-grid") c.world.layout = WorldLayout::road_grid;
            else if (*layout == "uniform") c.world.layout = WorldLayout::uniform;
            else throw ConfigError("unknown layout: " + *layout);
        }
        if (world_seed) c.world_seed = *world_seed;
        if (candidates) c.baseline.candidates = *candidates;
        if (failure_probability) c.failure_probability = *failure_probability;
        if (no_noise) c.sensing.noise = SensorNoise::none();
        if (wall_time) c.record_wall_time = true;
        if (!seeds.empty()) c.seeds = seeds;
        if (n_seeds) {
            c.seeds.resize(*n_seeds);
            std::iota(c.seeds.begin(), c.seeds.end(), std::uint64_t{1});
        }
        if (seed) c.seeds = {*seed};
        c.baseline.schedule = c.agent.schedule;
        c.validate();
        return c;
    }
};

void print_summary_line(std::uint64_t seed, const RunSummary& s) {
    std::printf("seed %llu: converged(last100) %.4f  std %.4f  after150 %s  evaluations %zu  violations %zu\n",
                static_cast<unsigned long long>(seed), s.converged_last100, s.std_last100,
                s.converged_after150 ? std::to_string(*s.converged_after150).c_str() : "n/a", s.total_evaluations,
                s.constraint_violations);
}

int do_runs(const ExperimentConfig& c, const std::string& label) {
    for (auto seed : c.seeds) {
        const fs::path dir = c.output_dir / (label + "_n" + std::to_string(c.n_uavs) + "_seed" + std::to_string(seed));
        const auto result = run_to_directory(c, seed, dir);
        print_summary_line(seed, result.summary);
        std::printf("  wrote %s\n", dir.string().c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swarm positioning simulator for situational awareness"};
    app.require_subcommand(1);

    Overrides run_o, base_o, sweep_o, cmp_o;
    auto* run_cmd = app.add_subcommand("run", "Run the proposed scheme (or the config's mode)");
    run_o.attach(run_cmd);
    auto* base_cmd = app.add_subcommand("baseline", "Run the semi-exhaustive baseline");
    base_o.attach(base_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Swarm-size study over several seeds");
    sweep_o.attach(sweep_cmd);
    std::vector<std::size_t> sizes{2, 3, 4, 5, 6};
    sweep_cmd->add_option("--sizes", sizes, "Swarm sizes")->delimiter(',')->capture_default_str();

    auto* cmp_cmd = app.add_subcommand("compare", "Proposed scheme versus baseline on identical seeds");
    cmp_o.attach(cmp_cmd);

    auto* sum_cmd = app.add_subcommand("summarize", "Summarize a records.jsonl file");
    std::string records_path;
    sum_cmd->add_option("records", records_path, "records.jsonl")->required()->check(CLI::ExistingFile);

    auto* cfg_cmd = app.add_subcommand("config", "Show configuration");
    bool dump = false;
    std::string cfg_path;
    cfg_cmd->add_flag("--dump", dump, "Print the effective configuration with all defaults");
    cfg_cmd->add_option("--config", cfg_path, "Config file to merge over the defaults")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    ExperimentConfig config;
    try {
        if (*run_cmd) config = run_o.resolve();
        else if (*base_cmd) {
            config = base_o.resolve();
            config.mode = Mode::baseline;
        } else if (*sweep_cmd) {
            config = sweep_o.resolve();
            for (auto s : sizes)
                if (s < 1) throw ConfigError("swarm sizes must be >= 1");
        } else if (*cmp_cmd) {
            config = cmp_o.resolve();
        } else if (*cfg_cmd) {
            config = cfg_path.empty() ? ExperimentConfig{} : load_config(cfg_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*run_cmd) return do_runs(config, config.mode == Mode::proposed ? "proposed" : "baseline");
        if (*base_cmd) return do_runs(config, "baseline");
        if (*sweep_cmd) {
            const auto result = sweep(config, sizes, config.seeds);
            write_sweep_csv(result, config.output_dir);
            std::printf("%6s %12s %10s\n", "n_uavs", "converged", "std");
            for (const auto& s : result.sizes)
                std::printf("%6zu %12.4f %10.4f\n", s.n_uavs, s.mean_converged, s.std_converged);
            std::printf("wrote %s\n", config.output_dir.string().c_str());
            return 0;
        }
        if (*cmp_cmd) {
            const auto c = compare(config, config.seeds);
            write_comparison_csv(c, config.output_dir / "comparison.csv");
            std::printf("%8s %12s %12s\n", "seed", "proposed", "baseline");
            for (std::size_t r = 0; r < c.seeds.size(); ++r)
                std::printf("%8llu %12.4f %12.4f\n", static_cast<unsigned long long>(c.seeds[r]), c.proposed[r],
                            c.baseline[r]);
            std::printf("mean converged: proposed %.4f, baseline %.4f, ratio %.4f (reference %.2f/%.2f = %.4f)\n",
                        c.mean_proposed, c.mean_baseline, c.converged_ratio, kReferenceProposed,
                        kReferenceBaseline, c.reference_ratio);
            std::printf("evaluations per step: proposed %.2f, baseline %.2f, ratio %.4f\n", c.evaluations_proposed,
                        c.evaluations_baseline, c.evaluation_ratio);
            return 0;
        }
        if (*sum_cmd) {
            const auto records = read_records(records_path);
            std::cout << to_json(summarize(records)).dump(2) << '\n';
            return 0;
        }
        if (*cfg_cmd) {
            if (!dump) {
                std::cerr << "config: nothing to do (use --dump)\n";
                return kExitConfig;
            }
            std::cout << to_json(config).dump(2) << '\n';
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
