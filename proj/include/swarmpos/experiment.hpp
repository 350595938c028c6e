// Experiment orchestration: configuration, seeded runs, sweeps over swarm
// size, proposed-vs-baseline comparison, summaries and file output.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "swarmpos/agent.hpp"
#include "swarmpos/baseline.hpp"
#include "swarmpos/environment.hpp"
#include "swarmpos/record.hpp"

namespace swarmpos {

enum class Mode { proposed, baseline };

struct ExperimentConfig {
    WorldSpec world;
    /// Name of the region preset, empty when the region was given explicitly.
    std::string region_preset = "area1";
    /// Fixed world across run seeds; each run seed only changes the start
    /// poses and noise.
    std::uint64_t world_seed = 1;
    std::size_t n_uavs = 4;
    std::int64_t n_steps = 300;
    std::vector<std::uint64_t> seeds{1};
    AgentParams agent;
    SensingConfig sensing;
    StepLimits limits;
    ClearanceRule clearance;
    BaselineParams baseline;
    Mode mode = Mode::proposed;
    double failure_probability = 0.0;
    std::size_t threads = 1;
    bool record_wall_time = false;
    std::filesystem::path output_dir = "out";

    /// Throws ConfigError.
    void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& c);
/// Missing keys keep their defaults. Throws ConfigError on bad values.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const StepRecord& r);
StepRecord record_from_json(const nlohmann::json& j);
std::string to_json_line(const StepRecord& r);

struct UavPositionStats {
    Vec2 centroid = Vec2::Zero();
    /// RMS distance of the final positions from their centroid.
    double dispersion = 0.0;
    std::vector<Pose> final_positions;
};

struct RunSummary {
    std::size_t n_records = 0;
    /// Mean objective over the last 100 steps (whole run when shorter).
    double converged_last100 = 0.0;
    double std_last100 = 0.0;
    /// Mean objective over steps k >= 150, when the run is that long.
    std::optional<double> converged_after150;
    bool whole_run_fallback = false;
    std::vector<double> trajectory;
    std::vector<UavPositionStats> uavs;
    std::size_t total_evaluations = 0;
    std::size_t constraint_violations = 0;
    std::size_t separation_warnings = 0;
    std::size_t steps_with_separation_warnings = 0;
};

/// Throws std::invalid_argument on empty input.
RunSummary summarize(std::span<const StepRecord> records);
nlohmann::json to_json(const RunSummary& s);

/// Uniform in the region bounding box with rejection until every pose is
/// admissible with respect to the ones already placed.
std::vector<Pose> sample_initial_poses(const SyntheticEnvironment& env, std::size_t n, std::uint64_t seed);

SyntheticEnvironment make_environment(const ExperimentConfig& config, std::uint64_t seed);

using RecordSink = std::function<void(const StepRecord&)>;

struct RunResult {
    std::vector<StepRecord> records;
    RunSummary summary;
};

/// One seeded run in config.mode. Records are passed to sink as they are
/// produced, when a sink is given.
RunResult run(const ExperimentConfig& config, std::uint64_t seed, const RecordSink& sink = {});

/// Runs and writes <dir>/records.jsonl and <dir>/summary.json. The directory
/// is created and probed for writability before simulating.
RunResult run_to_directory(const ExperimentConfig& config, std::uint64_t seed, const std::filesystem::path& dir);

struct SizeAggregate {
    std::size_t n_uavs = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<double> converged;  // per seed, last-100 mean
    std::vector<double> mean_trajectory;
    std::vector<double> std_trajectory;
    double mean_converged = 0.0;
    double std_converged = 0.0;
    std::size_t violations = 0;
    std::size_t steps = 0;
    std::size_t steps_with_separation_warnings = 0;
};

struct SweepResult {
    std::vector<SizeAggregate> sizes;
};

/// Cross product of sizes x seeds, runs executed in parallel on
/// config.threads workers (each run single-threaded).
SweepResult sweep(const ExperimentConfig& config, std::span<const std::size_t> sizes,
                  std::span<const std::uint64_t> seeds);

/// sweep_trajectories.csv (size, step, mean, std) and sweep_converged.csv
/// (size, seed, converged_last100).
void write_sweep_csv(const SweepResult& result, const std::filesystem::path& dir);

inline constexpr double kReferenceProposed = 47.64;
inline constexpr double kReferenceBaseline = 50.97;

struct Comparison {
    std::vector<std::uint64_t> seeds;
    std::vector<double> proposed;  // converged value per seed
    std::vector<double> baseline;
    double mean_proposed = 0.0;
    double mean_baseline = 0.0;
    double converged_ratio = 0.0;  // proposed / baseline
    double evaluations_proposed = 0.0;  // per step
    double evaluations_baseline = 0.0;
    double evaluation_ratio = 0.0;  // proposed / baseline
    double reference_ratio = kReferenceProposed / kReferenceBaseline;
    std::vector<RunSummary> proposed_summaries;
    std::vector<RunSummary> baseline_summaries;
};

/// Runs both modes on identical worlds and seeds.
Comparison compare(const ExperimentConfig& config, std::span<const std::uint64_t> seeds);
Comparison compare(const ExperimentConfig& proposed_config, const ExperimentConfig& baseline_config,
                   std::span<const std::uint64_t> seeds);
void write_comparison_csv(const Comparison& c, const std::filesystem::path& path);

std::vector<StepRecord> read_records(const std::filesystem::path& jsonl);

}  // namespace swarmpos
