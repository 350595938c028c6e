#include "swarmpos/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "swarmpos/coordinator.hpp"
#include "swarmpos/parallel.hpp"

namespace swarmpos {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

void ExperimentConfig::validate() const {
    if (n_uavs < 1) throw ConfigError("n_uavs must be >= 1");
    if (n_steps < 2) throw ConfigError("n_steps must be >= 2");
    if (seeds.empty()) throw ConfigError("seeds must not be empty");
    if (threads < 1) throw ConfigError("threads must be >= 1");
    if (failure_probability < 0.0 || failure_probability > 1.0)
        throw ConfigError("failure_probability must lie in [0, 1]");
    if (baseline.candidates < 1) throw ConfigError("baseline candidates must be >= 1");
    if (baseline.draws_per_uav < 1) throw ConfigError("baseline draws_per_uav must be >= 1");
    agent.validate();
    sensing.validate();
    limits.validate();
    clearance.validate();
}

namespace {

std::string layout_name(WorldLayout l) { return l == WorldLayout::road_grid ? "road-grid" : "uniform"; }

WorldLayout parse_layout(const std::string& s) {
    if (s == "road-grid") return WorldLayout::road_grid;
    if (s == "uniform") return WorldLayout::uniform;
    throw ConfigError("unknown layout: " + s);
}

ojson region_to_json(const Region& r, const std::string& preset) {
    if (!preset.empty()) return preset;
    if (r.is_circle())
        return {{"type", "circle"},
                {"center", {r.circle().center.x(), r.circle().center.y()}},
                {"radius", r.circle().radius}};
    ojson verts = ojson::array();
    for (const auto& v : r.polygon().vertices) verts.push_back({v.x(), v.y()});
    return {{"type", "polygon"}, {"vertices", verts}};
}

Region region_from_json(const json& j, std::string& preset) {
    if (j.is_string()) {
        preset = j.get<std::string>();
        return Region::preset(preset);
    }
    preset.clear();
    const auto type = j.at("type").get<std::string>();
    if (type == "circle") {
        const auto c = j.at("center");
        return Region(Circle{Vec2(c.at(0).get<double>(), c.at(1).get<double>()), j.at("radius").get<double>()});
    }
    if (type == "polygon") {
        Polygon p;
        for (const auto& v : j.at("vertices")) p.vertices.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        return Region(std::move(p));
    }
    throw ConfigError("unknown region type: " + type);
}

template <class T>
void read_opt(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const ExperimentConfig& c) {
    ojson j;
    j["world"] = {{"region", region_to_json(c.world.region, c.region_preset)},
                  {"seed", c.world_seed},
                  {"n_objects", c.world.n_objects},
                  {"n_obstacles", c.world.n_obstacles},
                  {"layout", layout_name(c.world.layout)},
                  {"road_spacing", c.world.road_spacing},
                  {"road_jitter", c.world.road_jitter},
                  {"crossroad_fraction", c.world.crossroad_fraction},
                  {"crossroad_scale", c.world.crossroad_scale},
                  {"building_min_height", c.world.building_min_height},
                  {"building_max_height", c.world.building_max_height}};
    j["n_uavs"] = c.n_uavs;
    j["n_steps"] = c.n_steps;
    j["seeds"] = c.seeds;
    j["agent"] = {{"degree", c.agent.degree},
                  {"window", c.agent.window},
                  {"perturbations", c.agent.perturbations},
                  {"ridge_lambda", c.agent.ridge_lambda},
                  {"stay_competes", c.agent.stay_competes},
                  {"alpha",
                   {{"start", c.agent.schedule.start},
                    {"slope", c.agent.schedule.slope},
                    {"floor", c.agent.schedule.floor}}}};
    const auto& s = c.sensing;
    j["sensing"] = {{"altitude", {{"base", s.altitudes.base_altitude}, {"increment", s.altitudes.increment}}},
                    {"camera",
                     {{"pitch_deg", rad_to_deg(s.camera.pitch)},
                      {"horizontal_fov_deg", rad_to_deg(s.camera.horizontal_fov)},
                      {"vertical_fov_deg", rad_to_deg(s.camera.vertical_fov)},
                      {"max_range", s.camera.max_range}}},
                    {"noise",
                     {{"position_sigma", s.noise.position_sigma},
                      {"confidence_sigma", s.noise.confidence_sigma},
                      {"dropout_probability", s.noise.dropout_probability}}},
                    {"dedup_epsilon", s.dedup_epsilon},
                    {"drift_sigma", s.drift_sigma}};
    j["limits"] = {{"max_xy_step", c.limits.max_xy_step}, {"max_yaw_step_deg", rad_to_deg(c.limits.max_yaw_step)}};
    j["clearance"] = {{"min_uav_separation_xy", c.clearance.min_uav_separation_xy},
                      {"min_obstacle_clearance", c.clearance.min_obstacle_clearance}};
    j["baseline"] = {{"candidates", c.baseline.candidates}, {"draws_per_uav", c.baseline.draws_per_uav}};
    j["mode"] = c.mode == Mode::proposed ? "proposed" : "baseline";
    j["failure_probability"] = c.failure_probability;
    j["threads"] = c.threads;
    j["record_wall_time"] = c.record_wall_time;
    j["output_dir"] = c.output_dir.string();
    return json(j);
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    try {
        if (j.contains("world")) {
            const auto& w = j.at("world");
            if (w.contains("region")) c.world.region = region_from_json(w.at("region"), c.region_preset);
            read_opt(w, "seed", c.world_seed);
            read_opt(w, "n_objects", c.world.n_objects);
            read_opt(w, "n_obstacles", c.world.n_obstacles);
            if (w.contains("layout")) c.world.layout = parse_layout(w.at("layout").get<std::string>());
            read_opt(w, "road_spacing", c.world.road_spacing);
            read_opt(w, "road_jitter", c.world.road_jitter);
            read_opt(w, "crossroad_fraction", c.world.crossroad_fraction);
            read_opt(w, "crossroad_scale", c.world.crossroad_scale);
            read_opt(w, "building_min_height", c.world.building_min_height);
            read_opt(w, "building_max_height", c.world.building_max_height);
        }
        read_opt(j, "n_uavs", c.n_uavs);
        read_opt(j, "n_steps", c.n_steps);
        read_opt(j, "seeds", c.seeds);
        if (j.contains("agent")) {
            const auto& a = j.at("agent");
            read_opt(a, "degree", c.agent.degree);
            read_opt(a, "window", c.agent.window);
            read_opt(a, "perturbations", c.agent.perturbations);
            read_opt(a, "ridge_lambda", c.agent.ridge_lambda);
            read_opt(a, "stay_competes", c.agent.stay_competes);
            if (a.contains("alpha")) {
                read_opt(a.at("alpha"), "start", c.agent.schedule.start);
                read_opt(a.at("alpha"), "slope", c.agent.schedule.slope);
                read_opt(a.at("alpha"), "floor", c.agent.schedule.floor);
            }
        }
        if (j.contains("sensing")) {
            const auto& s = j.at("sensing");
            if (s.contains("altitude")) {
                read_opt(s.at("altitude"), "base", c.sensing.altitudes.base_altitude);
                read_opt(s.at("altitude"), "increment", c.sensing.altitudes.increment);
            }
            if (s.contains("camera")) {
                const auto& cam = s.at("camera");
                if (cam.contains("pitch_deg")) c.sensing.camera.pitch = deg_to_rad(cam.at("pitch_deg").get<double>());
                if (cam.contains("horizontal_fov_deg"))
                    c.sensing.camera.horizontal_fov = deg_to_rad(cam.at("horizontal_fov_deg").get<double>());
                if (cam.contains("vertical_fov_deg"))
                    c.sensing.camera.vertical_fov = deg_to_rad(cam.at("vertical_fov_deg").get<double>());
                read_opt(cam, "max_range", c.sensing.camera.max_range);
            }
            if (s.contains("noise")) {
                read_opt(s.at("noise"), "position_sigma", c.sensing.noise.position_sigma);
                read_opt(s.at("noise"), "confidence_sigma", c.sensing.noise.confidence_sigma);
                read_opt(s.at("noise"), "dropout_probability", c.sensing.noise.dropout_probability);
            }
            read_opt(s, "dedup_epsilon", c.sensing.dedup_epsilon);
            read_opt(s, "drift_sigma", c.sensing.drift_sigma);
        }
        if (j.contains("limits")) {
            read_opt(j.at("limits"), "max_xy_step", c.limits.max_xy_step);
            if (j.at("limits").contains("max_yaw_step_deg"))
                c.limits.max_yaw_step = deg_to_rad(j.at("limits").at("max_yaw_step_deg").get<double>());
        }
        if (j.contains("clearance")) {
            read_opt(j.at("clearance"), "min_uav_separation_xy", c.clearance.min_uav_separation_xy);
            read_opt(j.at("clearance"), "min_obstacle_clearance", c.clearance.min_obstacle_clearance);
        }
        if (j.contains("baseline")) {
            read_opt(j.at("baseline"), "candidates", c.baseline.candidates);
            read_opt(j.at("baseline"), "draws_per_uav", c.baseline.draws_per_uav);
        }
        if (j.contains("mode")) {
            const auto m = j.at("mode").get<std::string>();
            if (m == "proposed") c.mode = Mode::proposed;
            else if (m == "baseline") c.mode = Mode::baseline;
            else throw ConfigError("unknown mode: " + m);
        }
        read_opt(j, "failure_probability", c.failure_probability);
        read_opt(j, "threads", c.threads);
        read_opt(j, "record_wall_time", c.record_wall_time);
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    c.baseline.schedule = c.agent.schedule;
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return config_from_json(j);
}

namespace {

ojson record_ojson(const StepRecord& r) {
    ojson j;
    j["step"] = r.step;
    j["objective"] = r.objective;
    j["unique_objects"] = r.unique_objects;
    j["evaluations"] = r.evaluations;
    ojson poses = ojson::array();
    for (const auto& p : r.poses) poses.push_back({p.x(), p.y(), p.yaw()});
    j["poses"] = poses;
    j["delta"] = r.delta;
    j["local_objective"] = r.local_objective;
    j["chosen"] = r.chosen;
    j["rejected"] = r.rejected;
    j["failed"] = r.failed;
    j["separation_warnings"] = r.separation_warnings;
    j["constraint_violations"] = r.constraint_violations;
    if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
    return j;
}

}  // namespace

nlohmann::json to_json(const StepRecord& r) { return json(record_ojson(r)); }

std::string to_json_line(const StepRecord& r) { return record_ojson(r).dump(); }

StepRecord record_from_json(const nlohmann::json& j) {
    StepRecord r;
    r.step = j.at("step").get<std::int64_t>();
    r.objective = j.at("objective").get<double>();
    r.unique_objects = j.at("unique_objects").get<std::size_t>();
    r.evaluations = j.at("evaluations").get<std::size_t>();
    for (const auto& p : j.at("poses")) r.poses.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>());
    r.delta = j.at("delta").get<std::vector<double>>();
    r.local_objective = j.at("local_objective").get<std::vector<double>>();
    r.chosen = j.at("chosen").get<std::vector<int>>();
    r.rejected = j.at("rejected").get<std::vector<std::size_t>>();
    r.failed = j.at("failed").get<std::vector<bool>>();
    r.separation_warnings = j.at("separation_warnings").get<std::size_t>();
    r.constraint_violations = j.at("constraint_violations").get<std::size_t>();
    if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
}

std::vector<StepRecord> read_records(const std::filesystem::path& jsonl) {
    std::ifstream in(jsonl);
    if (!in) throw std::runtime_error("cannot open records file: " + jsonl.string());
    std::vector<StepRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(record_from_json(json::parse(line)));
    }
    return out;
}

namespace {

double mean_of(std::span<const double> v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double std_of(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size()));
}

constexpr std::size_t kConvergedWindow = 100;
constexpr std::int64_t kAfterStep = 150;

}  // namespace

RunSummary summarize(std::span<const StepRecord> records) {
    if (records.empty()) throw std::invalid_argument("cannot summarize an empty record stream");
    RunSummary s;
    s.n_records = records.size();
    for (const auto& r : records) {
        s.trajectory.push_back(r.objective);
        s.total_evaluations += r.evaluations;
        s.constraint_violations += r.constraint_violations;
        s.separation_warnings += r.separation_warnings;
        if (r.separation_warnings > 0) ++s.steps_with_separation_warnings;
    }
    s.whole_run_fallback = records.size() < kConvergedWindow;
    const std::size_t first = s.whole_run_fallback ? 0 : records.size() - kConvergedWindow;
    const std::span<const double> tail(s.trajectory.data() + first, s.trajectory.size() - first);
    s.converged_last100 = mean_of(tail);
    s.std_last100 = std_of(tail);

    std::vector<double> after;
    for (const auto& r : records)
        if (r.step >= kAfterStep) after.push_back(r.objective);
    if (!after.empty()) s.converged_after150 = mean_of(after);

    const std::size_t n = records.back().poses.size();
    s.uavs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& u = s.uavs[i];
        for (std::size_t k = first; k < records.size(); ++k)
            if (i < records[k].poses.size()) u.final_positions.push_back(records[k].poses[i]);
        if (u.final_positions.empty()) continue;
        for (const auto& p : u.final_positions) u.centroid += p.xy();
        u.centroid /= static_cast<double>(u.final_positions.size());
        double ss = 0.0;
        for (const auto& p : u.final_positions) ss += (p.xy() - u.centroid).squaredNorm();
        u.dispersion = std::sqrt(ss / static_cast<double>(u.final_positions.size()));
    }
    return s;
}

nlohmann::json to_json(const RunSummary& s) {
    ojson j;
    j["n_records"] = s.n_records;
    j["converged_last100"] = s.converged_last100;
    j["std_last100"] = s.std_last100;
    j["converged_after150"] = s.converged_after150 ? ojson(*s.converged_after150) : ojson(nullptr);
    j["whole_run_fallback"] = s.whole_run_fallback;
    j["total_evaluations"] = s.total_evaluations;
    j["constraint_violations"] = s.constraint_violations;
    j["separation_warnings"] = s.separation_warnings;
    j["steps_with_separation_warnings"] = s.steps_with_separation_warnings;
    j["trajectory"] = s.trajectory;
    ojson uavs = ojson::array();
    for (const auto& u : s.uavs) {
        ojson positions = ojson::array();
        for (const auto& p : u.final_positions) positions.push_back({p.x(), p.y(), p.yaw()});
        uavs.push_back({{"centroid", {u.centroid.x(), u.centroid.y()}},
                        {"dispersion", u.dispersion},
                        {"final_positions", positions}});
    }
    j["uavs"] = uavs;
    return json(j);
}

std::vector<Pose> sample_initial_poses(const SyntheticEnvironment& env, std::size_t n, std::uint64_t seed) {
    const auto ctx = env.feasibility();
    const auto box = ctx.region->bounding_box();
    Rng rng(seed, StreamPurpose::initial_poses);
    std::vector<Pose> poses;
    std::size_t attempts = 0;
    while (poses.size() < n) {
        if (++attempts > 100000) throw ConfigError("could not place the swarm inside the region");
        const Pose p(rng.uniform(box.min.x(), box.max.x()), rng.uniform(box.min.y(), box.max.y()),
                     rng.uniform(-std::numbers::pi, std::numbers::pi));
        if (admissible_position(p, poses, *ctx.region, ctx.clearance, ctx.obstacles, env.altitude_of(poses.size())))
            poses.push_back(p);
    }
    return poses;
}

SyntheticEnvironment make_environment(const ExperimentConfig& config, std::uint64_t seed) {
    return SyntheticEnvironment(generate_world(config.world, config.world_seed), config.sensing, config.limits,
                                config.clearance, seed, config.n_steps + 1);
}

RunResult run(const ExperimentConfig& config, std::uint64_t seed, const RecordSink& sink) {
    config.validate();
    const auto env = make_environment(config, seed);
    auto initial = sample_initial_poses(env, config.n_uavs, seed);
    RunResult result;
    result.records.reserve(static_cast<std::size_t>(config.n_steps));
    auto emit = [&](StepRecord r) {
        if (sink) sink(r);
        result.records.push_back(std::move(r));
    };

    if (config.mode == Mode::proposed) {
        SwarmOptions opts{config.agent, seed, config.threads, config.failure_probability, config.record_wall_time};
        Swarm swarm(env, std::move(initial), opts);
        emit(swarm.bootstrap());
        for (std::int64_t k = 1; k < config.n_steps; ++k) emit(swarm.step());
    } else {
        BaselineParams params = config.baseline;
        params.schedule = config.agent.schedule;
        BaselineRunner runner(env, std::move(initial), params, seed, config.threads, config.record_wall_time);
        for (std::int64_t k = 0; k < config.n_steps; ++k) emit(runner.step());
    }
    result.summary = summarize(result.records);
    return result;
}

RunResult run_to_directory(const ExperimentConfig& config, std::uint64_t seed, const std::filesystem::path& dir) {
    config.validate();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto records_path = dir / "records.jsonl";
    std::ofstream out(records_path, std::ios::binary | std::ios::trunc);
    if (ec || !out) throw std::runtime_error("output directory is not writable: " + dir.string());

    auto result = run(config, seed, [&](const StepRecord& r) { out << to_json_line(r) << '\n'; });
    out.close();
    if (!out) throw std::runtime_error("failed writing " + records_path.string());

    std::ofstream summary(dir / "summary.json", std::ios::binary | std::ios::trunc);
    summary << json(to_json(result.summary)).dump(2) << '\n';
    if (!summary) throw std::runtime_error("failed writing summary for " + dir.string());
    return result;
}

SweepResult sweep(const ExperimentConfig& config, std::span<const std::size_t> sizes,
                  std::span<const std::uint64_t> seeds) {
    if (sizes.empty() || seeds.empty()) throw ConfigError("sweep needs at least one size and one seed");
    for (auto s : sizes)
        if (s < 1) throw ConfigError("swarm sizes must be >= 1");
    config.validate();

    const std::size_t jobs = sizes.size() * seeds.size();
    std::vector<RunSummary> summaries(jobs);
    parallel_for(jobs, config.threads, [&](std::size_t job) {
        ExperimentConfig c = config;
        c.n_uavs = sizes[job / seeds.size()];
        c.threads = 1;
        summaries[job] = run(c, seeds[job % seeds.size()]).summary;
    });

    SweepResult out;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        SizeAggregate agg;
        agg.n_uavs = sizes[si];
        agg.seeds.assign(seeds.begin(), seeds.end());
        const std::size_t steps = summaries[si * seeds.size()].trajectory.size();
        std::vector<std::vector<double>> per_step(steps);
        for (std::size_t r = 0; r < seeds.size(); ++r) {
            const auto& s = summaries[si * seeds.size() + r];
            agg.converged.push_back(s.converged_last100);
            agg.violations += s.constraint_violations;
            agg.steps += s.n_records;
            agg.steps_with_separation_warnings += s.steps_with_separation_warnings;
            for (std::size_t k = 0; k < steps && k < s.trajectory.size(); ++k) per_step[k].push_back(s.trajectory[k]);
        }
        for (const auto& v : per_step) {
            agg.mean_trajectory.push_back(mean_of(v));
            agg.std_trajectory.push_back(std_of(v));
        }
        agg.mean_converged = mean_of(agg.converged);
        agg.std_converged = std_of(agg.converged);
        out.sizes.push_back(std::move(agg));
    }
    return out;
}

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream traj(dir / "sweep_trajectories.csv", std::ios::binary | std::ios::trunc);
    std::ofstream conv(dir / "sweep_converged.csv", std::ios::binary | std::ios::trunc);
    if (!traj || !conv) throw std::runtime_error("cannot write sweep CSV files in " + dir.string());
    traj.precision(17);
    conv.precision(17);
    traj << "n_uavs,step,mean,std\n";
    conv << "n_uavs,seed,converged_last100\n";
    for (const auto& s : result.sizes) {
        for (std::size_t k = 0; k < s.mean_trajectory.size(); ++k)
            traj << s.n_uavs << ',' << k << ',' << s.mean_trajectory[k] << ',' << s.std_trajectory[k] << '\n';
        for (std::size_t r = 0; r < s.seeds.size(); ++r)
            conv << s.n_uavs << ',' << s.seeds[r] << ',' << s.converged[r] << '\n';
    }
}

Comparison compare(const ExperimentConfig& proposed_config, const ExperimentConfig& baseline_config,
                   std::span<const std::uint64_t> seeds) {
    if (seeds.empty()) throw ConfigError("compare needs at least one seed");
    proposed_config.validate();
    baseline_config.validate();
    const std::size_t threads = std::max(proposed_config.threads, baseline_config.threads);
    std::vector<RunSummary> summaries(2 * seeds.size());
    parallel_for(summaries.size(), threads, [&](std::size_t job) {
        ExperimentConfig c = job % 2 == 0 ? proposed_config : baseline_config;
        c.threads = 1;
        summaries[job] = run(c, seeds[job / 2]).summary;
    });

    Comparison out;
    out.seeds.assign(seeds.begin(), seeds.end());
    double eval_p = 0.0, eval_b = 0.0, steps_p = 0.0, steps_b = 0.0;
    for (std::size_t r = 0; r < seeds.size(); ++r) {
        const auto& p = summaries[2 * r];
        const auto& b = summaries[2 * r + 1];
        out.proposed.push_back(p.converged_last100);
        out.baseline.push_back(b.converged_last100);
        eval_p += static_cast<double>(p.total_evaluations);
        eval_b += static_cast<double>(b.total_evaluations);
        steps_p += static_cast<double>(p.n_records);
        steps_b += static_cast<double>(b.n_records);
        out.proposed_summaries.push_back(p);
        out.baseline_summaries.push_back(b);
    }
    out.mean_proposed = mean_of(out.proposed);
    out.mean_baseline = mean_of(out.baseline);
    out.converged_ratio = out.mean_baseline > 0.0 ? out.mean_proposed / out.mean_baseline : 0.0;
    out.evaluations_proposed = eval_p / steps_p;
    out.evaluations_baseline = eval_b / steps_b;
    out.evaluation_ratio = out.evaluations_baseline > 0.0 ? out.evaluations_proposed / out.evaluations_baseline : 0.0;
    return out;
}

Comparison compare(const ExperimentConfig& config, std::span<const std::uint64_t> seeds) {
    ExperimentConfig proposed = config;
    proposed.mode = Mode::proposed;
    ExperimentConfig baseline = config;
    baseline.mode = Mode::baseline;
    return compare(proposed, baseline, seeds);
}

void write_comparison_csv(const Comparison& c, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.precision(17);
    out << "seed,proposed_converged_last100,baseline_converged_last100,proposed_after150,baseline_after150\n";
    for (std::size_t r = 0; r < c.seeds.size(); ++r) {
        const auto& p = c.proposed_summaries[r];
        const auto& b = c.baseline_summaries[r];
        out << c.seeds[r] << ',' << c.proposed[r] << ',' << c.baseline[r] << ','
            << (p.converged_after150 ? std::to_string(*p.converged_after150) : "") << ','
            << (b.converged_after150 ? std::to_string(*b.converged_after150) : "") << '\n';
    }
}

}  // namespace swarmpos
