#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "swarmpos/experiment.hpp"

using namespace swarmpos;
namespace fs = std::filesystem;

namespace {

StepRecord record_with(std::int64_t k, double objective, std::size_t n = 2) {
    StepRecord r;
    r.step = k;
    r.objective = objective;
    for (std::size_t i = 0; i < n; ++i) r.poses.emplace_back(static_cast<double>(i), static_cast<double>(k), 0.1);
    r.delta.assign(n, 0.0);
    r.local_objective.assign(n, 0.0);
    r.chosen.assign(n, 1);
    r.rejected.assign(n, 0);
    r.failed.assign(n, false);
    return r;
}

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("swarmpos_unit_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig short_config(std::int64_t steps = 40) {
    ExperimentConfig c;
    c.n_steps = steps;
    return c;
}

}  // namespace

TEST_CASE("config defaults") {
    const ExperimentConfig c;
    CHECK(c.n_uavs == 4);
    CHECK(c.n_steps == 300);
    CHECK(c.agent.degree == 3);
    CHECK(c.agent.window == 30);
    CHECK(c.agent.perturbations == 40);
    CHECK(c.agent.ridge_lambda == 1e-6);
    CHECK(c.agent.schedule.alpha(0) == doctest::Approx(1.1));
    CHECK(c.limits.max_xy_step == 3.5);
    CHECK(c.limits.max_yaw_step == doctest::Approx(std::numbers::pi / 18));
    CHECK(c.sensing.altitudes.base_altitude == 14.0);
    CHECK(c.sensing.altitudes.increment == 0.5);
    CHECK(c.sensing.camera.pitch == doctest::Approx(-std::numbers::pi / 4));
    CHECK(c.sensing.dedup_epsilon == 2.5);
    CHECK(c.baseline.candidates == 60);
    CHECK(c.world.region.is_circle());
    CHECK(c.world.region.circle().radius == 70.0);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("config JSON round trip") {
    ExperimentConfig c;
    c.n_uavs = 6;
    c.seeds = {3, 5, 8};
    c.agent.stay_competes = true;
    c.sensing.drift_sigma = 0.2;
    c.world.region = Region::preset("area3");
    c.region_preset = "area3";
    c.mode = Mode::baseline;
    const auto j = to_json(c);
    const auto back = config_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.n_uavs == 6);
    CHECK(back.agent.stay_competes);
    CHECK(back.mode == Mode::baseline);

    ExperimentConfig custom;
    custom.world.region = Region(Polygon{{{0, 0}, {100, 0}, {100, 80}, {0, 80}}});
    custom.region_preset.clear();
    const auto cj = to_json(custom);
    CHECK(cj["world"]["region"]["type"] == "polygon");
    CHECK(config_from_json(cj).world.region.area() == doctest::Approx(8000.0));
}

TEST_CASE("config: missing keys keep defaults, bad values are config errors") {
    CHECK(config_from_json(nlohmann::json::object()).n_uavs == 4);
    CHECK(config_from_json(nlohmann::json{{"n_uavs", 2}}).n_uavs == 2);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"n_uavs", 0}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"n_steps", 1}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"seeds", nlohmann::json::array()}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"n_uavs", "four"}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"mode", "greedy"}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"world", {{"layout", "spiral"}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"world", {{"region", "area7"}}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"sensing", {{"noise", {{"dropout_probability", 1.0}}}}}}),
                    ConfigError);

    const auto dir = scratch("badjson");
    fs::create_directories(dir);
    std::ofstream(dir / "bad.json") << "{ not json";
    CHECK_THROWS_AS(load_config(dir / "bad.json"), ConfigError);
    CHECK_THROWS_AS(load_config(dir / "missing.json"), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("step records serialize losslessly") {
    StepRecord r = record_with(7, 12.345678901234567, 3);
    r.delta = {0.1, -0.2, 1e-17};
    r.local_objective = {1.0 / 3.0, 2.0, -4.5};
    r.chosen = {0, -1, 39};
    r.rejected = {1, 0, 40};
    r.failed = {false, true, false};
    r.unique_objects = 17;
    r.evaluations = 4;
    r.separation_warnings = 1;
    r.wall_time_ms = 0.25;
    const auto line = to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    const auto back = record_from_json(nlohmann::json::parse(line));
    CHECK(to_json_line(back) == line);
    CHECK(back.poses == r.poses);
    CHECK(back.delta == r.delta);
    CHECK(back.local_objective == r.local_objective);
    CHECK(back.failed == r.failed);
    CHECK(back.wall_time_ms == r.wall_time_ms);
    // wall time is omitted unless requested
    r.wall_time_ms.reset();
    CHECK(to_json_line(r).find("wall_time_ms") == std::string::npos);
}

TEST_CASE("summarize examples") {
    std::vector<StepRecord> constant, ramp;
    for (int k = 0; k < 300; ++k) {
        constant.push_back(record_with(k, 3.0));
        ramp.push_back(record_with(k, static_cast<double>(k)));
    }
    const auto c = summarize(constant);
    CHECK(c.converged_last100 == 3.0);
    CHECK(c.std_last100 == 0.0);
    CHECK_FALSE(c.whole_run_fallback);

    const auto r = summarize(ramp);
    CHECK(r.converged_last100 == doctest::Approx(249.5));
    REQUIRE(r.converged_after150.has_value());
    CHECK(*r.converged_after150 == doctest::Approx(224.5));
    REQUIRE(r.uavs.size() == 2);
    CHECK(r.uavs[0].final_positions.size() == 100);
    CHECK(r.uavs[1].centroid.x() == doctest::Approx(1.0));
    CHECK(r.uavs[1].centroid.y() == doctest::Approx(249.5));

    CHECK_THROWS_AS(summarize(std::vector<StepRecord>{}), std::invalid_argument);

    std::vector<StepRecord> short_run(ramp.begin(), ramp.begin() + 40);
    const auto s = summarize(short_run);
    CHECK(s.whole_run_fallback);
    CHECK(s.converged_last100 == doctest::Approx(19.5));
    CHECK_FALSE(s.converged_after150.has_value());
}

TEST_CASE("summary of a seeded run matches a direct recomputation") {
    const auto result = run(short_config(160), 3);
    const auto& recs = result.records;
    REQUIRE(recs.size() == 160);
    double sum = 0.0;
    for (std::size_t k = 60; k < 160; ++k) sum += recs[k].objective;
    const double mean = sum / 100.0;
    double ss = 0.0;
    for (std::size_t k = 60; k < 160; ++k) ss += (recs[k].objective - mean) * (recs[k].objective - mean);
    CHECK(result.summary.converged_last100 == doctest::Approx(mean).epsilon(1e-12));
    CHECK(result.summary.std_last100 == doctest::Approx(std::sqrt(ss / 100.0)).epsilon(1e-12));
    double after = 0.0;
    for (std::size_t k = 150; k < 160; ++k) after += recs[k].objective;
    CHECK(*result.summary.converged_after150 == doctest::Approx(after / 10.0).epsilon(1e-12));
    for (std::size_t i = 0; i < 4; ++i) {
        Vec2 c = Vec2::Zero();
        for (std::size_t k = 60; k < 160; ++k) c += recs[k].poses[i].xy();
        c /= 100.0;
        CHECK((result.summary.uavs[i].centroid - c).norm() < 1e-9);
    }
}

TEST_CASE("run: empty world gives zero objective") {
    ExperimentConfig c = short_config(2);
    c.world.n_objects = 0;
    for (Mode m : {Mode::proposed, Mode::baseline}) {
        c.mode = m;
        const auto r = run(c, 1);
        REQUIRE(r.records.size() == 2);
        for (const auto& rec : r.records) CHECK(rec.objective == 0.0);
    }
}

TEST_CASE("run: area presets produce per-uav clusters and valid records") {
    for (const char* area : {"area1", "area2", "area3"}) {
        ExperimentConfig c = short_config(120);
        c.world.region = Region::preset(area);
        c.region_preset = area;
        const auto r = run(c, 2);
        CHECK(r.summary.uavs.size() == 4);
        CHECK(r.summary.constraint_violations == 0);
        for (std::size_t k = 1; k < r.records.size(); ++k) {
            CHECK(r.records[k].step == static_cast<std::int64_t>(k));
            CHECK(r.records[k].evaluations == 5);
            for (const auto& p : r.records[k].poses) CHECK(region_contains(c.world.region, p.xy()));
        }
    }
}

TEST_CASE("run_to_directory: byte-identical outputs and early I/O errors") {
    const auto base = scratch("rundir");
    ExperimentConfig c = short_config(30);
    run_to_directory(c, 4, base / "a");
    run_to_directory(c, 4, base / "b");
    CHECK(slurp(base / "a" / "records.jsonl") == slurp(base / "b" / "records.jsonl"));
    CHECK(slurp(base / "a" / "summary.json") == slurp(base / "b" / "summary.json"));
    const auto records = read_records(base / "a" / "records.jsonl");
    CHECK(records.size() == 30);

    // a regular file where a directory should be
    std::ofstream(base / "blocker") << "x";
    CHECK_THROWS_AS(run_to_directory(c, 4, base / "blocker" / "run"), std::runtime_error);
    fs::remove_all(base);
}

TEST_CASE("drift moves objects but keeps them inside the region") {
    ExperimentConfig c = short_config(20);
    c.sensing.drift_sigma = 0.5;
    const auto env = make_environment(c, 1);
    const auto& w0 = env.world_at(0);
    const auto& w10 = env.world_at(10);
    std::size_t moved = 0;
    for (std::size_t i = 0; i < w0.objects.size(); ++i) {
        moved += w0.objects[i].position != w10.objects[i].position;
        CHECK(region_contains(w10.region, w10.objects[i].position.head<2>()));
    }
    CHECK(moved > 50);
    CHECK(&env.world_at(1000) == &env.world_at(21));
    CHECK(run(c, 1).records.size() == 20);
}

TEST_CASE("sweep: single size and seed degenerates to run; invalid sizes are rejected") {
    ExperimentConfig c = short_config(30);
    const std::vector<std::size_t> sizes{3};
    const std::vector<std::uint64_t> seeds{5};
    const auto s = sweep(c, sizes, seeds);
    c.n_uavs = 3;
    const auto r = run(c, 5);
    REQUIRE(s.sizes.size() == 1);
    CHECK(s.sizes[0].converged[0] == r.summary.converged_last100);
    CHECK(s.sizes[0].mean_trajectory == r.summary.trajectory);

    const std::vector<std::size_t> zero{0};
    CHECK_THROWS_AS(sweep(c, zero, seeds), ConfigError);

    const auto dir = scratch("sweepcsv");
    const std::vector<std::size_t> two{2, 3};
    write_sweep_csv(sweep(c, two, seeds), dir);
    CHECK(fs::exists(dir / "sweep_trajectories.csv"));
    CHECK(fs::exists(dir / "sweep_converged.csv"));
    fs::remove_all(dir);
}

TEST_CASE("compare sanity runs") {
    ExperimentConfig c = short_config(40);
    const std::vector<std::uint64_t> seeds{1, 2};

    const auto same = compare(c, c, seeds);
    CHECK(same.converged_ratio == doctest::Approx(1.0));

    ExperimentConfig stay = c;
    stay.mode = Mode::baseline;
    stay.baseline.candidates = 1;
    const auto vs_stay = compare(c, stay, seeds);
    CHECK(vs_stay.evaluations_baseline == doctest::Approx(1.0));
    CHECK(vs_stay.reference_ratio == doctest::Approx(47.64 / 50.97));
    MESSAGE("proposed vs stay-only baseline ratio: " << vs_stay.converged_ratio);
    CHECK(vs_stay.converged_ratio >= 1.0);
}
