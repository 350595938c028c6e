#include "swarmpos/baseline.hpp"

#include <chrono>

#include "swarmpos/agent.hpp"
#include "swarmpos/coordinator.hpp"
#include "swarmpos/parallel.hpp"

namespace swarmpos {

namespace {

constexpr std::size_t kJointAttempts = 5;

}  // namespace

std::vector<JointCandidate> sample_joint_candidates(const SyntheticEnvironment& env, std::span<const Pose> poses,
                                                    std::size_t n_candidates, double alpha,
                                                    std::size_t draws_per_uav, std::uint64_t seed, std::int64_t k) {
    if (n_candidates < 1) throw ConfigError("baseline needs at least one candidate");
    const auto ctx = env.feasibility();
    const std::size_t n = poses.size();
    std::vector<JointCandidate> out;
    out.push_back({std::vector<Pose>(poses.begin(), poses.end()), 0.0});

    for (std::size_t c = 1; c < n_candidates; ++c) {
        Rng rng(seed, StreamPurpose::baseline, {static_cast<std::uint64_t>(k), c});
        std::vector<Pose> joint;
        for (std::size_t attempt = 0; attempt < kJointAttempts && joint.empty(); ++attempt) {
            std::vector<Pose> trial(poses.begin(), poses.end());
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                std::vector<Pose> others;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) others.push_back(trial[j]);
                const auto draws = sample_perturbations(poses[i], draws_per_uav, alpha, ctx.limits, rng);
                bool placed = false;
                for (std::size_t d = 1; d < draws.size() && !placed; ++d) {
                    if (feasible(draws[d], poses[i], others, ctx, env.altitude_of(i))) {
                        trial[i] = draws[d];
                        placed = true;
                    }
                }
                if (!placed) ok = feasible(poses[i], poses[i], others, ctx, env.altitude_of(i));
            }
            if (ok) joint = std::move(trial);
        }
        if (joint.empty()) joint.assign(poses.begin(), poses.end());
        out.push_back({std::move(joint), 0.0});
    }
    return out;
}

double evaluate_configuration(const SyntheticEnvironment& env, std::span<const Pose> poses, std::int64_t step) {
    std::vector<MeasurementSet> obs;
    obs.reserve(poses.size());
    for (std::size_t i = 0; i < poses.size(); ++i) obs.push_back(env.sense_noise_free(i, poses[i], step));
    return env.evaluate(obs);
}

BaselineStep semi_exhaustive_step(const SyntheticEnvironment& env, std::span<const Pose> poses,
                                  std::size_t n_candidates, double alpha, std::int64_t k, std::uint64_t seed,
                                  std::size_t draws_per_uav, std::size_t threads) {
    auto candidates = sample_joint_candidates(env, poses, n_candidates, alpha, draws_per_uav, seed, k);
    parallel_for(candidates.size(), threads, [&](std::size_t c) {
        candidates[c].evaluated_objective = evaluate_configuration(env, candidates[c].poses, k + 1);
    });
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c)
        if (candidates[c].evaluated_objective > candidates[best].evaluated_objective) best = c;
    return {candidates[best].poses, best, candidates[best].evaluated_objective, candidates.size()};
}

BaselineRunner::BaselineRunner(const SyntheticEnvironment& env, std::vector<Pose> initial_poses,
                               const BaselineParams& params, std::uint64_t seed, std::size_t threads,
                               bool record_wall_time)
    : env_(env),
      params_(params),
      seed_(seed),
      threads_(threads),
      record_wall_time_(record_wall_time),
      poses_(std::move(initial_poses)) {
    if (params_.candidates < 1) throw ConfigError("baseline needs at least one candidate");
    params_.schedule.validate();
}

StepRecord BaselineRunner::step() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = poses_.size();
    std::vector<MeasurementSet> obs(n);
    parallel_for(n, threads_, [&](std::size_t i) { obs[i] = env_.sense(i, poses_[i], k_); });

    StepRecord rec;
    rec.step = k_;
    rec.poses = poses_;
    rec.objective = env_.evaluate(obs);
    rec.unique_objects = env_.unique_count(obs);
    rec.delta.assign(n, 0.0);
    rec.local_objective.assign(n, 0.0);
    rec.rejected.assign(n, 0);
    rec.failed.assign(n, false);

    const auto result = semi_exhaustive_step(env_, poses_, params_.candidates, params_.schedule.alpha(k_), k_, seed_,
                                             params_.draws_per_uav, threads_);
    rec.chosen.assign(n, static_cast<int>(result.best));
    rec.evaluations = result.evaluations;
    const auto ctx = env_.feasibility();
    rec.constraint_violations = count_violations(poses_, result.poses, *ctx.region, ctx.limits);
    rec.separation_warnings = count_separation_warnings(result.poses, ctx.clearance.min_uav_separation_xy);
    poses_ = result.poses;
    ++k_;
    if (record_wall_time_)
        rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace swarmpos
