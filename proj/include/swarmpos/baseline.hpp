// Centralized semi-exhaustive reference: every step, sample joint swarm
// configurations, evaluate each by sensing it, and jump to the best.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swarmpos/agent.hpp"
#include "swarmpos/environment.hpp"
#include "swarmpos/record.hpp"

namespace swarmpos {

struct JointCandidate {
    std::vector<Pose> poses;
    double evaluated_objective = 0.0;
};

struct BaselineParams {
    std::size_t candidates = 60;
    /// Per-UAV draws tried before a UAV stays put within one joint candidate.
    std::size_t draws_per_uav = 10;
    StepSchedule schedule;
};

struct BaselineStep {
    std::vector<Pose> poses;
    std::size_t best = 0;
    double best_objective = 0.0;
    std::size_t evaluations = 0;
};

/// Candidate 0 is the current configuration; the rest are jointly feasible
/// perturbations (each UAV checked against the candidate positions of the
/// UAVs placed before it and the current positions of the rest).
std::vector<JointCandidate> sample_joint_candidates(const SyntheticEnvironment& env, std::span<const Pose> poses,
                                                    std::size_t n_candidates, double alpha,
                                                    std::size_t draws_per_uav, std::uint64_t seed, std::int64_t k);

/// Noise-free objective of a configuration observed at the given step.
double evaluate_configuration(const SyntheticEnvironment& env, std::span<const Pose> poses, std::int64_t step);

BaselineStep semi_exhaustive_step(const SyntheticEnvironment& env, std::span<const Pose> poses,
                                  std::size_t n_candidates, double alpha, std::int64_t k, std::uint64_t seed,
                                  std::size_t draws_per_uav = 10, std::size_t threads = 1);

/// Drives the baseline and emits records in the same format as the proposed
/// loop. The logged objective is measured with the regular noisy sensor.
class BaselineRunner {
public:
    BaselineRunner(const SyntheticEnvironment& env, std::vector<Pose> initial_poses, const BaselineParams& params,
                   std::uint64_t seed, std::size_t threads = 1, bool record_wall_time = false);

    StepRecord step();
    const std::vector<Pose>& poses() const { return poses_; }

private:
    const SyntheticEnvironment& env_;
    BaselineParams params_;
    std::uint64_t seed_;
    std::size_t threads_;
    bool record_wall_time_;
    std::int64_t k_ = 0;
    std::vector<Pose> poses_;
};

}  // namespace swarmpos
