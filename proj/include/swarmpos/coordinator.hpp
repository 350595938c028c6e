// Swarm-level loop: per step, compute every UAV's contribution to the global
// objective from cached observations, hand each agent its contribution, apply
// all moves at once, observe, and roll the caches.
//
// The loop is generic over an environment so the same code drives both the
// synthetic perception world and analytic surrogate objectives. An
// environment provides
//
//   using observation_type = ...;
//   observation_type sense(std::size_t uav, const Pose&, std::int64_t step) const;
//   double evaluate(std::span<const observation_type>) const;
//   std::size_t unique_count(std::span<const observation_type>) const;
//   double altitude_of(std::size_t uav) const;
//   FeasibilityContext feasibility() const;
//
// sense() must be a pure function of its arguments (noise streams keyed by
// uav and step), which makes results independent of thread scheduling.
#pragma once

#include <chrono>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "swarmpos/agent.hpp"
#include "swarmpos/constraints.hpp"
#include "swarmpos/parallel.hpp"
#include "swarmpos/record.hpp"
#include "swarmpos/rng.hpp"

namespace swarmpos {

template <class E>
concept SwarmEnvironment = requires(const E& env, std::size_t i, const Pose& p, std::int64_t k,
                                    std::span<const typename E::observation_type> obs) {
    typename E::observation_type;
    { env.sense(i, p, k) } -> std::same_as<typename E::observation_type>;
    { env.evaluate(obs) } -> std::convertible_to<double>;
    { env.unique_count(obs) } -> std::convertible_to<std::size_t>;
    { env.altitude_of(i) } -> std::convertible_to<double>;
    { env.feasibility() } -> std::convertible_to<FeasibilityContext>;
};

class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

constexpr double kZeroStepGuard = 1e-9;

/// sqrt((dx/max_xy)^2 + (dy/max_xy)^2 + (wrapped dyaw/max_yaw)^2)
double scaled_pose_distance(const Pose& a, const Pose& b, const StepLimits& limits);

template <class Obs>
struct SwarmState {
    std::int64_t step = 0;
    std::vector<Pose> poses;
    std::vector<Pose> prev_poses;
    std::vector<Obs> measurements;
    std::vector<Obs> prev_measurements;
    double global_objective = 0.0;

    std::size_t size() const { return poses.size(); }
};

struct ContributionVector {
    std::vector<double> values;
    double global_objective = 0.0;
    std::size_t evaluations = 0;
};

/// Contribution of UAV i: (J(current) - J(current with UAV i's observation
/// replaced by its previous one)) / scaled move length, 0 for a move shorter
/// than kZeroStepGuard. Exactly n + 1 objective evaluations; no sensing.
template <SwarmEnvironment Env>
ContributionVector compute_contributions(const SwarmState<typename Env::observation_type>& state, const Env& env,
                                         std::size_t threads = 1) {
    const std::size_t n = state.size();
    if (state.step < 1) throw StateError("contributions need step >= 1");
    if (state.prev_poses.size() != n || state.measurements.size() != n || state.prev_measurements.size() != n)
        throw StateError("swarm state caches are missing or inconsistent");

    const StepLimits limits = env.feasibility().limits;
    ContributionVector out;
    out.values.assign(n, 0.0);
    out.global_objective = env.evaluate(std::span(state.measurements));
    std::vector<double> without(n, 0.0);
    parallel_for(n, threads, [&](std::size_t i) {
        auto mixed = state.measurements;
        mixed[i] = state.prev_measurements[i];
        without[i] = env.evaluate(std::span<const typename Env::observation_type>(mixed));
    });
    out.evaluations = n + 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double dist = scaled_pose_distance(state.poses[i], state.prev_poses[i], limits);
        out.values[i] = dist < kZeroStepGuard ? 0.0 : (out.global_objective - without[i]) / dist;
    }
    return out;
}

struct SwarmOptions {
    AgentParams agent;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    /// Per-step, per-UAV probability of a simulated agent failure.
    double failure_probability = 0.0;
    bool record_wall_time = false;
};

/// Pose changes of a step that break the step bound or leave the region.
std::size_t count_violations(std::span<const Pose> before, std::span<const Pose> after, const Region& region,
                             const StepLimits& limits);

/// Pairs of UAVs closer (xy) than the separation minimum.
std::size_t count_separation_warnings(std::span<const Pose> poses, double min_separation);

/// Coordinator plus one agent per UAV.
template <SwarmEnvironment Env>
class Swarm {
public:
    using Obs = typename Env::observation_type;

    Swarm(const Env& env, std::vector<Pose> initial_poses, const SwarmOptions& options)
        : env_(env), options_(options) {
        const std::size_t n = initial_poses.size();
        if (n == 0) throw ConfigError("swarm needs at least one UAV");
        const auto box = env_.feasibility().region->bounding_box();
        agents_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) agents_.emplace_back(options.agent, box);
        forced_failures_.assign(n, false);
        state_.poses = std::move(initial_poses);
    }

    const SwarmState<Obs>& state() const { return state_; }
    const std::vector<Agent>& agents() const { return agents_; }
    std::size_t size() const { return state_.poses.size(); }

    /// Marks UAV i as failed for all subsequent steps.
    void set_failed(std::size_t i, bool failed) { forced_failures_.at(i) = failed; }

    /// Step 0: observe the initial configuration, then take one random
    /// feasible perturbation per UAV so that step 1 has history.
    StepRecord bootstrap() {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t n = size();
        const auto ctx = env_.feasibility();
        state_.step = 0;
        state_.measurements = observe(state_.poses, 0);
        state_.global_objective = env_.evaluate(std::span<const Obs>(state_.measurements));

        StepRecord rec = blank_record();
        std::vector<Pose> next(n);
        parallel_for(n, options_.threads, [&](std::size_t i) {
            agents_[i].seed_window(state_.poses[i], 0.0);
            Rng rng(options_.seed, StreamPurpose::bootstrap, {0, i});
            const auto candidates = sample_perturbations(state_.poses[i], options_.agent.perturbations,
                                                         options_.agent.schedule.alpha(0), ctx.limits, rng);
            const auto others = peers(i);
            next[i] = state_.poses[i];
            rec.chosen[i] = -1;
            // first feasible non-stay candidate, else stay
            for (std::size_t j = 1; j < candidates.size(); ++j) {
                if (feasible(candidates[j], state_.poses[i], others, ctx, env_.altitude_of(i))) {
                    next[i] = candidates[j];
                    rec.chosen[i] = static_cast<int>(j);
                    break;
                }
                ++rec.rejected[i];
            }
        });
        advance(next, rec, t0);
        return rec;
    }

    /// Steps k >= 1.
    StepRecord step() {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t n = size();
        const std::int64_t k = state_.step;
        const auto ctx = env_.feasibility();
        const auto contributions = compute_contributions(state_, env_, options_.threads);

        StepRecord rec = blank_record();
        rec.delta = contributions.values;
        rec.evaluations = contributions.evaluations;
        for (std::size_t i = 0; i < n; ++i) rec.failed[i] = is_failed(i, k);
        std::vector<Pose> next(n);
        parallel_for(n, options_.threads, [&](std::size_t i) {
            next[i] = state_.poses[i];
            if (rec.failed[i]) {
                rec.chosen[i] = -1;
                return;
            }
            Rng rng(options_.seed, StreamPurpose::perturb, {static_cast<std::uint64_t>(k), i});
            const auto decision =
                agents_[i].step(state_.poses[i], contributions.values[i], peers(i), ctx, env_.altitude_of(i), k, rng);
            next[i] = decision.pose;
            rec.chosen[i] = decision.chosen;
            rec.rejected[i] = decision.rejected;
        });
        for (std::size_t i = 0; i < n; ++i) rec.local_objective[i] = agents_[i].estimator().local_objective;
        advance(next, rec, t0);
        return rec;
    }

private:
    StepRecord blank_record() const {
        const std::size_t n = size();
        StepRecord rec;
        rec.step = state_.step;
        rec.poses = state_.poses;
        rec.objective = state_.global_objective;
        rec.delta.assign(n, 0.0);
        rec.local_objective.assign(n, 0.0);
        rec.chosen.assign(n, 0);
        rec.rejected.assign(n, 0);
        rec.failed.assign(n, false);
        rec.unique_objects = env_.unique_count(std::span<const Obs>(state_.measurements));
        return rec;
    }

    std::vector<Pose> peers(std::size_t i) const {
        std::vector<Pose> out;
        out.reserve(size() - 1);
        for (std::size_t j = 0; j < size(); ++j)
            if (j != i) out.push_back(state_.poses[j]);
        return out;
    }

    bool is_failed(std::size_t i, std::int64_t k) const {
        if (forced_failures_[i]) return true;
        if (options_.failure_probability <= 0.0) return false;
        Rng rng(options_.seed, StreamPurpose::failure, {static_cast<std::uint64_t>(k), i});
        return rng.bernoulli(options_.failure_probability);
    }

    std::vector<Obs> observe(const std::vector<Pose>& poses, std::int64_t k) const {
        std::vector<Obs> out(poses.size());
        parallel_for(poses.size(), options_.threads, [&](std::size_t i) { out[i] = env_.sense(i, poses[i], k); });
        return out;
    }

    void advance(std::vector<Pose>& next, StepRecord& rec, std::chrono::steady_clock::time_point t0) {
        const auto ctx = env_.feasibility();
        rec.constraint_violations = count_violations(state_.poses, next, *ctx.region, ctx.limits);
        rec.separation_warnings = count_separation_warnings(next, ctx.clearance.min_uav_separation_xy);

        auto observed = observe(next, state_.step + 1);
        state_.prev_poses = std::move(state_.poses);
        state_.poses = std::move(next);
        state_.prev_measurements = std::move(state_.measurements);
        state_.measurements = std::move(observed);
        state_.step += 1;
        state_.global_objective = env_.evaluate(std::span<const Obs>(state_.measurements));
        if (options_.record_wall_time)
            rec.wall_time_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }

    const Env& env_;
    SwarmOptions options_;
    std::vector<Agent> agents_;
    std::vector<bool> forced_failures_;
    SwarmState<Obs> state_;
};

}  // namespace swarmpos
