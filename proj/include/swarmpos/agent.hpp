// Per-UAV local optimizer: accumulates the contribution signal into a local
// objective, fits a polynomial surrogate of it over a sliding window of poses,
// and moves to the best of a set of random feasible perturbations as ranked by
// that surrogate.
#pragma once

#include <array>
#include <deque>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "swarmpos/constraints.hpp"
#include "swarmpos/geometry.hpp"
#include "swarmpos/rng.hpp"

namespace swarmpos {

/// All monomials of total degree <= degree over the encoded pose
/// (x~, y~, cos yaw, sin yaw), where x~ and y~ map the bounding box to [-1, 1].
/// Term 0 is the constant.
class FeatureMap {
public:
    FeatureMap(int degree, const BoundingBox2& box);

    int degree() const { return degree_; }
    std::size_t size() const { return exponents_.size(); }
    const std::vector<std::array<int, 4>>& exponents() const { return exponents_; }

    std::array<double, 4> encode(const Pose& p) const;
    Eigen::VectorXd operator()(const Pose& p) const;

private:
    int degree_;
    Vec2 center_;
    Vec2 half_extent_;
    std::vector<std::array<int, 4>> exponents_;
};

struct StepSchedule {
    double start = 1.1;
    double slope = 1.0 / 300.0;
    double floor = 0.05;

    /// max(start - slope * k, floor)
    double alpha(std::int64_t k) const;
    void validate() const;
};

struct AgentParams {
    int degree = 3;
    std::size_t window = 30;
    std::size_t perturbations = 40;
    double ridge_lambda = 1e-6;
    StepSchedule schedule;
    /// Whether the unperturbed pose competes in the argmax. Off by default:
    /// the fitted surrogate is anchored at visited poses and tends to favour
    /// staying, which stalls the search.
    bool stay_competes = false;

    void validate() const;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WindowSample {
    Pose pose;
    double value = 0.0;
};

struct EstimatorState {
    std::deque<WindowSample> window;
    std::size_t capacity = 30;
    Eigen::VectorXd theta;
    double ridge_lambda = 1e-6;
    double local_objective = 0.0;
};

/// Adds delta to the local objective and appends (pose, new value), evicting
/// the oldest sample beyond capacity.
void accumulate_local(EstimatorState& est, const Pose& pose, double delta);

/// Ridge least squares over the window via the normal equations. Stores and
/// returns theta. Throws NumericError on an empty window or non-finite result.
const Eigen::VectorXd& fit(EstimatorState& est, const FeatureMap& features);

double predict(const EstimatorState& est, const FeatureMap& features, const Pose& p);

/// Candidate 0 is always the current pose ("stay"); candidates 1..m are
/// pose + alpha * delta with delta uniform per dimension in the step box, then
/// planar displacement and yaw clamped to their step limits.
std::vector<Pose> sample_perturbations(const Pose& pose, std::size_t m, double alpha, const StepLimits& limits,
                                       Rng& rng);

struct Decision {
    Pose pose;
    /// Index into the candidate list, -1 if every candidate was infeasible.
    int chosen = -1;
    std::size_t rejected = 0;
};

/// Highest-scoring feasible candidate (lowest index on ties); the current
/// pose if none is feasible. Candidate 0 is skipped unless stay_competes.
Decision choose(const EstimatorState& est, const FeatureMap& features, const Pose& pose,
                std::span<const Pose> candidates, std::span<const Pose> others, const FeasibilityContext& ctx,
                double altitude, bool stay_competes = true);

Decision decide(const EstimatorState& est, const FeatureMap& features, const Pose& pose,
                std::span<const Pose> others, const FeasibilityContext& ctx, double altitude, std::int64_t k,
                const AgentParams& params, Rng& rng);

/// One UAV's optimizer state.
class Agent {
public:
    Agent(const AgentParams& params, const BoundingBox2& box);

    const EstimatorState& estimator() const { return estimator_; }
    const FeatureMap& features() const { return features_; }
    const AgentParams& params() const { return params_; }

    void seed_window(const Pose& pose, double value);

    /// Accumulate, fit and decide for step k. A failed fit holds the pose.
    Decision step(const Pose& pose, double delta, std::span<const Pose> others, const FeasibilityContext& ctx,
                  double altitude, std::int64_t k, Rng& rng);

private:
    AgentParams params_;
    FeatureMap features_;
    EstimatorState estimator_;
};

}  // namespace swarmpos
