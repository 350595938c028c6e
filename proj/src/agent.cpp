#include "swarmpos/agent.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

namespace swarmpos {

FeatureMap::FeatureMap(int degree, const BoundingBox2& box)
    : degree_(degree), center_(0.5 * (box.min + box.max)), half_extent_(0.5 * (box.max - box.min)) {
    if (degree < 0) throw ConfigError("feature degree must be >= 0");
    if (!(half_extent_.x() > 0.0) || !(half_extent_.y() > 0.0)) throw ConfigError("degenerate bounding box");
    // graded order: total degree, then lexicographic with the first variable
    // carrying the highest power
    for (int total = 0; total <= degree; ++total)
        for (int a = total; a >= 0; --a)
            for (int b = total - a; b >= 0; --b)
                for (int c = total - a - b; c >= 0; --c) exponents_.push_back({a, b, c, total - a - b - c});
}

std::array<double, 4> FeatureMap::encode(const Pose& p) const {
    return {(p.x() - center_.x()) / half_extent_.x(), (p.y() - center_.y()) / half_extent_.y(), std::cos(p.yaw()),
            std::sin(p.yaw())};
}

Eigen::VectorXd FeatureMap::operator()(const Pose& p) const {
    const auto z = encode(p);
    std::array<std::array<double, 8>, 4> pow{};
    for (int v = 0; v < 4; ++v) {
        pow[v][0] = 1.0;
        for (int e = 1; e <= degree_ && e < 8; ++e) pow[v][e] = pow[v][e - 1] * z[v];
    }
    Eigen::VectorXd phi(static_cast<Eigen::Index>(exponents_.size()));
    for (std::size_t t = 0; t < exponents_.size(); ++t) {
        const auto& e = exponents_[t];
        double term = 1.0;
        for (int v = 0; v < 4; ++v) term *= e[v] < 8 ? pow[v][e[v]] : std::pow(z[v], e[v]);
        phi[static_cast<Eigen::Index>(t)] = term;
    }
    return phi;
}

double StepSchedule::alpha(std::int64_t k) const {
    return std::max(start - slope * static_cast<double>(k), floor);
}

void StepSchedule::validate() const {
    if (!(floor > 0.0)) throw ConfigError("alpha floor must be > 0");
    if (slope < 0.0) throw ConfigError("alpha slope must be >= 0");
    if (!(start > 0.0)) throw ConfigError("alpha start must be > 0");
}

void AgentParams::validate() const {
    if (degree < 1) throw ConfigError("degree must be >= 1");
    if (window < 1) throw ConfigError("window must be >= 1");
    if (perturbations < 1) throw ConfigError("perturbations must be >= 1");
    if (!(ridge_lambda > 0.0)) throw ConfigError("ridge_lambda must be > 0");
    schedule.validate();
}

void accumulate_local(EstimatorState& est, const Pose& pose, double delta) {
    est.local_objective += delta;
    est.window.push_back({pose, est.local_objective});
    while (est.window.size() > est.capacity) est.window.pop_front();
}

const Eigen::VectorXd& fit(EstimatorState& est, const FeatureMap& features) {
    if (est.window.empty()) throw NumericError("cannot fit an empty window");
    const auto p = static_cast<Eigen::Index>(features.size());
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(p, p);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(p);
    for (const auto& s : est.window) {
        const Eigen::VectorXd phi = features(s.pose);
        gram.selfadjointView<Eigen::Lower>().rankUpdate(phi);
        rhs += s.value * phi;
    }
    gram = gram.selfadjointView<Eigen::Lower>();
    gram.diagonal().array() += est.ridge_lambda;
    Eigen::VectorXd theta = gram.ldlt().solve(rhs);
    if (!theta.allFinite()) throw NumericError("estimator fit produced a non-finite result");
    est.theta = std::move(theta);
    return est.theta;
}

double predict(const EstimatorState& est, const FeatureMap& features, const Pose& p) {
    if (est.theta.size() != static_cast<Eigen::Index>(features.size())) return 0.0;
    return est.theta.dot(features(p));
}

std::vector<Pose> sample_perturbations(const Pose& pose, std::size_t m, double alpha, const StepLimits& limits,
                                       Rng& rng) {
    std::vector<Pose> out;
    out.reserve(m + 1);
    out.push_back(pose);
    for (std::size_t j = 0; j < m; ++j) {
        Vec2 dxy(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        double dyaw = rng.uniform(-1.0, 1.0);
        dxy *= alpha * limits.max_xy_step;
        dyaw *= alpha * limits.max_yaw_step;
        // Clamp a hair inside the bounds so that rounding in pose + offset
        // cannot push a boundary candidate past within_step_limits.
        constexpr double inside = 1.0 - 1e-9;
        const double max_xy = limits.max_xy_step * inside;
        const double max_yaw = limits.max_yaw_step * inside;
        const double norm = dxy.norm();
        if (norm > max_xy) dxy *= max_xy / norm;
        dyaw = std::clamp(dyaw, -max_yaw, max_yaw);
        out.emplace_back(pose.x() + dxy.x(), pose.y() + dxy.y(), pose.yaw() + dyaw);
    }
    return out;
}

Decision choose(const EstimatorState& est, const FeatureMap& features, const Pose& pose,
                std::span<const Pose> candidates, std::span<const Pose> others, const FeasibilityContext& ctx,
                double altitude, bool stay_competes) {
    Decision best{pose, -1, 0};
    double best_score = 0.0;
    for (std::size_t j = stay_competes ? 0 : 1; j < candidates.size(); ++j) {
        if (!feasible(candidates[j], pose, others, ctx, altitude)) {
            ++best.rejected;
            continue;
        }
        const double score = predict(est, features, candidates[j]);
        if (best.chosen < 0 || score > best_score) {
            best.pose = candidates[j];
            best.chosen = static_cast<int>(j);
            best_score = score;
        }
    }
    return best;
}

Decision decide(const EstimatorState& est, const FeatureMap& features, const Pose& pose,
                std::span<const Pose> others, const FeasibilityContext& ctx, double altitude, std::int64_t k,
                const AgentParams& params, Rng& rng) {
    const auto candidates =
        sample_perturbations(pose, params.perturbations, params.schedule.alpha(k), ctx.limits, rng);
    return choose(est, features, pose, candidates, others, ctx, altitude, params.stay_competes);
}

Agent::Agent(const AgentParams& params, const BoundingBox2& box) : params_(params), features_(params.degree, box) {
    params_.validate();
    estimator_.capacity = params.window;
    estimator_.ridge_lambda = params.ridge_lambda;
}

void Agent::seed_window(const Pose& pose, double value) {
    estimator_.local_objective = value;
    estimator_.window.clear();
    estimator_.window.push_back({pose, value});
}

Decision Agent::step(const Pose& pose, double delta, std::span<const Pose> others, const FeasibilityContext& ctx,
                     double altitude, std::int64_t k, Rng& rng) {
    accumulate_local(estimator_, pose, delta);
    try {
        fit(estimator_, features_);
    } catch (const NumericError&) {
        return {pose, -1, 0};
    }
    return decide(estimator_, features_, pose, others, ctx, altitude, k, params_, rng);
}

}  // namespace swarmpos
