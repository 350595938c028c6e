#pragma once

#include <span>

#include "swarmpos/geometry.hpp"

namespace swarmpos {

struct StepLimits {
    double max_xy_step = 3.5;
    double max_yaw_step = deg_to_rad(10.0);

    void validate() const;
};

struct ClearanceRule {
    double min_uav_separation_xy = 5.0;
    double min_obstacle_clearance = 2.0;

    void validate() const;
};

/// Everything a feasibility check needs besides the candidate itself.
struct FeasibilityContext {
    const Region* region = nullptr;
    std::span<const Obstacle> obstacles;
    StepLimits limits;
    ClearanceRule clearance;
};

/// Signed yaw difference b - a, wrapped to [-pi, pi).
inline double yaw_delta(double a, double b) { return wrap_angle(b - a); }

bool within_step_limits(const Pose& candidate, const Pose& current, const StepLimits& limits);

/// True iff the step bound, region containment, separation from every other
/// UAV (xy) and clearance of (candidate.xy, altitude) from every obstacle box
/// all hold.
bool feasible(const Pose& candidate, const Pose& current, std::span<const Pose> others, const Region& region,
              const StepLimits& limits, const ClearanceRule& clearance, std::span<const Obstacle> obstacles,
              double altitude);

inline bool feasible(const Pose& candidate, const Pose& current, std::span<const Pose> others,
                     const FeasibilityContext& ctx, double altitude) {
    return feasible(candidate, current, others, *ctx.region, ctx.limits, ctx.clearance, ctx.obstacles, altitude);
}

/// Region, separation and obstacle clearance only: where a UAV may be,
/// regardless of how it got there.
bool admissible_position(const Pose& p, std::span<const Pose> others, const Region& region,
                         const ClearanceRule& clearance, std::span<const Obstacle> obstacles, double altitude);

}  // namespace swarmpos
