#include "swarmpos/constraints.hpp"

#include <cmath>

namespace swarmpos {

void StepLimits::validate() const {
    if (!(max_xy_step > 0.0) || !(max_yaw_step > 0.0)) throw ConfigError("step limits must be > 0");
}

void ClearanceRule::validate() const {
    if (min_uav_separation_xy < 0.0 || min_obstacle_clearance < 0.0)
        throw ConfigError("clearances must be >= 0");
}

bool within_step_limits(const Pose& candidate, const Pose& current, const StepLimits& limits) {
    const double dxy = (candidate.xy() - current.xy()).norm();
    const double dyaw = std::abs(yaw_delta(current.yaw(), candidate.yaw()));
    return dxy <= limits.max_xy_step && dyaw <= limits.max_yaw_step;
}

bool admissible_position(const Pose& p, std::span<const Pose> others, const Region& region,
                         const ClearanceRule& clearance, std::span<const Obstacle> obstacles, double altitude) {
    if (!region_contains(region, p.xy())) return false;
    for (const auto& o : others)
        if ((o.xy() - p.xy()).norm() < clearance.min_uav_separation_xy) return false;
    const Vec3 body(p.x(), p.y(), altitude);
    for (const auto& box : obstacles)
        if (box.distance_to(body) < clearance.min_obstacle_clearance) return false;
    return true;
}

bool feasible(const Pose& candidate, const Pose& current, std::span<const Pose> others, const Region& region,
              const StepLimits& limits, const ClearanceRule& clearance, std::span<const Obstacle> obstacles,
              double altitude) {
    return within_step_limits(candidate, current, limits) &&
           admissible_position(candidate, others, region, clearance, obstacles, altitude);
}

}  // namespace swarmpos
