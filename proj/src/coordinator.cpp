#include "swarmpos/coordinator.hpp"

#include <cmath>

namespace swarmpos {

double scaled_pose_distance(const Pose& a, const Pose& b, const StepLimits& limits) {
    const double dx = (b.x() - a.x()) / limits.max_xy_step;
    const double dy = (b.y() - a.y()) / limits.max_xy_step;
    const double dyaw = yaw_delta(a.yaw(), b.yaw()) / limits.max_yaw_step;
    return std::sqrt(dx * dx + dy * dy + dyaw * dyaw);
}

std::size_t count_violations(std::span<const Pose> before, std::span<const Pose> after, const Region& region,
                             const StepLimits& limits) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < after.size(); ++i) {
        if (before[i] == after[i]) continue;  // holding still is never a violation
        if (!within_step_limits(after[i], before[i], limits) || !region_contains(region, after[i].xy())) ++n;
    }
    return n;
}

std::size_t count_separation_warnings(std::span<const Pose> poses, double min_separation) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < poses.size(); ++i)
        for (std::size_t j = i + 1; j < poses.size(); ++j)
            if ((poses[i].xy() - poses[j].xy()).norm() < min_separation) ++n;
    return n;
}

}  // namespace swarmpos
