#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swarmpos/geometry.hpp"

namespace swarmpos {

/// Everything logged for one time step k. Poses are the configuration the
/// objective was measured at; chosen/rejected describe the decision that
/// leads to step k + 1.
struct StepRecord {
    std::int64_t step = 0;
    std::vector<Pose> poses;
    double objective = 0.0;
    std::vector<double> delta;
    std::vector<double> local_objective;
    std::vector<int> chosen;
    std::vector<std::size_t> rejected;
    std::vector<bool> failed;
    std::size_t unique_objects = 0;
    /// Objective evaluations (proposed) or sensing evaluations (baseline)
    /// spent on this step's decision.
    std::size_t evaluations = 0;
    /// Pairs closer than the separation minimum after the move.
    std::size_t separation_warnings = 0;
    /// Applied moves that broke the step bound or left the region.
    std::size_t constraint_violations = 0;
    std::optional<double> wall_time_ms;
};

}  // namespace swarmpos
