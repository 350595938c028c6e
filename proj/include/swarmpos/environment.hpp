#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swarmpos/awareness.hpp"
#include "swarmpos/constraints.hpp"
#include "swarmpos/perception.hpp"

namespace swarmpos {

struct SensingConfig {
    AltitudeAssignment altitudes;
    CameraModel camera;
    SensorNoise noise;
    double dedup_epsilon = kDefaultDedupEpsilon;
    /// Random-walk sigma per step for object drift; 0 disables drift.
    double drift_sigma = 0.0;

    void validate() const;
};

/// Synthetic world seen through the geometric sensor model. Noise for
/// (uav, step) comes from a stream keyed by (seed, step, uav).
class SyntheticEnvironment {
public:
    using observation_type = MeasurementSet;

    /// horizon bounds the number of precomputed drift snapshots; later steps
    /// reuse the last one.
    SyntheticEnvironment(World world, SensingConfig sensing, StepLimits limits, ClearanceRule clearance,
                         std::uint64_t seed, std::int64_t horizon = 0);

    MeasurementSet sense(std::size_t uav, const Pose& pose, std::int64_t step) const;
    /// Frustum and occlusion only: no position or confidence noise, no dropout.
    MeasurementSet sense_noise_free(std::size_t uav, const Pose& pose, std::int64_t step) const;

    double evaluate(std::span<const MeasurementSet> obs) const { return objective_of(obs, sensing_.dedup_epsilon); }
    std::size_t unique_count(std::span<const MeasurementSet> obs) const {
        return deduplicate(obs, sensing_.dedup_epsilon).size();
    }
    double altitude_of(std::size_t uav) const { return sensing_.altitudes.altitude_of(uav); }
    FeasibilityContext feasibility() const { return {&world_.region, world_.obstacles, limits_, clearance_}; }

    const World& world() const { return world_; }
    const World& world_at(std::int64_t step) const;
    const SensingConfig& sensing() const { return sensing_; }
    std::uint64_t seed() const { return seed_; }

private:
    World world_;
    std::vector<World> drifted_;
    SensingConfig sensing_;
    StepLimits limits_;
    ClearanceRule clearance_;
    std::uint64_t seed_;
};

}  // namespace swarmpos
