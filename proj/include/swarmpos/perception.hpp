// Synthetic sensing. A geometric detection model stands in for an image
// detector: visibility comes from the camera frustum and occlusion, and
// confidence decays with range and off-axis angle.
#pragma once

#include <cstdint>
#include <vector>

#include "swarmpos/geometry.hpp"
#include "swarmpos/rng.hpp"

namespace swarmpos {

struct Detection {
    Vec3 estimated_position = Vec3::Zero();
    double confidence = 0.0;
    ObjectClass class_label = ObjectClass::car;
    std::size_t detector = 0;
    /// Ground-truth object id. Test oracles only; dedup and optimization
    /// never read it.
    std::uint32_t true_id = 0;
};

struct MeasurementSet {
    std::size_t uav = 0;
    std::int64_t step = 0;
    std::vector<Detection> detections;
};

struct SensorNoise {
    double position_sigma = 0.5;
    double confidence_sigma = 0.05;
    double dropout_probability = 0.05;

    void validate() const;
    static SensorNoise none() { return {0.0, 0.0, 0.0}; }
};

/// base_quality * max(0, 1 - distance / max_range) * cos(off_axis_angle),
/// clamped to [0, 1].
double confidence_model(double distance, double off_axis_angle, double base_quality, double max_range);

/// Camera position of a UAV.
inline Vec3 camera_position(const Pose& pose, double altitude) { return {pose.x(), pose.y(), altitude}; }

/// Senses every visible, unoccluded object. Detections whose confidence is
/// zero after noise are dropped (they are indistinguishable from a miss).
MeasurementSet sense(const World& world, std::size_t uav, std::int64_t step, const Pose& pose,
                     const AltitudeAssignment& altitudes, const CameraModel& cam, const SensorNoise& noise,
                     Rng& rng);

}  // namespace swarmpos
