#include "swarmpos/perception.hpp"

#include <algorithm>
#include <cmath>

namespace swarmpos {

void SensorNoise::validate() const {
    if (position_sigma < 0.0 || confidence_sigma < 0.0) throw ConfigError("noise sigmas must be >= 0");
    if (dropout_probability < 0.0 || dropout_probability >= 1.0)
        throw ConfigError("dropout_probability must lie in [0, 1)");
}

double confidence_model(double distance, double off_axis_angle, double base_quality, double max_range) {
    const double falloff = std::max(0.0, 1.0 - distance / max_range);
    return std::clamp(base_quality * falloff * std::cos(off_axis_angle), 0.0, 1.0);
}

MeasurementSet sense(const World& world, std::size_t uav, std::int64_t step, const Pose& pose,
                     const AltitudeAssignment& altitudes, const CameraModel& cam, const SensorNoise& noise,
                     Rng& rng) {
    MeasurementSet out{uav, step, {}};
    const double altitude = altitudes.altitude_of(uav);
    const Vec3 eye = camera_position(pose, altitude);
    const double cp = std::cos(cam.pitch);
    const Vec3 axis(cp * std::cos(pose.yaw()), cp * std::sin(pose.yaw()), std::sin(cam.pitch));

    for (const auto& obj : world.objects) {
        if (!in_frustum(pose, altitude, cam, obj.position)) continue;
        if (!line_of_sight(eye, obj.position, world.obstacles)) continue;
        // every visible object consumes the same number of draws so that
        // noise settings never shift the stream for later objects
        const bool dropped = rng.bernoulli(noise.dropout_probability);
        const Vec3 jitter(rng.normal(), rng.normal(), rng.normal());
        const double conf_noise = rng.normal();
        if (dropped) continue;

        const Vec3 v = obj.position - eye;
        const double dist = v.norm();
        const double off_axis = dist > 0.0 ? std::acos(std::clamp(v.dot(axis) / dist, -1.0, 1.0)) : 0.0;
        double conf = confidence_model(dist, off_axis, obj.base_quality, cam.max_range);
        conf = std::clamp(conf + noise.confidence_sigma * conf_noise, 0.0, 1.0);
        if (conf <= 0.0) continue;

        out.detections.push_back(
            {obj.position + noise.position_sigma * jitter, conf, obj.class_label, uav, obj.id});
    }
    return out;
}

}  // namespace swarmpos
