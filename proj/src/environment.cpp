#include "swarmpos/environment.hpp"

#include <algorithm>

namespace swarmpos {

void SensingConfig::validate() const {
    altitudes.validate();
    camera.validate();
    noise.validate();
    if (!(dedup_epsilon > 0.0)) throw ConfigError("dedup_epsilon must be > 0");
    if (drift_sigma < 0.0) throw ConfigError("drift_sigma must be >= 0");
}

SyntheticEnvironment::SyntheticEnvironment(World world, SensingConfig sensing, StepLimits limits,
                                           ClearanceRule clearance, std::uint64_t seed, std::int64_t horizon)
    : world_(std::move(world)), sensing_(sensing), limits_(limits), clearance_(clearance), seed_(seed) {
    sensing_.validate();
    limits_.validate();
    clearance_.validate();
    if (sensing_.drift_sigma > 0.0 && horizon > 0) {
        drifted_.reserve(static_cast<std::size_t>(horizon) + 1);
        drifted_.push_back(world_);
        for (std::int64_t k = 1; k <= horizon; ++k) {
            World next = drifted_.back();
            Rng rng(seed_, StreamPurpose::drift, {static_cast<std::uint64_t>(k)});
            for (auto& obj : next.objects) {
                const Vec2 p(obj.position.x() + rng.normal(0.0, sensing_.drift_sigma),
                             obj.position.y() + rng.normal(0.0, sensing_.drift_sigma));
                // objects stay put rather than leave the region
                if (region_contains(next.region, p)) obj.position = Vec3(p.x(), p.y(), 0.0);
            }
            drifted_.push_back(std::move(next));
        }
    }
}

const World& SyntheticEnvironment::world_at(std::int64_t step) const {
    if (drifted_.empty()) return world_;
    const auto idx = std::clamp<std::int64_t>(step, 0, static_cast<std::int64_t>(drifted_.size()) - 1);
    return drifted_[static_cast<std::size_t>(idx)];
}

MeasurementSet SyntheticEnvironment::sense(std::size_t uav, const Pose& pose, std::int64_t step) const {
    Rng rng(seed_, StreamPurpose::sense, {static_cast<std::uint64_t>(step), uav});
    return swarmpos::sense(world_at(step), uav, step, pose, sensing_.altitudes, sensing_.camera, sensing_.noise,
                           rng);
}

MeasurementSet SyntheticEnvironment::sense_noise_free(std::size_t uav, const Pose& pose, std::int64_t step) const {
    Rng rng(0);
    return swarmpos::sense(world_at(step), uav, step, pose, sensing_.altitudes, sensing_.camera, SensorNoise::none(),
                           rng);
}

}  // namespace swarmpos
