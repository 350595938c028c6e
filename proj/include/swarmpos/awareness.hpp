// Situational-awareness objective: merge the swarm's detections into unique
// objects, tabulate per-UAV confidences, and sum the best confidence of every
// unique object.
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "swarmpos/perception.hpp"

namespace swarmpos {

/// Index of a detection: row in the measurement sequence, then position in
/// that set's detection list.
struct DetectionRef {
    std::size_t uav = 0;
    std::size_t index = 0;

    bool operator==(const DetectionRef&) const = default;
};

struct UniqueObject {
    Vec3 representative_position = Vec3::Zero();
    double confidence = 0.0;
    ObjectClass class_label = ObjectClass::car;
    /// The seed (highest confidence member) comes first.
    std::vector<DetectionRef> members;
};

/// n_uavs x |B| matrix; entry (i, j) is UAV i's confidence in unique object j,
/// 0 when UAV i did not detect it.
struct ConfidenceMatrix {
    Eigen::MatrixXd entries;

    std::size_t n_uavs() const { return static_cast<std::size_t>(entries.rows()); }
    std::size_t n_objects() const { return static_cast<std::size_t>(entries.cols()); }
};

class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultDedupEpsilon = 2.5;

/// Greedy agglomeration in descending confidence order (ties by uav row, then
/// detection index). The highest unclaimed detection seeds a unique object and
/// claims every unclaimed same-class detection within epsilon of it.
std::vector<UniqueObject> deduplicate(std::span<const MeasurementSet> measurements, double dedup_epsilon);

/// Throws IntegrityError when a member reference is out of range.
ConfidenceMatrix build_confidence_matrix(std::span<const UniqueObject> unique,
                                         std::span<const MeasurementSet> measurements);

/// Sum of column maxima.
double objective(const ConfidenceMatrix& c);

double objective_of(std::span<const MeasurementSet> measurements, double dedup_epsilon = kDefaultDedupEpsilon);

}  // namespace swarmpos
