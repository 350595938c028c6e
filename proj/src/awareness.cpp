#include "swarmpos/awareness.hpp"

#include <algorithm>

namespace swarmpos {

std::vector<UniqueObject> deduplicate(std::span<const MeasurementSet> measurements, double dedup_epsilon) {
    if (!(dedup_epsilon > 0.0)) throw std::invalid_argument("dedup_epsilon must be > 0");

    struct Entry {
        const Detection* det;
        DetectionRef ref;
    };
    std::vector<Entry> order;
    for (std::size_t u = 0; u < measurements.size(); ++u)
        for (std::size_t d = 0; d < measurements[u].detections.size(); ++d)
            order.push_back({&measurements[u].detections[d], {u, d}});

    std::stable_sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
        return a.det->confidence > b.det->confidence;
    });

    const double eps2 = dedup_epsilon * dedup_epsilon;
    std::vector<char> claimed(order.size(), 0);
    std::vector<UniqueObject> out;
    for (std::size_t s = 0; s < order.size(); ++s) {
        if (claimed[s]) continue;
        claimed[s] = 1;
        const Detection& seed = *order[s].det;
        UniqueObject obj{seed.estimated_position, seed.confidence, seed.class_label, {order[s].ref}};
        for (std::size_t t = s + 1; t < order.size(); ++t) {
            if (claimed[t]) continue;
            const Detection& d = *order[t].det;
            if (d.class_label != seed.class_label) continue;
            if ((d.estimated_position - seed.estimated_position).squaredNorm() > eps2) continue;
            claimed[t] = 1;
            obj.members.push_back(order[t].ref);
        }
        out.push_back(std::move(obj));
    }
    return out;
}

ConfidenceMatrix build_confidence_matrix(std::span<const UniqueObject> unique,
                                         std::span<const MeasurementSet> measurements) {
    ConfidenceMatrix c{Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(measurements.size()),
                                             static_cast<Eigen::Index>(unique.size()))};
    for (std::size_t j = 0; j < unique.size(); ++j) {
        for (const auto& m : unique[j].members) {
            if (m.uav >= measurements.size() || m.index >= measurements[m.uav].detections.size())
                throw IntegrityError("unique object member references a missing detection");
            double& cell = c.entries(static_cast<Eigen::Index>(m.uav), static_cast<Eigen::Index>(j));
            cell = std::max(cell, measurements[m.uav].detections[m.index].confidence);
        }
    }
    return c;
}

double objective(const ConfidenceMatrix& c) {
    if (c.entries.cols() == 0 || c.entries.rows() == 0) return 0.0;
    double total = 0.0;
    for (Eigen::Index j = 0; j < c.entries.cols(); ++j) total += c.entries.col(j).maxCoeff();
    return total;
}

double objective_of(std::span<const MeasurementSet> measurements, double dedup_epsilon) {
    const auto unique = deduplicate(measurements, dedup_epsilon);
    return objective(build_confidence_matrix(unique, measurements));
}

}  // namespace swarmpos
