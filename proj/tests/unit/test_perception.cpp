#include <doctest.h>

#include <cmath>

#include "swarmpos/perception.hpp"

using namespace swarmpos;

namespace {

World single_object_world(const Vec3& position, double quality = 1.0) {
    World w{Region::preset("area1"), {}, {}, {}, {}, 0};
    w.objects.push_back({0, ObjectClass::car, position, quality});
    return w;
}

// Ground point on the camera axis of a UAV at the origin facing +x.
Vec3 axis_point(double distance, double altitude, const CameraModel& cam) {
    return {distance * std::cos(cam.pitch), 0.0, altitude + distance * std::sin(cam.pitch)};
}

}  // namespace

TEST_CASE("confidence_model examples") {
    CHECK(confidence_model(0.0, 0.0, 1.0, 60.0) == 1.0);
    CHECK(confidence_model(60.0, 0.3, 1.0, 60.0) == 0.0);
    CHECK(confidence_model(80.0, 0.0, 1.0, 60.0) == 0.0);
    CHECK(confidence_model(30.0, 0.0, 0.8, 60.0) == doctest::Approx(0.4));
    CHECK(confidence_model(30.0, std::acos(0.5), 1.0, 60.0) == doctest::Approx(0.25));
}

TEST_CASE("confidence_model decreases strictly with distance inside range") {
    double prev = 2.0;
    for (double d = 0.0; d < 60.0; d += 0.5) {
        const double c = confidence_model(d, 0.2, 0.9, 60.0);
        CHECK(c < prev);
        CHECK(c >= 0.0);
        prev = c;
    }
}

TEST_CASE("sense: empty world gives no detections") {
    World w{Region::preset("area1"), {}, {}, {}, {}, 0};
    Rng rng(1);
    const auto m = sense(w, 2, 5, Pose(0, 0, 0), AltitudeAssignment{}, CameraModel{}, SensorNoise{}, rng);
    CHECK(m.detections.empty());
    CHECK(m.uav == 2);
    CHECK(m.step == 5);
}

TEST_CASE("sense: noise-free on-axis object at half range") {
    CameraModel cam;
    cam.max_range = 40.0;
    AltitudeAssignment alt{10.0, 0.5};
    const Vec3 p = axis_point(20.0, 10.0, cam);
    World w = single_object_world(p);
    Rng rng(1);
    const auto m = sense(w, 0, 0, Pose(0, 0, 0), alt, cam, SensorNoise::none(), rng);
    REQUIRE(m.detections.size() == 1);
    CHECK(m.detections[0].confidence == doctest::Approx(0.5));
    CHECK(m.detections[0].estimated_position == p);
    CHECK(m.detections[0].true_id == 0);
    CHECK(m.detections[0].detector == 0);
}

TEST_CASE("sense: occluded object is never detected") {
    World w = single_object_world(Vec3(14, 0, 0));
    w.obstacles.push_back({Vec3(6, -3, 0), Vec3(9, 3, 30)});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        CHECK(sense(w, 0, 0, Pose(0, 0, 0), AltitudeAssignment{}, CameraModel{}, SensorNoise{}, rng)
                  .detections.empty());
    }
}

TEST_CASE("sense: noise-free sensing is a pure function of the pose") {
    WorldSpec spec;
    spec.n_obstacles = 5;
    const World w = generate_world(spec, 4);
    Rng r1(1), r2(999);
    const auto a = sense(w, 1, 0, Pose(5, -3, 0.4), AltitudeAssignment{}, CameraModel{}, SensorNoise::none(), r1);
    const auto b = sense(w, 1, 0, Pose(5, -3, 0.4), AltitudeAssignment{}, CameraModel{}, SensorNoise::none(), r2);
    REQUIRE(a.detections.size() == b.detections.size());
    CHECK(!a.detections.empty());
    for (std::size_t i = 0; i < a.detections.size(); ++i) {
        CHECK(a.detections[i].estimated_position == b.detections[i].estimated_position);
        CHECK(a.detections[i].confidence == b.detections[i].confidence);
    }
}

TEST_CASE("sense: noisy detections stay in range and near true objects") {
    WorldSpec spec;
    spec.n_objects = 200;
    const World w = generate_world(spec, 9);
    const SensorNoise noise;
    std::size_t total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        Rng pose_rng(seed + 1000);
        const Pose pose(pose_rng.uniform(-50, 50), pose_rng.uniform(-50, 50), pose_rng.uniform(-3, 3));
        const auto m = sense(w, 0, 0, pose, AltitudeAssignment{}, CameraModel{}, noise, rng);
        for (const auto& d : m.detections) {
            ++total;
            CHECK(d.confidence > 0.0);
            CHECK(d.confidence <= 1.0);
            CHECK(d.estimated_position.allFinite());
            CHECK((d.estimated_position - w.objects[d.true_id].position).norm() <= 6.0 * noise.position_sigma);
        }
    }
    CHECK(total > 1000);
}

TEST_CASE("sense: removing an obstacle never removes a detection") {
    WorldSpec spec;
    spec.n_obstacles = 8;
    const World with = generate_world(spec, 12);
    World without = with;
    SensorNoise noise = SensorNoise::none();
    Rng pose_rng(3);
    for (int t = 0; t < 100; ++t) {
        const Pose pose(pose_rng.uniform(-50, 50), pose_rng.uniform(-50, 50), pose_rng.uniform(-3, 3));
        without.obstacles = with.obstacles;
        without.obstacles.erase(without.obstacles.begin() + static_cast<long>(pose_rng.below(with.obstacles.size())));
        Rng a(1), b(1);
        const auto seen_with = sense(with, 0, 0, pose, AltitudeAssignment{}, CameraModel{}, noise, a);
        const auto seen_without = sense(without, 0, 0, pose, AltitudeAssignment{}, CameraModel{}, noise, b);
        for (const auto& d : seen_with.detections) {
            bool found = false;
            for (const auto& e : seen_without.detections) found = found || e.true_id == d.true_id;
            CHECK(found);
        }
    }
}

TEST_CASE("sensor noise validation") {
    CHECK_NOTHROW(SensorNoise{}.validate());
    CHECK_THROWS_AS((SensorNoise{-1.0, 0.0, 0.0}.validate()), ConfigError);
    CHECK_THROWS_AS((SensorNoise{0.0, 0.0, 1.0}.validate()), ConfigError);
}
