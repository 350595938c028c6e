#include <doctest.h>

#include <vector>

#include "swarmpos/constraints.hpp"
#include "swarmpos/rng.hpp"

using namespace swarmpos;

namespace {

struct Fixture {
    Region region = Region::preset("area1");
    StepLimits limits;
    ClearanceRule clearance;
    std::vector<Obstacle> obstacles{{Vec3(20, 20, 0), Vec3(30, 30, 20)}};

    bool ok(const Pose& cand, const Pose& cur, const std::vector<Pose>& others = {}, double alt = 14.0) const {
        return feasible(cand, cur, others, region, limits, clearance, obstacles, alt);
    }
};

}  // namespace

TEST_CASE("feasible: examples") {
    Fixture f;
    const Pose cur(0, 0, 0);
    CHECK(f.ok(cur, cur));
    CHECK_FALSE(f.ok(Pose(3.6, 0, 0), cur));
    CHECK(f.ok(Pose(3.5, 0, 0), cur));
    CHECK(f.ok(Pose(0, 0, deg_to_rad(-9.0)), cur));
    CHECK_FALSE(f.ok(Pose(0, 0, deg_to_rad(11.0)), cur));
    // diagonal step longer than the bound even though each axis is within it
    CHECK_FALSE(f.ok(Pose(3.0, 3.0, 0), cur));
}

TEST_CASE("feasible: yaw bound across the seam") {
    Fixture f;
    const Pose cur(0, 0, deg_to_rad(179.0));
    CHECK(f.ok(Pose(0, 0, deg_to_rad(-179.0)), cur));
    CHECK(std::abs(yaw_delta(deg_to_rad(179.0), deg_to_rad(-179.0))) == doctest::Approx(deg_to_rad(2.0)));
    CHECK_FALSE(f.ok(Pose(0, 0, deg_to_rad(-169.0)), cur));
}

TEST_CASE("feasible: region, separation and obstacle clearance") {
    Fixture f;
    CHECK_FALSE(f.ok(Pose(71, 0, 0), Pose(68, 0, 0)));
    CHECK(f.ok(Pose(1, 0, 0), Pose(0, 0, 0), {Pose(6.1, 0, 0)}));
    CHECK_FALSE(f.ok(Pose(1, 0, 0), Pose(0, 0, 0), {Pose(5.9, 0, 0)}));
    // altitude 14 sits inside the 20 m tall box footprint
    CHECK_FALSE(f.ok(Pose(25, 25, 0), Pose(25, 22, 0)));
    CHECK_FALSE(f.ok(Pose(19, 25, 0), Pose(17, 25, 0)));
    CHECK(f.ok(Pose(17.9, 25, 0), Pose(16, 25, 0)));
    // flying well above a low box is fine
    f.obstacles = {{Vec3(20, 20, 0), Vec3(30, 30, 5)}};
    CHECK(f.ok(Pose(25, 25, 0), Pose(25, 22, 0)));
}

TEST_CASE("staying is feasible whenever the current position is admissible") {
    Fixture f;
    Rng rng(1);
    for (int t = 0; t < 2000; ++t) {
        const Pose p(rng.uniform(-75, 75), rng.uniform(-75, 75), rng.uniform(-4, 4));
        const std::vector<Pose> others{Pose(rng.uniform(-75, 75), rng.uniform(-75, 75), 0)};
        CHECK(f.ok(p, p, others) ==
              admissible_position(p, others, f.region, f.clearance, f.obstacles, 14.0));
    }
}

TEST_CASE("feasibility is a conjunction: one satisfied condition does not rescue another") {
    Fixture f;
    const Pose cur(66, 0, 0);
    // too long a step and outside the region
    CHECK_FALSE(f.ok(Pose(71, 0, 0), cur));
    // fix the step, still outside
    CHECK_FALSE(f.ok(Pose(70.5, 0, 0), Pose(68, 0, 0)));
    // fix the region, still too long
    CHECK_FALSE(f.ok(Pose(60, 0, 0), cur));
    // separation violated while everything else holds
    CHECK_FALSE(f.ok(Pose(0, 0, 0), Pose(0, 0, 0), {Pose(1, 1, 0)}));
}

TEST_CASE("limits validation") {
    CHECK_THROWS_AS((StepLimits{0.0, 0.1}.validate()), ConfigError);
    CHECK_THROWS_AS((StepLimits{3.5, 0.0}.validate()), ConfigError);
    CHECK_THROWS_AS((ClearanceRule{-1.0, 2.0}.validate()), ConfigError);
    CHECK_NOTHROW((ClearanceRule{0.0, 0.0}.validate()));
}
