// Synthetic operational world: poses, camera geometry, region boundary,
// obstacles, objects of interest, and the geometric predicates queried by
// perception and the constraint checks.
#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace swarmpos {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Wraps an angle into [-pi, pi).
double wrap_angle(double a);

/// Thrown for invalid geometry or configuration inputs.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One UAV's decision variables: planar position and heading.
class Pose {
public:
    Pose() = default;
    Pose(double x, double y, double yaw) : x_(x), y_(y), yaw_(wrap_angle(yaw)) {}

    double x() const { return x_; }
    double y() const { return y_; }
    /// Heading in [-pi, pi).
    double yaw() const { return yaw_; }
    Vec2 xy() const { return {x_, y_}; }

    bool operator==(const Pose&) const = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
    double yaw_ = 0.0;
};

/// Altitude of UAV i is base + i * increment.
struct AltitudeAssignment {
    double base_altitude = 14.0;
    double increment = 0.5;

    double altitude_of(std::size_t uav) const {
        return base_altitude + static_cast<double>(uav) * increment;
    }
    void validate() const;
};

/// Forward-facing camera with fixed downward pitch.
struct CameraModel {
    double pitch = -std::numbers::pi / 4.0;
    double horizontal_fov = deg_to_rad(90.0);
    double vertical_fov = deg_to_rad(60.0);
    double max_range = 60.0;

    void validate() const;
};

enum class ObjectClass : std::uint8_t { car = 0, pedestrian = 1, truck = 2 };

std::string to_string(ObjectClass c);

struct WorldObject {
    std::uint32_t id = 0;
    ObjectClass class_label = ObjectClass::car;
    Vec3 position = Vec3::Zero();
    double base_quality = 1.0;
};

/// Axis-aligned box.
struct Obstacle {
    Vec3 min_corner = Vec3::Zero();
    Vec3 max_corner = Vec3::Zero();

    /// Euclidean distance from p to the closed box (0 inside).
    double distance_to(const Vec3& p) const;
};

struct Circle {
    Vec2 center = Vec2::Zero();
    double radius = 1.0;
};

/// Simple polygon, counterclockwise vertex order.
struct Polygon {
    std::vector<Vec2> vertices;
};

struct BoundingBox2 {
    Vec2 min = Vec2::Zero();
    Vec2 max = Vec2::Zero();
};

class Region {
public:
    /// Throws ConfigError if the shape is invalid (non-positive radius,
    /// fewer than 3 vertices, self-intersection). Clockwise polygons are
    /// reoriented.
    explicit Region(Circle c);
    explicit Region(Polygon p);

    bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
    const Circle& circle() const { return std::get<Circle>(shape_); }
    const Polygon& polygon() const { return std::get<Polygon>(shape_); }

    BoundingBox2 bounding_box() const;
    double area() const;

    /// Named presets: "area1" (circle, r = 70 m), "area2", "area3" (polygons).
    static Region preset(const std::string& name);

private:
    std::variant<Circle, Polygon> shape_;
};

/// Boundary points count as inside.
bool region_contains(const Region& region, const Vec2& p);

/// True iff the point lies within range and inside both angular half-fields
/// of the camera mounted on a UAV at (pose.xy, altitude).
bool in_frustum(const Pose& pose, double altitude, const CameraModel& cam, const Vec3& point);

/// True iff the segment a-b does not pass through the interior of any box.
/// Touching a face, edge or corner does not block.
bool line_of_sight(const Vec3& a, const Vec3& b, std::span<const Obstacle> obstacles);

double polygon_signed_area(std::span<const Vec2> vertices);

enum class WorldLayout { uniform, road_grid };

struct WorldSpec {
    Region region = Region::preset("area1");
    std::size_t n_objects = 100;
    std::size_t n_obstacles = 0;
    WorldLayout layout = WorldLayout::road_grid;
    double road_spacing = 60.0;
    double road_jitter = 1.5;
    /// Share of road-grid objects queued near a crossroad; the rest are
    /// spread uniformly along the segments.
    double crossroad_fraction = 0.9;
    /// Mean distance (m) of a queued object from its crossroad, measured
    /// along the road.
    double crossroad_scale = 8.0;
    double building_min_height = 6.0;
    double building_max_height = 22.0;
};

/// Axis-parallel road centerline, from a to b.
struct RoadSegment {
    Vec2 a = Vec2::Zero();
    Vec2 b = Vec2::Zero();

    double distance_to(const Vec2& p) const;
};

struct World {
    Region region = Region::preset("area1");
    std::vector<WorldObject> objects;
    std::vector<Obstacle> obstacles;
    std::vector<RoadSegment> roads;
    std::vector<Vec2> crossroads;
    std::uint64_t rng_seed = 0;
};

/// Deterministic for a fixed (spec, seed).
World generate_world(const WorldSpec& spec, std::uint64_t seed);

}  // namespace swarmpos
