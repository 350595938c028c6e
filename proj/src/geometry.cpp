#include "swarmpos/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swarmpos {

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (a >= -std::numbers::pi && a < std::numbers::pi) return a;
    double r = std::fmod(a + std::numbers::pi, two_pi);
    if (r < 0.0) r += two_pi;
    r -= std::numbers::pi;
    // fmod can land exactly on +pi after rounding
    if (r >= std::numbers::pi) r -= two_pi;
    return r;
}

void AltitudeAssignment::validate() const {
    if (!(base_altitude > 0.0)) throw ConfigError("base_altitude must be > 0");
    if (!(increment > 0.0)) throw ConfigError("altitude increment must be > 0");
}

void CameraModel::validate() const {
    auto ok_fov = [](double f) { return f > 0.0 && f < std::numbers::pi; };
    if (!ok_fov(horizontal_fov) || !ok_fov(vertical_fov))
        throw ConfigError("camera fov must lie in (0, pi)");
    if (!(max_range > 0.0)) throw ConfigError("camera max_range must be > 0");
}

std::string to_string(ObjectClass c) {
    switch (c) {
    case ObjectClass::car: return "car";
    case ObjectClass::pedestrian: return "pedestrian";
    case ObjectClass::truck: return "truck";
    }
    return "unknown";
}

double Obstacle::distance_to(const Vec3& p) const {
    const Vec3 d = (min_corner - p).cwiseMax(p - max_corner).cwiseMax(Vec3::Zero());
    return d.norm();
}

double RoadSegment::distance_to(const Vec2& p) const {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (a + t * ab - p).norm();
}

double polygon_signed_area(std::span<const Vec2> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& p = v[i];
        const Vec2& q = v[(i + 1) % v.size()];
        s += p.x() * q.y() - q.x() * p.y();
    }
    return 0.5 * s;
}

namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
    const double d1 = cross(q1, q2, p1);
    const double d2 = cross(q1, q2, p2);
    const double d3 = cross(p1, p2, q1);
    const double d4 = cross(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(p1, q1, q2)) return true;
    if (d2 == 0 && on_segment(p2, q1, q2)) return true;
    if (d3 == 0 && on_segment(q1, p1, p2)) return true;
    if (d4 == 0 && on_segment(q2, p1, p2)) return true;
    return false;
}

bool is_simple(const std::vector<Vec2>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // adjacent edges share a vertex
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
        }
    }
    return true;
}

bool point_on_edge(const Vec2& p, const Vec2& a, const Vec2& b) {
    const double len = (b - a).norm();
    return std::abs(cross(a, b, p)) <= 1e-12 * std::max(1.0, len * len) && on_segment(p, a, b);
}

}  // namespace

Region::Region(Circle c) : shape_(c) {
    if (!(c.radius > 0.0) || !std::isfinite(c.radius)) throw ConfigError("circle radius must be > 0");
}

Region::Region(Polygon p) {
    if (p.vertices.size() < 3) throw ConfigError("polygon needs at least 3 vertices");
    if (!is_simple(p.vertices)) throw ConfigError("polygon must not self-intersect");
    const double a = polygon_signed_area(p.vertices);
    if (a == 0.0) throw ConfigError("polygon is degenerate");
    if (a < 0.0) std::reverse(p.vertices.begin(), p.vertices.end());
    shape_ = std::move(p);
}

BoundingBox2 Region::bounding_box() const {
    if (is_circle()) {
        const auto& c = circle();
        const Vec2 r(c.radius, c.radius);
        return {c.center - r, c.center + r};
    }
    BoundingBox2 box{polygon().vertices.front(), polygon().vertices.front()};
    for (const auto& v : polygon().vertices) {
        box.min = box.min.cwiseMin(v);
        box.max = box.max.cwiseMax(v);
    }
    return box;
}

double Region::area() const {
    if (is_circle()) return std::numbers::pi * circle().radius * circle().radius;
    return polygon_signed_area(polygon().vertices);
}

namespace {

// Scales a polygon about its bounding-box center to the requested area.
Polygon scaled_to_area(std::vector<Vec2> v, double target_area) {
    const double a = std::abs(polygon_signed_area(v));
    const double s = std::sqrt(target_area / a);
    Vec2 lo = v.front(), hi = v.front();
    for (const auto& p : v) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    const Vec2 c = 0.5 * (lo + hi);
    for (auto& p : v) p = (p - c) * s;
    return Polygon{std::move(v)};
}

}  // namespace

Region Region::preset(const std::string& name) {
    if (name == "area1") return Region(Circle{Vec2::Zero(), 70.0});
    if (name == "area2") {
        // office-complex L shape
        return Region(scaled_to_area({{0, 0}, {4, 0}, {4, 1.5}, {2, 1.5}, {2, 3}, {0, 3}}, 37892.3));
    }
    if (name == "area3") {
        // irregular semi-urban hexagon
        return Region(scaled_to_area({{0, 0}, {5, -0.5}, {6, 2}, {4.5, 4}, {1.5, 4.2}, {-0.5, 2}}, 56894.9));
    }
    throw ConfigError("unknown region preset: " + name);
}

bool region_contains(const Region& region, const Vec2& p) {
    if (region.is_circle()) {
        const auto& c = region.circle();
        return (p - c.center).norm() <= c.radius;
    }
    const auto& v = region.polygon().vertices;
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if (point_on_edge(p, v[j], v[i])) return true;
        if ((v[i].y() > p.y()) != (v[j].y() > p.y())) {
            const double x_cross =
                v[j].x() + (p.y() - v[j].y()) * (v[i].x() - v[j].x()) / (v[i].y() - v[j].y());
            if (p.x() < x_cross) inside = !inside;
        }
    }
    return inside;
}

bool in_frustum(const Pose& pose, double altitude, const CameraModel& cam, const Vec3& point) {
    const Vec3 v = point - Vec3(pose.x(), pose.y(), altitude);
    const double dist = v.norm();
    if (dist > cam.max_range) return false;

    const double cy = std::cos(pose.yaw()), sy = std::sin(pose.yaw());
    const double cp = std::cos(cam.pitch), sp = std::sin(cam.pitch);
    // camera frame: yaw about z, then pitch about the rotated lateral axis
    const Vec3 forward(cp * cy, cp * sy, sp);
    const Vec3 left(-sy, cy, 0.0);
    const Vec3 up(-sp * cy, -sp * sy, cp);

    const double f = v.dot(forward);
    if (f <= 0.0) return false;
    const double lateral = std::atan2(std::abs(v.dot(left)), f);
    const double vertical = std::atan2(std::abs(v.dot(up)), f);
    return lateral <= 0.5 * cam.horizontal_fov && vertical <= 0.5 * cam.vertical_fov;
}

bool line_of_sight(const Vec3& a, const Vec3& b, std::span<const Obstacle> obstacles) {
    const Vec3 d = b - a;
    for (const auto& box : obstacles) {
        double t0 = 0.0, t1 = 1.0;
        bool miss = false;
        for (int k = 0; k < 3 && !miss; ++k) {
            if (d[k] == 0.0) {
                if (a[k] < box.min_corner[k] || a[k] > box.max_corner[k]) miss = true;
                continue;
            }
            double ta = (box.min_corner[k] - a[k]) / d[k];
            double tb = (box.max_corner[k] - a[k]) / d[k];
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
            t1 = std::min(t1, tb);
            if (t0 > t1) miss = true;
        }
        if (miss || t1 <= t0) continue;
        // The closed intersection is [t0, t1]; the segment meets the open box
        // iff the middle of that interval is strictly interior.
        const Vec3 mid = a + 0.5 * (t0 + t1) * d;
        if ((mid.array() > box.min_corner.array()).all() && (mid.array() < box.max_corner.array()).all())
            return false;
    }
    return true;
}

}  // namespace swarmpos
