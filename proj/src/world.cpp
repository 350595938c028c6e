#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "swarmpos/geometry.hpp"
#include "swarmpos/rng.hpp"

namespace swarmpos {

namespace {

constexpr double kRoadMargin = 6.0;  // building setback from a road centerline

ObjectClass draw_class(Rng& rng) {
    const double u = rng.uniform();
    if (u < 0.7) return ObjectClass::car;
    if (u < 0.9) return ObjectClass::pedestrian;
    return ObjectClass::truck;
}

bool inside_any_footprint(const Vec2& p, const std::vector<Obstacle>& obstacles) {
    return std::any_of(obstacles.begin(), obstacles.end(), [&](const Obstacle& o) {
        return p.x() >= o.min_corner.x() && p.x() <= o.max_corner.x() && p.y() >= o.min_corner.y() &&
               p.y() <= o.max_corner.y();
    });
}

std::vector<double> grid_lines(double lo, double hi, double spacing, double phase) {
    std::vector<double> out;
    for (double v = lo + phase; v <= hi; v += spacing) out.push_back(v);
    return out;
}

void place_grid_buildings(const WorldSpec& spec, const BoundingBox2& box, const std::vector<double>& xs,
                          const std::vector<double>& ys, Rng& rng, World& world) {
    struct Block {
        double x0, x1, y0, y1;
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            Block b{xs[i] + kRoadMargin, xs[i + 1] - kRoadMargin, ys[j] + kRoadMargin, ys[j + 1] - kRoadMargin};
            if (b.x1 <= b.x0 || b.y1 <= b.y0) continue;
            const Vec2 c(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
            if (c.x() < box.min.x() || c.x() > box.max.x() || c.y() < box.min.y() || c.y() > box.max.y()) continue;
            blocks.push_back(b);
        }
    // Fisher-Yates with the world stream
    for (std::size_t i = blocks.size(); i > 1; --i) std::swap(blocks[i - 1], blocks[rng.below(i)]);
    const std::size_t n = std::min(spec.n_obstacles, blocks.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Block& b = blocks[i];
        const double w = (b.x1 - b.x0) * rng.uniform(0.5, 1.0);
        const double h = (b.y1 - b.y0) * rng.uniform(0.5, 1.0);
        const double x0 = rng.uniform(b.x0, b.x1 - w);
        const double y0 = rng.uniform(b.y0, b.y1 - h);
        const double z = rng.uniform(spec.building_min_height, spec.building_max_height);
        world.obstacles.push_back({Vec3(x0, y0, 0.0), Vec3(x0 + w, y0 + h, z)});
    }
}

void place_uniform_buildings(const WorldSpec& spec, const BoundingBox2& box, Rng& rng, World& world) {
    for (std::size_t i = 0; i < spec.n_obstacles; ++i) {
        const double w = rng.uniform(8.0, 25.0);
        const double h = rng.uniform(8.0, 25.0);
        const double x0 = rng.uniform(box.min.x(), box.max.x() - w);
        const double y0 = rng.uniform(box.min.y(), box.max.y() - h);
        const double z = rng.uniform(spec.building_min_height, spec.building_max_height);
        world.obstacles.push_back({Vec3(x0, y0, 0.0), Vec3(x0 + w, y0 + h, z)});
    }
}

}  // namespace

World generate_world(const WorldSpec& spec, std::uint64_t seed) {
    if (!(spec.road_spacing > 0.0)) throw ConfigError("road_spacing must be > 0");
    if (spec.road_jitter < 0.0) throw ConfigError("road_jitter must be >= 0");
    if (spec.crossroad_fraction < 0.0 || spec.crossroad_fraction > 1.0)
        throw ConfigError("crossroad_fraction must lie in [0, 1]");
    if (!(spec.crossroad_scale > 0.0)) throw ConfigError("crossroad_scale must be > 0");
    if (spec.building_max_height < spec.building_min_height || spec.building_min_height < 0.0)
        throw ConfigError("invalid building height range");

    World world{spec.region, {}, {}, {}, {}, seed};
    Rng rng(seed, StreamPurpose::world);
    const BoundingBox2 box = spec.region.bounding_box();

    std::vector<double> xs, ys;
    std::vector<double> busy;  // cumulative crossroad weights
    if (spec.layout == WorldLayout::road_grid) {
        const double px = rng.uniform(0.0, spec.road_spacing);
        const double py = rng.uniform(0.0, spec.road_spacing);
        // extend one spacing beyond the box so border blocks exist
        xs = grid_lines(box.min.x() - spec.road_spacing, box.max.x() + spec.road_spacing, spec.road_spacing, px);
        ys = grid_lines(box.min.y() - spec.road_spacing, box.max.y() + spec.road_spacing, spec.road_spacing, py);
        for (double x : xs)
            if (x >= box.min.x() && x <= box.max.x())
                world.roads.push_back({Vec2(x, box.min.y()), Vec2(x, box.max.y())});
        for (double y : ys)
            if (y >= box.min.y() && y <= box.max.y())
                world.roads.push_back({Vec2(box.min.x(), y), Vec2(box.max.x(), y)});
        for (double x : xs)
            for (double y : ys)
                if (region_contains(world.region, Vec2(x, y))) world.crossroads.emplace_back(x, y);
        // busyness of each crossroad; a few carry most of the queued traffic
        for (std::size_t c = 0; c < world.crossroads.size(); ++c)
            busy.push_back((busy.empty() ? 0.0 : busy.back()) - std::log(1.0 - rng.uniform()));
        place_grid_buildings(spec, box, xs, ys, rng, world);
    } else {
        place_uniform_buildings(spec, box, rng, world);
    }

    std::vector<double> cumulative;
    for (const auto& r : world.roads)
        cumulative.push_back((cumulative.empty() ? 0.0 : cumulative.back()) + (r.b - r.a).norm());

    const std::size_t max_attempts = 1000 * std::max<std::size_t>(spec.n_objects, 1);
    std::size_t attempts = 0;
    while (world.objects.size() < spec.n_objects) {
        if (++attempts > max_attempts) throw ConfigError("could not place objects inside the region");
        Vec2 p;
        const bool queued = rng.bernoulli(spec.crossroad_fraction);
        if (spec.layout == WorldLayout::road_grid && queued && !world.crossroads.empty()) {
            const double u = rng.uniform(0.0, busy.back());
            const auto ci = static_cast<std::size_t>(std::upper_bound(busy.begin(), busy.end(), u) - busy.begin());
            const Vec2& cross = world.crossroads[std::min(ci, world.crossroads.size() - 1)];
            static constexpr std::array<std::array<double, 2>, 4> arms{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
            const auto& arm = arms[rng.below(4)];
            const double along = std::min(-spec.crossroad_scale * std::log(1.0 - rng.uniform()), 0.5 * spec.road_spacing);
            p = cross + along * Vec2(arm[0], arm[1]);
            p.x() += rng.normal(0.0, spec.road_jitter);
            p.y() += rng.normal(0.0, spec.road_jitter);
        } else if (spec.layout == WorldLayout::road_grid && !world.roads.empty()) {
            const double u = rng.uniform(0.0, cumulative.back());
            const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            const auto& road = world.roads[std::min<std::size_t>(it - cumulative.begin(), world.roads.size() - 1)];
            const double t = rng.uniform();
            p = road.a + t * (road.b - road.a);
            p.x() += rng.normal(0.0, spec.road_jitter);
            p.y() += rng.normal(0.0, spec.road_jitter);
        } else {
            p = Vec2(rng.uniform(box.min.x(), box.max.x()), rng.uniform(box.min.y(), box.max.y()));
        }
        const ObjectClass cls = draw_class(rng);
        const double quality = rng.uniform(0.6, 1.0);
        if (!region_contains(world.region, p) || inside_any_footprint(p, world.obstacles)) continue;
        world.objects.push_back(
            {static_cast<std::uint32_t>(world.objects.size()), cls, Vec3(p.x(), p.y(), 0.0), quality});
    }
    return world;
}

}  // namespace swarmpos
