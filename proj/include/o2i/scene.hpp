#ifndef O2I_SCENE_HPP
#define O2I_SCENE_HPP

#include <optional>
#include <string>
#include <vector>

#include "o2i/geom2d.hpp"

namespace o2i {

/// Exterior-wall composition. t_eff is the linear power transmission
/// coefficient of the wall as a whole (glass + opaque fraction combined).
struct WallMaterial {
    double t_eff = 2.5e-5;
    double glass_fraction = 0.3;
    std::string label;
};

/// One exterior wall: a footprint edge with its outward unit normal.
struct Wall {
    Vec2 a;
    Vec2 b;
    Vec2 outward_normal;
    WallMaterial material;

    Vec2 midpoint() const { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
};

/// 2.5-D building: plan-view footprint plus a uniform wall height.
/// Walls correspond 1:1 with footprint edges (wall i spans vertex i -> i+1).
struct Building {
    std::string name;
    std::vector<Vec2> footprint; // counter-clockwise
    double height = 0.0;         // m
    std::vector<Wall> walls;
};

/// Rooftop transmitter. position.z is the antenna height above ground.
struct TxSite {
    Vec3 position;
    std::string label;
};

/// Indoor receive point, bound to the building that contains it.
struct Terminal {
    Vec3 position;
    int host_building = -1; // index into Scene::buildings
};

/// The world every prediction reads. Lengths are meters throughout.
struct Scene {
    std::vector<Building> buildings;
    std::vector<TxSite> tx_sites;
};

/// Index pair identifying a wall inside a scene. (-1,-1) means "none".
struct WallRef {
    int building = -1;
    int wall = -1;

    bool valid() const { return building >= 0 && wall >= 0; }
    friend bool operator==(WallRef lhs, WallRef rhs) {
        return lhs.building == rhs.building && lhs.wall == rhs.wall;
    }
};

/// Builds walls from footprint edges and validates the polygon.
/// materials must have one entry per footprint edge.
/// Throws DomainError on a degenerate, self-intersecting, or clockwise footprint.
Building make_building(std::string name, std::vector<Vec2> footprint, double height,
                       std::vector<WallMaterial> materials);

/// Full invariant check over a hand-assembled scene (heights, normals, polygons,
/// material ranges). Throws DomainError naming the first violation.
void validate_scene(const Scene& scene);

/// Index of the first building whose footprint contains p (boundary included),
/// or -1 when p is outdoors.
int building_containing(const Scene& scene, Vec2 p);

/// Binds a terminal position to its host building.
/// Throws GeometryError when the position is outside every footprint.
Terminal make_terminal(const Scene& scene, Vec3 position);

/// Tx site lookup by label; nullptr when absent.
const TxSite* find_tx(const Scene& scene, const std::string& label);

const Wall& wall_at(const Scene& scene, WallRef ref);

} // namespace o2i

#endif
