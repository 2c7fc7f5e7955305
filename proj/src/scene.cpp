#include "o2i/scene.hpp"

#include <cmath>

#include "o2i/errors.hpp"

namespace o2i {

namespace {

void check_material(const WallMaterial& m, const std::string& where) {
    if (!(m.t_eff > 0.0) || m.t_eff > 1.0) {
        throw DomainError(where + ": t_eff must be in (0, 1]");
    }
    if (m.glass_fraction < 0.0 || m.glass_fraction > 1.0) {
        throw DomainError(where + ": glass_fraction must be in [0, 1]");
    }
}

} // namespace

Building make_building(std::string name, std::vector<Vec2> footprint, double height,
                       std::vector<WallMaterial> materials) {
    if (footprint.size() < 3) {
        throw DomainError("building '" + name + "': footprint needs at least 3 vertices");
    }
    if (!polygon_is_simple(footprint)) {
        throw DomainError("building '" + name + "': footprint must be a simple polygon");
    }
    if (polygon_signed_area2(footprint) <= 0.0) {
        throw DomainError("building '" + name + "': footprint vertices must be counter-clockwise");
    }
    if (!(height > 0.0)) {
        throw DomainError("building '" + name + "': height must be > 0");
    }
    if (materials.size() != footprint.size()) {
        throw DomainError("building '" + name + "': need one wall material per footprint edge");
    }

    Building b;
    b.name = std::move(name);
    b.height = height;
    b.footprint = std::move(footprint);
    const std::size_t n = b.footprint.size();
    b.walls.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        check_material(materials[i], "building '" + b.name + "' wall " + std::to_string(i));
        const Vec2 p = b.footprint[i];
        const Vec2 q = b.footprint[(i + 1) % n];
        const Vec2 d = q - p;
        const double len = norm(d);
        // interior lies to the left of a CCW edge, so rotating the edge
        // direction by -90 degrees gives the outward normal
        Wall w;
        w.a = p;
        w.b = q;
        w.outward_normal = {d.y / len, -d.x / len};
        w.material = std::move(materials[i]);
        b.walls.push_back(std::move(w));
    }
    return b;
}

void validate_scene(const Scene& scene) {
    for (const Building& b : scene.buildings) {
        if (b.footprint.size() < 3 || !polygon_is_simple(b.footprint)) {
            throw DomainError("building '" + b.name + "': footprint must be a simple polygon");
        }
        if (polygon_signed_area2(b.footprint) <= 0.0) {
            throw DomainError("building '" + b.name + "': footprint must be counter-clockwise");
        }
        if (!(b.height > 0.0)) {
            throw DomainError("building '" + b.name + "': height must be > 0");
        }
        if (b.walls.size() != b.footprint.size()) {
            throw DomainError("building '" + b.name + "': walls must match footprint edges 1:1");
        }
        for (std::size_t i = 0; i < b.walls.size(); ++i) {
            const Wall& w = b.walls[i];
            const std::string where = "building '" + b.name + "' wall " + std::to_string(i);
            if (std::abs(norm(w.outward_normal) - 1.0) > 1e-12) {
                throw DomainError(where + ": outward_normal must be unit length");
            }
            if (std::abs(dot(w.outward_normal, w.b - w.a)) > 1e-9 * norm(w.b - w.a)) {
                throw DomainError(where + ": outward_normal must be perpendicular to the wall");
            }
            check_material(w.material, where);
        }
    }
    for (const TxSite& tx : scene.tx_sites) {
        if (!(tx.position.z > 0.0)) {
            throw DomainError("tx site '" + tx.label + "': height must be > 0");
        }
    }
}

int building_containing(const Scene& scene, Vec2 p) {
    for (std::size_t i = 0; i < scene.buildings.size(); ++i) {
        if (point_in_polygon_or_boundary(scene.buildings[i].footprint, p)) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

Terminal make_terminal(const Scene& scene, Vec3 position) {
    const int host = building_containing(scene, position.xy());
    if (host < 0) {
        throw GeometryError("terminal outside all buildings");
    }
    return Terminal{position, host};
}

const TxSite* find_tx(const Scene& scene, const std::string& label) {
    for (const TxSite& tx : scene.tx_sites) {
        if (tx.label == label) {
            return &tx;
        }
    }
    return nullptr;
}

const Wall& wall_at(const Scene& scene, WallRef ref) {
    return scene.buildings.at(static_cast<std::size_t>(ref.building))
        .walls.at(static_cast<std::size_t>(ref.wall));
}

} // namespace o2i
