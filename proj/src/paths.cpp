#include "o2i/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "o2i/errors.hpp"

namespace o2i {

namespace {

constexpr double kShrink = 1e-6; // m pulled off each segment end before occlusion tests

double clamped_acos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

/// Signed distance of p to the wall plane; positive on the outward side.
double side_of(const Wall& wall, Vec2 p) { return dot(p - wall.a, wall.outward_normal); }

/// Ranked linear gain of a candidate path, up to factors shared by all
/// candidates of its kind (wavelength, 8*pi^2, and the reflected term's
/// wall transmission, which is a scene-wide constant).
double ranked_gain(const PathGeometry& path, const PathRanking& ranking) {
    const double cosphi = std::cos(path.incidence_angle);
    double t_eff = 1.0;
    if (path.kind != PathKind::reflected && path.entry_material) {
        t_eff = path.entry_material->t_eff;
    }
    double range = path.outdoor_range;
    if (path.kind == PathKind::side_wall) {
        range += path.indoor_depth;
    }
    double refl = 1.0;
    if (path.grazing_angle) {
        refl = 0.3 + 0.7 * std::exp(-(4.0 / ranking.n2) * *path.grazing_angle);
    }
    return t_eff * cosphi * cosphi * refl * std::exp(-ranking.kappa_in * path.indoor_depth) /
           (range * range);
}

} // namespace

const char* to_string(PathKind kind) {
    switch (kind) {
    case PathKind::direct:
        return "direct";
    case PathKind::side_wall:
        return "side";
    case PathKind::reflected:
        return "reflected";
    }
    return "?";
}

EntryPoint wall_entry_point(const Wall& wall, const Terminal& terminal) {
    const Vec2 t = terminal.position.xy();
    const auto proj = project_to_segment(t, wall.a, wall.b);
    return {proj.point, norm(t - proj.point)};
}

double incidence_angle(const TxSite& tx, const Vec3& entry, const Wall& wall) {
    const Vec3 v = tx.position - entry;
    const double d_s = v.x * wall.outward_normal.x + v.y * wall.outward_normal.y;
    if (d_s <= 0.0) {
        throw DomainError("incidence_angle: tx is on the interior side of the wall plane");
    }
    const double r = norm(v);
    return clamped_acos(d_s / r);
}

bool segment_blocked(const Scene& scene, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len = norm(d);
    Vec2 sa = a;
    Vec2 sb = b;
    if (len > 2.0 * kShrink) {
        const Vec2 u = (1.0 / len) * d;
        sa = a + kShrink * u;
        sb = b - kShrink * u;
    }
    const Vec2 mid = {0.5 * (sa.x + sb.x), 0.5 * (sa.y + sb.y)};
    for (const Building& bld : scene.buildings) {
        if (point_in_polygon(bld.footprint, a) || point_in_polygon(bld.footprint, b)) {
            continue;
        }
        bool hit = false;
        const std::size_t n = bld.footprint.size();
        for (std::size_t i = 0; i < n && !hit; ++i) {
            hit = segments_properly_intersect(sa, sb, bld.footprint[i],
                                              bld.footprint[(i + 1) % n]);
        }
        if (!hit) {
            hit = point_in_polygon(bld.footprint, mid);
        }
        if (hit) {
            return true;
        }
    }
    return false;
}

bool is_wall_illuminated(const TxSite& tx, const Wall& wall, const Scene& scene, Vec2 point) {
    if (side_of(wall, tx.position.xy()) <= 0.0) {
        return false;
    }
    return !segment_blocked(scene, tx.position.xy(), point);
}

bool is_wall_illuminated(const TxSite& tx, const Wall& wall, const Scene& scene) {
    return is_wall_illuminated(tx, wall, scene, wall.midpoint());
}

std::optional<PathGeometry> reflection_path(const Scene& scene, const TxSite& tx,
                                            WallRef reflector_ref, WallRef entry_ref,
                                            const Terminal& terminal) {
    if (reflector_ref == entry_ref) {
        throw DomainError("reflection_path: reflector and entry wall are the same wall");
    }
    const Wall& reflector = wall_at(scene, reflector_ref);
    const Wall& entry_wall = wall_at(scene, entry_ref);

    const Vec2 tx2 = tx.position.xy();
    const double d_refl = side_of(reflector, tx2);
    if (d_refl <= 0.0) {
        return std::nullopt; // tx behind the reflector facade
    }
    const Vec2 image2 = tx2 - (2.0 * d_refl) * reflector.outward_normal;

    const auto [entry2, depth] = wall_entry_point(entry_wall, terminal);
    // ray must arrive at the entry wall from its outward side
    const double image_side = dot(image2 - entry2, entry_wall.outward_normal);
    if (image_side <= 0.0) {
        return std::nullopt;
    }

    // fold point: image->entry crossing of the reflector's line
    const Vec2 seg = entry2 - image2;
    const double den = dot(seg, reflector.outward_normal);
    if (den == 0.0) {
        return std::nullopt; // parallel, no fold
    }
    const double t = dot(reflector.a - image2, reflector.outward_normal) / den;
    if (t <= 1e-9 || t >= 1.0 - 1e-9) {
        return std::nullopt;
    }
    const Vec2 rp = image2 + t * seg;
    const auto on_seg = project_to_segment(rp, reflector.a, reflector.b);
    if (norm(rp - on_seg.point) > 1e-9) {
        return std::nullopt; // fold lands off the facade
    }

    if (segment_blocked(scene, tx2, rp) || segment_blocked(scene, rp, entry2)) {
        return std::nullopt;
    }

    const double rx_z = terminal.position.z;
    const Vec3 entry3{entry2.x, entry2.y, rx_z};
    const Vec3 image3{image2.x, image2.y, tx.position.z};
    const double r_r = norm(image3 - entry3);

    // altitude varies linearly along the unfolded segment, so the incoming
    // leg at the fold is the first t of the straight image->entry run
    const Vec3 incoming{rp.x - tx2.x, rp.y - tx2.y, t * (rx_z - tx.position.z)};
    const double sin_g =
        std::abs(incoming.x * reflector.outward_normal.x + incoming.y * reflector.outward_normal.y) /
        norm(incoming);
    const double grazing = std::asin(std::clamp(sin_g, 0.0, 1.0));

    PathGeometry path;
    path.kind = PathKind::reflected;
    path.outdoor_range = r_r;
    path.incidence_angle = clamped_acos(image_side / r_r);
    path.indoor_depth = depth;
    path.entry_wall = entry_ref;
    path.entry_point = entry2;
    path.entry_material = entry_wall.material;
    path.grazing_angle = grazing;
    path.reflection_point = rp;
    path.reflector = reflector_ref;
    return path;
}

std::vector<PathGeometry> enumerate_paths(const Scene& scene, const TxSite& tx,
                                          const Terminal& terminal,
                                          const PathRanking& ranking) {
    std::vector<PathGeometry> result;
    if (terminal.host_building < 0 ||
        terminal.host_building >= static_cast<int>(scene.buildings.size())) {
        return result;
    }
    const int host = terminal.host_building;
    const Building& host_b = scene.buildings[static_cast<std::size_t>(host)];
    const double rx_z = terminal.position.z;

    // illuminated host walls, each taken at its own entry point
    struct Candidate {
        WallRef ref;
        EntryPoint entry;
        PathGeometry path;
    };
    std::vector<Candidate> lit;
    for (std::size_t w = 0; w < host_b.walls.size(); ++w) {
        const Wall& wall = host_b.walls[w];
        const EntryPoint ep = wall_entry_point(wall, terminal);
        if (!is_wall_illuminated(tx, wall, scene, ep.point)) {
            continue;
        }
        PathGeometry p;
        p.kind = PathKind::direct;
        p.outdoor_range = norm(tx.position - Vec3{ep.point.x, ep.point.y, rx_z});
        p.incidence_angle = incidence_angle(tx, {ep.point.x, ep.point.y, rx_z}, wall);
        p.indoor_depth = ep.indoor_depth;
        p.entry_wall = {host, static_cast<int>(w)};
        p.entry_point = ep.point;
        p.entry_material = wall.material;
        lit.push_back({p.entry_wall, ep, p});
    }

    int direct_idx = -1;
    if (!lit.empty()) {
        direct_idx = 0;
        for (std::size_t i = 1; i < lit.size(); ++i) {
            if (lit[i].entry.indoor_depth < lit[direct_idx].entry.indoor_depth) {
                direct_idx = static_cast<int>(i);
            }
        }
        result.push_back(lit[static_cast<std::size_t>(direct_idx)].path);
    }

    // side wall: best ranked gain among the remaining illuminated walls
    int side_idx = -1;
    double side_best = -1.0;
    for (std::size_t i = 0; i < lit.size(); ++i) {
        if (static_cast<int>(i) == direct_idx) {
            continue;
        }
        PathGeometry p = lit[i].path;
        p.kind = PathKind::side_wall;
        const double g = ranked_gain(p, ranking);
        if (g > side_best) {
            side_best = g;
            side_idx = static_cast<int>(i);
        }
    }
    if (side_idx >= 0) {
        PathGeometry p = lit[static_cast<std::size_t>(side_idx)].path;
        p.kind = PathKind::side_wall;
        result.push_back(p);
    }

    // reflected: best specular path over all other buildings' facades
    std::optional<PathGeometry> best_refl;
    double refl_best = -1.0;
    for (std::size_t b = 0; b < scene.buildings.size(); ++b) {
        if (static_cast<int>(b) == host) {
            continue;
        }
        for (std::size_t rw = 0; rw < scene.buildings[b].walls.size(); ++rw) {
            for (std::size_t ew = 0; ew < host_b.walls.size(); ++ew) {
                auto path = reflection_path(scene, tx, {static_cast<int>(b), static_cast<int>(rw)},
                                            {host, static_cast<int>(ew)}, terminal);
                if (!path) {
                    continue;
                }
                const double g = ranked_gain(*path, ranking);
                if (g > refl_best) {
                    refl_best = g;
                    best_refl = std::move(path);
                }
            }
        }
    }
    if (best_refl) {
        result.push_back(std::move(*best_refl));
    }
    return result;
}

} // namespace o2i
