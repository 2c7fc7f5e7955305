#ifndef O2I_PATHS_HPP
#define O2I_PATHS_HPP

#include <optional>
#include <string>
#include <vector>

#include "o2i/scene.hpp"

namespace o2i {

enum class PathKind { direct, side_wall, reflected };

const char* to_string(PathKind kind);

/// One admissible ray-optics path from a Tx into a building.
///
/// outdoor_range is r for direct, r1 for side-wall and the unfolded image-to-entry
/// length r_r for reflected paths. incidence_angle is measured from the entry
/// wall's normal; grazing_angle (reflected only) from the reflector's plane.
struct PathGeometry {
    PathKind kind = PathKind::direct;
    double outdoor_range = 0.0;  // m
    double incidence_angle = 0.0; // rad, in [0, pi/2)
    double indoor_depth = 0.0;    // m, entry point to terminal
    WallRef entry_wall;
    Vec2 entry_point;
    std::optional<WallMaterial> entry_material;
    std::optional<double> grazing_angle;   // rad, reflected only
    std::optional<Vec2> reflection_point;  // reflected only
    WallRef reflector;                     // reflected only
};

/// Nearest point of a wall to the terminal, plus the horizontal distance to it.
struct EntryPoint {
    Vec2 point;
    double indoor_depth; // m
};

/// Perpendicular projection of the terminal's plan position onto the wall's
/// line, clamped to the wall segment.
EntryPoint wall_entry_point(const Wall& wall, const Terminal& terminal);

/// Angle between the incoming ray and the entry wall's (horizontal) normal.
/// entry carries the receive height, so elevation steepens the angle.
/// Satisfies cos(phi) = d_s / r with d_s the Tx's standoff to the wall plane
/// and r the 3-D Tx-to-entry distance.
/// Throws DomainError when the Tx is on the interior side of the wall plane.
double incidence_angle(const TxSite& tx, const Vec3& entry, const Wall& wall);

/// True when a point-to-point segment is blocked by a building footprint.
/// Buildings whose footprint strictly contains an endpoint are exempt, so a
/// rooftop transmitter is never occluded by the building it stands on.
bool segment_blocked(const Scene& scene, Vec2 a, Vec2 b);

/// Back-face test plus 2-D footprint occlusion of the Tx-to-point segment.
bool is_wall_illuminated(const TxSite& tx, const Wall& wall, const Scene& scene, Vec2 point);

/// Same, using the wall midpoint as the target point.
bool is_wall_illuminated(const TxSite& tx, const Wall& wall, const Scene& scene);

/// Term-gain weights used only to rank competing side walls and reflectors.
struct PathRanking {
    double kappa_in = 0.12;              // Nep/m, on power
    double n2 = 2.2360679774997896;      // reflector refraction index
};

/// Specular path via the image method: mirror the Tx across the reflector
/// plane and fold the image-to-entry segment at the reflector.
/// Returns nullopt when the reflection point misses the reflector segment,
/// when either outdoor leg is occluded, or when the entry wall is not hit
/// from the outside. Throws DomainError when reflector and entry coincide.
std::optional<PathGeometry> reflection_path(const Scene& scene, const TxSite& tx,
                                            WallRef reflector_ref, WallRef entry_ref,
                                            const Terminal& terminal);

/// Admissible subset of {direct, side-wall, reflected} for one link.
/// Direct enters the illuminated host wall nearest the terminal, side-wall the
/// remaining illuminated wall with the best ranked gain, reflected the best
/// ranked specular path over all other buildings' facades. At most one path of
/// each kind; the list is empty when ray optics permits nothing.
std::vector<PathGeometry> enumerate_paths(const Scene& scene, const TxSite& tx,
                                          const Terminal& terminal,
                                          const PathRanking& ranking = {});

} // namespace o2i

#endif
