#ifndef O2I_COVERAGE_HPP
#define O2I_COVERAGE_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "o2i/linkbudget.hpp"
#include "o2i/propagation.hpp"
#include "o2i/scene.hpp"

namespace o2i {

/// One grid node. Cells outside every building carry no value and render as
/// the NA marker.
struct GridCell {
    bool indoors = false;
    double path_gain_db = 0.0;
    double snr_db = 0.0;
    PathKind dominant = PathKind::direct;
    bool has_dominant = false; // false when no admissible path reaches the cell
};

/// Row-major field of predictions. Node (ix, iy) sits at
/// origin + (ix*spacing, iy*spacing), stored at index iy*nx + ix.
struct CoverageGrid {
    Vec2 origin;
    double spacing = 1.0; // m
    int nx = 0;
    int ny = 0;
    double terminal_z = 1.5; // m
    std::vector<GridCell> values;
};

/// Evaluate the path-gain field of one Tx over a grid. Every cell is an
/// independent pure computation, so the result is identical for any worker
/// count; workers > 1 splits the cells across threads.
CoverageGrid compute_coverage_grid(const Scene& scene, const TxSite& tx, Vec2 origin,
                                   double spacing, int nx, int ny, double terminal_z,
                                   const PropagationConstants& consts, const LinkBudget& budget,
                                   int workers = 1);

/// CSV columns `x,y,path_gain_db,snr_db,dominant` in row-major order, 4
/// fixed decimals, NA for outdoor cells.
void write_coverage_csv(std::ostream& out, const CoverageGrid& grid);

} // namespace o2i

#endif
