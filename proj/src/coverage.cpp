#include "o2i/coverage.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "o2i/errors.hpp"
#include "o2i/scene_io.hpp"

namespace o2i {

namespace {

GridCell evaluate_cell(const Scene& scene, const TxSite& tx, Vec3 pos,
                       const PropagationConstants& consts, const LinkBudget& budget) {
    GridCell cell;
    const int host = building_containing(scene, pos.xy());
    if (host < 0) {
        return cell; // outdoors
    }
    cell.indoors = true;
    Terminal term;
    term.position = pos;
    term.host_building = host;
    const PathGainBreakdown bd = oi_path_gain(scene, tx, term, consts);
    cell.path_gain_db = bd.total_db;
    cell.snr_db = snr_db(bd.total_db, budget);
    if (!bd.terms.empty()) {
        const auto it =
            std::max_element(bd.terms.begin(), bd.terms.end(),
                             [](const TermGain& a, const TermGain& b) {
                                 return a.gain_linear < b.gain_linear;
                             });
        cell.dominant = it->path.kind;
        cell.has_dominant = true;
    }
    return cell;
}

} // namespace

CoverageGrid compute_coverage_grid(const Scene& scene, const TxSite& tx, Vec2 origin,
                                   double spacing, int nx, int ny, double terminal_z,
                                   const PropagationConstants& consts, const LinkBudget& budget,
                                   int workers) {
    if (spacing <= 0.0) {
        throw DomainError("compute_coverage_grid: spacing must be positive");
    }
    if (nx <= 0 || ny <= 0) {
        throw DomainError("compute_coverage_grid: grid dimensions must be positive");
    }
    CoverageGrid grid;
    grid.origin = origin;
    grid.spacing = spacing;
    grid.nx = nx;
    grid.ny = ny;
    grid.terminal_z = terminal_z;
    grid.values.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));

    const std::size_t total = grid.values.size();
    const auto run_span = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const int ix = static_cast<int>(i) % nx;
            const int iy = static_cast<int>(i) / nx;
            const Vec3 pos{origin.x + ix * spacing, origin.y + iy * spacing, terminal_z};
            grid.values[i] = evaluate_cell(scene, tx, pos, consts, budget);
        }
    };

    const int n_workers = std::clamp(workers, 1, 256);
    if (n_workers == 1 || total < 2) {
        run_span(0, total);
        return grid;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    const std::size_t chunk = (total + n_workers - 1) / static_cast<std::size_t>(n_workers);
    for (int w = 0; w < n_workers; ++w) {
        const std::size_t begin = std::min(total, static_cast<std::size_t>(w) * chunk);
        const std::size_t end = std::min(total, begin + chunk);
        if (begin < end) {
            pool.emplace_back(run_span, begin, end);
        }
    }
    for (auto& t : pool) {
        t.join();
    }
    return grid;
}

void write_coverage_csv(std::ostream& out, const CoverageGrid& grid) {
    out << "x,y,path_gain_db,snr_db,dominant\n";
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const GridCell& cell = grid.values[static_cast<std::size_t>(iy) * grid.nx + ix];
            out << format_fixed(grid.origin.x + ix * grid.spacing) << ','
                << format_fixed(grid.origin.y + iy * grid.spacing) << ',';
            if (!cell.indoors) {
                out << "NA,NA,NA\n";
            } else {
                out << format_fixed(cell.path_gain_db) << ',' << format_fixed(cell.snr_db) << ','
                    << (cell.has_dominant ? to_string(cell.dominant) : "none") << "\n";
            }
        }
    }
}

} // namespace o2i
