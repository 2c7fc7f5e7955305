// Acceptance gate: one check per shipped guarantee, one [PASS]/[FAIL] line
// each, nonzero exit when any check fails. Expected values are either
// published reference numbers or independent scalar recomputations done here
// with bare <cmath> calls, never through the library under test.
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "o2i/calibration.hpp"
#include "o2i/cli.hpp"
#include "o2i/errors.hpp"
#include "o2i/linkbudget.hpp"
#include "o2i/propagation.hpp"
#include "o2i/scene_io.hpp"

using namespace o2i;

namespace {

int g_failures = 0;

void report(int index, bool ok, const std::string& label) {
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", index, label.c_str());
    if (!ok) {
        ++g_failures;
    }
}

Building box(std::string name, double x0, double y0, double x1, double y1) {
    const WallMaterial m{2.5e-5, 0.3, ""};
    return make_building(std::move(name), {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, 12.0,
                         {m, m, m, m});
}

// 1. constant glosses: the front-wall transmission and indoor attenuation
// constants match their published dB round-offs.
void criterion_constants() {
    const double wall_db = 10.0 * std::log10(2.5e-5);
    const double indoor_db_per_m = -10.0 * std::log10(std::exp(-0.12));
    const bool ok = std::abs(wall_db - (-46.0)) <= 0.05 &&
                    std::abs(indoor_db_per_m - 0.5) <= 0.03;
    std::ostringstream label;
    label << "constants consistency: wall " << format_fixed(wall_db) << " dB vs -46 dB, indoor "
          << format_fixed(indoor_db_per_m) << " dB/m vs 0.5 dB/m";
    report(1, ok, label.str());
}

// 2. reflection coefficient endpoints and monotonicity.
void criterion_reflection_coefficient() {
    const double n2 = 2.2360679774997896;
    bool ok = reflection_coefficient_sq(0.0, n2) == 1.0;
    double prev = reflection_coefficient_sq(0.0, n2);
    const int steps = 2000;
    for (int i = 1; i <= steps && ok; ++i) {
        const double phi = (3.141592653589793 / 2.0) * i / steps;
        const double r = reflection_coefficient_sq(phi, n2);
        ok = r < prev;
        prev = r;
    }
    const double at_pi2 = reflection_coefficient_sq(3.141592653589793 / 2.0, n2);
    ok = ok && std::abs(at_pi2 - 0.3422) <= 1e-4;
    std::ostringstream label;
    label << "reflection coefficient: R(0)=1 exact, strictly decreasing, R(pi/2)="
          << format_fixed(at_pi2) << " within 1e-4 of 0.3422";
    report(2, ok, label.str());
}

// 3. direct-term oracle against an independent scalar computation.
void criterion_direct_term() {
    // scripted independently of the library: plain formula with <cmath>
    const double pi = 3.141592653589793;
    const double lam = 299792458.0 / 28e9;
    const double independent =
        10.0 * std::log10(lam * lam * 1.0 * 2.5e-5 * std::exp(-0.12 * 6.0) /
                          (8.0 * pi * pi * 30.0 * 30.0));

    PathGeometry path;
    path.kind = PathKind::direct;
    path.outdoor_range = 30.0;
    path.incidence_angle = 0.0;
    path.indoor_depth = 6.0;
    const double lib = to_db(term_gain(path, PropagationConstants{}));

    const bool ok = std::abs(independent - (-137.07)) <= 0.01 && std::abs(lib - independent) <= 1e-9;
    std::ostringstream label;
    label << "direct-term oracle: library " << format_fixed(lib) << " dB vs independent "
          << format_fixed(independent) << " dB vs -137.07 dB";
    report(3, ok, label.str());
}

// 4. geometry identities over randomized configurations.
void criterion_geometry_identities() {
    std::mt19937 rng(424242u);
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    std::uniform_real_distribution<double> pos(0.5, 60.0);
    std::uniform_real_distribution<double> unit(0.05, 0.95);

    bool incidence_ok = true;
    int checked = 0;
    while (checked < 1000) {
        const Vec2 a{coord(rng), coord(rng)};
        const Vec2 b{coord(rng), coord(rng)};
        if (norm(b - a) < 1e-3) {
            continue;
        }
        Wall wall;
        wall.a = a;
        wall.b = b;
        const Vec2 d = b - a;
        wall.outward_normal = (1.0 / norm(d)) * Vec2{d.y, -d.x};
        const Vec2 on_wall = a + unit(rng) * d;
        const Vec3 entry{on_wall.x, on_wall.y, pos(rng)};
        const Vec2 tx2 = on_wall + pos(rng) * wall.outward_normal + unit(rng) * d;
        const TxSite tx{{tx2.x, tx2.y, pos(rng)}, "r"};

        // independent recomputation: angle between the ray and the wall normal
        const Vec3 ray = entry - tx.position;
        const double d_s = dot(Vec2{-ray.x, -ray.y}, wall.outward_normal);
        const double expected = std::acos(std::min(1.0, std::max(-1.0, d_s / norm(ray))));
        if (std::abs(incidence_angle(tx, entry, wall) - expected) > 1e-9) {
            incidence_ok = false;
            break;
        }
        ++checked;
    }

    std::uniform_real_distribution<double> hdist(20.0, 60.0);
    std::uniform_real_distribution<double> xdist(-40.0, 40.0);
    std::uniform_real_distribution<double> zdist(1.0, 30.0);
    std::uniform_real_distribution<double> frac(0.2, 0.8);
    bool reflect_ok = true;
    checked = 0;
    while (checked < 1000) {
        const double wall_y = hdist(rng);
        Scene scene;
        scene.buildings.push_back(box("host", -80, -20, 80, 0));
        scene.buildings.push_back(box("reflector", -200, wall_y, 200, wall_y + 10));
        const TxSite tx{{xdist(rng), frac(rng) * wall_y, zdist(rng)}, "t"};
        const Terminal term = make_terminal(scene, {xdist(rng), -frac(rng) * 15.0, zdist(rng)});
        const auto path = reflection_path(scene, tx, {1, 0}, {0, 2}, term);
        if (!path || !path->reflection_point || !path->grazing_angle) {
            continue;
        }
        const Vec2 rp = *path->reflection_point;
        const Vec3 image{tx.position.x, 2.0 * wall_y - tx.position.y, tx.position.z};
        const Vec3 entry{path->entry_point.x, path->entry_point.y, term.position.z};
        const double t = (rp.y - image.y) / (entry.y - image.y);
        const Vec3 rp3{rp.x, rp.y, image.z + t * (entry.z - image.z)};

        const double legs = norm(rp3 - tx.position) + norm(entry - rp3);
        const Vec3 in3 = rp3 - tx.position;
        const Vec3 out3 = entry - rp3;
        const double angle_in = std::asin(std::abs(in3.y) / norm(in3));
        const double angle_out = std::asin(std::abs(out3.y) / norm(out3));
        if (std::abs(path->outdoor_range - legs) > 1e-9 ||
            std::abs(angle_in - angle_out) > 1e-9) {
            reflect_ok = false;
            break;
        }
        ++checked;
    }

    report(4, incidence_ok && reflect_ok,
           "geometry identities: arccos(d_s/r) incidence and image-method "
           "angle-in=angle-out / unfolded length over 1000 randomized configurations each");
}

// 5. 3GPP through-wall value at 28 GHz / 30% glass.
void criterion_through_wall() {
    const double tw = gpp_o2i_tw_loss(28e9, 0.3);
    // the TR 38.901 low-loss composition gives 41.63 dB here; a commonly quoted
    // rounded value for this wall mix is 43 dB -- accept both within the latitude
    const bool ok = std::abs(tw - 41.6) <= 0.1 && std::abs(tw - 43.0) <= 1.5;
    std::ostringstream label;
    label << "3GPP through-wall at 28 GHz / 30% glass: " << format_fixed(tw)
          << " dB within 0.1 of 41.6 and within 1.5 of 43";
    report(5, ok, label.str());
}

// 6. link budget: noise floor, SNR offset, canonical coverage ranges.
void criterion_link_budget() {
    const LinkBudget budget;
    const double nf = noise_floor_dbm(budget.bandwidth_hz, budget.noise_figure_db);
    bool ok = nf == -85.0;
    for (double pg : {-100.0, -137.07058916946423, -144.0, -160.0}) {
        ok = ok && (snr_db(pg, budget) - pg == 152.0);
    }

    const PropagationConstants consts;
    const CoverageResult normal =
        coverage_range(normal_profile(consts, 6.0), budget, 1.0, 1000.0);
    const CoverageResult oblique =
        coverage_range(standoff_profile(consts, 6.0, 20.0), budget, 20.0, 1000.0);
    ok = ok && std::abs(normal.range_m - 66.6) <= 0.1 && !normal.unbounded_in_window;
    ok = ok && std::abs(oblique.range_m - 36.5) <= 0.1 && !oblique.unbounded_in_window;

    std::ostringstream label;
    label << "link budget: noise floor " << format_fixed(nf)
          << " dBm, SNR = PG + 152 exactly, coverage " << format_fixed(normal.range_m)
          << " m (66.6 +/- 0.1) and " << format_fixed(oblique.range_m) << " m (36.5 +/- 0.1)";
    report(6, ok, label.str());
}

// 7. fit recovery, OLS residual identity and the exact +/-3 dB RMSE.
void criterion_fit_recovery() {
    std::vector<MeasurementRecord> records;
    for (double r = 5.0; r <= 250.0; r += 5.0) {
        MeasurementRecord rec;
        rec.range_m = r;
        rec.path_gain_db = -(61.4 + 10.0 * 2.0 * std::log10(r));
        records.push_back(rec);
    }
    const FitResult fit = fit_slope_intercept(records);
    bool ok = std::abs(fit.exponent_n - 2.0) <= 1e-6 && std::abs(fit.intercept_1m_db - 61.4) <= 1e-6;

    // replaying the fitted line must reproduce the training RMSE
    std::mt19937 rng(7u);
    std::normal_distribution<double> noise(0.0, 2.0);
    auto noisy = records;
    for (auto& rec : noisy) {
        rec.path_gain_db += noise(rng);
    }
    const FitResult nf = fit_slope_intercept(noisy);
    const SlopeInterceptModel model = nf.model();
    const double replay = model_rmse(noisy, [&](const MeasurementRecord& r) {
        return slope_intercept_pg(model, r.range_m);
    });
    ok = ok && std::abs(replay - nf.rmse_db) <= 1e-9;

    // alternating +/-3 dB residuals against the generating line score exactly 3
    auto alternating = records;
    for (std::size_t i = 0; i < alternating.size(); ++i) {
        alternating[i].path_gain_db += (i % 2 == 0) ? 3.0 : -3.0;
    }
    const SlopeInterceptModel truth{2.0, 61.4};
    const double rmse3 = model_rmse(alternating, [&](const MeasurementRecord& r) {
        return slope_intercept_pg(truth, r.range_m);
    });
    ok = ok && rmse3 == 3.0;

    std::ostringstream label;
    label << "fit recovery: (n, intercept) to 1e-6, residual identity to 1e-9, "
          << "alternating +/-3 dB RMSE " << format_fixed(rmse3) << " == 3.0";
    report(7, ok, label.str());
}

// 8. self-consistency: records synthesized from the three-path model replay
// to zero RMSE while the 3GPP baseline stays a poor fit.
void criterion_self_consistency() {
    const Scene scene =
        load_scene(std::string(O2I_SOURCE_DIR) + "/data/scenes/street_canyon.json");
    const PropagationConstants consts;
    const TxSite& tx = *find_tx(scene, "tx3");

    std::vector<MeasurementRecord> records;
    for (double x = 2.0; x <= 58.0; x += 2.0) {
        const Vec3 pos{x, 6.0, 1.5};
        const Terminal term = make_terminal(scene, pos);
        MeasurementRecord rec;
        rec.subset = "tx3-aisle";
        rec.range_m = norm(tx.position - pos);
        rec.path_gain_db = oi_path_gain(scene, tx, term, consts).total_db;
        rec.position = pos;
        rec.tx_label = tx.label;
        records.push_back(rec);
    }

    GppO2iParams gpp;
    gpp.los = true;
    const CompareTable table = compare_models(records, scene, consts, gpp);
    bool ok = table.rows.size() == 1 && table.skipped.empty();
    double theory = -1.0, gpp_rmse = -1.0;
    if (ok && table.rows[0].theory_rmse_db && table.rows[0].gpp_rmse_db) {
        theory = *table.rows[0].theory_rmse_db;
        gpp_rmse = *table.rows[0].gpp_rmse_db;
        ok = theory == 0.0 && gpp_rmse > 5.0;
    } else {
        ok = false;
    }
    std::ostringstream label;
    label << "self-consistency: theory RMSE " << format_fixed(theory)
          << " == 0.0, 3GPP RMSE " << format_fixed(gpp_rmse) << " > 5 dB";
    report(8, ok, label.str());
}

// 9. byte-identical coverage grids across repeat and parallel runs.
void criterion_determinism() {
    const std::string scene_path =
        std::string(O2I_SOURCE_DIR) + "/data/scenes/street_canyon.json";
    auto run_grid = [&](const std::string& workers) {
        std::ostringstream out, err;
        const std::vector<std::string> args = {
            "coverage", scene_path, "--tx",  "tx3",  "--origin", "0",  "-26",
            "--spacing", "0.6",     "--nx",  "100",  "--ny",     "100", "--z",
            "1.5",       "--workers", workers};
        const int code = run_cli(args, out, err);
        return std::pair<int, std::string>(code, out.str());
    };
    const auto first = run_grid("1");
    const auto second = run_grid("1");
    const auto parallel = run_grid("4");
    const bool ok = first.first == 0 && second.first == 0 && parallel.first == 0 &&
                    first.second == second.second && first.second == parallel.second &&
                    !first.second.empty();
    std::ostringstream label;
    label << "determinism: 100x100 grid byte-identical across repeat runs and "
          << "1-vs-4 worker runs (" << first.second.size() << " bytes)";
    report(9, ok, label.str());
}

} // namespace

int main() {
    criterion_constants();
    criterion_reflection_coefficient();
    criterion_direct_term();
    criterion_geometry_identities();
    criterion_through_wall();
    criterion_link_budget();
    criterion_fit_recovery();
    criterion_self_consistency();
    criterion_determinism();

    if (g_failures > 0) {
        std::printf("%d acceptance criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
}
