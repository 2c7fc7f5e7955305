#include "o2i/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "o2i/errors.hpp"
#include "o2i/propagation.hpp"

namespace o2i {

namespace {

// TR 38.901 Table 7.4.1-1, UMa LOS, pre-breakpoint branch.
double uma_los_pl1(double f_ghz, double d3d) {
    return 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(f_ghz);
}

// Post-breakpoint branch; d_bp is the effective breakpoint distance.
double uma_los_pl2(double f_ghz, double d3d, double d_bp, double bs_height, double ut_height) {
    const double dh = bs_height - ut_height;
    return 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(f_ghz) -
           9.0 * std::log10(d_bp * d_bp + dh * dh);
}

} // namespace

double slope_intercept_pg(const SlopeInterceptModel& model, double range) {
    if (range <= 0.0) {
        throw DomainError("slope_intercept_pg: range must be positive");
    }
    return -(model.intercept_1m_db + 10.0 * model.exponent_n * std::log10(range));
}

double gpp_uma_basic_pl(double frequency, double d2d, double bs_height, double ut_height,
                        bool los) {
    const double f_ghz = frequency / 1e9;
    if (f_ghz < 0.5 || f_ghz > 100.0) {
        throw RangeError("gpp_uma_basic_pl: frequency " + std::to_string(f_ghz) +
                         " GHz outside [0.5, 100] GHz validity");
    }
    if (d2d < 10.0 || d2d > 5000.0) {
        throw RangeError("gpp_uma_basic_pl: d2d " + std::to_string(d2d) +
                         " m outside [10, 5000] m validity");
    }
    const double dh = bs_height - ut_height;
    const double d3d = std::sqrt(d2d * d2d + dh * dh);
    // effective breakpoint with effective environment height 1 m
    const double d_bp = 4.0 * (bs_height - 1.0) * (ut_height - 1.0) * frequency / kSpeedOfLight;
    const double los_pl = (d2d <= d_bp) ? uma_los_pl1(f_ghz, d3d)
                                        : uma_los_pl2(f_ghz, d3d, d_bp, bs_height, ut_height);
    if (los) {
        return los_pl;
    }
    const double nlos_pl = 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(f_ghz) -
                           0.6 * (ut_height - 1.5);
    return std::max(los_pl, nlos_pl);
}

double gpp_o2i_tw_loss(double frequency, double glass_fraction) {
    const double f_ghz = frequency / 1e9;
    const double l_irr = 23.0 + 0.3 * f_ghz;
    const double l_concrete = 5.0 + 4.0 * f_ghz;
    const double g = glass_fraction;
    return 5.0 -
           10.0 * std::log10(g * std::pow(10.0, -l_irr / 10.0) +
                             (1.0 - g) * std::pow(10.0, -l_concrete / 10.0));
}

double gpp_o2i_pg(const GppO2iParams& params, double d2d) {
    const double basic =
        gpp_uma_basic_pl(params.frequency, d2d, params.bs_height, params.ut_height, params.los);
    const double tw = gpp_o2i_tw_loss(params.frequency, params.glass_fraction);
    const double indoor = 0.5 * params.indoor_depth;
    return -(basic + tw + indoor);
}

} // namespace o2i
