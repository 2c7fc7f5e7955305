#ifndef O2I_LINKBUDGET_HPP
#define O2I_LINKBUDGET_HPP

#include <functional>

#include "o2i/propagation.hpp"

namespace o2i {

/// Radio parameters for SNR and coverage computations. Defaults are the
/// 28 GHz downlink budget used throughout the docs: 30 dBm Tx power, 25 dBi
/// base gain, 12 dBi terminal gain, 100 MHz bandwidth, NF 9 dB, 8 dB
/// threshold.
struct LinkBudget {
    double tx_power_dbm = 30.0;
    double tx_gain_dbi = 25.0;
    double rx_gain_dbi = 12.0;
    double bandwidth_hz = 1e8;
    double noise_figure_db = 9.0;
    double snr_threshold_db = 8.0;
};

/// Thermal noise floor: -174 dBm/Hz + 10*log10(bandwidth) + NF.
double noise_floor_dbm(double bandwidth_hz, double noise_figure_db);

/// Received SNR for a given path gain under the budget.
double snr_db(double path_gain_db, const LinkBudget& budget);

/// Result of the coverage search: the largest in-threshold range, with a flag
/// set when the threshold still holds at the window's far edge.
struct CoverageResult {
    double range_m = 0.0;
    bool unbounded_in_window = false;
};

/// Largest range in [r_min, r_max] where SNR(profile(r)) stays at or above
/// the budget threshold, bisected to 0.01 m. The profile maps range to path
/// gain in dB and must be monotone non-increasing. Throws NoCoverage when
/// the threshold already fails at r_min and NonMonotone when a 1 m sweep of
/// the profile rises by more than 0.1 dB.
CoverageResult coverage_range(const std::function<double(double)>& profile,
                              const LinkBudget& budget, double r_min, double r_max);

/// Canonical front-wall profile: normal incidence (cos phi = 1) through a
/// wall with consts.t_eff, terminal at a fixed indoor depth. Path gain falls
/// 20 dB per decade of range.
std::function<double(double)> normal_profile(const PropagationConstants& consts,
                                             double indoor_depth);

/// Oblique street profile: the terminal slides along a facade at a fixed Tx
/// standoff, so cos^2(phi) = standoff^2 / r^2 and gain falls 40 dB per
/// decade. The returned profile throws DomainError for r < standoff.
std::function<double(double)> standoff_profile(const PropagationConstants& consts,
                                               double indoor_depth, double standoff_m);

} // namespace o2i

#endif
