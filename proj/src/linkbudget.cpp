#include "o2i/linkbudget.hpp"

#include <cmath>
#include <numbers>

#include "o2i/errors.hpp"

namespace o2i {

double noise_floor_dbm(double bandwidth_hz, double noise_figure_db) {
    if (bandwidth_hz <= 0.0) {
        throw DomainError("noise_floor_dbm: bandwidth must be positive");
    }
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double snr_db(double path_gain_db, const LinkBudget& budget) {
    return budget.tx_power_dbm + budget.tx_gain_dbi + budget.rx_gain_dbi + path_gain_db -
           noise_floor_dbm(budget.bandwidth_hz, budget.noise_figure_db);
}

CoverageResult coverage_range(const std::function<double(double)>& profile,
                              const LinkBudget& budget, double r_min, double r_max) {
    if (!(r_min > 0.0) || !(r_max > r_min)) {
        throw DomainError("coverage_range: need 0 < r_min < r_max");
    }
    const auto snr_at = [&](double r) { return snr_db(profile(r), budget); };

    if (snr_at(r_min) < budget.snr_threshold_db) {
        throw NoCoverage("coverage_range: SNR below threshold at the near edge of the window");
    }

    // the bisection below assumes a non-increasing profile; sample on a 1 m
    // grid and reject profiles that climb
    double prev = profile(r_min);
    for (double r = r_min + 1.0; r < r_max; r += 1.0) {
        const double cur = profile(r);
        if (cur > prev + 0.1) {
            throw NonMonotone("coverage_range: profile rises along the search window");
        }
        prev = cur;
    }
    {
        const double cur = profile(r_max);
        if (cur > prev + 0.1) {
            throw NonMonotone("coverage_range: profile rises along the search window");
        }
    }

    if (snr_at(r_max) >= budget.snr_threshold_db) {
        return {r_max, true};
    }

    double lo = r_min; // invariant: SNR(lo) >= threshold > SNR(hi)
    double hi = r_max;
    while (hi - lo > 0.01) {
        const double mid = 0.5 * (lo + hi);
        if (snr_at(mid) >= budget.snr_threshold_db) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, false};
}

std::function<double(double)> normal_profile(const PropagationConstants& consts,
                                             double indoor_depth) {
    const double lambda = consts.wavelength();
    const double k = lambda * lambda / (8.0 * std::numbers::pi * std::numbers::pi) * consts.t_eff *
                     indoor_absorption(indoor_depth, consts.kappa_in);
    return [k](double r) { return 10.0 * std::log10(k / (r * r)); };
}

std::function<double(double)> standoff_profile(const PropagationConstants& consts,
                                               double indoor_depth, double standoff_m) {
    if (standoff_m <= 0.0) {
        throw DomainError("standoff_profile: standoff must be positive");
    }
    const double lambda = consts.wavelength();
    const double k = lambda * lambda / (8.0 * std::numbers::pi * std::numbers::pi) * consts.t_eff *
                     indoor_absorption(indoor_depth, consts.kappa_in) * standoff_m * standoff_m;
    return [k, standoff_m](double r) {
        if (r < standoff_m) {
            throw DomainError("standoff profile evaluated closer than the standoff distance");
        }
        return 10.0 * std::log10(k / (r * r * r * r));
    };
}

} // namespace o2i
