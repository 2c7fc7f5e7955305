#ifndef O2I_PROPAGATION_HPP
#define O2I_PROPAGATION_HPP

#include <vector>

#include "o2i/paths.hpp"
#include "o2i/scene.hpp"

namespace o2i {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Model constants for the three-path outdoor-to-indoor gain sum. Defaults
/// are the 28 GHz street-canyon calibration.
struct PropagationConstants {
    double frequency = 28e9;   // Hz
    double t_eff = 2.5e-5;     // front-wall power transmission (linear)
    double t_eff_side = 1.5e-4; // side glass-wall power transmission (linear)
    double kappa_in = 0.12;    // indoor power attenuation, Nep/m
    double n2 = 2.2360679774997896; // reflector concrete refraction index (sqrt 5)

    double wavelength() const { return kSpeedOfLight / frequency; }
    PathRanking ranking() const { return {kappa_in, n2}; }
};

/// One evaluated path term: the geometry it came from plus its power gain.
struct TermGain {
    PathGeometry path;
    double gain_linear = 0.0;
    double gain_db = 0.0; // -inf when gain_linear == 0
};

/// Sum of all admissible path terms for one tx/terminal pair.
struct PathGainBreakdown {
    std::vector<TermGain> terms;
    double total_linear = 0.0;
    double total_db = 0.0; // -inf sentinel when no path contributes
};

/// Power reflection coefficient of the concrete facade at grazing angle
/// phi_g (radians): 0.3 + 0.7*exp(-(4/n2)*phi_g). Throws DomainError on a
/// negative angle.
double reflection_coefficient_sq(double grazing_angle, double n2);

/// Indoor power attenuation factor exp(-kappa_in*depth). Throws DomainError
/// on negative depth.
double indoor_absorption(double depth, double kappa_in);

/// Linear power gain of a single path term:
///   lambda^2 * cos^2(phi) * T * A * R / (8*pi^2 * range^2)
/// where the side-wall denominator uses (r1 + d1). T is the entry wall's
/// material transmission when the path carries one (direct / side), the
/// kind-matched constant otherwise; the reflected term always uses the
/// front-wall constant.
double term_gain(const PathGeometry& path, const PropagationConstants& consts);

/// Enumerate admissible paths and sum their term gains in power.
PathGainBreakdown oi_path_gain(const Scene& scene, const TxSite& tx, const Terminal& terminal,
                               const PropagationConstants& consts);

/// Same sum over an externally constructed path list.
PathGainBreakdown sum_path_gains(const std::vector<PathGeometry>& paths,
                                 const PropagationConstants& consts);

/// 10*log10(x), with -infinity for x <= 0.
double to_db(double linear);

} // namespace o2i

#endif
