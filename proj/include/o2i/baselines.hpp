#ifndef O2I_BASELINES_HPP
#define O2I_BASELINES_HPP

namespace o2i {

/// Log-distance path-loss line: PL(r) = intercept_1m_db + 10*n*log10(r).
struct SlopeInterceptModel {
    double exponent_n = 2.0;
    double intercept_1m_db = 0.0;
};

/// Inputs for the TR 38.901 UMa outdoor-to-indoor (high-loss) mean model.
struct GppO2iParams {
    double frequency = 28e9; // Hz
    double bs_height = 25.0; // m
    double ut_height = 1.5;  // m
    double glass_fraction = 0.3;
    double indoor_depth = 6.0; // m
    bool los = true;
};

/// Path gain (dB, negative) of the slope-intercept line at `range` meters.
/// Throws DomainError for range <= 0.
double slope_intercept_pg(const SlopeInterceptModel& model, double range);

/// TR 38.901 Table 7.4.1-1 UMa mean basic path loss (dB, positive), LOS
/// dual-slope or NLOS max rule. Deterministic mean only — no shadow-fading
/// draw. Throws RangeError for d2d outside [10, 5000] m or frequency
/// outside [0.5, 100] GHz.
double gpp_uma_basic_pl(double frequency, double d2d, double bs_height, double ut_height,
                        bool los);

/// TR 38.901 high-loss O2I through-wall term (dB):
///   5 - 10*log10(g*10^(-L_IRR/10) + (1-g)*10^(-L_concrete/10))
/// with L_IRR = 23 + 0.3 f_GHz and L_concrete = 5 + 4 f_GHz.
double gpp_o2i_tw_loss(double frequency, double glass_fraction);

/// Full deterministic O2I path gain (dB, negative):
///   -(basic PL + through-wall loss + 0.5 dB/m * indoor_depth).
double gpp_o2i_pg(const GppO2iParams& params, double d2d);

} // namespace o2i

#endif
