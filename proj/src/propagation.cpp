#include "o2i/propagation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "o2i/errors.hpp"

namespace o2i {

double to_db(double linear) {
    if (linear <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(linear);
}

double reflection_coefficient_sq(double grazing_angle, double n2) {
    if (grazing_angle < 0.0) {
        throw DomainError("reflection_coefficient_sq: negative grazing angle");
    }
    if (n2 <= 0.0) {
        throw DomainError("reflection_coefficient_sq: n2 must be positive");
    }
    return 0.3 + 0.7 * std::exp(-(4.0 / n2) * grazing_angle);
}

double indoor_absorption(double depth, double kappa_in) {
    if (depth < 0.0) {
        throw DomainError("indoor_absorption: negative depth");
    }
    return std::exp(-kappa_in * depth);
}

double term_gain(const PathGeometry& path, const PropagationConstants& consts) {
    double t = 0.0;
    switch (path.kind) {
    case PathKind::direct:
        t = path.entry_material ? path.entry_material->t_eff : consts.t_eff;
        break;
    case PathKind::side_wall:
        t = path.entry_material ? path.entry_material->t_eff : consts.t_eff_side;
        break;
    case PathKind::reflected:
        t = consts.t_eff;
        break;
    }

    double range = path.outdoor_range;
    if (path.kind == PathKind::side_wall) {
        range += path.indoor_depth; // Eq.-style (r1 + d1) side denominator
    }

    double refl = 1.0;
    if (path.kind == PathKind::reflected) {
        refl = reflection_coefficient_sq(path.grazing_angle.value_or(0.0), consts.n2);
    }

    const double lambda = consts.wavelength();
    const double cosphi = std::cos(path.incidence_angle);
    const double absorb = indoor_absorption(path.indoor_depth, consts.kappa_in);
    const double front = lambda * lambda / (8.0 * std::numbers::pi * std::numbers::pi);
    return front * cosphi * cosphi * t * absorb * refl / (range * range);
}

PathGainBreakdown sum_path_gains(const std::vector<PathGeometry>& paths,
                                 const PropagationConstants& consts) {
    PathGainBreakdown out;
    out.terms.reserve(paths.size());
    for (const PathGeometry& p : paths) {
        TermGain tg;
        tg.path = p;
        tg.gain_linear = term_gain(p, consts);
        tg.gain_db = to_db(tg.gain_linear);
        out.total_linear += tg.gain_linear;
        out.terms.push_back(std::move(tg));
    }
    out.total_db = to_db(out.total_linear);
    return out;
}

PathGainBreakdown oi_path_gain(const Scene& scene, const TxSite& tx, const Terminal& terminal,
                               const PropagationConstants& consts) {
    return sum_path_gains(enumerate_paths(scene, tx, terminal, consts.ranking()), consts);
}

} // namespace o2i
