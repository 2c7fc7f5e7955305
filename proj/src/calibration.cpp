#include "o2i/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "o2i/errors.hpp"

namespace o2i {

FitResult fit_slope_intercept(const std::vector<MeasurementRecord>& records) {
    if (records.size() < 2) {
        throw DomainError("fit_slope_intercept: need at least 2 records");
    }
    // OLS of path loss against x = 10*log10(range)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& rec : records) {
        if (rec.range_m <= 0.0) {
            throw DomainError("fit_slope_intercept: non-positive range");
        }
        const double x = 10.0 * std::log10(rec.range_m);
        const double y = -rec.path_gain_db;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(records.size());
    const double var = sxx - sx * sx / n;
    if (var <= 1e-12 * std::max(1.0, sxx)) {
        throw DegenerateFit("fit_slope_intercept: all ranges equal, slope is undetermined");
    }
    FitResult fit;
    fit.exponent_n = (sxy - sx * sy / n) / var;
    fit.intercept_1m_db = (sy - fit.exponent_n * sx) / n;
    fit.n_records = records.size();

    double ss = 0.0;
    for (const auto& rec : records) {
        const double x = 10.0 * std::log10(rec.range_m);
        const double resid = -rec.path_gain_db - (fit.intercept_1m_db + fit.exponent_n * x);
        ss += resid * resid;
    }
    fit.rmse_db = std::sqrt(ss / n);
    return fit;
}

double model_rmse(const std::vector<MeasurementRecord>& records,
                  const std::function<double(const MeasurementRecord&)>& predictor) {
    if (records.empty()) {
        throw DomainError("model_rmse: no records");
    }
    double ss = 0.0;
    for (const auto& rec : records) {
        const double err = predictor(rec) - rec.path_gain_db;
        ss += err * err;
    }
    return std::sqrt(ss / static_cast<double>(records.size()));
}

namespace {

/// Geometry-resolved predictors for one record, or a reason they can't be built.
struct ResolvedRecord {
    const TxSite* tx = nullptr;
    Terminal terminal;
};

std::string resolve_record(const Scene& scene, const MeasurementRecord& rec,
                           ResolvedRecord& out) {
    if (!rec.position) {
        return "record lacks a terminal position";
    }
    if (rec.tx_label.empty()) {
        return "record lacks a tx label";
    }
    out.tx = find_tx(scene, rec.tx_label);
    if (out.tx == nullptr) {
        return "tx label '" + rec.tx_label + "' not in scene";
    }
    try {
        out.terminal = make_terminal(scene, *rec.position);
    } catch (const GeometryError&) {
        return "terminal position outside every building";
    }
    return {};
}

CompareRow build_row(const std::string& label, const std::vector<MeasurementRecord>& recs,
                     const Scene& scene, const PropagationConstants& consts,
                     const GppO2iParams& gpp, std::string& skip_reason) {
    CompareRow row;
    row.subset = label;
    row.n_records = recs.size();

    std::vector<ResolvedRecord> resolved(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        skip_reason = resolve_record(scene, recs[i], resolved[i]);
        if (!skip_reason.empty()) {
            return row;
        }
    }

    try {
        const FitResult fit = fit_slope_intercept(recs);
        row.exponent_n = fit.exponent_n;
        row.intercept_db = fit.intercept_1m_db;
        row.fit_rmse_db = fit.rmse_db;
    } catch (const Error& e) {
        skip_reason = e.what();
        return row;
    }

    double theory_ss = 0.0;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const double pred =
            oi_path_gain(scene, *resolved[i].tx, resolved[i].terminal, consts).total_db;
        const double err = pred - recs[i].path_gain_db;
        theory_ss += err * err;
    }
    row.theory_rmse_db = std::sqrt(theory_ss / static_cast<double>(recs.size()));

    try {
        double gpp_ss = 0.0;
        for (std::size_t i = 0; i < recs.size(); ++i) {
            GppO2iParams p = gpp;
            p.bs_height = resolved[i].tx->position.z;
            p.ut_height = resolved[i].terminal.position.z;
            const double d2d =
                norm(resolved[i].tx->position.xy() - resolved[i].terminal.position.xy());
            const double err = gpp_o2i_pg(p, d2d) - recs[i].path_gain_db;
            gpp_ss += err * err;
        }
        row.gpp_rmse_db = std::sqrt(gpp_ss / static_cast<double>(recs.size()));
    } catch (const RangeError&) {
        row.gpp_rmse_db.reset(); // outside TR 38.901 validity; leave the cell empty
    }
    return row;
}

} // namespace

CompareTable compare_models(const std::vector<MeasurementRecord>& records, const Scene& scene,
                            const PropagationConstants& consts, const GppO2iParams& gpp) {
    std::map<std::string, std::vector<MeasurementRecord>> by_subset;
    for (const auto& rec : records) {
        by_subset[rec.subset].push_back(rec);
    }

    CompareTable table;
    std::vector<MeasurementRecord> pooled;
    for (const auto& [label, recs] : by_subset) {
        std::string reason;
        CompareRow row = build_row(label, recs, scene, consts, gpp, reason);
        if (!reason.empty()) {
            table.skipped.emplace_back(label, reason);
            continue;
        }
        pooled.insert(pooled.end(), recs.begin(), recs.end());
        table.rows.push_back(std::move(row));
    }

    if (pooled.size() >= 2) {
        std::string reason;
        CompareRow overall = build_row("Overall", pooled, scene, consts, gpp, reason);
        if (reason.empty()) {
            table.overall = std::move(overall);
        } else {
            table.skipped.emplace_back("Overall", reason);
        }
    }
    return table;
}

} // namespace o2i
