#ifndef O2I_CALIBRATION_HPP
#define O2I_CALIBRATION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "o2i/baselines.hpp"
#include "o2i/geom2d.hpp"
#include "o2i/propagation.hpp"
#include "o2i/scene.hpp"

namespace o2i {

/// One measured link: range and path gain (negative dB), optionally carrying
/// the terminal position and tx label so models can be replayed against it.
struct MeasurementRecord {
    std::string subset;
    double range_m = 0.0;
    double path_gain_db = 0.0;
    std::optional<Vec3> position; // terminal location for model replay
    std::string tx_label;
};

/// Fitted log-distance line plus its training residual.
struct FitResult {
    double exponent_n = 0.0;
    double intercept_1m_db = 0.0;
    double rmse_db = 0.0;
    std::size_t n_records = 0;

    SlopeInterceptModel model() const { return {exponent_n, intercept_1m_db}; }
};

/// One comparison row in the accuracy table.
struct CompareRow {
    std::string subset;
    std::size_t n_records = 0;
    double exponent_n = 0.0;
    double intercept_db = 0.0;
    double fit_rmse_db = 0.0;
    std::optional<double> gpp_rmse_db;    // absent when 3GPP validity fails
    std::optional<double> theory_rmse_db; // absent when geometry is missing
};

/// Full comparison output: per-subset rows, pooled row, and subsets skipped
/// for missing geometry (with reasons).
struct CompareTable {
    std::vector<CompareRow> rows;   // sorted by subset label
    std::optional<CompareRow> overall;
    std::vector<std::pair<std::string, std::string>> skipped; // subset -> reason
};

/// Ordinary least squares of path loss (-path_gain_db) against
/// 10*log10(range). Throws DegenerateFit when every range is equal and
/// DomainError for fewer than two records.
FitResult fit_slope_intercept(const std::vector<MeasurementRecord>& records);

/// Root-mean-square error (dB) of `predictor` over the records; the
/// predictor maps a record to predicted path gain in dB.
double model_rmse(const std::vector<MeasurementRecord>& records,
                  const std::function<double(const MeasurementRecord&)>& predictor);

/// Per-subset and pooled accuracy table: slope-intercept fit (on each
/// subset's own records), 3GPP O2I RMSE, and three-path-model RMSE. Records
/// without position/tx geometry put their subset into `skipped` instead of
/// failing the run.
CompareTable compare_models(const std::vector<MeasurementRecord>& records, const Scene& scene,
                            const PropagationConstants& consts, const GppO2iParams& gpp);

} // namespace o2i

#endif
