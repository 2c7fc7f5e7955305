#ifndef O2I_SCENE_IO_HPP
#define O2I_SCENE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "o2i/calibration.hpp"
#include "o2i/scene.hpp"

namespace o2i {

/// Fixed 4-decimal dB/coordinate formatting with '.' decimal separator;
/// -infinity renders as "-inf". All CSV and report output goes through this.
std::string format_fixed(double value);

/// Parse a scene document (JSON: unit, buildings[].{name?, footprint,
/// height, walls[]}, tx_sites[]). Each wall carries exactly one of t_eff
/// (linear) or t_eff_db (negative dB). Throws ParseError naming the
/// offending field; footprint/normal validation failures are reported as
/// ParseError too.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);

/// Serialize back to the same schema (t_eff emitted in linear form).
/// Doubles round-trip bit-exactly through serialize/parse.
std::string serialize_scene(const Scene& scene);

/// Measurement CSV with header `subset,range_m,path_gain_db` optionally
/// extended by `,x,y,z,tx_label`. Throws ParseError with 1-based line
/// numbers for malformed headers or rows.
std::vector<MeasurementRecord> parse_measurements(std::istream& in);
std::vector<MeasurementRecord> load_measurements(const std::string& path);

/// Write records with the extended header when any record carries a
/// position, the short header otherwise.
void write_measurements(std::ostream& out, const std::vector<MeasurementRecord>& records);

/// Comparison table CSV: header
/// `subset,n,intercept_db,fit_rmse_db,gpp_rmse_db,theory_rmse_db`, one row
/// per subset plus the pooled Overall row, then a `# skipped:` comment line
/// per omitted subset. Cells without a defined value hold `NA`.
void write_compare_csv(std::ostream& out, const CompareTable& table);

std::string read_text_file(const std::string& path);

} // namespace o2i

#endif
