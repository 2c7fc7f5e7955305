#include "o2i/cli.hpp"

#include <algorithm>
#include <clocale>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "o2i/calibration.hpp"
#include "o2i/coverage.hpp"
#include "o2i/errors.hpp"
#include "o2i/linkbudget.hpp"
#include "o2i/scene_io.hpp"

namespace o2i {

namespace {

/// Propagation flags shared by every model-evaluating subcommand. dB-valued
/// transmission flags convert to linear on use.
struct ConstsFlags {
    double freq_ghz = 28.0;
    double t_eff_db = 0.0;
    double t_eff_side_db = 0.0;
    double kappa = 0.12;
    double n2 = 2.2360679774997896;
    CLI::Option* t_eff_opt = nullptr;
    CLI::Option* t_eff_side_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--freq-ghz", freq_ghz, "Carrier frequency, GHz")
            ->capture_default_str();
        t_eff_opt = cmd->add_option("--t-eff-db", t_eff_db,
                                    "Front-wall power transmission, dB (default -46.02)");
        t_eff_side_opt = cmd->add_option(
            "--t-eff-side-db", t_eff_side_db,
            "Side glass-wall power transmission, dB (default -38.24)");
        cmd->add_option("--kappa", kappa, "Indoor power attenuation, Nep/m")
            ->capture_default_str();
        cmd->add_option("--n2", n2, "Reflector concrete refraction index")
            ->capture_default_str();
    }

    PropagationConstants consts() const {
        PropagationConstants c;
        c.frequency = freq_ghz * 1e9;
        if (t_eff_opt != nullptr && t_eff_opt->count() > 0) {
            c.t_eff = std::pow(10.0, t_eff_db / 10.0);
        }
        if (t_eff_side_opt != nullptr && t_eff_side_opt->count() > 0) {
            c.t_eff_side = std::pow(10.0, t_eff_side_db / 10.0);
        }
        c.kappa_in = kappa;
        c.n2 = n2;
        return c;
    }
};

struct BudgetFlags {
    LinkBudget budget;
    double bw_mhz = 100.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tx-dbm", budget.tx_power_dbm, "Transmit power, dBm")
            ->capture_default_str();
        cmd->add_option("--tx-dbi", budget.tx_gain_dbi, "Base antenna gain, dBi")
            ->capture_default_str();
        cmd->add_option("--rx-dbi", budget.rx_gain_dbi, "Terminal antenna gain, dBi")
            ->capture_default_str();
        cmd->add_option("--bw-mhz", bw_mhz, "Bandwidth, MHz")->capture_default_str();
        cmd->add_option("--nf-db", budget.noise_figure_db, "Receiver noise figure, dB")
            ->capture_default_str();
        cmd->add_option("--snr-db", budget.snr_threshold_db, "SNR threshold, dB")
            ->capture_default_str();
    }

    LinkBudget resolve() const {
        LinkBudget b = budget;
        b.bandwidth_hz = bw_mhz * 1e6;
        return b;
    }
};

std::string grazing_cell(const PathGeometry& path) {
    return path.grazing_angle ? format_fixed(*path.grazing_angle) : "NA";
}

void print_breakdown_csv(std::ostream& out, const PathGainBreakdown& bd, double snr) {
    out << "kind,outdoor_range_m,incidence_rad,indoor_depth_m,grazing_rad,gain_db\n";
    for (const TermGain& t : bd.terms) {
        out << to_string(t.path.kind) << ',' << format_fixed(t.path.outdoor_range) << ','
            << format_fixed(t.path.incidence_angle) << ',' << format_fixed(t.path.indoor_depth)
            << ',' << grazing_cell(t.path) << ',' << format_fixed(t.gain_db) << "\n";
    }
    out << "total,NA,NA,NA,NA," << format_fixed(bd.total_db) << "\n";
    out << "snr,NA,NA,NA,NA," << format_fixed(snr) << "\n";
}

void print_breakdown_json(std::ostream& out, const PathGainBreakdown& bd, double snr) {
    using nlohmann::json;
    for (const TermGain& t : bd.terms) {
        json j;
        j["kind"] = to_string(t.path.kind);
        j["outdoor_range_m"] = t.path.outdoor_range;
        j["incidence_rad"] = t.path.incidence_angle;
        j["indoor_depth_m"] = t.path.indoor_depth;
        if (t.path.grazing_angle) {
            j["grazing_rad"] = *t.path.grazing_angle;
        }
        j["gain_db"] = t.gain_db;
        out << j.dump() << "\n";
    }
    json total;
    total["total_db"] = std::isinf(bd.total_db) ? json() : json(bd.total_db);
    total["snr_db"] = std::isinf(snr) ? json() : json(snr);
    total["n_terms"] = bd.terms.size();
    out << total.dump() << "\n";
}

const TxSite& require_tx(const Scene& scene, const std::string& label) {
    const TxSite* tx = find_tx(scene, label);
    if (tx == nullptr) {
        throw ParseError("tx label '" + label + "' not found in scene");
    }
    return *tx;
}

/// Writes either to a named file or to the primary stream for "-".
class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path == "-") {
            stream_ = &fallback;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw ParseError("cannot open output file: " + path);
            }
            stream_ = &file_;
        }
    }
    std::ostream& stream() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

int cmd_predict(const std::string& scene_path, const std::string& tx_label,
                const std::vector<double>& at, const ConstsFlags& cf, const BudgetFlags& bf,
                bool json_lines, std::ostream& out) {
    const Scene scene = load_scene(scene_path);
    const TxSite& tx = require_tx(scene, tx_label);
    const Terminal term = make_terminal(scene, {at[0], at[1], at[2]});
    const PropagationConstants consts = cf.consts();
    const PathGainBreakdown bd = oi_path_gain(scene, tx, term, consts);
    const double snr = snr_db(bd.total_db, bf.resolve());
    if (json_lines) {
        print_breakdown_json(out, bd, snr);
    } else {
        print_breakdown_csv(out, bd, snr);
    }
    return 0;
}

int cmd_coverage(const std::string& scene_path, const std::string& tx_label,
                 const std::vector<double>& origin, double spacing, int nx, int ny,
                 double terminal_z, int workers, const ConstsFlags& cf, const BudgetFlags& bf,
                 const std::string& out_path, std::ostream& fallback) {
    const Scene scene = load_scene(scene_path);
    const TxSite& tx = require_tx(scene, tx_label);
    const CoverageGrid grid =
        compute_coverage_grid(scene, tx, {origin[0], origin[1]}, spacing, nx, ny, terminal_z,
                              cf.consts(), bf.resolve(), workers);
    OutputTarget target(out_path, fallback);
    write_coverage_csv(target.stream(), grid);
    return 0;
}

int cmd_fit(const std::string& csv_path, const std::string& subset_filter, std::ostream& out) {
    std::vector<MeasurementRecord> records = load_measurements(csv_path);
    if (!subset_filter.empty()) {
        std::erase_if(records,
                      [&](const MeasurementRecord& r) { return r.subset != subset_filter; });
        if (records.empty()) {
            throw ParseError("subset '" + subset_filter + "' has no records");
        }
    }
    std::map<std::string, std::vector<MeasurementRecord>> by_subset;
    for (const auto& r : records) {
        by_subset[r.subset].push_back(r);
    }
    out << "subset,n,intercept_db,fit_rmse_db,n_records\n";
    const auto emit = [&](const std::string& label, const std::vector<MeasurementRecord>& recs) {
        const FitResult fit = fit_slope_intercept(recs);
        out << label << ',' << format_fixed(fit.exponent_n) << ','
            << format_fixed(fit.intercept_1m_db) << ',' << format_fixed(fit.rmse_db) << ','
            << fit.n_records << "\n";
    };
    for (const auto& [label, recs] : by_subset) {
        emit(label, recs);
    }
    if (by_subset.size() > 1) {
        emit("Overall", records);
    }
    return 0;
}

int cmd_compare(const std::string& csv_path, const std::string& scene_path,
                const ConstsFlags& cf, const GppO2iParams& gpp, const std::string& out_path,
                std::ostream& fallback) {
    const std::vector<MeasurementRecord> records = load_measurements(csv_path);
    const Scene scene = load_scene(scene_path);
    const CompareTable table = compare_models(records, scene, cf.consts(), gpp);
    OutputTarget target(out_path, fallback);
    write_compare_csv(target.stream(), table);
    return 0;
}

int cmd_budget(const ConstsFlags& cf, const BudgetFlags& bf, const std::string& profile_spec,
               double indoor_depth, double r_min, double r_max, std::ostream& out) {
    const PropagationConstants consts = cf.consts();
    const LinkBudget budget = bf.resolve();

    std::function<double(double)> profile;
    double effective_r_min = r_min;
    if (profile_spec == "normal") {
        profile = normal_profile(consts, indoor_depth);
    } else if (profile_spec.rfind("standoff:", 0) == 0) {
        double standoff = 0.0;
        try {
            standoff = std::stod(profile_spec.substr(9));
        } catch (const std::exception&) {
            throw ParseError("--profile standoff:<d_s> needs a numeric standoff");
        }
        if (standoff <= 0.0) {
            throw ParseError("--profile standoff distance must be positive");
        }
        profile = standoff_profile(consts, indoor_depth, standoff);
        effective_r_min = std::max(r_min, standoff);
    } else {
        throw ParseError("--profile must be 'normal' or 'standoff:<d_s>'");
    }

    const CoverageResult res = coverage_range(profile, budget, effective_r_min, r_max);
    out << "noise_floor_dbm "
        << format_fixed(noise_floor_dbm(budget.bandwidth_hz, budget.noise_figure_db)) << "\n";
    out << "snr_at_r_min_db " << format_fixed(snr_db(profile(effective_r_min), budget)) << "\n";
    out << "coverage_range_m " << format_fixed(res.range_m) << "\n";
    out << "unbounded_in_window " << (res.unbounded_in_window ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"Outdoor-to-indoor mmWave coverage prediction"};
    app.require_subcommand(1);

    // predict
    auto* predict = app.add_subcommand("predict", "Per-path gain breakdown for one link");
    std::string p_scene;
    std::string p_tx;
    std::vector<double> p_at;
    bool p_json = false;
    ConstsFlags p_cf;
    BudgetFlags p_bf;
    predict->add_option("scene", p_scene, "Scene file")->required();
    predict->add_option("--tx", p_tx, "Tx site label")->required();
    predict->add_option("--at", p_at, "Terminal position x y z (m)")
        ->expected(3)
        ->required();
    predict->add_flag("--json", p_json, "Emit JSON lines instead of CSV");
    p_cf.attach(predict);
    p_bf.attach(predict);

    // coverage
    auto* coverage = app.add_subcommand("coverage", "Path-gain grid as CSV");
    std::string c_scene;
    std::string c_tx;
    std::vector<double> c_origin;
    double c_spacing = 1.0;
    int c_nx = 0;
    int c_ny = 0;
    double c_z = 1.5;
    int c_workers = 1;
    std::string c_out = "-";
    ConstsFlags c_cf;
    BudgetFlags c_bf;
    coverage->add_option("scene", c_scene, "Scene file")->required();
    coverage->add_option("--tx", c_tx, "Tx site label")->required();
    coverage->add_option("--origin", c_origin, "Grid origin x y (m)")->expected(2)->required();
    coverage->add_option("--spacing", c_spacing, "Grid spacing (m)")->required();
    coverage->add_option("--nx", c_nx, "Grid nodes along x")->required();
    coverage->add_option("--ny", c_ny, "Grid nodes along y")->required();
    coverage->add_option("--z", c_z, "Terminal height (m)")->capture_default_str();
    coverage->add_option("--workers", c_workers, "Worker threads")->capture_default_str();
    coverage->add_option("-o,--out", c_out, "Output file ('-' = stdout)")
        ->capture_default_str();
    c_cf.attach(coverage);
    c_bf.attach(coverage);

    // fit
    auto* fit = app.add_subcommand("fit", "Slope-intercept fit per subset");
    std::string f_csv;
    std::string f_subset;
    fit->add_option("measurements", f_csv, "Measurement CSV")->required();
    fit->add_option("--subset", f_subset, "Restrict to one subset label");

    // compare
    auto* compare = app.add_subcommand("compare", "Accuracy table: fit vs 3GPP vs three-path");
    std::string m_csv;
    std::string m_scene;
    std::string m_out = "-";
    ConstsFlags m_cf;
    GppO2iParams m_gpp;
    bool m_nlos = false;
    compare->add_option("measurements", m_csv, "Measurement CSV")->required();
    compare->add_option("scene", m_scene, "Scene file")->required();
    compare->add_option("-o,--out", m_out, "Output file ('-' = stdout)")
        ->capture_default_str();
    compare->add_flag("--gpp-nlos", m_nlos, "Use the UMa NLOS branch");
    compare->add_flag("--gpp-los", "Use the UMa LOS branch (default)");
    compare->add_option("--glass-fraction", m_gpp.glass_fraction,
                        "Glass fraction for the 3GPP through-wall term")
        ->capture_default_str();
    compare->add_option("--indoor-depth", m_gpp.indoor_depth,
                        "Indoor depth for the 3GPP indoor term (m)")
        ->capture_default_str();
    m_cf.attach(compare);

    // budget
    auto* budget = app.add_subcommand("budget", "Noise floor and coverage range");
    std::string b_profile = "normal";
    double b_depth = 6.0;
    double b_rmin = 1.0;
    double b_rmax = 1000.0;
    ConstsFlags b_cf;
    BudgetFlags b_bf;
    budget->add_option("--profile", b_profile, "Profile: 'normal' or 'standoff:<d_s>'")
        ->capture_default_str();
    budget->add_option("--indoor-depth", b_depth, "Terminal depth behind the wall (m)")
        ->capture_default_str();
    budget->add_option("--r-min", b_rmin, "Search window near edge (m)")->capture_default_str();
    budget->add_option("--r-max", b_rmax, "Search window far edge (m)")->capture_default_str();
    b_cf.attach(budget);
    b_bf.attach(budget);

    try {
        // CLI11's vector-parse overload consumes arguments back to front
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (predict->parsed()) {
            return cmd_predict(p_scene, p_tx, p_at, p_cf, p_bf, p_json, out);
        }
        if (coverage->parsed()) {
            return cmd_coverage(c_scene, c_tx, c_origin, c_spacing, c_nx, c_ny, c_z, c_workers,
                                c_cf, c_bf, c_out, out);
        }
        if (fit->parsed()) {
            return cmd_fit(f_csv, f_subset, out);
        }
        if (compare->parsed()) {
            m_gpp.frequency = m_cf.consts().frequency;
            m_gpp.los = !m_nlos;
            return cmd_compare(m_csv, m_scene, m_cf, m_gpp, m_out, out);
        }
        if (budget->parsed()) {
            return cmd_budget(b_cf, b_bf, b_profile, b_depth, b_rmin, b_rmax, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace o2i
