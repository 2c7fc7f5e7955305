#include "o2i/scene_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "o2i/errors.hpp"

namespace o2i {

using nlohmann::json;

std::string format_fixed(double value) {
    if (std::isinf(value)) {
        return value < 0 ? "-inf" : "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    // guard against locale decimal commas leaking into output
    for (char& c : buf) {
        if (c == ',') {
            c = '.';
        }
    }
    return buf;
}

namespace {

double require_number(const json& obj, const char* field, const std::string& where) {
    if (!obj.contains(field) || !obj[field].is_number()) {
        throw ParseError(where + ": missing or non-numeric field '" + field + "'");
    }
    return obj[field].get<double>();
}

WallMaterial parse_material(const json& w, const std::string& where) {
    WallMaterial m;
    const bool has_lin = w.contains("t_eff");
    const bool has_db = w.contains("t_eff_db");
    if (has_lin == has_db) {
        throw ParseError(where + ": exactly one of 't_eff' or 't_eff_db' is required");
    }
    if (has_lin) {
        m.t_eff = require_number(w, "t_eff", where);
    } else {
        const double db = require_number(w, "t_eff_db", where);
        if (db > 0.0) {
            throw ParseError(where + ": 't_eff_db' must be <= 0 dB");
        }
        m.t_eff = std::pow(10.0, db / 10.0);
    }
    if (!(m.t_eff > 0.0) || m.t_eff > 1.0) {
        throw ParseError(where + ": 't_eff' must lie in (0, 1]");
    }
    if (w.contains("glass_fraction")) {
        m.glass_fraction = require_number(w, "glass_fraction", where);
        if (m.glass_fraction < 0.0 || m.glass_fraction > 1.0) {
            throw ParseError(where + ": 'glass_fraction' must lie in [0, 1]");
        }
    }
    if (w.contains("label")) {
        m.label = w["label"].get<std::string>();
    }
    return m;
}

} // namespace

Scene parse_scene(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("scene: invalid document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("scene: top level must be an object");
    }
    if (!doc.contains("unit") || doc["unit"] != "m") {
        throw ParseError("scene: field 'unit' must be present and equal \"m\"");
    }
    if (!doc.contains("buildings") || !doc["buildings"].is_array()) {
        throw ParseError("scene: missing 'buildings' array");
    }
    if (!doc.contains("tx_sites") || !doc["tx_sites"].is_array()) {
        throw ParseError("scene: missing 'tx_sites' array");
    }

    Scene scene;
    int bi = 0;
    for (const json& b : doc["buildings"]) {
        const std::string where = "buildings[" + std::to_string(bi) + "]";
        std::string name = b.contains("name") ? b["name"].get<std::string>()
                                              : "b" + std::to_string(bi);
        if (!b.contains("footprint") || !b["footprint"].is_array()) {
            throw ParseError(where + ": missing 'footprint' array");
        }
        std::vector<Vec2> fp;
        for (const json& v : b["footprint"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
                throw ParseError(where + ".footprint: each vertex must be [x, y]");
            }
            fp.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        const double height = require_number(b, "height", where);
        if (!b.contains("walls") || !b["walls"].is_array()) {
            throw ParseError(where + ": missing 'walls' array");
        }
        if (b["walls"].size() != fp.size()) {
            throw ParseError(where + ": 'walls' must have one entry per footprint edge (" +
                             std::to_string(fp.size()) + " expected, " +
                             std::to_string(b["walls"].size()) + " given)");
        }
        std::vector<WallMaterial> mats;
        int wi = 0;
        for (const json& w : b["walls"]) {
            mats.push_back(parse_material(w, where + ".walls[" + std::to_string(wi) + "]"));
            ++wi;
        }
        try {
            scene.buildings.push_back(make_building(std::move(name), std::move(fp), height,
                                                    std::move(mats)));
        } catch (const DomainError& e) {
            throw ParseError(where + ": " + e.what());
        }
        ++bi;
    }

    int ti = 0;
    for (const json& t : doc["tx_sites"]) {
        const std::string where = "tx_sites[" + std::to_string(ti) + "]";
        TxSite tx;
        tx.position = {require_number(t, "x", where), require_number(t, "y", where),
                       require_number(t, "z", where)};
        if (!t.contains("label") || !t["label"].is_string()) {
            throw ParseError(where + ": missing 'label'");
        }
        tx.label = t["label"].get<std::string>();
        if (tx.position.z <= 0.0) {
            throw ParseError(where + ": tx height 'z' must be positive");
        }
        scene.tx_sites.push_back(std::move(tx));
        ++ti;
    }
    return scene;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Scene load_scene(const std::string& path) {
    try {
        return parse_scene(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_scene(const Scene& scene) {
    json doc;
    doc["unit"] = "m";
    doc["buildings"] = json::array();
    for (const Building& b : scene.buildings) {
        json jb;
        jb["name"] = b.name;
        jb["height"] = b.height;
        jb["footprint"] = json::array();
        for (const Vec2& v : b.footprint) {
            jb["footprint"].push_back({v.x, v.y});
        }
        jb["walls"] = json::array();
        for (const Wall& w : b.walls) {
            json jw;
            jw["t_eff"] = w.material.t_eff;
            jw["glass_fraction"] = w.material.glass_fraction;
            if (!w.material.label.empty()) {
                jw["label"] = w.material.label;
            }
            jb["walls"].push_back(std::move(jw));
        }
        doc["buildings"].push_back(std::move(jb));
    }
    doc["tx_sites"] = json::array();
    for (const TxSite& t : scene.tx_sites) {
        doc["tx_sites"].push_back({{"x", t.position.x},
                                   {"y", t.position.y},
                                   {"z", t.position.z},
                                   {"label", t.label}});
    }
    return doc.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double_field(const std::string& s, const char* field, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": field '" + field +
                         "' is not a number: '" + s + "'");
    }
}

} // namespace

std::vector<MeasurementRecord> parse_measurements(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("line 1: empty measurement file");
    }
    const auto header = split_csv_line(line);
    const std::vector<std::string> short_hdr = {"subset", "range_m", "path_gain_db"};
    const std::vector<std::string> long_hdr = {"subset", "range_m", "path_gain_db",
                                               "x",      "y",       "z",
                                               "tx_label"};
    bool extended = false;
    if (header == long_hdr) {
        extended = true;
    } else if (header != short_hdr) {
        throw ParseError("line 1: header must be 'subset,range_m,path_gain_db' optionally "
                         "extended by ',x,y,z,tx_label'");
    }

    std::vector<MeasurementRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto f = split_csv_line(line);
        const std::size_t want = extended ? 7 : 3;
        if (f.size() != want) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(want) + " fields, got " + std::to_string(f.size()));
        }
        MeasurementRecord rec;
        rec.subset = f[0];
        rec.range_m = parse_double_field(f[1], "range_m", line_no);
        rec.path_gain_db = parse_double_field(f[2], "path_gain_db", line_no);
        if (rec.range_m <= 0.0) {
            throw ParseError("line " + std::to_string(line_no) + ": 'range_m' must be positive");
        }
        if (!std::isfinite(rec.path_gain_db)) {
            throw ParseError("line " + std::to_string(line_no) + ": 'path_gain_db' must be finite");
        }
        if (extended) {
            rec.position = Vec3{parse_double_field(f[3], "x", line_no),
                                parse_double_field(f[4], "y", line_no),
                                parse_double_field(f[5], "z", line_no)};
            rec.tx_label = f[6];
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<MeasurementRecord> load_measurements(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    try {
        return parse_measurements(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_measurements(std::ostream& out, const std::vector<MeasurementRecord>& records) {
    bool extended = false;
    for (const auto& r : records) {
        if (r.position) {
            extended = true;
            break;
        }
    }
    out << (extended ? "subset,range_m,path_gain_db,x,y,z,tx_label"
                     : "subset,range_m,path_gain_db")
        << "\n";
    for (const auto& r : records) {
        out << r.subset << ',' << format_fixed(r.range_m) << ',' << format_fixed(r.path_gain_db);
        if (extended) {
            const Vec3 p = r.position.value_or(Vec3{});
            out << ',' << format_fixed(p.x) << ',' << format_fixed(p.y) << ','
                << format_fixed(p.z) << ',' << r.tx_label;
        }
        out << "\n";
    }
}

namespace {

void write_compare_row(std::ostream& out, const CompareRow& row) {
    out << row.subset << ',' << format_fixed(row.exponent_n) << ','
        << format_fixed(row.intercept_db) << ',' << format_fixed(row.fit_rmse_db) << ','
        << (row.gpp_rmse_db ? format_fixed(*row.gpp_rmse_db) : "NA") << ','
        << (row.theory_rmse_db ? format_fixed(*row.theory_rmse_db) : "NA") << "\n";
}

} // namespace

void write_compare_csv(std::ostream& out, const CompareTable& table) {
    out << "subset,n,intercept_db,fit_rmse_db,gpp_rmse_db,theory_rmse_db\n";
    for (const CompareRow& row : table.rows) {
        write_compare_row(out, row);
    }
    if (table.overall) {
        write_compare_row(out, *table.overall);
    }
    for (const auto& [subset, reason] : table.skipped) {
        out << "# skipped: " << subset << ": " << reason << "\n";
    }
}

} // namespace o2i
