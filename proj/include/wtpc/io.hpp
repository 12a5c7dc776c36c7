// CSV and JSON serialization
#pragma once

#include <wtpc/cp_models.hpp>
#include <wtpc/error.hpp>
#include <wtpc/power_curve.hpp>
#include <wtpc/turbine.hpp>
#include <wtpc/validation.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace wtpc::io {

using nlohmann::json;

// ============================================================================
// Helpers
// ============================================================================

/// Six significant digits, as written in every curve CSV.
inline std::string format_g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v); // no "-0"
    return buf;
}

inline std::string trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

inline double parse_double(const std::string &cell, std::string_view what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) {
            throw std::invalid_argument(cell);
        }
        return v;
    } catch (const std::exception &) {
        throw Error(ErrorCode::ParseError, "cannot parse " + std::string(what) + " from '" + cell + "'");
    }
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_json(const std::string &text, std::string_view origin) {
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string(origin) + ": " + e.what());
    }
}

// ============================================================================
// Power curve CSV
// ============================================================================

inline constexpr std::string_view CURVE_CSV_HEADER = "wind_speed_ms,power_kw";

inline void write_curve_csv(std::ostream &os, const PowerCurve &curve) {
    os << CURVE_CSV_HEADER << '\n';
    for (std::size_t i = 0; i < curve.power.size(); ++i) {
        os << format_g6(curve.grid.at(i)) << ',' << format_g6(curve.power[i]) << '\n';
    }
}

inline std::vector<CurveSample> read_curve_csv(std::istream &is) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)) && trim(line) == CURVE_CSV_HEADER,
            ErrorCode::ParseError, "curve CSV must start with '" + std::string(CURVE_CSV_HEADER) + "'");
    std::vector<CurveSample> samples;
    while (std::getline(is, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_csv_line(line);
        require(cells.size() == 2, ErrorCode::ParseError, "curve CSV rows need 2 columns: '" + line + "'");
        samples.push_back({parse_double(cells[0], "wind_speed_ms"), parse_double(cells[1], "power_kw")});
    }
    return samples;
}

// ============================================================================
// Turbine specs
// ============================================================================

inline constexpr std::string_view SPEC_CSV_HEADER =
    "name,rotor_diameter_m,rated_power_kw,cut_in_ms,cut_out_ms,omega_min_rpm,omega_max_rpm,cp_max,hub_height_m";

/// Empty cells mean "absent".
inline std::vector<PartialTurbineSpec> read_spec_csv(std::istream &is) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)) && trim(line) == SPEC_CSV_HEADER,
            ErrorCode::ParseError, "turbine CSV must start with '" + std::string(SPEC_CSV_HEADER) + "'");
    std::vector<PartialTurbineSpec> specs;
    while (std::getline(is, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_csv_line(line);
        require(cells.size() == 9, ErrorCode::ParseError, "turbine CSV rows need 9 columns: '" + line + "'");
        auto opt = [&](std::size_t i, std::string_view what) -> std::optional<double> {
            if (cells[i].empty()) {
                return std::nullopt;
            }
            return parse_double(cells[i], what);
        };
        PartialTurbineSpec s;
        s.name = cells[0];
        s.rotor_diameter = opt(1, "rotor_diameter_m");
        s.rated_power = opt(2, "rated_power_kw");
        s.cut_in = opt(3, "cut_in_ms");
        s.cut_out = opt(4, "cut_out_ms");
        s.omega_min = opt(5, "omega_min_rpm");
        s.omega_max = opt(6, "omega_max_rpm");
        s.cp_max = opt(7, "cp_max");
        s.hub_height = opt(8, "hub_height_m");
        specs.push_back(std::move(s));
    }
    return specs;
}

inline void write_spec_csv(std::ostream &os, const std::vector<PartialTurbineSpec> &specs) {
    os << SPEC_CSV_HEADER << '\n';
    auto cell = [](const std::optional<double> &v) {
        return v ? format_g6(*v) : std::string();
    };
    for (const auto &s : specs) {
        os << s.name << ',' << cell(s.rotor_diameter) << ',' << cell(s.rated_power) << ','
           << cell(s.cut_in) << ',' << cell(s.cut_out) << ',' << cell(s.omega_min) << ','
           << cell(s.omega_max) << ',' << cell(s.cp_max) << ',' << cell(s.hub_height) << '\n';
    }
}

namespace detail {
inline constexpr const char *SPEC_FIELDS[] = {"rotor_diameter", "rated_power", "cut_in", "cut_out",
                                              "omega_min",      "omega_max",   "cp_max", "hub_height"};

inline std::optional<double> PartialTurbineSpec::*spec_member(std::string_view field) {
    if (field == "rotor_diameter") return &PartialTurbineSpec::rotor_diameter;
    if (field == "rated_power") return &PartialTurbineSpec::rated_power;
    if (field == "cut_in") return &PartialTurbineSpec::cut_in;
    if (field == "cut_out") return &PartialTurbineSpec::cut_out;
    if (field == "omega_min") return &PartialTurbineSpec::omega_min;
    if (field == "omega_max") return &PartialTurbineSpec::omega_max;
    if (field == "cp_max") return &PartialTurbineSpec::cp_max;
    if (field == "hub_height") return &PartialTurbineSpec::hub_height;
    return nullptr;
}
} // namespace detail

/// Absent or null members stay unknown; unknown keys are rejected.
inline PartialTurbineSpec spec_from_json(const json &j) {
    require(j.is_object(), ErrorCode::ParseError, "turbine spec must be a JSON object");
    PartialTurbineSpec s;
    for (const auto &[key, value] : j.items()) {
        if (key == "name") {
            require(value.is_string(), ErrorCode::ParseError, "name must be a string");
            s.name = value.get<std::string>();
            continue;
        }
        auto member = detail::spec_member(key);
        require(member != nullptr, ErrorCode::ParseError, "unknown turbine field '" + key + "'");
        if (value.is_null()) {
            continue;
        }
        require(value.is_number(), ErrorCode::ParseError, "turbine field '" + key + "' must be a number");
        s.*member = value.get<double>();
    }
    return s;
}

inline json to_json(const PartialTurbineSpec &s) {
    json j;
    j["name"] = s.name;
    for (const char *f : detail::SPEC_FIELDS) {
        const auto &v = s.*detail::spec_member(f);
        j[f] = v ? json(*v) : json(nullptr);
    }
    return j;
}

inline json to_json(const TurbineSpec &s) { return to_json(PartialTurbineSpec::from(s)); }

inline json to_json(const DefaultsReport &r) {
    json filled = json::array();
    for (const auto &f : r.filled_fields) {
        filled.push_back({{"field", f.field}, {"value", f.value}, {"rule", f.rule}});
    }
    return {{"filled_fields", filled}, {"warnings", r.warnings}};
}

inline json to_json(const EnvironmentConditions &e) {
    return {{"ti", e.ti}, {"rho", e.rho}, {"shear_alpha", e.shear_alpha}, {"veer_rate", e.veer_rate}};
}

// ============================================================================
// Cp registry
// ============================================================================

inline json to_json(const CpParameterisation &p) {
    return {{"name", p.name}, {"c1", p.c1},   {"c2", p.c2}, {"c3", p.c3}, {"c4", p.c4},
            {"c5", p.c5},     {"c6", p.c6},   {"c7", p.c7}, {"c8", p.c8}, {"c9", p.c9},
            {"c10", p.c10},   {"x", p.x},     {"provenance", p.provenance}};
}

inline CpParameterisation cp_from_json(const json &j) {
    try {
        CpParameterisation p;
        p.name = j.at("name").get<std::string>();
        p.c1 = j.at("c1").get<double>();
        p.c2 = j.at("c2").get<double>();
        p.c3 = j.at("c3").get<double>();
        p.c4 = j.at("c4").get<double>();
        p.c5 = j.at("c5").get<double>();
        p.c6 = j.at("c6").get<double>();
        p.c7 = j.at("c7").get<double>();
        p.c8 = j.at("c8").get<double>();
        p.c9 = j.at("c9").get<double>();
        p.c10 = j.at("c10").get<double>();
        p.x = j.at("x").get<double>();
        p.provenance = j.value("provenance", "");
        return p;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("Cp parameterisation: ") + e.what());
    }
}

inline json registry_json() {
    json arr = json::array();
    for (const auto &p : cp_registry()) {
        arr.push_back(to_json(p));
    }
    return arr;
}

// ============================================================================
// Validation report
// ============================================================================

inline json to_json(const ValidationEntry &e) {
    json by_ti = json::array();
    for (const auto &[ti, rmse] : e.rmse_by_ti) {
        by_ti.push_back({{"ti", ti}, {"rmse", rmse}});
    }
    return {{"name", e.name},
            {"cp_max_extracted", e.cp_max_extracted},
            {"betz_violation", e.betz_violation},
            {"best_ti", e.best_ti},
            {"rmse_best", e.rmse_best},
            {"rmse_by_ti", by_ti},
            {"shape_anomaly", e.shape_anomaly},
            {"resolved_spec", to_json(e.resolved_spec)},
            {"defaults", to_json(e.defaults)}};
}

inline constexpr std::string_view SUMMARY_CSV_HEADER = "name,cp_max,betz_flag,best_ti,rmse_best";

inline void write_summary_csv(std::ostream &os, const std::vector<ValidationEntry> &entries) {
    os << SUMMARY_CSV_HEADER << '\n';
    for (const auto &e : entries) {
        os << e.name << ',' << format_g6(e.cp_max_extracted) << ',' << (e.betz_violation ? 1 : 0) << ','
           << format_g6(e.best_ti) << ',' << format_g6(e.rmse_best) << '\n';
    }
}

} // namespace wtpc::io
