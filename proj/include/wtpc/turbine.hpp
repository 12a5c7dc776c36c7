// Turbine characteristics
// Catalogue data of a turbine and the statistical defaults used to fill
// characteristics missing from a product sheet.
#pragma once

#include <wtpc/cp_models.hpp>
#include <wtpc/error.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace wtpc {

// ============================================================================
// Units
// ============================================================================

inline constexpr double RPM_TO_RAD_S = 2.0 * std::numbers::pi / 60.0;

inline constexpr double rpm_to_rad_s(double rpm) { return rpm * RPM_TO_RAD_S; }
inline constexpr double rad_s_to_rpm(double rad_s) { return rad_s / RPM_TO_RAD_S; }

// ============================================================================
// Turbine specification
// ============================================================================

/// Fully resolved turbine. Speeds in m/s, power in kW, rotation in rpm.
struct TurbineSpec {
    std::string name;
    double rotor_diameter = 0.0;
    double rated_power = 0.0;
    double cut_in = 0.0;
    double cut_out = 0.0;
    double omega_min = 0.0;
    double omega_max = 0.0;
    double cp_max = 0.0;
    std::optional<double> hub_height;

    double rotor_radius() const { return 0.5 * rotor_diameter; }
    double rotor_area() const { return std::numbers::pi * rotor_diameter * rotor_diameter / 4.0; }

    /// Throws InvalidSpec on the first violated invariant.
    void validate() const {
        auto check = [](bool ok, const std::string &what) {
            require(ok, ErrorCode::InvalidSpec, what);
        };
        check(std::isfinite(rotor_diameter) && rotor_diameter > 0.0, "rotor_diameter must be > 0");
        check(std::isfinite(rated_power) && rated_power > 0.0, "rated_power must be > 0");
        check(std::isfinite(cut_in) && cut_in >= 0.0, "cut_in must be >= 0");
        check(std::isfinite(cut_out) && cut_out > cut_in, "cut_out must exceed cut_in");
        check(std::isfinite(omega_min) && omega_min >= 0.0, "omega_min must be >= 0");
        check(std::isfinite(omega_max) && omega_max >= omega_min, "omega_max must be >= omega_min");
        check(std::isfinite(cp_max) && cp_max > 0.0 && cp_max <= BETZ_LIMIT,
              "cp_max must lie in (0, 16/27]");
        if (hub_height) {
            check(std::isfinite(*hub_height) && *hub_height > rotor_radius(),
                  "hub_height must exceed rotor_diameter/2");
        }
    }

    bool operator==(const TurbineSpec &) const = default;
};

/// Catalogue record in which any characteristic may be unknown.
struct PartialTurbineSpec {
    std::string name;
    std::optional<double> rotor_diameter;
    std::optional<double> rated_power;
    std::optional<double> cut_in;
    std::optional<double> cut_out;
    std::optional<double> omega_min;
    std::optional<double> omega_max;
    std::optional<double> cp_max;
    std::optional<double> hub_height;

    static PartialTurbineSpec from(const TurbineSpec &s) {
        return {s.name,     s.rotor_diameter, s.rated_power, s.cut_in, s.cut_out,
                s.omega_min, s.omega_max,     s.cp_max,      s.hub_height};
    }

    bool operator==(const PartialTurbineSpec &) const = default;
};

// ============================================================================
// Statistical defaults
// ============================================================================

/// Most frequent maximum power coefficient across commercial turbines.
inline constexpr double default_cp_max() { return 0.44; }

struct CutSpeeds {
    double cut_in;
    double cut_out;
};

inline constexpr CutSpeeds default_cut_speeds() { return {3.0, 25.0}; }

// omega = coefficient * D^exponent, rpm
inline constexpr double OMEGA_MIN_COEFFICIENT = 1046.558;
inline constexpr double OMEGA_MIN_EXPONENT = -1.0911;
inline constexpr double OMEGA_MAX_COEFFICIENT = 705.406;
inline constexpr double OMEGA_MAX_EXPONENT = -0.8349;

struct RotationSpeeds {
    double omega_min;
    double omega_max;
    /// The two fits cross for rotors below ~4.7 m; values are left as computed.
    bool crossed = false;
};

inline RotationSpeeds default_rotation_speeds(double rotor_diameter) {
    require(std::isfinite(rotor_diameter) && rotor_diameter > 0.0, ErrorCode::InvalidArgument,
            "rotor_diameter must be > 0");
    const double lo = OMEGA_MIN_COEFFICIENT * std::pow(rotor_diameter, OMEGA_MIN_EXPONENT);
    const double hi = OMEGA_MAX_COEFFICIENT * std::pow(rotor_diameter, OMEGA_MAX_EXPONENT);
    return {lo, hi, lo > hi};
}

// ============================================================================
// Completion
// ============================================================================

namespace rule {
inline constexpr const char *CP_MAX = "modal_cp_max";
inline constexpr const char *CUT_SPEEDS = "typical_cut_speeds";
inline constexpr const char *OMEGA_MIN_FIT = "omega_min_diameter_fit";
inline constexpr const char *OMEGA_MAX_FIT = "omega_max_diameter_fit";
} // namespace rule

struct FilledField {
    std::string field;
    double value = 0.0;
    std::string rule;

    bool operator==(const FilledField &) const = default;
};

struct DefaultsReport {
    std::vector<FilledField> filled_fields;
    std::vector<std::string> warnings;

    bool empty() const { return filled_fields.empty() && warnings.empty(); }
};

struct CompletedSpec {
    TurbineSpec spec;
    DefaultsReport report;
};

/**
 * @brief Fill unknown characteristics with the statistical defaults
 *
 * Rotor diameter and rated power are mandatory. The result is validated;
 * default rotation speeds that cross (very small rotors) are reported and
 * then rejected as InvalidSpec.
 */
inline CompletedSpec complete_spec(const PartialTurbineSpec &partial) {
    require(partial.rotor_diameter.has_value(), ErrorCode::MissingMandatoryField,
            "rotor_diameter is required");
    require(partial.rated_power.has_value(), ErrorCode::MissingMandatoryField,
            "rated_power is required");
    require(std::isfinite(*partial.rotor_diameter) && *partial.rotor_diameter > 0.0,
            ErrorCode::InvalidSpec, "rotor_diameter must be > 0");

    CompletedSpec out;
    TurbineSpec &s = out.spec;
    DefaultsReport &report = out.report;
    s.name = partial.name;
    s.rotor_diameter = *partial.rotor_diameter;
    s.rated_power = *partial.rated_power;
    s.hub_height = partial.hub_height;

    auto fill = [&report](std::optional<double> given, double fallback, const char *field,
                          const char *why) {
        if (given) {
            return *given;
        }
        report.filled_fields.push_back({field, fallback, why});
        return fallback;
    };

    const auto cut = default_cut_speeds();
    s.cut_in = fill(partial.cut_in, cut.cut_in, "cut_in", rule::CUT_SPEEDS);
    s.cut_out = fill(partial.cut_out, cut.cut_out, "cut_out", rule::CUT_SPEEDS);

    const auto rot = default_rotation_speeds(s.rotor_diameter);
    s.omega_min = fill(partial.omega_min, rot.omega_min, "omega_min", rule::OMEGA_MIN_FIT);
    s.omega_max = fill(partial.omega_max, rot.omega_max, "omega_max", rule::OMEGA_MAX_FIT);
    if (rot.crossed && !partial.omega_min && !partial.omega_max) {
        report.warnings.push_back("default omega_min exceeds default omega_max for rotor_diameter " +
                                  std::to_string(s.rotor_diameter) + " m");
    }

    s.cp_max = fill(partial.cp_max, default_cp_max(), "cp_max", rule::CP_MAX);

    s.validate();
    return out;
}

} // namespace wtpc
