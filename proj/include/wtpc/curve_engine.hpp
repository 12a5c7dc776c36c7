// Ideal power curve
// Rotor-speed schedule, tip-speed ratio, Cp lookup and the rated-power cap
// under laminar, uniform inflow.
#pragma once

#include <wtpc/cp_models.hpp>
#include <wtpc/error.hpp>
#include <wtpc/power_curve.hpp>
#include <wtpc/turbine.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wtpc {

struct OperatingState {
    double v = 0.0;      // m/s
    double omega = 0.0;  // rpm
    double lambda = 0.0; // tip-speed ratio
    double beta = 0.0;   // degrees
    double cp = 0.0;
};

/**
 * @brief Rotor speed tracking the optimal tip-speed ratio within limits
 *
 * omega = clamp(lambda_opt * v / R, omega_min, omega_max), in rpm.
 */
inline double rotor_speed(double v, const TurbineSpec &spec, double lambda_opt) {
    require(v >= 0.0, ErrorCode::InvalidArgument, "wind speed must be >= 0");
    const double tracking = rad_s_to_rpm(lambda_opt * v / spec.rotor_radius());
    return std::min(spec.omega_max, std::max(spec.omega_min, tracking));
}

/// Tip-speed ratio for a rotor speed given in rpm.
inline double tsr(double v, double omega_rpm, double rotor_diameter) {
    if (!(v > 0.0)) {
        throw Error(ErrorCode::DivisionByZero, "tip-speed ratio undefined for zero wind speed");
    }
    return rpm_to_rad_s(omega_rpm) * (0.5 * rotor_diameter) / v;
}

/// Aerodynamic power 0.5 rho A v^3 Cp, in kW.
inline double raw_power(double v, double cp, double rho, double rotor_diameter) {
    const double area = std::numbers::pi * rotor_diameter * rotor_diameter / 4.0;
    return 0.5 * rho * area * v * v * v * cp / 1000.0;
}

/// Zero pitch throughout the partial-load region.
inline OperatingState operating_state(double v, const TurbineSpec &spec, const ScaledCpModel &model) {
    OperatingState s;
    s.v = v;
    s.omega = rotor_speed(v, spec, model.lambda_opt());
    if (v > 0.0) {
        s.lambda = tsr(v, s.omega, spec.rotor_diameter);
        // outside the fit's valid lambda range Cp is taken as zero
        s.cp = s.lambda > 0.0 ? model.cp_or_zero(s.lambda, s.beta) : 0.0;
    }
    return s;
}

/// Capped power at one wind speed ignoring the cut-in/cut-out gates.
inline double capped_power(double v, const TurbineSpec &spec, const ScaledCpModel &model, double rho) {
    if (!(v > 0.0)) {
        return 0.0;
    }
    const auto state = operating_state(v, spec, model);
    return std::min(spec.rated_power, raw_power(v, state.cp, rho, spec.rotor_diameter));
}

/**
 * @brief Power curve under ideal conditions
 *
 * Zero below cut-in and above cut-out (both limits producing), otherwise
 * the aerodynamic power capped at rated power.
 */
inline PowerCurve ideal_curve(const TurbineSpec &spec, const ScaledCpModel &model, double rho,
                              const WindGrid &grid = {}) {
    spec.validate();
    grid.validate();
    require(std::isfinite(rho) && rho > 0.0, ErrorCode::InvalidArgument, "air density must be > 0");

    PowerCurve curve;
    curve.grid = grid;
    curve.meta.spec = spec;
    curve.meta.cp_model = model.base().name;
    curve.meta.environment.rho = rho;
    curve.power.assign(grid.size(), 0.0);
    for (std::size_t i = 0; i < curve.power.size(); ++i) {
        const double v = grid.at(i);
        if (in_operating_range(v, spec)) {
            curve.power[i] = capped_power(v, spec, model, rho);
        }
    }
    return curve;
}

} // namespace wtpc
