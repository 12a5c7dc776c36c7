// Power curve value types
#pragma once

#include <wtpc/error.hpp>
#include <wtpc/turbine.hpp>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace wtpc {

/// Uniform wind-speed grid [0, v_max] with step dv.
struct WindGrid {
    double dv = 0.05;
    double v_max = 40.0;

    void validate() const {
        require(std::isfinite(dv) && dv > 0.0, ErrorCode::InvalidArgument, "grid step must be > 0");
        require(std::isfinite(v_max) && v_max >= dv, ErrorCode::InvalidArgument,
                "grid upper bound must be >= step");
    }

    std::size_t size() const { return static_cast<std::size_t>(std::lround(v_max / dv)) + 1; }
    double at(std::size_t i) const { return static_cast<double>(i) * dv; }

    std::vector<double> speeds() const {
        std::vector<double> v(size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = at(i);
        }
        return v;
    }

    bool operator==(const WindGrid &) const = default;
};

/// Site conditions. ti and rho enter every curve, shear/veer need a hub height.
struct EnvironmentConditions {
    double ti = 0.0;
    double rho = 1.225;
    double shear_alpha = 0.0;
    double veer_rate = 0.0; // degrees per meter

    void validate() const {
        require(std::isfinite(ti) && ti >= 0.0 && ti < 1.0, ErrorCode::InvalidArgument,
                "turbulence intensity must lie in [0, 1)");
        require(std::isfinite(rho) && rho > 0.0, ErrorCode::InvalidArgument, "air density must be > 0");
        require(std::isfinite(shear_alpha), ErrorCode::InvalidArgument, "shear exponent must be finite");
        require(std::isfinite(veer_rate), ErrorCode::InvalidArgument, "veer rate must be finite");
    }

    /// Density outside the [0.9, 1.5] kg/m^3 sanity band is suspicious but allowed.
    bool rho_out_of_band() const { return rho < 0.9 || rho > 1.5; }

    bool has_shear_or_veer() const { return shear_alpha != 0.0 || veer_rate != 0.0; }

    bool operator==(const EnvironmentConditions &) const = default;
};

struct CurveMeta {
    TurbineSpec spec;
    std::string cp_model;
    EnvironmentConditions environment;
};

struct PowerCurve {
    WindGrid grid;
    std::vector<double> power; // kW per grid point
    CurveMeta meta;

    /// Linear interpolation; clamps to the end values outside the grid.
    double interpolate(double v) const {
        if (power.empty()) {
            return 0.0;
        }
        if (v <= 0.0) {
            return power.front();
        }
        const double pos = v / grid.dv;
        const auto last = power.size() - 1;
        if (pos >= static_cast<double>(last)) {
            return power.back();
        }
        const auto i = static_cast<std::size_t>(pos);
        const double t = pos - static_cast<double>(i);
        return power[i] + t * (power[i + 1] - power[i]);
    }
};

/// Relative slack used when comparing grid speeds to cut-in/cut-out.
inline constexpr double GATE_EPS = 1e-9;

/// Cut-in and cut-out are both inclusive.
inline bool in_operating_range(double v, const TurbineSpec &spec) {
    return v >= spec.cut_in - GATE_EPS && v <= spec.cut_out + GATE_EPS;
}

inline bool above_cut_out(double v, const TurbineSpec &spec) { return v > spec.cut_out + GATE_EPS; }

} // namespace wtpc
