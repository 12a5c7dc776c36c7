// Environmental corrections
// Turbulence-intensity smoothing of a power curve and the rotor-equivalent
// wind speed under wind shear and veer.
#pragma once

#include <wtpc/error.hpp>
#include <wtpc/power_curve.hpp>
#include <wtpc/turbine.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace wtpc {

// ============================================================================
// Turbulence intensity
// ============================================================================

/// Gaussian support is cut at this many standard deviations.
inline constexpr double KERNEL_HALF_WIDTH_SIGMAS = 5.0;

/// Weights on grid nodes first, first+1, ... (first may be negative).
struct GaussianKernel {
    std::ptrdiff_t first = 0;
    std::vector<double> weights;
};

/**
 * @brief Discrete Gaussian of mean u and standard deviation u*ti on the grid
 *
 * Truncated at +-5 sigma and renormalised. Collapses to the nearest node
 * when sigma < dv/2.
 */
inline GaussianKernel gaussian_kernel(double u, double ti, double dv) {
    const double sigma = u * ti;
    GaussianKernel k;
    if (!(sigma >= 0.5 * dv)) {
        k.first = static_cast<std::ptrdiff_t>(std::llround(u / dv));
        k.weights = {1.0};
        return k;
    }
    const double reach = KERNEL_HALF_WIDTH_SIGMAS * sigma;
    const auto lo = static_cast<std::ptrdiff_t>(std::ceil((u - reach) / dv - 1e-9));
    const auto hi = static_cast<std::ptrdiff_t>(std::floor((u + reach) / dv + 1e-9));
    k.first = lo;
    k.weights.reserve(static_cast<std::size_t>(hi - lo + 1));
    double total = 0.0;
    for (std::ptrdiff_t j = lo; j <= hi; ++j) {
        const double z = (static_cast<double>(j) * dv - u) / sigma;
        const double w = std::exp(-0.5 * z * z);
        k.weights.push_back(w);
        total += w;
    }
    for (double &w : k.weights) {
        w /= total;
    }
    return k;
}

namespace detail {

/// Last grid index at or below cut-out.
inline std::size_t cut_out_index(const PowerCurve &curve) {
    const auto &spec = curve.meta.spec;
    const auto n = curve.power.size();
    const double pos = std::floor(spec.cut_out / curve.grid.dv + GATE_EPS);
    if (pos < 0.0) {
        return 0;
    }
    return std::min(n - 1, static_cast<std::size_t>(pos));
}

/// The curve with the cut-out drop replaced by its last producing value.
inline std::vector<double> plateau_extended(const PowerCurve &curve) {
    std::vector<double> ext = curve.power;
    const auto cut = cut_out_index(curve);
    std::fill(ext.begin() + static_cast<std::ptrdiff_t>(cut) + 1, ext.end(), ext[cut]);
    return ext;
}

} // namespace detail

/**
 * @brief Smooth a power curve for turbulence intensity ti
 *
 * Each point becomes the kernel-weighted mean of the curve around it,
 * with the cut-out drop removed beforehand (plateau extended, zero below
 * 0 m/s) and re-applied sharply afterwards.
 */
inline PowerCurve apply_turbulence(const PowerCurve &curve, double ti) {
    require(std::isfinite(ti) && ti >= 0.0, ErrorCode::InvalidArgument,
            "turbulence intensity must be >= 0");
    PowerCurve out = curve;
    out.meta.environment.ti = ti;
    if (ti == 0.0 || curve.power.empty()) {
        return out;
    }

    const auto ext = detail::plateau_extended(curve);
    const auto n = static_cast<std::ptrdiff_t>(ext.size());
    const auto lookup = [&](std::ptrdiff_t j) {
        if (j < 0) {
            return 0.0;
        }
        return ext[static_cast<std::size_t>(std::min(j, n - 1))];
    };

    const double dv = curve.grid.dv;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) * dv;
        auto &p = out.power[static_cast<std::size_t>(i)];
        if (above_cut_out(u, curve.meta.spec)) {
            p = 0.0;
            continue;
        }
        if (u <= 0.0) {
            continue;
        }
        const auto k = gaussian_kernel(u, ti, dv);
        double acc = 0.0;
        for (std::size_t m = 0; m < k.weights.size(); ++m) {
            acc += k.weights[m] * lookup(k.first + static_cast<std::ptrdiff_t>(m));
        }
        p = acc;
    }
    return out;
}

// ============================================================================
// Rotor bands
// ============================================================================

/// Horizontal slices of the rotor disc, heights relative to the hub.
struct RotorBands {
    std::size_t n = 0;
    std::vector<double> heights;
    std::vector<double> areas;

    double total_area() const {
        double a = 0.0;
        for (double x : areas) {
            a += x;
        }
        return a;
    }
};

inline constexpr std::size_t DEFAULT_BAND_COUNT = 100;

/// n equal-height bands with exact circular-segment areas.
inline RotorBands band_areas(double rotor_diameter, double hub_height, std::size_t n) {
    require(n >= 1, ErrorCode::InvalidArgument, "band count must be >= 1");
    require(rotor_diameter > 0.0, ErrorCode::InvalidArgument, "rotor_diameter must be > 0");
    const double r = 0.5 * rotor_diameter;
    require(hub_height > r, ErrorCode::GroundStrike, "hub_height must exceed rotor_diameter/2");

    // integral of the chord length 2 sqrt(R^2 - h^2) from 0 to h
    const auto primitive = [r](double h) {
        h = std::clamp(h, -r, r);
        return h * std::sqrt(std::max(0.0, r * r - h * h)) + r * r * std::asin(h / r);
    };

    RotorBands b;
    b.n = n;
    b.heights.resize(n);
    b.areas.resize(n);
    const double step = rotor_diameter / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = -r + static_cast<double>(i) * step;
        const double hi = i + 1 == n ? r : -r + static_cast<double>(i + 1) * step;
        b.heights[i] = 0.5 * (lo + hi);
        b.areas[i] = primitive(hi) - primitive(lo);
    }
    return b;
}

// ============================================================================
// Rotor-equivalent wind speed
// ============================================================================

/**
 * @brief Rotor-equivalent wind speed
 *
 * Cube root of the area-weighted mean of (U_i cos dphi_i)^3 over the
 * bands, with a power-law speed profile and a direction change linear
 * in height (veer_rate in degrees per meter).
 */
inline double rews(double u_hub, const TurbineSpec &spec, double shear_alpha, double veer_rate,
                   const RotorBands &bands) {
    require(u_hub >= 0.0, ErrorCode::InvalidArgument, "hub wind speed must be >= 0");
    require(spec.hub_height.has_value(), ErrorCode::MissingMandatoryField,
            "hub_height is required for shear and veer");
    const double z_hub = *spec.hub_height;
    require(z_hub > spec.rotor_radius(), ErrorCode::GroundStrike,
            "hub_height must exceed rotor_diameter/2");
    if (shear_alpha == 0.0 && veer_rate == 0.0) {
        return u_hub;
    }

    const double deg = std::numbers::pi / 180.0;
    const double area = spec.rotor_area();
    double acc = 0.0;
    for (std::size_t i = 0; i < bands.n; ++i) {
        const double h = bands.heights[i];
        const double u = u_hub * std::pow((z_hub + h) / z_hub, shear_alpha);
        const double effective = std::max(0.0, u * std::cos(veer_rate * h * deg));
        acc += bands.areas[i] / area * effective * effective * effective;
    }
    return std::cbrt(acc);
}

inline double rews(double u_hub, const TurbineSpec &spec, double shear_alpha, double veer_rate,
                   std::size_t n_bands = DEFAULT_BAND_COUNT) {
    require(spec.hub_height.has_value(), ErrorCode::MissingMandatoryField,
            "hub_height is required for shear and veer");
    return rews(u_hub, spec, shear_alpha, veer_rate,
                band_areas(spec.rotor_diameter, *spec.hub_height, n_bands));
}

/**
 * @brief Re-evaluate a curve at the rotor-equivalent wind speed
 *
 * output(u_hub) = input(rews(u_hub)) by linear interpolation. Cut-out is
 * decided on the hub speed, so the input is plateau-extended first.
 */
inline PowerCurve apply_shear_veer(const PowerCurve &curve, const TurbineSpec &spec, double shear_alpha,
                                   double veer_rate, std::size_t n_bands = DEFAULT_BAND_COUNT) {
    require(spec.hub_height.has_value(), ErrorCode::MissingMandatoryField,
            "hub_height is required for shear and veer");
    const auto bands = band_areas(spec.rotor_diameter, *spec.hub_height, n_bands);

    PowerCurve out = curve;
    out.meta.environment.shear_alpha = shear_alpha;
    out.meta.environment.veer_rate = veer_rate;
    if (shear_alpha == 0.0 && veer_rate == 0.0) {
        return out;
    }

    PowerCurve ext = curve;
    ext.power = detail::plateau_extended(curve);
    for (std::size_t i = 0; i < out.power.size(); ++i) {
        const double u = curve.grid.at(i);
        if (above_cut_out(u, spec)) {
            out.power[i] = 0.0;
            continue;
        }
        out.power[i] = ext.interpolate(rews(u, spec, shear_alpha, veer_rate, bands));
    }
    return out;
}

} // namespace wtpc
