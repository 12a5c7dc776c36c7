// Power coefficient models
// Parametric Cp(lambda, beta) family, optimal tip-speed ratio search and
// rescaling of a Cp surface to a prescribed peak value.
#pragma once

#include <wtpc/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wtpc {

// ============================================================================
// Constants
// ============================================================================

/// Betz limit 16/27
inline constexpr double BETZ_LIMIT = 16.0 / 27.0;

/// Tip-speed ratio domain over which the Cp models are searched
inline constexpr double LAMBDA_SEARCH_MIN = 0.5;
inline constexpr double LAMBDA_SEARCH_MAX = 25.0;
inline constexpr double LAMBDA_COARSE_STEP = 0.01;

// ============================================================================
// Parameterisation
// ============================================================================

/**
 * @brief Coefficient set of the general empirical Cp form
 *
 *   Cp = c1 (c2/li - c3 b - c4 li b - c5 b^x - c6) exp(-c7/li) + c8 l
 *   1/li = 1/(l + c9 b) - c10/(b^3 + 1)
 *
 * with l the tip-speed ratio and b the blade pitch angle in degrees.
 */
struct CpParameterisation {
    std::string name;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double c5 = 0.0;
    double c6 = 0.0;
    double c7 = 0.0;
    double c8 = 0.0;
    double c9 = 0.0;
    double c10 = 0.0;
    double x = 0.0;
    std::string provenance;

    std::array<double, 11> coefficients() const {
        return {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, x};
    }

    bool all_finite() const {
        const auto c = coefficients();
        return std::all_of(c.begin(), c.end(),
                           [](double v) { return std::isfinite(v); });
    }
};

/**
 * @brief Evaluate the general Cp form
 *
 * Negative values are clamped to zero. Throws NonFiniteResult when the
 * intermediate lambda_i degenerates (non-positive or overflowing), which
 * means lambda lies outside the range where the fit is meaningful.
 */
inline double cp_general(double lambda, double beta, const CpParameterisation &p) {
    require(std::isfinite(lambda) && lambda > 0.0, ErrorCode::InvalidArgument,
            "tip-speed ratio must be > 0");
    require(std::isfinite(beta) && beta >= 0.0, ErrorCode::InvalidArgument,
            "pitch angle must be >= 0");

    const double shifted = lambda + p.c9 * beta;
    if (!(shifted > 0.0)) {
        throw Error(ErrorCode::NonFiniteResult, "lambda + c9*beta <= 0");
    }
    const double inv_li = 1.0 / shifted - p.c10 / (beta * beta * beta + 1.0);
    if (!(inv_li > 0.0) || !std::isfinite(inv_li)) {
        throw Error(ErrorCode::NonFiniteResult, "lambda_i denominator <= 0");
    }
    const double li = 1.0 / inv_li;

    const double pitch_term = p.c5 == 0.0 ? 0.0 : p.c5 * std::pow(beta, p.x);
    const double cp = p.c1 *
                          (p.c2 * inv_li - p.c3 * beta - p.c4 * li * beta -
                           pitch_term - p.c6) *
                          std::exp(-p.c7 * inv_li) +
                      p.c8 * lambda;
    if (!std::isfinite(cp)) {
        throw Error(ErrorCode::NonFiniteResult, "Cp evaluated to a non-finite value");
    }
    return std::max(cp, 0.0);
}

/// cp_general with every failure mapped to 0.
inline double cp_or_zero(double lambda, double beta, const CpParameterisation &p) noexcept {
    try {
        return cp_general(lambda, beta, p);
    } catch (const Error &) {
        return 0.0;
    }
}

// ============================================================================
// Optimal tip-speed ratio
// ============================================================================

struct OptimalTsr {
    double lambda = 0.0;
    double cp = 0.0;
};

namespace detail {

/// Golden-section maximisation of f on [a, b].
template <typename F>
double golden_section_argmax(F &&f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
        // ties move towards the lower end
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

/**
 * @brief Tip-speed ratio maximising Cp at zero pitch
 *
 * Coarse scan of [0.5, 25] at 0.01 followed by golden-section refinement
 * inside the bracketing cells. Equal maxima resolve to the smallest lambda.
 */
inline OptimalTsr lambda_opt(const CpParameterisation &p) {
    auto f = [&p](double lambda) { return cp_or_zero(lambda, 0.0, p); };

    const auto n = static_cast<std::size_t>(
        std::lround((LAMBDA_SEARCH_MAX - LAMBDA_SEARCH_MIN) / LAMBDA_COARSE_STEP));
    std::size_t best = 0;
    double best_cp = -1.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double cp = f(LAMBDA_SEARCH_MIN + static_cast<double>(i) * LAMBDA_COARSE_STEP);
        if (cp > best_cp) {
            best_cp = cp;
            best = i;
        }
    }
    if (!(best_cp > 0.0)) {
        throw Error(ErrorCode::NoPositiveCp,
                    "parameterisation '" + p.name + "' has no positive Cp at zero pitch");
    }

    const auto node = [](std::size_t i) {
        return LAMBDA_SEARCH_MIN + static_cast<double>(i) * LAMBDA_COARSE_STEP;
    };
    const double lo = node(best == 0 ? 0 : best - 1);
    const double hi = best == n ? LAMBDA_SEARCH_MAX : node(best + 1);
    const double refined = detail::golden_section_argmax(f, lo, hi, 1e-11);

    // candidates in ascending lambda so ties keep the smallest
    OptimalTsr result{node(best), best_cp};
    for (double candidate : {lo, refined, hi}) {
        const double cp = f(candidate);
        if (cp > result.cp || (cp == result.cp && candidate < result.lambda)) {
            result = {candidate, cp};
        }
    }
    return result;
}

// ============================================================================
// Scaled model
// ============================================================================

/**
 * @brief Cp surface rescaled so that its zero-pitch peak equals cp_max
 *
 * Built through scale_cp(); immutable afterwards.
 */
class ScaledCpModel {
  public:
    const CpParameterisation &base() const noexcept { return base_; }
    double cp_max() const noexcept { return cp_max_; }
    double lambda_opt() const noexcept { return lambda_opt_; }
    double raw_cp_at_opt() const noexcept { return raw_cp_at_opt_; }
    double scale_factor() const noexcept { return cp_max_ / raw_cp_at_opt_; }

    double cp(double lambda, double beta = 0.0) const {
        return cp_general(lambda, beta, base_) * scale_factor();
    }

    double cp_or_zero(double lambda, double beta = 0.0) const noexcept {
        return wtpc::cp_or_zero(lambda, beta, base_) * scale_factor();
    }

  private:
    ScaledCpModel(CpParameterisation base, double cp_max, OptimalTsr opt)
        : base_(std::move(base)), cp_max_(cp_max), lambda_opt_(opt.lambda),
          raw_cp_at_opt_(opt.cp) {}

    friend ScaledCpModel scale_cp(const CpParameterisation &p, double cp_max);

    CpParameterisation base_;
    double cp_max_;
    double lambda_opt_;
    double raw_cp_at_opt_;
};

inline ScaledCpModel scale_cp(const CpParameterisation &p, double cp_max) {
    require(std::isfinite(cp_max) && cp_max > 0.0 && cp_max <= BETZ_LIMIT,
            ErrorCode::InvalidArgument, "cp_max must lie in (0, 16/27]");
    require(p.all_finite(), ErrorCode::InvalidArgument,
            "parameterisation '" + p.name + "' has non-finite coefficients");
    return ScaledCpModel(p, cp_max, lambda_opt(p));
}

// ============================================================================
// Registry
// ============================================================================

/**
 * Six literature fits of the general form. The coefficient table is not
 * available in machine-readable form; values are transcribed from the
 * cited works as carried by the original open-source implementation.
 */
inline const std::vector<CpParameterisation> &cp_registry() {
    static const std::vector<CpParameterisation> registry = {
        {"Slootweg2003", 0.73, 151.0, 0.58, 0.0, 0.002, 13.2, 18.4, 0.0, -0.02, 0.003, 2.14,
         "Slootweg et al. (2003), general model of variable-speed wind turbines"},
        {"Heier2014", 0.5, 116.0, 0.4, 0.0, 0.0, 5.0, 21.0, 0.0, 0.08, 0.035, 0.0,
         "Heier (2014), Grid integration of wind energy"},
        {"Thongam2009", 0.5176, 116.0, 0.4, 0.0, 0.0, 5.0, 21.0, 0.006795, 0.08, 0.035, 0.0,
         "Thongam et al. (2009), MPPT control of PMSG wind energy systems"},
        {"DeKooning2013", 0.77, 151.0, 0.0, 0.0, 0.0, 13.65, 18.4, 0.0, 0.0, 0.0, 0.0,
         "De Kooning et al. (2013), MPPT in small wind turbines"},
        {"Ochieng2014", 0.5, 116.0, 0.0, 0.4, 0.0, 5.0, 21.0, 0.0, 0.08, 0.035, 0.0,
         "Ochieng and Manyonge (2014), PMSG wind turbine modelling"},
        {"Dai2016", 0.22, 120.0, 0.4, 0.0, 0.0, 5.0, 12.5, 0.0, 0.08, 0.035, 0.0,
         "Dai et al. (2016), power coefficient from SCADA data"},
    };
    return registry;
}

inline constexpr std::string_view DEFAULT_CP_MODEL = "Dai2016";

inline std::optional<CpParameterisation> find_cp_model(std::string_view name) {
    for (const auto &p : cp_registry()) {
        if (p.name == name) {
            return p;
        }
    }
    return std::nullopt;
}

inline const CpParameterisation &get_cp_model(std::string_view name) {
    for (const auto &p : cp_registry()) {
        if (p.name == name) {
            return p;
        }
    }
    throw Error(ErrorCode::UnknownModel, "no Cp parameterisation named '" + std::string(name) + "'");
}

} // namespace wtpc
