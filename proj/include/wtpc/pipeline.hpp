// End-to-end synthesis
// ideal curve -> shear/veer remapping -> turbulence smoothing -> cut-out gate
#pragma once

#include <wtpc/cp_models.hpp>
#include <wtpc/curve_engine.hpp>
#include <wtpc/environment.hpp>
#include <wtpc/power_curve.hpp>
#include <wtpc/turbine.hpp>

#include <string>
#include <string_view>

namespace wtpc {

enum class CorrectionOrder {
    ShearThenTurbulence,
    TurbulenceThenShear,
};

inline constexpr std::string_view to_string(CorrectionOrder order) {
    return order == CorrectionOrder::ShearThenTurbulence ? "shear_then_ti" : "ti_then_shear";
}

inline CorrectionOrder parse_correction_order(std::string_view s) {
    if (s == "shear_then_ti") {
        return CorrectionOrder::ShearThenTurbulence;
    }
    if (s == "ti_then_shear") {
        return CorrectionOrder::TurbulenceThenShear;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown correction order '" + std::string(s) + "'");
}

struct SynthesisOptions {
    WindGrid grid;
    std::size_t n_bands = DEFAULT_BAND_COUNT;
    CorrectionOrder order = CorrectionOrder::ShearThenTurbulence;
};

inline PowerCurve synthesize(const TurbineSpec &spec, const ScaledCpModel &model,
                             const EnvironmentConditions &env, const SynthesisOptions &opts = {}) {
    env.validate();
    auto curve = ideal_curve(spec, model, env.rho, opts.grid);
    const auto shear = [&](const PowerCurve &c) {
        return env.has_shear_or_veer()
                   ? apply_shear_veer(c, spec, env.shear_alpha, env.veer_rate, opts.n_bands)
                   : c;
    };
    if (opts.order == CorrectionOrder::ShearThenTurbulence) {
        curve = apply_turbulence(shear(curve), env.ti);
    } else {
        curve = shear(apply_turbulence(curve, env.ti));
    }
    curve.meta.environment = env;
    return curve;
}

/// Scales the named parameterisation to spec.cp_max.
inline PowerCurve synthesize(const TurbineSpec &spec, std::string_view cp_model,
                             const EnvironmentConditions &env, const SynthesisOptions &opts = {}) {
    return synthesize(spec, scale_cp(get_cp_model(cp_model), spec.cp_max), env, opts);
}

} // namespace wtpc
