// Validation against manufacturer curves
// Cp extraction from measured curves, Betz screening and turbulence
// intensity matching.
#pragma once

#include <wtpc/cp_models.hpp>
#include <wtpc/curve_engine.hpp>
#include <wtpc/error.hpp>
#include <wtpc/pipeline.hpp>
#include <wtpc/turbine.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace wtpc {

struct CurveSample {
    double v = 0.0; // m/s
    double p = 0.0; // kW
};

struct MeasuredCurve {
    PartialTurbineSpec turbine;
    std::vector<CurveSample> samples;

    void validate() const {
        require(samples.size() >= 4, ErrorCode::InvalidArgument,
                "measured curve needs at least 4 samples");
        for (std::size_t i = 0; i < samples.size(); ++i) {
            require(std::isfinite(samples[i].v) && std::isfinite(samples[i].p), ErrorCode::InvalidArgument,
                    "measured curve contains non-finite values");
            require(samples[i].p >= 0.0, ErrorCode::InvalidArgument, "measured power must be >= 0");
            require(i == 0 || samples[i].v > samples[i - 1].v, ErrorCode::InvalidArgument,
                    "measured wind speeds must be strictly increasing");
        }
    }
};

// ============================================================================
// Cp extraction
// ============================================================================

struct CpExtraction {
    std::vector<CurveSample> cp_of_v; // p holds Cp here
    double cp_max = 0.0;
};

/// Cp(v) = P / (0.5 rho A v^3) for every sample with v > 0.
inline CpExtraction invert_cp(const MeasuredCurve &m, double rho) {
    require(m.turbine.rotor_diameter.has_value() && *m.turbine.rotor_diameter > 0.0,
            ErrorCode::MissingDiameter, "rotor diameter is needed to invert the power equation");
    require(std::isfinite(rho) && rho > 0.0, ErrorCode::InvalidArgument, "air density must be > 0");
    const double d = *m.turbine.rotor_diameter;
    CpExtraction out;
    for (const auto &s : m.samples) {
        if (!(s.v > 0.0)) {
            continue;
        }
        const double cp = s.p / raw_power(s.v, 1.0, rho, d);
        out.cp_of_v.push_back({s.v, cp});
        out.cp_max = std::max(out.cp_max, cp);
    }
    return out;
}

/// True when the extracted peak exceeds the Betz limit.
inline bool betz_screen(double cp_max) { return cp_max > BETZ_LIMIT; }

// ============================================================================
// Turbulence intensity matching
// ============================================================================

inline const std::vector<double> &default_ti_grid() {
    static const std::vector<double> grid = {0.0, 0.025, 0.05, 0.075, 0.10};
    return grid;
}

/// Comparison stops short of cut-out by this fraction.
inline constexpr double COMPARISON_UPPER_FRACTION = 0.95;

/// Best normalised RMSE above which a curve is flagged as not matching the model shape.
inline constexpr double SHAPE_ANOMALY_RMSE = 0.05;

struct MatchOptions {
    double rho = 1.225;
    std::string cp_model = std::string(DEFAULT_CP_MODEL);
    WindGrid grid;
};

struct ValidationEntry {
    std::string name;
    double cp_max_extracted = 0.0;
    bool betz_violation = false;
    double best_ti = 0.0;
    double rmse_best = 0.0;
    std::vector<std::pair<double, double>> rmse_by_ti; // ascending TI
    bool shape_anomaly = false;
    TurbineSpec resolved_spec;
    DefaultsReport defaults;
};

/// RMSE over samples within [cut_in, 0.95 cut_out], divided by rated power.
inline double normalized_rmse(const PowerCurve &model, const std::vector<CurveSample> &samples,
                              const TurbineSpec &spec) {
    const double upper = COMPARISON_UPPER_FRACTION * spec.cut_out;
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto &s : samples) {
        if (s.v < spec.cut_in - GATE_EPS || s.v > upper + GATE_EPS) {
            continue;
        }
        const double e = model.interpolate(s.v) - s.p;
        sum += e * e;
        ++count;
    }
    require(count > 0, ErrorCode::InvalidArgument, "no measured samples inside the comparison range");
    return std::sqrt(sum / static_cast<double>(count)) / spec.rated_power;
}

/**
 * @brief Score a measured curve against synthesized curves over a TI grid
 *
 * Missing characteristics are filled with the statistical defaults. The
 * best TI minimises the normalised RMSE; equal scores resolve to the
 * smaller TI.
 */
inline ValidationEntry match_over_ti(const MeasuredCurve &m,
                                     const std::vector<double> &ti_grid = default_ti_grid(),
                                     const MatchOptions &opts = {}) {
    m.validate();
    require(!ti_grid.empty(), ErrorCode::InvalidArgument, "TI grid must not be empty");

    ValidationEntry entry;
    entry.name = m.turbine.name;
    auto completed = complete_spec(m.turbine);
    entry.resolved_spec = completed.spec;
    entry.defaults = std::move(completed.report);

    const auto extraction = invert_cp(m, opts.rho);
    entry.cp_max_extracted = extraction.cp_max;
    entry.betz_violation = betz_screen(extraction.cp_max);

    std::vector<double> tis = ti_grid;
    std::sort(tis.begin(), tis.end());

    const auto model = scale_cp(get_cp_model(opts.cp_model), entry.resolved_spec.cp_max);
    SynthesisOptions synth;
    synth.grid = opts.grid;
    bool first = true;
    for (double ti : tis) {
        EnvironmentConditions env;
        env.ti = ti;
        env.rho = opts.rho;
        const auto curve = synthesize(entry.resolved_spec, model, env, synth);
        const double rmse = normalized_rmse(curve, m.samples, entry.resolved_spec);
        entry.rmse_by_ti.emplace_back(ti, rmse);
        if (first || rmse < entry.rmse_best) {
            entry.best_ti = ti;
            entry.rmse_best = rmse;
            first = false;
        }
    }
    entry.shape_anomaly = entry.rmse_best > SHAPE_ANOMALY_RMSE;
    return entry;
}

} // namespace wtpc
