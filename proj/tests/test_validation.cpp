// Tests for Cp extraction and TI matching
#include <gtest/gtest.h>

#include "test_support.hpp"

#include <wtpc/pipeline.hpp>
#include <wtpc/validation.hpp>

#include <random>

using namespace wtpc;
using testing_support::reference_spec;

namespace {

/// Model curve sampled every `step` m/s up to 30 m/s.
MeasuredCurve sampled(const TurbineSpec &s, double ti, double step = 0.5, double noise = 0.0,
                      std::uint64_t seed = 0) {
    EnvironmentConditions env;
    env.ti = ti;
    const auto c = synthesize(s, "Dai2016", env);
    MeasuredCurve m;
    m.turbine = PartialTurbineSpec::from(s);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> eps(0.0, 1.0);
    for (double v = step; v <= 30.0 + 1e-9; v += step) {
        double p = c.interpolate(v);
        if (noise > 0.0) p *= 1.0 + noise * eps(rng);
        m.samples.push_back({v, std::max(p, 0.0)});
    }
    return m;
}

} // namespace

// ============================================================================
// invert_cp / betz_screen
// ============================================================================

TEST(InvertCp, RoundTripBelowRated) {
    auto s = reference_spec();
    s.cp_max = 0.44;
    const auto full = sampled(s, 0.0, 0.25);
    MeasuredCurve below = full;
    below.samples.clear();
    for (const auto &x : full.samples) {
        if (x.v <= 11.0) below.samples.push_back(x);
    }
    const auto e = invert_cp(below, 1.225);
    EXPECT_NEAR(e.cp_max, 0.44, 1e-6);
    EXPECT_EQ(e.cp_of_v.size(), below.samples.size());
}

TEST(InvertCp, AllZeroPowers) {
    MeasuredCurve m;
    m.turbine.rotor_diameter = 80.0;
    m.samples = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    EXPECT_EQ(invert_cp(m, 1.225).cp_max, 0.0);
}

TEST(InvertCp, SuperBetzSampleIsFlagged) {
    MeasuredCurve m;
    m.turbine.rotor_diameter = 80.0;
    const double betz_power = raw_power(8.0, BETZ_LIMIT, 1.225, 80.0);
    m.samples = {{0.0, 0.0}, {4.0, 50.0}, {8.0, betz_power * 1.05}, {12.0, 2000.0}};
    const auto e = invert_cp(m, 1.225);
    EXPECT_GT(e.cp_max, 0.5926);
    EXPECT_TRUE(betz_screen(e.cp_max));
    EXPECT_EQ(e.cp_of_v.size(), 3u); // v = 0 skipped
}

TEST(InvertCp, MissingDiameter) {
    MeasuredCurve m;
    m.samples = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    try {
        invert_cp(m, 1.225);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingDiameter);
    }
}

TEST(BetzScreen, Threshold) {
    EXPECT_FALSE(betz_screen(0.44));
    EXPECT_FALSE(betz_screen(16.0 / 27.0));
    EXPECT_TRUE(betz_screen(0.62));
    EXPECT_TRUE(betz_screen(std::nextafter(16.0 / 27.0, 1.0)));
}

// ============================================================================
// match_over_ti
// ============================================================================

TEST(MatchOverTi, SelfConsistency) {
    const auto m = sampled(reference_spec(), 0.05);
    const auto r = match_over_ti(m);
    EXPECT_DOUBLE_EQ(r.best_ti, 0.05);
    EXPECT_LT(r.rmse_best, 1e-12);
    ASSERT_EQ(r.rmse_by_ti.size(), 5u);
    for (const auto &[ti, rmse] : r.rmse_by_ti) {
        EXPECT_GE(rmse, 0.0);
        if (ti != 0.05) {
            EXPECT_GT(rmse, 0.0);
        }
    }
    EXPECT_FALSE(r.betz_violation);
    EXPECT_FALSE(r.shape_anomaly);
    EXPECT_NEAR(r.cp_max_extracted, 0.4615, 0.01);
}

TEST(MatchOverTi, NoisyRecoveryMajority) {
    int correct = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto r = match_over_ti(sampled(reference_spec(), 0.075, 0.5, 0.01, seed));
        if (r.best_ti == 0.075) ++correct;
    }
    EXPECT_GT(correct, 10);
}

TEST(MatchOverTi, ZeroCurveIsDegenerateButWellDefined) {
    auto m = sampled(reference_spec(), 0.0);
    for (auto &x : m.samples) x.p = 0.0;
    const auto r = match_over_ti(m);
    double best = INFINITY;
    for (const auto &[ti, rmse] : r.rmse_by_ti) {
        EXPECT_TRUE(std::isfinite(rmse));
        EXPECT_GT(rmse, 0.0);
        best = std::min(best, rmse);
    }
    EXPECT_EQ(r.rmse_best, best);
    EXPECT_EQ(r.cp_max_extracted, 0.0);
    EXPECT_TRUE(r.shape_anomaly);
}

TEST(MatchOverTi, EqualScoresPickSmallestTi) {
    // ti = 1e-4 never widens the kernel beyond one node on a 0.05 grid
    const auto m = sampled(reference_spec(), 0.0);
    const auto r = match_over_ti(m, {1e-4, 0.0, 0.05});
    ASSERT_EQ(r.rmse_by_ti[0].second, r.rmse_by_ti[1].second);
    EXPECT_EQ(r.best_ti, 0.0);
}

TEST(MatchOverTi, FillsDefaultsForPartialSpec) {
    PartialTurbineSpec p;
    p.name = "partial";
    p.rotor_diameter = 90.0;
    p.rated_power = 2500.0;
    const auto full = complete_spec(p).spec;
    auto m = sampled(full, 0.025);
    m.turbine = p;
    const auto r = match_over_ti(m);
    EXPECT_EQ(r.best_ti, 0.025);
    EXPECT_EQ(r.defaults.filled_fields.size(), 5u);
    EXPECT_EQ(r.resolved_spec, full);
}

TEST(MatchOverTi, ComparisonRangeExcludesCutOutVicinity) {
    // corrupting samples above 0.95 * cut-out must not change the score
    auto m = sampled(reference_spec(), 0.05, 0.25);
    const auto base = match_over_ti(m);
    for (auto &x : m.samples) {
        if (x.v > 0.95 * 25.0) x.p = 123.0;
    }
    const auto r = match_over_ti(m);
    EXPECT_EQ(r.rmse_by_ti, base.rmse_by_ti);
}

TEST(MatchOverTi, RejectsMalformedCurves) {
    auto m = sampled(reference_spec(), 0.0);
    std::swap(m.samples[3], m.samples[4]);
    EXPECT_THROW(match_over_ti(m), Error);
    m = sampled(reference_spec(), 0.0);
    m.samples.resize(3);
    EXPECT_THROW(match_over_ti(m), Error);
    m = sampled(reference_spec(), 0.0);
    m.samples[5].p = -1.0;
    EXPECT_THROW(match_over_ti(m), Error);
    m = sampled(reference_spec(), 0.0);
    m.turbine.rated_power.reset();
    EXPECT_THROW(match_over_ti(m), Error);
}
