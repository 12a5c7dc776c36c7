// Tests for the power coefficient models
#include <gtest/gtest.h>

#include "oracle.hpp"

#include <wtpc/cp_models.hpp>

#include <random>
#include <set>

using namespace wtpc;

namespace {

CpParameterisation zeros() {
    CpParameterisation p;
    p.name = "zeros";
    p.x = 1.0;
    return p;
}

CpParameterisation linear(double c8) {
    CpParameterisation p = zeros();
    p.name = "linear";
    p.c8 = c8;
    return p;
}

} // namespace

// ============================================================================
// cp_general
// ============================================================================

TEST(CpGeneral, ZeroCoefficientsGiveZero) {
    EXPECT_EQ(cp_general(7.0, 0.0, zeros()), 0.0);
}

TEST(CpGeneral, OnlyLinearTermSurvives) {
    EXPECT_DOUBLE_EQ(cp_general(5.0, 0.0, linear(0.1)), 0.5);
}

TEST(CpGeneral, Dai2016MatchesHighPrecisionEvaluation) {
    // 40-digit evaluation of the closed form
    const auto &dai = get_cp_model("Dai2016");
    EXPECT_NEAR(cp_general(8.0, 0.0, dai), 0.41425654834925425522, 1e-14);
    EXPECT_NEAR(cp_general(8.0, 3.0, dai), 0.40262013447297374179, 1e-14);
}

TEST(CpGeneral, NegativeValuesClampToZero) {
    // 116/li < 5 for lambda above ~12.8, so the raw Heier bracket is negative
    const auto &heier = get_cp_model("Heier2014");
    EXPECT_LT(0.5 * (116.0 * (1.0 / 20.0 - 0.035) - 5.0), 0.0);
    EXPECT_EQ(cp_general(20.0, 0.0, heier), 0.0);
}

TEST(CpGeneral, DegenerateLambdaIThrows) {
    // 1/lambda - c10 <= 0 once lambda >= 1/0.035
    const auto &heier = get_cp_model("Heier2014");
    try {
        cp_general(30.0, 0.0, heier);
        FAIL() << "expected NonFiniteResult";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonFiniteResult);
    }
    EXPECT_EQ(cp_or_zero(30.0, 0.0, heier), 0.0);
}

TEST(CpGeneral, RejectsNonPositiveLambda) {
    EXPECT_THROW(cp_general(0.0, 0.0, zeros()), Error);
    EXPECT_THROW(cp_general(-1.0, 0.0, zeros()), Error);
    EXPECT_THROW(cp_general(5.0, -1.0, zeros()), Error);
}

TEST(CpGeneral, AgreesWithDirectTranscriptionAcrossRegistry) {
    for (const auto &p : cp_registry()) {
        for (double beta : {0.0, 1.0, 3.0, 5.0}) {
            for (double l = 0.5; l < 20.0; l += 0.37) {
                EXPECT_NEAR(cp_or_zero(l, beta, p), oracle::cp(l, beta, p), 1e-13)
                    << p.name << " l=" << l << " b=" << beta;
            }
        }
    }
}

TEST(CpGeneral, NeverNegativeProperty) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0), lam(0.5, 25.0), beta(0.0, 10.0);
    for (int trial = 0; trial < 2000; ++trial) {
        CpParameterisation p;
        p.c1 = coef(rng);
        p.c2 = 100 * coef(rng);
        p.c3 = coef(rng);
        p.c4 = coef(rng);
        p.c5 = coef(rng);
        p.c6 = 10 * coef(rng);
        p.c7 = 10 * coef(rng);
        p.c8 = 0.01 * coef(rng);
        p.c9 = 0.1 * coef(rng);
        p.c10 = 0.02 * coef(rng);
        p.x = 1.0 + coef(rng);
        const double v = cp_or_zero(lam(rng), beta(rng), p);
        EXPECT_GE(v, 0.0);
    }
}

// ============================================================================
// lambda_opt
// ============================================================================

TEST(LambdaOpt, LinearObjectivePeaksAtUpperBound) {
    const auto opt = lambda_opt(linear(0.1));
    EXPECT_DOUBLE_EQ(opt.lambda, 25.0);
    EXPECT_DOUBLE_EQ(opt.cp, 2.5);
}

TEST(LambdaOpt, Dai2016MatchesBruteForce) {
    // brute-force grid at 1e-5: lambda 6.38298, Cp 0.461534732666
    const auto opt = lambda_opt(get_cp_model("Dai2016"));
    EXPECT_NEAR(opt.lambda, 6.38298, 1e-4);
    EXPECT_NEAR(opt.cp, 0.461534732666, 1e-10);
}

TEST(LambdaOpt, Heier2014MatchesBruteForce) {
    // brute-force grid at 1e-5: lambda 7.95403, Cp 0.410963103521
    const auto &heier = get_cp_model("Heier2014");
    const auto opt = lambda_opt(heier);
    EXPECT_NEAR(opt.lambda, 7.95403, 1e-4);
    EXPECT_NEAR(opt.cp, 0.410963103521, 1e-10);
    const auto scaled = scale_cp(heier, 0.44);
    EXPECT_NEAR(scaled.cp(scaled.lambda_opt()), 0.44, 1e-9);
}

TEST(LambdaOpt, EveryRegistryEntryAgreesWithBruteForce) {
    for (const auto &p : cp_registry()) {
        const auto opt = lambda_opt(p);
        const auto brute = oracle::brute_force_peak(p);
        EXPECT_NEAR(opt.lambda, brute.lambda, 1e-4) << p.name;
        EXPECT_GE(opt.cp, brute.cp - 1e-12) << p.name;
    }
}

TEST(LambdaOpt, DominatesCoarseGrid) {
    for (const auto &p : cp_registry()) {
        const auto opt = lambda_opt(p);
        for (double l = 0.5; l <= 25.0; l += 0.01) {
            ASSERT_GE(opt.cp, cp_or_zero(l, 0.0, p)) << p.name << " l=" << l;
        }
    }
}

TEST(LambdaOpt, NoPositiveCpThrows) {
    try {
        lambda_opt(zeros());
        FAIL() << "expected NoPositiveCp";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NoPositiveCp);
    }
}

TEST(LambdaOpt, TiesResolveToSmallestLambda) {
    // constant Cp = 0.3 everywhere
    CpParameterisation p = zeros();
    p.c1 = 1.0;
    p.c6 = -0.3;
    const auto opt = lambda_opt(p);
    EXPECT_DOUBLE_EQ(opt.lambda, LAMBDA_SEARCH_MIN);
    EXPECT_DOUBLE_EQ(opt.cp, 0.3);
}

// ============================================================================
// scale_cp
// ============================================================================

TEST(ScaleCp, IdentityScaling) {
    const auto &dai = get_cp_model("Dai2016");
    const auto raw = lambda_opt(dai);
    const auto m = scale_cp(dai, raw.cp);
    EXPECT_DOUBLE_EQ(m.scale_factor(), 1.0);
    for (double l = 1.0; l < 15.0; l += 0.5) {
        EXPECT_DOUBLE_EQ(m.cp(l), cp_general(l, 0.0, dai));
    }
}

TEST(ScaleCp, PeakEqualsRecommendedDefault) {
    for (const auto &p : cp_registry()) {
        const auto m = scale_cp(p, 0.44);
        EXPECT_NEAR(m.cp(m.lambda_opt()), 0.44, 1e-9) << p.name;
    }
}

TEST(ScaleCp, ReferencePeakForDai2016) {
    const auto m = scale_cp(get_cp_model("Dai2016"), 0.4615);
    EXPECT_NEAR(m.cp(m.lambda_opt()), 0.4615, 1e-9);
}

TEST(ScaleCp, ScaledPeakInvariantOnGrid) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> target(0.05, BETZ_LIMIT);
    for (const auto &p : cp_registry()) {
        for (int k = 0; k < 5; ++k) {
            const double cp_max = target(rng);
            const auto m = scale_cp(p, cp_max);
            double grid_max = 0.0;
            for (double l = 0.5; l <= 25.0; l += 0.001) {
                grid_max = std::max(grid_max, m.cp_or_zero(l));
            }
            EXPECT_NEAR(grid_max, cp_max, 1e-6) << p.name;
            EXPECT_LE(grid_max, cp_max + 1e-12) << p.name;
        }
    }
}

TEST(ScaleCp, ArgmaxInvariantUnderScaling) {
    for (const auto &p : cp_registry()) {
        EXPECT_DOUBLE_EQ(scale_cp(p, 0.3).lambda_opt(), lambda_opt(p).lambda) << p.name;
    }
}

TEST(ScaleCp, BetzGuard) {
    const auto &dai = get_cp_model("Dai2016");
    EXPECT_NO_THROW(scale_cp(dai, BETZ_LIMIT));
    EXPECT_THROW(scale_cp(dai, 0.6), Error);
    EXPECT_THROW(scale_cp(dai, 0.0), Error);
}

TEST(ScaleCp, PropagatesNoPositiveCp) {
    try {
        scale_cp(zeros(), 0.44);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NoPositiveCp);
    }
}

// ============================================================================
// Registry
// ============================================================================

TEST(Registry, SixUniqueFiniteSets) {
    const auto &reg = cp_registry();
    ASSERT_EQ(reg.size(), 6u);
    std::set<std::string> names;
    for (const auto &p : reg) {
        names.insert(p.name);
        EXPECT_TRUE(p.all_finite());
        EXPECT_FALSE(p.provenance.empty());
    }
    EXPECT_EQ(names.size(), 6u);
}

TEST(Registry, LookupByName) {
    EXPECT_TRUE(find_cp_model("Slootweg2003").has_value());
    EXPECT_FALSE(find_cp_model("nope").has_value());
    try {
        get_cp_model("nope");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownModel);
    }
}
