#include "oracles.hpp"
#include "qpdeg/degeneracy.hpp"
#include "qpdeg/errors.hpp"
#include "root_scan.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qpdeg;

namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

// q_m from q^m + q^(m-1) = 1 by plain bisection.
double oracle_endpoint(int m) {
    return oracle::bisection([m](double q) { return std::pow(q, m) + std::pow(q, m - 1) - 1.0; }, 0.0, 1.0);
}

// The p = q point of E0=Em: sum of the two brackets on the diagonal equals 1.
double oracle_ground_midpoint(int m) {
    return oracle::bisection(
        [m](double t) { return oracle::bracket_sum(m + 1, t, t) + oracle::bracket_sum(m, t, t) - 1.0; }, 0.0, 1.0);
}

} // namespace

TEST(DegeneracyCondition, Classification) {
    EXPECT_EQ(DegeneracyCondition(0, 2).kind(), ConditionKind::Ground);
    EXPECT_EQ(DegeneracyCondition(0, 7).kind(), ConditionKind::Ground);
    EXPECT_EQ(DegeneracyCondition(1, 2).kind(), ConditionKind::Neighbor);
    EXPECT_EQ(DegeneracyCondition(4, 5).kind(), ConditionKind::Neighbor);
    EXPECT_EQ(DegeneracyCondition(1, 3).kind(), ConditionKind::General);
    EXPECT_EQ(DegeneracyCondition(2, 6).label(), "E2=E6");
}

TEST(DegeneracyCondition, RejectsInvalidPairs) {
    EXPECT_THROW(DegeneracyCondition(0, 0), DomainError);
    EXPECT_THROW(DegeneracyCondition(3, 2), DomainError);
    EXPECT_THROW(DegeneracyCondition(0, 1), DomainError);
}

TEST(Residual, Examples) {
    EXPECT_NEAR(residual(DegeneracyCondition(0, 2), DeformationPoint(1.0 / 3.0, 1.0 / 3.0)), 0.0, 1e-15);
    EXPECT_NEAR(residual(DegeneracyCondition(0, 2), DeformationPoint(kGolden, 0.0)), 0.0, 1e-15);
    EXPECT_EQ(residual(DegeneracyCondition(1, 2), DeformationPoint(0.0, 1.0)), 0.0);
}

TEST(Residual, ExplicitLowOrderPolynomials) {
    oracle::PointSampler sample(21);
    for (int i = 0; i < 200; ++i) {
        const auto [q, p] = sample();
        const DeformationPoint pt(q, p);
        EXPECT_NEAR(residual(DegeneracyCondition(0, 2), pt), p * p + p * q + q * q + p + q - 1.0, 1e-14);
        EXPECT_NEAR(residual(DegeneracyCondition(1, 2), pt), p * p + p * q + q * q - 1.0, 1e-14);
        const double f43 = std::pow(p, 4) + std::pow(p, 3) * q + p * p * q * q + p * std::pow(q, 3) +
                           std::pow(q, 4) - p * p - p * q - q * q;
        EXPECT_NEAR(residual(DegeneracyCondition(3, 4), pt), f43, 1e-14);
    }
}

TEST(Residual, SymmetricUnderSwap) {
    oracle::PointSampler sample(22);
    for (int i = 0; i < 1000; ++i) {
        const auto [q, p] = sample();
        const DeformationPoint pt(q, p);
        for (LevelIndex m = 2; m <= 8; ++m) {
            const DegeneracyCondition ground(0, m);
            const DegeneracyCondition neighbor(m - 1, m);
            ASSERT_NEAR(residual(ground, pt), residual(ground, pt.swapped()), 1e-14);
            ASSERT_NEAR(residual(neighbor, pt), residual(neighbor, pt.swapped()), 1e-14);
        }
    }
}

TEST(Residual, EqualsTwiceTheEnergyGap) {
    oracle::PointSampler sample(23);
    for (int i = 0; i < 500; ++i) {
        const auto [q, p] = sample();
        for (int m = 1; m <= 10; ++m) {
            const auto mm = static_cast<LevelIndex>(m);
            if (m >= 2) {
                ASSERT_NEAR(residual(DegeneracyCondition(0, mm), DeformationPoint(q, p)),
                            2.0 * (oracle::energy(m, q, p) - oracle::energy(0, q, p)), 1e-12);
            }
            ASSERT_NEAR(residual(DegeneracyCondition(mm, mm + 1), DeformationPoint(q, p)),
                        2.0 * (oracle::energy(m + 1, q, p) - oracle::energy(m, q, p)), 1e-12);
            ASSERT_NEAR(residual(DegeneracyCondition(mm, mm + 3), DeformationPoint(q, p)),
                        2.0 * (oracle::energy(m + 3, q, p) - oracle::energy(m, q, p)), 1e-12);
        }
    }
}

TEST(SolvePForQ, Examples) {
    const DegeneracyCondition e02(0, 2);
    const auto at_zero = solve_p_for_q(e02, 0.0);
    ASSERT_TRUE(at_zero);
    EXPECT_NEAR(*at_zero, kGolden, 1e-12);

    const auto at_03 = solve_p_for_q(e02, 0.3);
    ASSERT_TRUE(at_03);
    EXPECT_NEAR(*at_03, oracle::ground2_curve(0.3), 1e-12);
    EXPECT_NEAR(*at_03, 0.3661200, 1e-7);

    EXPECT_FALSE(solve_p_for_q(e02, 0.9));
}

TEST(SolvePForQ, MatchesClosedFormAlongGroundCurve) {
    const DegeneracyCondition e02(0, 2);
    for (int i = 0; i <= 100; ++i) {
        const double q = kGolden * i / 100.0;
        const auto p = solve_p_for_q(e02, q);
        ASSERT_TRUE(p) << q;
        EXPECT_NEAR(*p, oracle::ground2_curve(q), 1e-12) << q;
    }
}

TEST(SolvePForQ, BoundaryRoots) {
    const auto p_top = solve_p_for_q(DegeneracyCondition(1, 2), 0.0);
    ASSERT_TRUE(p_top);
    EXPECT_EQ(*p_top, 1.0);
    const auto p_bottom = solve_p_for_q(DegeneracyCondition(1, 2), 1.0);
    ASSERT_TRUE(p_bottom);
    EXPECT_EQ(*p_bottom, 0.0);
    // F(0, p) also vanishes at the excluded origin for m >= 2; only p = 1 counts.
    const auto p_top3 = solve_p_for_q(DegeneracyCondition(2, 3), 0.0);
    ASSERT_TRUE(p_top3);
    EXPECT_EQ(*p_top3, 1.0);
}

TEST(SolvePForQ, RejectsOutOfRangeQ) {
    EXPECT_THROW(solve_p_for_q(DegeneracyCondition(0, 2), -0.1), DomainError);
    EXPECT_THROW(solve_p_for_q(DegeneracyCondition(0, 2), 1.5), DomainError);
}

TEST(SolvePForQ, GeneralTypeHasUniqueRoot) {
    oracle::PointSampler sample(24);
    for (int i = 0; i < 50; ++i) {
        const double q = sample.uniform(0.0, 1.0);
        for (const auto& [lo, hi] : {std::pair<LevelIndex, LevelIndex>{1, 3}, {2, 5}, {3, 7}}) {
            const DegeneracyCondition cond(lo, hi);
            const auto p = solve_p_for_q(cond, q);
            ASSERT_TRUE(p);
            EXPECT_LT(std::abs(residual(cond, DeformationPoint(q, *p))), 1e-12);
        }
    }
}

TEST(RootScan, MultipleSignChangesAreAConsistencyError) {
    const auto grid = detail::uniform_grid(0.0, 1.0, 1001);
    auto two_roots = [](double x) -> std::optional<double> { return (x - 0.25) * (x - 0.75); };
    const auto found = detail::scan_sign_changes(two_roots, grid);
    EXPECT_EQ(found.size(), 2u);
    EXPECT_THROW(detail::unique_bracket(found, "test"), ConsistencyError);
}

TEST(RootScan, ExactZeroOnGridIsOneRoot) {
    const auto grid = detail::uniform_grid(0.0, 1.0, 5);
    auto linear = [](double x) -> std::optional<double> { return x - 0.5; };
    const auto found = detail::scan_sign_changes(linear, grid);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].lo, 0.5);
    EXPECT_EQ(found[0].hi, 0.5);
}

TEST(ImplicitDerivative, GroundTypeAnchors) {
    const DegeneracyCondition e02(0, 2);
    const double t = 1.0 / 3.0;
    EXPECT_NEAR(implicit_derivative(e02, DeformationPoint(t, t)), -1.0, 1e-12);
    EXPECT_NEAR(implicit_derivative(e02, DeformationPoint(0.0, kGolden)), -(kGolden + 1.0) / (2.0 * kGolden + 1.0),
                1e-12);
    EXPECT_NEAR(implicit_derivative(e02, DeformationPoint(0.0, kGolden)), -0.7236, 5e-5);
    EXPECT_NEAR(implicit_derivative(e02, DeformationPoint(kGolden, 0.0)), -(2.0 * kGolden + 1.0) / (kGolden + 1.0),
                1e-12);
}

TEST(ImplicitDerivative, MidpointIsMinusOneForAllGroundCurves) {
    for (int m = 2; m <= 8; ++m) {
        const double t = oracle_ground_midpoint(m);
        EXPECT_NEAR(implicit_derivative(DegeneracyCondition(0, static_cast<LevelIndex>(m)), DeformationPoint(t, t)),
                    -1.0, 1e-9)
            << "m=" << m;
    }
}

TEST(ImplicitDerivative, NeighborTypeFirstPair) {
    const DegeneracyCondition e12(1, 2);
    EXPECT_NEAR(implicit_derivative(e12, DeformationPoint(0.0, 1.0)), -0.5, 1e-15);
    EXPECT_NEAR(implicit_derivative(e12, DeformationPoint(1.0, 0.0)), -2.0, 1e-15);
}

TEST(ImplicitDerivative, ErrorPaths) {
    EXPECT_THROW(implicit_derivative(DegeneracyCondition(0, 2), DeformationPoint(0.5, 0.5)), PreconditionError);
    // vertical tangent of E2=E3 where it meets the q axis
    EXPECT_THROW(implicit_derivative(DegeneracyCondition(2, 3), DeformationPoint(1.0, 0.0)), SingularityError);
}

TEST(ImplicitDerivative, AgreesWithFiniteDifferences) {
    const double h = 1e-6;
    for (const auto& [lo, hi] :
         {std::pair<LevelIndex, LevelIndex>{0, 2}, {0, 3}, {0, 6}, {1, 2}, {2, 3}, {4, 5}, {1, 4}}) {
        const DegeneracyCondition cond(lo, hi);
        const CurveTrace trace = trace_curve(cond, 21);
        for (std::size_t i = 1; i + 1 < trace.samples.size(); ++i) {
            const auto& s = trace.samples[i];
            const auto plus = solve_p_for_q(cond, s.q + h);
            const auto minus = solve_p_for_q(cond, s.q - h);
            ASSERT_TRUE(plus && minus);
            const double fd = (*plus - *minus) / (2.0 * h);
            EXPECT_NEAR(implicit_derivative(cond, DeformationPoint(s.q, s.p)), fd, 1e-5)
                << cond.label() << " q=" << s.q;
        }
    }
}

TEST(ImplicitDerivative, NeighborLimitsForHigherPairs) {
    const double q_lo = 1e-6;
    const double q_hi = 1.0 - 1e-6;
    for (LevelIndex m = 2; m <= 6; ++m) {
        const DegeneracyCondition cond(m, m + 1);
        const auto p_lo = solve_p_for_q(cond, q_lo);
        const auto p_hi = solve_p_for_q(cond, q_hi);
        ASSERT_TRUE(p_lo && p_hi);
        EXPECT_LT(std::abs(implicit_derivative(cond, DeformationPoint(q_lo, *p_lo))), 1e-3) << m;
        EXPECT_EQ(implicit_derivative(cond, DeformationPoint(0.0, 1.0)), 0.0);
        const double steep = implicit_derivative(cond, DeformationPoint(q_hi, *p_hi));
        if (m == 2) {
            // F_pp(1, 0) = 2 != 0, so p ~ sqrt(2 (1 - q)) and f' ~ -1/sqrt(2 (1 - q)).
            // Reference value from a 50-digit evaluation.
            EXPECT_NEAR(steep, -707.1062509, 1e-4);
        } else {
            // F_pp(1, 0) = 0 for m >= 3: the blow-up is at least (1 - q)^(-2/3).
            EXPECT_LT(steep, -1e3) << m;
        }
    }
}

TEST(ImplicitDerivative, NeighborSlopeDivergesTowardQOne) {
    for (LevelIndex m = 2; m <= 4; ++m) {
        const DegeneracyCondition cond(m, m + 1);
        double previous = 0.0;
        for (const double gap : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
            const auto p = solve_p_for_q(cond, 1.0 - gap);
            ASSERT_TRUE(p);
            const double slope = implicit_derivative(cond, DeformationPoint(1.0 - gap, *p));
            EXPECT_LT(slope, previous);
            previous = slope;
        }
        EXPECT_LT(previous, -1e4);
    }
}

TEST(ImplicitDerivative, GroundEndpointBracketing) {
    for (LevelIndex m = 2; m <= 6; ++m) {
        const DegeneracyCondition cond(0, m);
        const double qm = endpoint_q(cond);
        const double at_q_axis = implicit_derivative(cond, DeformationPoint(qm, 0.0));
        const double at_p_axis = implicit_derivative(cond, DeformationPoint(0.0, qm));
        EXPECT_LT(at_q_axis, -1.0) << m;
        EXPECT_LT(-1.0, at_p_axis) << m;
        EXPECT_LT(at_p_axis, 0.0) << m;
        // mirror images of one another
        EXPECT_NEAR(at_q_axis * at_p_axis, 1.0, 1e-12);
    }
}

TEST(EndpointQ, Values) {
    EXPECT_NEAR(endpoint_q(DegeneracyCondition(0, 2)), kGolden, 1e-12);
    EXPECT_NEAR(endpoint_q(DegeneracyCondition(0, 3)), oracle_endpoint(3), 1e-12);
    EXPECT_NEAR(endpoint_q(DegeneracyCondition(0, 3)), 0.7548776662, 1e-10);
    const double q49 = endpoint_q(DegeneracyCondition(0, 49));
    const double q50 = endpoint_q(DegeneracyCondition(0, 50));
    EXPECT_GT(q50, q49);
    EXPECT_LT(q50, 1.0);
}

TEST(EndpointQ, OrderedAndMatchesOracle) {
    double previous = 0.0;
    for (int m = 2; m <= 10; ++m) {
        const double qm = endpoint_q(DegeneracyCondition(0, static_cast<LevelIndex>(m)));
        EXPECT_NEAR(qm, oracle_endpoint(m), 1e-12);
        EXPECT_GT(qm, previous);
        EXPECT_LT(qm, 1.0);
        previous = qm;
    }
}

TEST(EndpointQ, GroundTypeOnly) {
    EXPECT_THROW(endpoint_q(DegeneracyCondition(1, 2)), DomainError);
    EXPECT_THROW(endpoint_q(DegeneracyCondition(2, 5)), DomainError);
}

TEST(TraceCurve, GroundTwoWithThreeSamples) {
    const CurveTrace trace = trace_curve(DegeneracyCondition(0, 2), 3);
    ASSERT_EQ(trace.samples.size(), 3u);
    EXPECT_EQ(trace.samples[0].q, 0.0);
    EXPECT_NEAR(trace.samples[0].p, kGolden, 1e-12);
    EXPECT_NEAR(trace.samples[2].q, kGolden, 1e-12);
    EXPECT_EQ(trace.samples[2].p, 0.0);
    // uniform in q: the middle sample sits at q_2 / 2, just left of the p = q point
    EXPECT_NEAR(trace.samples[1].q, kGolden / 2.0, 1e-15);
    EXPECT_NEAR(trace.samples[1].p, oracle::ground2_curve(kGolden / 2.0), 1e-12);
    EXPECT_GT(trace.samples[1].p, trace.samples[1].q);
}

TEST(TraceCurve, FirstNeighborPairEndpoints) {
    const CurveTrace trace = trace_curve(DegeneracyCondition(1, 2), 2);
    ASSERT_EQ(trace.samples.size(), 2u);
    EXPECT_EQ(trace.samples[0].q, 0.0);
    EXPECT_EQ(trace.samples[0].p, 1.0);
    EXPECT_EQ(trace.samples[0].dpdq, -0.5);
    EXPECT_EQ(trace.samples[1].q, 1.0);
    EXPECT_EQ(trace.samples[1].p, 0.0);
    EXPECT_EQ(trace.samples[1].dpdq, -2.0);
}

TEST(TraceCurve, HigherNeighborEndpointSlopes) {
    const CurveTrace trace = trace_curve(DegeneracyCondition(2, 3), 5);
    EXPECT_EQ(trace.samples.front().dpdq, 0.0);
    EXPECT_TRUE(std::isinf(trace.samples.back().dpdq));
    EXPECT_LT(trace.samples.back().dpdq, 0.0);
}

TEST(TraceCurve, GroundSixStaysLeftOfItsEndpoint) {
    const double q6 = endpoint_q(DegeneracyCondition(0, 6));
    const CurveTrace trace = trace_curve(DegeneracyCondition(0, 6), 40);
    for (const auto& s : trace.samples) {
        EXPECT_LE(s.q, q6);
        EXPECT_LT(s.q, 1.0);
    }
}

TEST(TraceCurve, Invariants) {
    for (const auto& [lo, hi] :
         {std::pair<LevelIndex, LevelIndex>{0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 2}, {2, 3}, {4, 5}, {2, 4}}) {
        const DegeneracyCondition cond(lo, hi);
        const CurveTrace trace = trace_curve(cond, 64);
        ASSERT_EQ(trace.samples.size(), 64u);
        for (std::size_t i = 0; i < trace.samples.size(); ++i) {
            const auto& s = trace.samples[i];
            EXPECT_LT(std::abs(residual(cond, DeformationPoint(s.q, s.p))), 1e-10) << cond.label();
            const bool endpoint = i == 0 || i + 1 == trace.samples.size();
            if (endpoint) {
                EXPECT_LE(s.dpdq, 0.0) << cond.label();
            } else {
                EXPECT_LT(s.dpdq, 0.0) << cond.label() << " q=" << s.q;
            }
            if (i > 0) {
                EXPECT_GT(s.q, trace.samples[i - 1].q);
                EXPECT_LT(s.p, trace.samples[i - 1].p);
            }
        }
    }
}

TEST(TraceCurve, RejectsSingleSample) {
    EXPECT_THROW(trace_curve(DegeneracyCondition(0, 2), 1), DomainError);
}
