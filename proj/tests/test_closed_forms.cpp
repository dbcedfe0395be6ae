#include <gtest/gtest.h>

#include "robincap/bem.hpp"
#include "robincap/closed_forms.hpp"
#include "robincap/robin.hpp"
#include "support.hpp"

using namespace robincap;
using namespace robincap::oracle;
using robincap::test::Rng;

TEST(DiskGreen, CenteredPole) { EXPECT_NEAR(disk_green(0.5, 0.0), std::log(2.0), 1e-15); }

TEST(DiskGreen, OffCenterValue) { EXPECT_NEAR(disk_green(0.3, 0.6), std::log(0.82 / 0.3), 1e-14); }

TEST(DiskGreen, SymmetricPositiveAndVanishingAtCircle) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Complex z = rng.in_disk(0.99), w = rng.in_disk(0.99);
        EXPECT_NEAR(disk_green(z, w), disk_green(w, z), 1e-12);
        EXPECT_GT(disk_green(z, w), 0.0);
    }
    EXPECT_NEAR(disk_green(std::polar(1 - 1e-12, 0.7), 0.3), 0.0, 1e-10);
}

TEST(HalfplaneGreen, Values) {
    EXPECT_NEAR(halfplane_green(1.0, 2.0), std::log(3.0), 1e-15);
    EXPECT_NEAR(halfplane_green(Complex(0, 1.3), Complex(0.4, 0.2)), 0.0, 1e-15);
    EXPECT_NEAR(halfplane_green(Complex(0.4, 2), Complex(1, -1)), halfplane_green(Complex(1, -1), Complex(0.4, 2)),
                1e-14);
}

TEST(Bracket, SpecialValues) {
    EXPECT_EQ(bracket(Complex(1, 2), Complex(1, 2)), 0.0);
    EXPECT_NEAR(bracket(Complex(0, 1), Complex(0, 2)), 1.0, 1e-15);
    EXPECT_NEAR(std::exp(-quarterplane_robin(Complex(1, 1), Complex(2, 2))), bracket(Complex(1, 1), Complex(2, 2)),
                1e-15);
}

TEST(Bracket, MatchesQuarterplaneRobinOnRandomPairs) {
    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        const Complex a = rng.in_quadrant(0.01, 3), b = rng.in_quadrant(0.01, 3);
        const double br = bracket(a, b);
        EXPECT_GE(br, 0.0);
        EXPECT_LE(br, 1.0);
        EXPECT_NEAR(std::exp(-quarterplane_robin(a, b)), br, 1e-12);
    }
}

TEST(QuarterplaneRobin, BoundaryBehaviour) {
    // Dirichlet on the imaginary axis, zero flux on the real axis
    EXPECT_NEAR(quarterplane_robin(Complex(1e-13, 0.7), Complex(1, 1)), 0.0, 1e-12);
    const double on_alpha = quarterplane_robin(Complex(0.8, 0.0), Complex(1, 1));
    EXPECT_TRUE(std::isfinite(on_alpha));
    EXPECT_GT(on_alpha, 0.0);
    EXPECT_NEAR(quarterplane_radius(Complex(1, 1)), 2 * std::sqrt(2.0), 1e-14);
}

TEST(StripDelta, TranslationAndCoincidence) {
    const Complex z(1, kPi / 4), zeta(0, kPi / 4);
    EXPECT_EQ(strip_delta(zeta, zeta), 0.0);
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const double c = rng.uniform(-3, 3);
        EXPECT_NEAR(strip_delta(z + c, zeta + c), strip_delta(z, zeta), 1e-13);
    }
    const double v = strip_delta(z, zeta);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
}

TEST(ArcCapacity, ClosedFormValues) {
    EXPECT_NEAR(arc_capacity(2 * kPi), 1.0, 1e-15);
    EXPECT_NEAR(arc_capacity(kPi), std::sqrt(0.5), 1e-15);
    EXPECT_LT(arc_capacity(1e-8), 1e-8);
    double prev = 0;
    for (double m = 0.1; m <= 2 * kPi; m += 0.1) {
        EXPECT_GT(arc_capacity(m), prev);
        prev = arc_capacity(m);
    }
}

// The formula is confirmed against the exterior solver before anything else uses it.
TEST(ArcCapacity, ConfirmedByExteriorSolver) {
    for (double m : {kPi / 2, kPi, 3 * kPi / 2}) {
        CompactSet set{{ArcSegment::arc(0.0, 1.0, 0.3, 0.3 + m)}};
        EXPECT_NEAR(log_capacity(set), arc_capacity(m), 1e-5) << "measure " << m;
    }
}

TEST(SegmentCapacity, ValuesScalingAndSolver) {
    EXPECT_NEAR(segment_capacity(-1, 1), 0.5, 1e-15);
    EXPECT_NEAR(segment_capacity(0, 4), 1.0, 1e-15);
    EXPECT_NEAR(segment_capacity(2, 2 + 1e-9), 0.0, 1e-9);
    EXPECT_NEAR(segment_capacity(-3, 5), 4 * segment_capacity(-1, 1), 1e-15);
    for (auto [a, b] : {std::pair{-1.0, 1.0}, std::pair{0.0, 4.0}, std::pair{-0.2, 0.5}}) {
        CompactSet set{{ArcSegment::segment(a, b)}};
        EXPECT_NEAR(log_capacity(set), segment_capacity(a, b), 1e-5);
    }
}

TEST(OracleTag, ParseAndEvaluate) {
    EXPECT_EQ(parse_oracle_tag("disk-green"), OracleTag::DiskGreen);
    EXPECT_EQ(to_string(OracleTag::SegmentCapacity), "segment-capacity");
    EXPECT_NEAR(evaluate(OracleTag::DiskGreen, {0.3, 0.6}), std::log(0.82 / 0.3), 1e-14);
    EXPECT_NEAR(evaluate(OracleTag::ArcCapacity, {kPi}), std::sqrt(0.5), 1e-15);
    EXPECT_THROW(parse_oracle_tag("nope"), InputError);
    EXPECT_THROW(evaluate(OracleTag::DiskGreen, {0.3}), InputError);
}
