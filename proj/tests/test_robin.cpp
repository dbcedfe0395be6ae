#include <gtest/gtest.h>

#include "robincap/closed_forms.hpp"
#include "robincap/domain_io.hpp"
#include "robincap/expr.hpp"
#include "robincap/robin.hpp"
#include "support.hpp"

using namespace robincap;
using robincap::test::Rng;

namespace {

// Green function of the annulus rho < |z| < 1 with pole at a in (rho, 1), by
// Fourier modes in the angle. Mode n vanishes on both circles and its r d/dr
// jumps by -2 at r = a, as the mode of the kernel -log|z - a| does; written
// with the ratios (r/a)^n and (rho/a)^2n so that thousands of modes stay finite.
class AnnulusGreen {
public:
    AnnulusGreen(double rho, double a, int modes = 4000) : rho_(rho), a_(a), modes_(modes) {
        alpha_ = std::log(1 / a) / std::log(1 / rho);
        beta_ = alpha_ * std::log(a / rho) / std::log(a);
    }

    // value of mode n at r = a
    double at_a(int n) const {
        const double out = (1 + std::pow(a_, 2 * n)) / (1 - std::pow(a_, 2 * n));
        const double eps = std::pow(rho_ / a_, 2 * n);
        return 2.0 / (n * (out + (1 + eps) / (1 - eps)));
    }

    double operator()(Complex z) const {
        const double r = std::abs(z), th = std::arg(z);
        double g = r < a_ ? alpha_ * std::log(r / rho_) : beta_ * std::log(r);
        for (int n = 1; n <= modes_; ++n) {
            const double shape = r < a_ ? std::pow(r / a_, n) * (1 - std::pow(rho_ / r, 2 * n)) /
                                              (1 - std::pow(rho_ / a_, 2 * n))
                                        : std::pow(a_ / r, n) * (1 - std::pow(r, 2 * n)) / (1 - std::pow(a_, 2 * n));
            g += at_a(n) * shape * std::cos(n * th);
        }
        return g;
    }

    // log r = lim (g + log|z - a|) as z -> a
    double log_radius() const {
        double h = alpha_ * std::log(a_ / rho_) + std::log(a_);
        for (int n = 1; n <= 200000; ++n) h += at_a(n) - 1.0 / n;
        return h;
    }

private:
    double rho_, a_, alpha_, beta_;
    int modes_;
};

}  // namespace

TEST(AnnulusOracle, SelfConsistent) {
    const AnnulusGreen g(0.3, 0.6);
    // vanishes on both circles, symmetric under conjugation
    EXPECT_NEAR(g(std::polar(1.0, 1.1)), 0.0, 1e-12);
    EXPECT_NEAR(g(std::polar(0.3, 2.0)), 0.0, 1e-12);
    EXPECT_NEAR(g(Complex(0.2, 0.7)), g(Complex(0.2, -0.7)), 1e-12);
    // the singular part is -log|z - a|
    // symmetric radial difference quotient around the pole
    const double d = 0.02;
    const double h = 0.5 * (g(0.6 + d) + g(0.6 - d)) + std::log(d);
    EXPECT_NEAR(h, g.log_radius(), 1e-3);
}

TEST(RobinFunction, DiskCenter) {
    const RobinResult r = robin_function(resolve_domain("disk"), Complex(0.0));
    EXPECT_NEAR(r.radius(), 1.0, 1e-3);
    EXPECT_NEAR(r.radius() * r.capacity(), 1.0, 1e-15);
    for (Complex z : {Complex(0.5, 0), Complex(0.1, 0.2), Complex(-0.3, -0.6)})
        EXPECT_NEAR(r.green(z), -std::log(std::abs(z)), 5e-3);
}

TEST(RobinFunction, HalfCircleRadiusTwo) {
    const RobinResult r = robin_function(resolve_domain("disk_arcs(-pi/2, pi/2)"), Complex(0.0));
    EXPECT_NEAR(r.radius(), 2.0, 2e-2);
    EXPECT_NEAR(robin_capacity(resolve_domain("disk_arcs(-pi/2, pi/2)"), Complex(0.0)), 0.5, 5e-3);
}

TEST(RobinFunction, DomainFileHalfGamma) {
    const auto md = resolve_domain((test::data_dir() / "domains/disk.dom:half").string());
    EXPECT_NEAR(robin_function(md, Complex(0.0)).radius(), 2.0, 2e-2);
}

TEST(RobinFunction, QuadrantClosedForm) {
    const RobinResult r = robin_function(resolve_domain("quadrant"), Complex(1, 1));
    EXPECT_NEAR(r.radius(), 2 * std::sqrt(2.0), 1e-9);
}

TEST(RobinFunction, FieldInvariants) {
    const double h = 0.02;
    const MarkedDomain md = resolve_domain("disk_arcs(0.2, 2.9)");
    RobinOptions opt;
    opt.h = h;
    const RobinResult r = robin_function(md, Complex(0.1, -0.2), opt);
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const Complex z = rng.in_disk(0.999);
        EXPECT_GE(r.green(z), -1e-8);
    }
    for (Complex z : md.sample_gamma(64)) EXPECT_NEAR(r.green(z), 0.0, 1e-6);
    EXPECT_EQ(r.junctions.size(), 2u);
    EXPECT_EQ(r.junction_factor(std::polar(1.0, 0.2)), 3.0);
    EXPECT_EQ(r.junction_factor(std::polar(1.0, 0.2 + 2 * h)), 1.0);
    EXPECT_TRUE(std::isinf(r.green(Complex(0.1, -0.2))));
    EXPECT_FALSE(r.try_green(Complex(2, 0)).has_value());
}

TEST(RobinFunction, PoleOnGammaIsAnError) {
    EXPECT_THROW(robin_function(resolve_domain("disk_arcs(-1, 1)"), Complex(1.0)), InputError);
}

TEST(GreenFunction, DiskOffCenter) {
    const RobinResult r = green_function(unit_disk(), Complex(0.6));
    EXPECT_NEAR(r.green(Complex(0.3)), std::log(0.82 / 0.3), 5e-3);
    EXPECT_NEAR(r.radius(), 1 - 0.36, 1e-3);
}

TEST(GreenFunction, AnnulusLaurentOracle) {
    const AnnulusGreen oracle(0.3, 0.6);
    const RobinResult r = green_function(annulus(0.3), Complex(0.6));
    EXPECT_NEAR(std::log(r.radius()), oracle.log_radius(), 1e-2);
    Rng rng(42);
    for (int n = 0; n < 30;) {
        const Complex z = rng.in_disk(0.98);
        if (std::abs(z) < 0.32 || std::abs(z - 0.6) < 0.05) continue;
        EXPECT_NEAR(r.green(z), oracle(z), 1e-2) << z;
        ++n;
    }
}

TEST(RobinCapacity, HalfPlaneIntervalAtInfinity) {
    EXPECT_NEAR(robin_capacity(resolve_domain("halfplane_interval(-1, 1)"), ExtendedPoint::infinity()), 0.5, 1e-5);
}

TEST(RobinCapacity, DiskCenterAndBoundaryPole) {
    EXPECT_NEAR(robin_capacity(resolve_domain("disk"), Complex(0.0)), 1.0, 1e-3);
    EXPECT_THROW(robin_capacity(resolve_domain("disk_arcs(0, 1)"), Complex(-1, 0)), InputError);
}

TEST(LogCapacity, ClosedDiskSegmentAndArc) {
    EXPECT_NEAR(log_capacity(exterior_of({{"c", {ArcSegment::circle(0.0, 1.0)}}})), 1.0, 1e-2);
    EXPECT_NEAR(log_capacity(load_domain(test::data_dir() / "domains/exterior_circle.dom").domain), 1.5, 1.5e-2);
    EXPECT_NEAR(log_capacity(CompactSet{{ArcSegment::segment(-1.0, 1.0)}}), 0.5, 1e-5);
    EXPECT_NEAR(log_capacity(CompactSet{{ArcSegment::arc(0.0, 1.0, 0.0, kPi)}}), std::sin(kPi / 4), 1e-5);
}

TEST(DeltaInvariant, DiskValuesSymmetryAndRange) {
    const MarkedDomain disk = resolve_domain("disk");
    EXPECT_NEAR(delta_invariant(disk, 0.5, 0.0), 0.5, 5e-3);
    Rng rng(43);
    const MarkedDomain arcs = resolve_domain("disk_arcs(1, 4)");
    for (int i = 0; i < 3; ++i) {
        const Complex z = rng.in_disk(0.8), w = rng.in_disk(0.8);
        const double a = delta_invariant(arcs, z, w), b = delta_invariant(arcs, w, z);
        EXPECT_GT(a, 0.0);
        EXPECT_LT(a, 1.0);
        EXPECT_NEAR(a, b, 4e-3);
    }
    EXPECT_THROW(delta_invariant(disk, 0.2, 0.2), InputError);
}

TEST(DeltaInvariant, StripClosedFormAndBoundaryLimit) {
    const MarkedDomain strip = resolve_domain("strip");
    const Complex z(1, kPi / 4), zeta(0, kPi / 4);
    EXPECT_NEAR(delta_invariant(strip, z, zeta), oracle::strip_delta(z, zeta), 1e-2);
    EXPECT_NEAR(delta_invariant(strip, Complex(0.3, kPi / 2 - 1e-9), zeta), 1.0, 1e-6);
}

// enlarging gamma decreases g pointwise and decreases the radius
TEST(RobinProperties, MonotoneInGamma) {
    const MarkedDomain small = resolve_domain("disk_arcs(0.5, 2)");
    const MarkedDomain large = resolve_domain("disk_arcs(0, 3)");
    const Complex pole(0.2, 0.3);
    const RobinResult rs = robin_function(small, pole), rl = robin_function(large, pole);
    EXPECT_LT(rl.radius(), rs.radius());
    Rng rng(44);
    for (int i = 0; i < 40; ++i) {
        const Complex z = rng.in_disk(0.95);
        if (std::abs(z - pole) < 0.05) continue;
        EXPECT_LE(rl.green(z), rs.green(z) + 1e-3);
    }
    EXPECT_LT(green_function(unit_disk(), pole).radius(), rl.radius());
}

TEST(RobinProperties, SymmetryOnPointPairs) {
    const MarkedDomain md = resolve_domain("disk_arcs(-2, 1)");
    const Complex z1(0.3, 0.2), z2(-0.4, 0.1);
    const double g12 = robin_function(md, z2).green(z1), g21 = robin_function(md, z1).green(z2);
    EXPECT_NEAR(g12, g21, 4e-3);
}

// the same domain seen through a disk automorphism
TEST(RobinProperties, ConformalTransfer) {
    const auto phi = HolomorphicMap::parse("disk_auto(z, 0.3+0.2i)");
    const double t0 = 0.4, t1 = 2.6;
    const double s0 = std::arg(phi(std::polar(1.0, t0))), s1 = std::arg(phi(std::polar(1.0, t1)));
    const double s1u = s1 < s0 ? s1 + 2 * kPi : s1;
    const Complex z(-0.2, 0.1);
    const double r_source = robin_function(resolve_domain("disk_arcs(0.4, 2.6)"), z).radius();
    char desc[96];
    std::snprintf(desc, sizeof desc, "disk_arcs(%.17g, %.17g)", s0, s1u);
    const double r_image = robin_function(resolve_domain(desc), phi(z)).radius();
    EXPECT_NEAR(transfer_radius(r_image, phi.derivative(z)) / r_source, 1.0, 1e-2);
}

TEST(RobinProperties, ModelCrossCheckThroughMesh) {
    // half-plane Green radius through the mesh pre-map vs 2 Re z
    const MarkedDomain rhp = resolve_domain("right_halfplane");
    EXPECT_NEAR(robin_function(rhp, Complex(0.7, 0.4)).radius(), oracle::halfplane_radius(Complex(0.7, 0.4)), 1e-2);
}
