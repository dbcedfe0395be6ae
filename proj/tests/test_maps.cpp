#include <gtest/gtest.h>

#include "robincap/expr.hpp"
#include "robincap/preimage.hpp"
#include "support.hpp"

using namespace robincap;
using robincap::test::Rng;

namespace {

const char* const kCatalog[] = {
    "z",
    "z^2 + 0.3*z",
    "disk_auto(z, 0.3+0.2i, 0.7)",
    "blaschke(z, 0.2, -0.5i, 0.1+0.4i)",
    "exp(z) - 1",
    "(z + 0.2*z^2)/(1 + 0.2)",
    "mobius(z, 1, 2i, 0.5, 3)",
    "sqrt(1 + z)*cos(z)",
    "log(2 + z)*sinh(z)",
    "cayley(z)",
};

Complex central_difference(const HolomorphicMap& f, Complex z, double step) {
    return (f(z + step) - f(z - step)) / (2 * step);
}

}  // namespace

TEST(HolomorphicMap, DerivativeMatchesFiniteDifferences) {
    Rng rng(51);
    for (const char* text : kCatalog) {
        const auto f = HolomorphicMap::parse(text);
        for (int i = 0; i < 20; ++i) {
            const Complex z = rng.in_disk(0.6);
            const Complex exact = f.derivative(z), fd = central_difference(f, z, 1e-5);
            EXPECT_LE(std::abs(exact - fd), 1e-6 * std::max(1.0, std::abs(exact))) << text << " at " << z;
        }
    }
}

TEST(HolomorphicMap, TaylorCoefficientsFromDerivatives) {
    const auto f = HolomorphicMap::parse("blaschke(z, 0.2, -0.5i)");
    const Complex z0(0.1, 0.3);
    const auto c = f.taylor(z0, 3);
    EXPECT_LT(std::abs(c[0] - f(z0)), 1e-14);
    EXPECT_LT(std::abs(c[1] - f.derivative(z0)), 1e-13);
    EXPECT_LT(std::abs(c[2] - f.second_derivative(z0) / 2.0), 1e-12);
    EXPECT_LT(std::abs(c[3] - f.third_derivative(z0) / 6.0), 1e-12);
}

TEST(HolomorphicMap, RationalDetection) {
    EXPECT_TRUE(HolomorphicMap::parse("blaschke(z, 0.2, 0.3)").rational().has_value());
    EXPECT_TRUE(HolomorphicMap::parse("(z^2 + 1)/(z - 3)").rational().has_value());
    EXPECT_FALSE(HolomorphicMap::parse("exp(z)").rational().has_value());
    EXPECT_EQ(HolomorphicMap::parse("z^3").preimage_method(), PreimageMethod::PolynomialRoots);
    EXPECT_EQ(HolomorphicMap::parse("exp(z)").preimage_method(), PreimageMethod::NewtonDeflation);
    EXPECT_EQ(HolomorphicMap::parse("disk_auto(z, 0.5)").preimage_method(), PreimageMethod::ClosedForm);
}

TEST(HolomorphicMap, ParseErrorsCarryColumn) {
    try {
        HolomorphicMap::parse("z + * 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 5);
    }
    EXPECT_THROW(HolomorphicMap::parse("frob(z)"), ParseError);
    EXPECT_THROW(HolomorphicMap::parse("disk_auto(z, z)"), InputError);
    EXPECT_THROW(expr::parse_constant("z + 1"), InputError);
    EXPECT_NEAR(std::abs(expr::parse_constant("pi/2 - 0.5i") - Complex(kPi / 2, -0.5)), 0.0, 1e-15);
}

TEST(Schwarzian, MobiusVanishes) {
    Rng rng(52);
    for (const char* text : {"mobius(z, 1, 2i, 0.5, 3)", "disk_auto(z, 0.4-0.1i, 2)", "1/(z - 4)"}) {
        const auto f = HolomorphicMap::parse(text);
        for (int i = 0; i < 10; ++i) EXPECT_LT(std::abs(schwarzian(f, rng.in_disk(0.5))), 1e-9) << text;
    }
}

TEST(Schwarzian, QuadraticAtZeroBothRoutes) {
    for (double a : {0.1, 0.3, 0.45}) {
        const auto f = HolomorphicMap::parse("z + " + std::to_string(a) + "*z^2");
        EXPECT_NEAR(std::abs(schwarzian(f, 0.0) - Complex(-6 * a * a)), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(schwarzian_from_coefficients(f, 0.0) - Complex(-6 * a * a)), 0.0, 1e-12);
    }
}

TEST(Schwarzian, ChainRuleWithMobius) {
    const auto f = HolomorphicMap::parse("exp(z) + 0.3*z^3");
    const auto m = HolomorphicMap::parse("mobius(z, 1, 0.2, 0.1i, 1)");
    const auto fm = f.compose_after(m);
    Rng rng(53);
    for (int i = 0; i < 20; ++i) {
        const Complex z = rng.in_disk(0.5);
        const Complex lhs = schwarzian(fm, z);
        const Complex rhs = schwarzian(f, m(z)) * m.derivative(z) * m.derivative(z);
        EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(rhs)));
    }
    EXPECT_THROW(schwarzian(HolomorphicMap::parse("z^2"), 0.0), InputError);
}

TEST(Preimages, SquareRoots) {
    const auto f = HolomorphicMap::parse("z^2", 2);
    const auto p = preimages(f, 0.25, unit_disk());
    ASSERT_EQ(p.size(), 2u);
    EXPECT_NEAR(std::abs(p[0].z - Complex(-0.5)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(p[1].z - Complex(0.5)), 0.0, 1e-12);
    EXPECT_EQ(p[0].multiplicity + p[1].multiplicity, 2);

    const auto zero = preimages(f, 0.0, unit_disk());
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0].multiplicity, 2);
    EXPECT_LT(std::abs(zero[0].z), 1e-12);
    EXPECT_EQ(local_order(f, 0.0), 2);
    EXPECT_EQ(local_order(f, 0.3), 1);
}

TEST(Preimages, BlaschkeDegreeThree) {
    Rng rng(54);
    for (int i = 0; i < 20; ++i) {
        const Complex a1 = rng.in_disk(0.8), a2 = rng.in_disk(0.8), a3 = rng.in_disk(0.8);
        char text[256];
        std::snprintf(text, sizeof text, "blaschke(z, %.17g%+.17gi, %.17g%+.17gi, %.17g%+.17gi)", a1.real(), a1.imag(),
                      a2.real(), a2.imag(), a3.real(), a3.imag());
        const auto f = HolomorphicMap::parse(text, 3);
        const Complex w = rng.in_disk(0.9);
        int count = 0;
        for (const auto& p : preimages(f, w, unit_disk())) {
            count += p.multiplicity;
            EXPECT_LT(std::abs(f(p.z) - w), 1e-10);
        }
        EXPECT_EQ(count, 3);
    }
}

TEST(Preimages, PolynomialRootsWithMultiplicity) {
    // (z - 1)^2 (z + 2i) = z^3 + (2i - 2) z^2 + (1 - 4i) z + 2i
    const auto roots = polynomial_roots({Complex(0, 2), Complex(1, -4), Complex(-2, 2), 1.0});
    int total = 0;
    for (const auto& r : roots) {
        total += r.multiplicity;
        if (std::abs(r.z - 1.0) < 1e-6) EXPECT_EQ(r.multiplicity, 2);
    }
    EXPECT_EQ(total, 3);
}

TEST(Preimages, RefusesNonRationalMaps) {
    EXPECT_THROW(preimages(HolomorphicMap::parse("exp(z)"), 0.5, unit_disk()), InputError);
}
