#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "robincap/closed_forms.hpp"
#include "robincap/domain_io.hpp"
#include "robincap/mesh.hpp"
#include "robincap/premap.hpp"
#include "support.hpp"

using namespace robincap;
using robincap::test::Rng;

namespace {

DomainSpec two_circles(Complex c2, double r2) {
    DomainSpec d;
    d.loops = {{"outer", {ArcSegment::circle(0.0, 1.0)}}, {"hole", {ArcSegment::circle(c2, r2)}}};
    return d;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(MakeDomain, DiskAndAnnulus) {
    DomainSpec d;
    d.loops = {{"outer", {ArcSegment::circle(0.0, 1.0)}}};
    const DomainSpec disk = make_domain(d);
    EXPECT_EQ(disk.component_count(), 1u);
    EXPECT_TRUE(disk.contains(0.5));
    EXPECT_FALSE(disk.contains(1.5));

    const DomainSpec ann = make_domain(two_circles(0.0, 0.3));
    EXPECT_EQ(ann.component_count(), 2u);
    EXPECT_TRUE(ann.contains(0.5));
    EXPECT_FALSE(ann.contains(0.2));
    EXPECT_EQ(ann.loops[0].arcs[0].orientation(), Orientation::Positive);
    EXPECT_EQ(ann.loops[1].arcs[0].orientation(), Orientation::Negative);
}

TEST(MakeDomain, RejectsOverlapAndOutsideHole) {
    EXPECT_THROW(make_domain(two_circles(0.9, 0.3)), InputError);
    EXPECT_THROW(make_domain(two_circles(3.0, 0.3)), InputError);
}

TEST(MarkBoundary, SelectionsAndErrors) {
    const DomainSpec disk = unit_disk();
    const MarkedDomain full = mark_full(disk);
    EXPECT_TRUE(full.is_full_marking());
    EXPECT_NEAR(full.gamma_length(), 2 * kPi, 1e-12);

    const MarkedDomain half = mark_boundary(disk, {{0, 0, -kPi / 2, kPi / 2}}, "right");
    EXPECT_NEAR(half.gamma_length(), kPi, 1e-12);
    EXPECT_TRUE(half.on_gamma(1.0));
    EXPECT_FALSE(half.on_gamma(-1.0));
    // gamma is closed: its endpoints belong to it
    EXPECT_TRUE(half.on_gamma(Complex(0, 1)));

    EXPECT_THROW(mark_boundary(disk, {}), InputError);
    EXPECT_THROW(mark_boundary(disk, {{0, 0, 0.4, 0.4}}), InputError);
}

TEST(MarkBoundary, QuadrantMarking) {
    const MarkedDomain q = resolve_domain("quadrant");
    EXPECT_EQ(q.domain.kind, DomainKind::Quadrant);
    EXPECT_TRUE(q.on_gamma(Complex(0, 2)));
    EXPECT_FALSE(q.on_gamma(Complex(2, 0)));
    EXPECT_LT(q.distance_to_free(Complex(2, 0)), 1e-12);
}

TEST(MeshDomain, GradedAtRefinePoint) {
    const Mesh m = mesh_domain(resolve_domain("disk"), 0.05, {0.0});
    std::set<long> rings;
    for (Complex v : m.vertices)
        if (std::abs(v) < 0.05 && std::abs(v) > 0) rings.insert(std::lround(2 * std::log2(std::abs(v))));
    EXPECT_GE(rings.size(), 10u);
    EXPECT_GE(m.nearest_vertex(0.0), 0);
    EXPECT_EQ(m.vertices[m.nearest_vertex(0.0)], Complex(0.0));
}

TEST(MeshDomain, ElementSizeAndArea) {
    for (double h : {0.1, 0.05, 0.02}) {
        const Mesh m = mesh_domain(resolve_domain("disk"), h);
        EXPECT_LE(m.max_edge_length(), h) << "h = " << h;
        EXPECT_NEAR(m.area(), kPi, 2 * kPi * h * h);
    }
}

TEST(MeshDomain, AnnulusBothCirclesTagged) {
    const MarkedDomain md = resolve_domain((test::data_dir() / "domains/annulus.dom:inner").string());
    const Mesh m = mesh_domain(md, 0.05);
    int inner_gamma = 0, outer_free = 0, other = 0;
    for (const auto& e : m.boundary) {
        if (e.loop == 1 && e.tag == kGammaTag) ++inner_gamma;
        else if (e.loop == 0 && e.tag == kFreeTag) ++outer_free;
        else ++other;
    }
    EXPECT_GT(inner_gamma, 20);
    EXPECT_GT(outer_free, 100);
    EXPECT_EQ(other, 0);
}

TEST(MeshDomain, TooCoarseIsAnError) { EXPECT_THROW(mesh_domain(resolve_domain("disk"), 10.0), InputError); }

TEST(MeshDomain, RefinePointOutsideIsAnError) {
    EXPECT_THROW(mesh_domain(resolve_domain("disk"), 0.1, {Complex(2, 0)}), InputError);
}

TEST(MeshDomain, Deterministic) {
    const MarkedDomain md = resolve_domain("disk_arcs(0, 2)");
    const Mesh a = mesh_domain(md, 0.04, {Complex(0.2, 0.1)});
    const Mesh b = mesh_domain(md, 0.04, {Complex(0.2, 0.1)});
    ASSERT_EQ(a.vertices.size(), b.vertices.size());
    EXPECT_EQ(a.vertices, b.vertices);
    EXPECT_EQ(a.triangles, b.triangles);
}

// gamma-tagged edges and gamma are within Hausdorff distance h of each other
TEST(MeshDomain, GammaTagsCoverGamma) {
    const double h = 0.05;
    for (const char* desc : {"disk_arcs(0.3, 2.1)", "disk_arcs(-1, 0.5, 2, 3)", "half_disk"}) {
        const MarkedDomain md = resolve_domain(desc);
        const Mesh m = mesh_domain(md, h);
        std::vector<Complex> tagged;
        for (const auto& e : m.boundary)
            if (e.tag == kGammaTag) {
                tagged.push_back(m.vertices[e.a]);
                tagged.push_back(m.vertices[e.b]);
            }
        ASSERT_FALSE(tagged.empty());
        for (Complex g : md.sample_gamma(400)) {
            double d = 1e300;
            for (Complex v : tagged) d = std::min(d, std::abs(v - g));
            EXPECT_LE(d, h) << desc;
        }
        for (Complex v : tagged) EXPECT_LE(md.distance_to_gamma(v), h) << desc;
    }
}

TEST(Delaunay, EmptyCircumcircles) {
    Rng rng(21);
    std::vector<Complex> pts;
    for (int i = 0; i < 300; ++i) pts.push_back(rng.in_disk(1.0));
    const auto tris = delaunay(pts);
    EXPECT_GT(tris.size(), 500u);
    for (const auto& t : tris) {
        const Complex a = pts[t[0]], b = pts[t[1]], c = pts[t[2]];
        EXPECT_GT(std::imag(std::conj(b - a) * (c - a)), 0.0);
        const double d = 2 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) +
                              c.real() * (a.imag() - b.imag()));
        const double ux = (std::norm(a) * (b.imag() - c.imag()) + std::norm(b) * (c.imag() - a.imag()) +
                           std::norm(c) * (a.imag() - b.imag())) / d;
        const double uy = (std::norm(a) * (c.real() - b.real()) + std::norm(b) * (a.real() - c.real()) +
                           std::norm(c) * (b.real() - a.real())) / d;
        const Complex u(ux, uy);
        const double r = std::abs(a - u);
        for (Complex p : pts) EXPECT_GE(std::abs(p - u), r * (1 - 1e-9));
    }
}

TEST(TransferRadius, ScalingIdentityAndInverse) {
    EXPECT_DOUBLE_EQ(transfer_radius(1.0, 2.0), 0.5);
    EXPECT_DOUBLE_EQ(transfer_radius(0.7, 1.0), 0.7);
    EXPECT_THROW(transfer_radius(1.0, 0.0), InputError);
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        const double r = rng.uniform(0.1, 5);
        const Complex d = rng.in_disk(3) + 0.01;
        EXPECT_NEAR(transfer_radius(transfer_radius(r, d), 1.0 / d) / r, 1.0, 1e-12);
    }
}

// Cayley pre-map of the right half-plane plus reflection across the real
// axis reproduces the quadrant closed form.
TEST(TransferRadius, CayleyAgreesWithQuadrantFormula) {
    const DiskPremap cayley(DomainKind::RightHalfPlane);
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        const Complex zeta = rng.in_quadrant(0.05, 4);
        const Complex w = cayley(zeta);
        const double r_half = transfer_radius(oracle::disk_radius(w), cayley.derivative(zeta));
        EXPECT_NEAR(r_half, oracle::halfplane_radius(zeta), 1e-12 * r_half);
        const double r_quad = r_half * std::exp(oracle::halfplane_green(zeta, std::conj(zeta)));
        EXPECT_NEAR(r_quad / oracle::quarterplane_radius(zeta), 1.0, 1e-9);
    }
}

TEST(Premap, InverseRoundTrip) {
    Rng rng(24);
    for (DomainKind k : {DomainKind::UpperHalfPlane, DomainKind::RightHalfPlane, DomainKind::Quadrant,
                         DomainKind::Strip}) {
        const DiskPremap p(k);
        const DomainSpec d = model_domain(k);
        for (int i = 0; i < 50; ++i) {
            const Complex w = rng.in_disk(0.95);
            const Complex z = p.inverse(w);
            EXPECT_TRUE(d.contains(z));
            EXPECT_NEAR(std::abs(p(z) - w), 0.0, 1e-11);
        }
    }
}

// Serialization: parse(serialize(d)) serializes to the same text, and the
// text is frozen in golden files.
TEST(DomainFormat, GoldenRoundTrip) {
    for (const char* name : {"disk", "annulus", "half_disk", "exterior_circle", "exterior_segment_pair"}) {
        const auto path = test::data_dir() / "domains" / (std::string(name) + ".dom");
        const DomainFile f = load_domain(path);
        const std::string text = serialize_domain(f);
        EXPECT_EQ(serialize_domain(parse_domain(text)), text) << name;
        const auto golden = test::golden_dir() / (std::string(name) + ".dom.golden");
        ASSERT_TRUE(std::filesystem::exists(golden)) << golden;
        EXPECT_EQ(text, read_file(golden)) << name;
    }
}

TEST(DomainFormat, ParseErrorsCarryPosition) {
    try {
        parse_domain("domain d\nloop a\n  circle c=0 r=oops\n");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW(parse_domain("domain d\nloop a\n  circle c=0 r=1\ngamma g = nowhere\n"), InputError);
    EXPECT_THROW(resolve_domain("disk_arcs(1)"), InputError);
}
