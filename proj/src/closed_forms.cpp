#include "robincap/closed_forms.hpp"

#include <cmath>

namespace robincap::oracle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InputError(what);
}

}  // namespace

OracleTag parse_oracle_tag(std::string_view name) {
    if (name == "disk-green") return OracleTag::DiskGreen;
    if (name == "halfplane-green") return OracleTag::HalfplaneGreen;
    if (name == "quarterplane-robin") return OracleTag::QuarterplaneRobin;
    if (name == "strip-delta") return OracleTag::StripDelta;
    if (name == "bracket") return OracleTag::Bracket;
    if (name == "arc-capacity") return OracleTag::ArcCapacity;
    if (name == "segment-capacity") return OracleTag::SegmentCapacity;
    throw InputError("unknown oracle '" + std::string(name) + "'");
}

std::string_view to_string(OracleTag tag) {
    switch (tag) {
        case OracleTag::DiskGreen: return "disk-green";
        case OracleTag::HalfplaneGreen: return "halfplane-green";
        case OracleTag::QuarterplaneRobin: return "quarterplane-robin";
        case OracleTag::StripDelta: return "strip-delta";
        case OracleTag::Bracket: return "bracket";
        case OracleTag::ArcCapacity: return "arc-capacity";
        case OracleTag::SegmentCapacity: return "segment-capacity";
    }
    return "?";
}

double disk_green(Complex z, Complex z0) {
    require(std::abs(z) < 1.0 && std::abs(z0) < 1.0, "disk_green: points must lie in the unit disk");
    require(z != z0, "disk_green: coincident points");
    return std::log(std::abs(1.0 - std::conj(z0) * z)) - std::log(std::abs(z - z0));
}

double disk_radius(Complex z) {
    require(std::abs(z) < 1.0, "disk_radius: point must lie in the unit disk");
    return 1.0 - std::norm(z);
}

double halfplane_green(Complex z, Complex z0) {
    require(z.real() >= 0.0 && z0.real() > 0.0, "halfplane_green: points must lie in Re z > 0");
    require(z != z0, "halfplane_green: coincident points");
    return std::log(std::abs(z + std::conj(z0))) - std::log(std::abs(z - z0));
}

double halfplane_radius(Complex z) {
    require(z.real() > 0.0, "halfplane_radius: point must lie in Re z > 0");
    return 2.0 * z.real();
}

double bracket(Complex a, Complex b) {
    const Complex den = (a + b) * (a + std::conj(b));
    require(std::abs(den) > 0.0, "bracket: a + b or a + conj(b) vanishes");
    return std::abs((a - b) * (a - std::conj(b))) / std::abs(den);
}

double quarterplane_robin(Complex z, Complex zeta) {
    require(z.real() >= 0.0 && z.imag() >= 0.0, "quarterplane_robin: z outside the closed quadrant");
    require(zeta.real() > 0.0 && zeta.imag() > 0.0, "quarterplane_robin: pole outside the quadrant");
    require(z != zeta, "quarterplane_robin: coincident points");
    return halfplane_green(z, zeta) + halfplane_green(z, std::conj(zeta));
}

double quarterplane_radius(Complex zeta) {
    require(zeta.real() > 0.0 && zeta.imag() > 0.0, "quarterplane_radius: point outside the quadrant");
    return std::abs(2.0 * zeta * zeta.real() / zeta.imag());
}

double strip_delta(Complex z, Complex zeta) {
    const auto inside = [](Complex p) { return p.imag() > 0.0 && p.imag() < kPi / 2; };
    require(inside(z) && inside(zeta), "strip_delta: points must lie in 0 < Im z < pi/2");
    return bracket(std::exp(z), std::exp(zeta));
}

double strip_radius(Complex zeta) {
    require(zeta.imag() > 0.0 && zeta.imag() < kPi / 2, "strip_radius: point outside the strip");
    const Complex w = std::exp(zeta);
    return quarterplane_radius(w) / std::abs(w);
}

double arc_capacity(double angular_measure) {
    require(angular_measure > 0.0 && angular_measure <= 2.0 * kPi, "arc_capacity: measure must be in (0, 2pi]");
    return std::sin(angular_measure / 4.0);
}

double segment_capacity(double a, double b) {
    require(a < b, "segment_capacity: need a < b");
    return (b - a) / 4.0;
}

double evaluate(OracleTag tag, const std::vector<Complex>& args) {
    const auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw InputError(std::string(to_string(tag)) + " expects " + std::to_string(n) + " arguments");
    };
    switch (tag) {
        case OracleTag::DiskGreen: need(2); return disk_green(args[0], args[1]);
        case OracleTag::HalfplaneGreen: need(2); return halfplane_green(args[0], args[1]);
        case OracleTag::QuarterplaneRobin: need(2); return quarterplane_robin(args[0], args[1]);
        case OracleTag::StripDelta: need(2); return strip_delta(args[0], args[1]);
        case OracleTag::Bracket: need(2); return bracket(args[0], args[1]);
        case OracleTag::ArcCapacity: need(1); return arc_capacity(args[0].real());
        case OracleTag::SegmentCapacity: need(2); return segment_capacity(args[0].real(), args[1].real());
    }
    throw InputError("unreachable oracle tag");
}

}  // namespace robincap::oracle
