#include "robincap/premap.hpp"

#include <algorithm>
#include <cmath>

namespace robincap {

namespace {

const Complex I{0.0, 1.0};

Complex cayley(Complex z) { return (z - I) / (z + I); }
Complex cayley_prime(Complex z) { return 2.0 * I / ((z + I) * (z + I)); }
Complex cayley_inverse(Complex w) { return I * (1.0 + w) / (1.0 - w); }

// angle of cayley(x) for real x, continuous on [-inf, inf] -> [0, 2 pi]
double real_axis_angle(double x) {
    if (std::isinf(x)) return x > 0 ? 2 * kPi : 0.0;
    return kPi + 2.0 * std::atan(x);
}

double squared(double s) { return std::isinf(s) ? s : s * s; }

}  // namespace

DiskPremap::DiskPremap(DomainKind kind) : kind_(kind) {
    if (kind == DomainKind::Bounded || kind == DomainKind::Exterior)
        throw InputError("no disk pre-map for a non-model domain");
}

Complex DiskPremap::operator()(Complex z) const {
    switch (kind_) {
        case DomainKind::UpperHalfPlane: return cayley(z);
        case DomainKind::RightHalfPlane: return (z - 1.0) / (z + 1.0);
        case DomainKind::Quadrant: return cayley(z * z);
        default: {
            const Complex e = std::exp(z);
            return cayley(e * e);
        }
    }
}

Complex DiskPremap::derivative(Complex z) const {
    switch (kind_) {
        case DomainKind::UpperHalfPlane: return cayley_prime(z);
        case DomainKind::RightHalfPlane: return 2.0 / ((z + 1.0) * (z + 1.0));
        case DomainKind::Quadrant: return cayley_prime(z * z) * 2.0 * z;
        default: {
            const Complex e2 = std::exp(2.0 * z);
            return cayley_prime(e2) * 2.0 * e2;
        }
    }
}

Complex DiskPremap::inverse(Complex w) const {
    switch (kind_) {
        case DomainKind::UpperHalfPlane: return cayley_inverse(w);
        case DomainKind::RightHalfPlane: return (1.0 + w) / (1.0 - w);
        case DomainKind::Quadrant: return std::sqrt(cayley_inverse(w));
        default: return 0.5 * std::log(cayley_inverse(w));
    }
}

double DiskPremap::boundary_angle(int edge, double s) const {
    switch (kind_) {
        case DomainKind::UpperHalfPlane: return real_axis_angle(s);
        case DomainKind::RightHalfPlane: return 2 * kPi - real_axis_angle(s);
        case DomainKind::Quadrant: return edge == 0 ? real_axis_angle(squared(s)) : real_axis_angle(-squared(s));
        default: {
            const double e2 = std::isinf(s) ? (s > 0 ? s : 0.0) : std::exp(2.0 * s);
            return edge == 0 ? real_axis_angle(e2) : real_axis_angle(-e2);
        }
    }
}

MarkedDomain DiskPremap::image(const MarkedDomain& md) const {
    if (md.domain.kind != kind_) throw InputError("pre-map applied to a domain of another kind");
    std::vector<std::pair<double, double>> arcs;
    for (const auto& p : md.gamma) {
        const double a = boundary_angle(p.component, p.s0);
        const double b = boundary_angle(p.component, p.s1);
        arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return disk_with_arcs(arcs);
}

}  // namespace robincap
