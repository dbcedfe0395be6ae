#pragma once

// Robin radii and Robin functions of a marked domain, computed along the
// cheapest exact-enough route:
//
//   closed form   unit disk with the whole circle marked; model domains whose
//                 marking matches an oracle
//   reflection    unit disk with gamma a union of arcs of the circle, and
//                 half-planes with gamma a union of bounded intervals: the
//                 Robin function is g(z,w) + g(z,w*) for the complement of
//                 gamma, w* the mirror image of w, solved by boundary integrals
//   mesh          everything else (finite elements, one Richardson step)
//
// Each route carries a calibrated discrepancy, from which the numeric budget
// of a verification report is derived.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "robincap/bem.hpp"
#include "robincap/robin.hpp"

namespace robincap {

enum class Route { ClosedForm = 0, Reflection = 1, Mesh = 2 };
const char* to_string(Route r);

/// Pieces of gamma as a compact set (adjacent pieces of one circle merged).
CompactSet gamma_set(const MarkedDomain& md);

/// Green function and radii of the complement of a compact set.
class ComplementProvider {
public:
    explicit ComplementProvider(CompactSet set, int panels_per_piece = 160);

    /// log r(C \ set, z); at infinity this is -log cap.
    double log_radius(ExtendedPoint z);
    /// g(z, w) for the complement; w may be infinity.
    double green(Complex z, ExtendedPoint w);
    double capacity() const { return bem_.capacity(); }
    const ExteriorBem& solver() const { return bem_; }

private:
    const ExteriorBem::PoleSolution& pole(Complex w);
    ExteriorBem bem_;
    std::map<std::pair<double, double>, ExteriorBem::PoleSolution> cache_;
};

class RobinProvider {
public:
    RobinProvider(MarkedDomain md, RobinOptions options = {});

    const MarkedDomain& marked() const { return md_; }
    Route route() const { return route_; }

    /// log r(B, gamma, z).
    double log_radius(ExtendedPoint z);
    /// g_B(z, w, gamma); z may be infinity when the domain contains it.
    double green(ExtendedPoint z, ExtendedPoint w);

private:
    const RobinResult& mesh_result(ExtendedPoint w);
    Complex mirror(Complex w) const;

    MarkedDomain md_;
    RobinOptions options_;
    Route route_ = Route::Mesh;
    bool unit_disk_full_ = false;
    std::unique_ptr<ComplementProvider> complement_;
    std::map<std::pair<double, double>, std::unique_ptr<RobinResult>> results_;
};

/// Largest oracle discrepancy of a route at mesh size h, in log r and g units.
/// Computed once per (route, h) and cached; the closed-form route returns 0.
double calibration_discrepancy(Route route, double h);

/// 3 x calibration discrepancy, floored at 1e-9.
double numeric_budget(Route route, double h);

}  // namespace robincap
