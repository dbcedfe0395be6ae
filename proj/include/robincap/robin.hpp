#pragma once

// Robin and Green functions, Robin radii and capacities, logarithmic
// capacity, and the conformal invariant delta.
//
// Bounded domains are solved with P1 elements for the regular part
// h = g + log|z - z0| and one Richardson step (h, h/2) on log r. Model
// domains use closed forms where the marking matches one, and otherwise a
// pre-map onto the disk. Exterior domains are inverted about a point of the
// complement. A half-plane with finitely many marked intervals and the pole
// at infinity is reflected onto the complement of the intervals and handled
// by the boundary integral solver.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "robincap/bem.hpp"
#include "robincap/fem.hpp"

namespace robincap {

struct RobinOptions {
    double h = 0.02;
    bool richardson = true;
    bool parallel = true;
};

class RobinResult {
public:
    using GreenFn = std::function<std::optional<double>(ExtendedPoint)>;

    RobinResult(MarkedDomain marked, ExtendedPoint pole, double radius, std::string method, GreenFn green,
                double h = 0.0);

    const MarkedDomain& marked() const { return marked_; }
    const ExtendedPoint& pole() const { return pole_; }
    /// Robin radius (the Richardson estimate when one was made).
    double radius() const { return radius_; }
    double capacity() const { return 1.0 / radius_; }
    double h() const { return h_; }
    const std::string& method() const { return method_; }

    /// Radius from the finest single solve, and from the coarse one.
    std::optional<double> fine_radius;
    std::optional<double> coarse_radius;
    /// Regular part on the finest mesh (mesh-based methods only; on the
    /// pre-mapped or inverted model when a map was used).
    std::shared_ptr<const HarmonicField> regular_part;
    /// Largest relative residual of the linear solves.
    double solver_residual = 0.0;
    /// Points where gamma meets the free boundary.
    std::vector<Complex> junctions;

    /// g(z); +infinity at the pole, nothing outside the closed domain.
    std::optional<double> try_green(ExtendedPoint z) const;
    double green(ExtendedPoint z) const;
    /// Tolerance widening near gamma / free-boundary junctions: 3 within
    /// distance h of a junction, 1 elsewhere.
    double junction_factor(Complex z) const;

private:
    MarkedDomain marked_;
    ExtendedPoint pole_;
    double radius_;
    std::string method_;
    GreenFn green_;
    double h_;
};

RobinResult robin_function(const MarkedDomain& md, ExtendedPoint pole, const RobinOptions& options = {});
RobinResult green_function(const DomainSpec& domain, ExtendedPoint pole, const RobinOptions& options = {});
double robin_capacity(const MarkedDomain& md, ExtendedPoint pole, const RobinOptions& options = {});

/// Logarithmic capacity of a compact set of arcs, segments and circles.
double log_capacity(const CompactSet& set, int panels_per_piece = 160);
/// Logarithmic capacity of the complement of an exterior domain, r(B, inf)^-1.
double log_capacity(const DomainSpec& exterior, const RobinOptions& options = {});

/// delta(z, w; B, gamma) = exp(-g_B(z, w, gamma)).
double delta_invariant(const MarkedDomain& md, Complex z, Complex w, const RobinOptions& options = {});

/// True when a model domain's marking is one that the closed forms cover.
bool has_model_closed_form(const MarkedDomain& md);

/// Marked-interval half-plane reduction: the compact set that gamma becomes
/// after reflection (empty when the marking is not a finite union of intervals).
std::optional<CompactSet> reflected_intervals(const MarkedDomain& md);

}  // namespace robincap
