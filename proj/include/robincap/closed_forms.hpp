#pragma once

// Exact formulas for the model domains. These are evaluated independently of
// every numerical solver so that solver output can be cross-checked.

#include <string>
#include <string_view>
#include <vector>

#include "robincap/types.hpp"

namespace robincap::oracle {

enum class OracleTag {
    DiskGreen,
    HalfplaneGreen,
    QuarterplaneRobin,
    StripDelta,
    Bracket,
    ArcCapacity,
    SegmentCapacity,
};

OracleTag parse_oracle_tag(std::string_view name);
std::string_view to_string(OracleTag tag);

/// Green function of the unit disk: log|1 - conj(z0) z| - log|z - z0|.
double disk_green(Complex z, Complex z0);

/// Conformal radius of the unit disk at z: 1 - |z|^2.
double disk_radius(Complex z);

/// Green function of the right half-plane Re z > 0.
double halfplane_green(Complex z, Complex z0);

/// Conformal radius of the right half-plane at z: 2 Re z.
double halfplane_radius(Complex z);

/// |(a-b)(a-conj b)| / |(a+b)(a+conj b)|.
double bracket(Complex a, Complex b);

/// Robin function of the quadrant {x>0, y>0}, Dirichlet on the imaginary
/// axis and zero flux on the positive real axis.
double quarterplane_robin(Complex z, Complex zeta);

/// Robin radius of the same quadrant marking: |2 zeta Re zeta / Im zeta|.
double quarterplane_radius(Complex zeta);

/// exp(-g) for the strip 0 < Im z < pi/2 with Dirichlet data on the upper edge.
double strip_delta(Complex z, Complex zeta);

/// Robin radius of the strip marking at zeta (from the exp pre-map onto the quadrant).
double strip_radius(Complex zeta);

/// Logarithmic capacity of a single arc of the unit circle: sin(measure/4).
double arc_capacity(double angular_measure);

/// Logarithmic capacity of the real segment [a, b]: (b - a)/4.
double segment_capacity(double a, double b);

/// Evaluates an oracle by tag from a flat argument list (CLI helper).
double evaluate(OracleTag tag, const std::vector<Complex>& args);

}  // namespace robincap::oracle
