#pragma once

// Planar domains bounded by circular arcs and line segments, the marked
// boundary subset gamma, and the unbounded model domains used by the
// closed-form oracles.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "robincap/types.hpp"

namespace robincap {

enum class ArcKind { Circular, Line };
enum class Orientation { Positive, Negative };

/// A boundary piece. Circular arcs are parametrized by angle, line segments by
/// s in [0, 1] from `a` to `b`. The native parameter runs from t0 to t1;
/// `orientation` says whether the loop traverses it forwards or backwards.
class ArcSegment {
public:
    static ArcSegment circle(Complex center, double radius);
    /// Arc from angle t0 to t1; t1 < t0 gives a clockwise arc.
    static ArcSegment arc(Complex center, double radius, double t0, double t1);
    static ArcSegment segment(Complex a, Complex b);

    ArcKind kind() const { return kind_; }
    Complex center() const { return center_; }
    double radius() const { return radius_; }
    double t0() const { return t0_; }
    double t1() const { return t1_; }
    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Orientation orientation() const { return orientation_; }
    void set_orientation(Orientation o) { orientation_ = o; }

    bool is_closed_circle() const;
    Complex point(double t) const;
    /// Unit tangent in the direction of increasing parameter.
    Complex tangent(double t) const;
    /// Parameter of the point on this arc closest to z (clamped to the arc).
    double param_of(Complex z) const;
    double length() const;
    /// |dz/dt|.
    double speed() const;
    /// Parameter span [lo, hi] with lo < hi.
    double param_lo() const { return std::min(t0_, t1_); }
    double param_hi() const { return std::max(t0_, t1_); }
    /// Start and end of the traversal, accounting for orientation.
    Complex head() const;
    Complex tail() const;
    double distance(Complex z) const;

private:
    ArcKind kind_ = ArcKind::Line;
    Complex center_{};
    double radius_ = 0.0;
    double t0_ = 0.0;
    double t1_ = 1.0;
    Complex a_{}, b_{};
    Orientation orientation_ = Orientation::Positive;
};

struct BoundaryLoop {
    std::string name;
    std::vector<ArcSegment> arcs;
};

/// Unbounded model domains handled by conformal pre-maps and closed forms.
enum class DomainKind {
    Bounded,          // outer loop + holes
    Exterior,         // holes only; contains infinity
    UpperHalfPlane,   // Im z > 0
    RightHalfPlane,   // Re z > 0
    Quadrant,         // Re z > 0, Im z > 0
    Strip,            // 0 < Im z < pi/2
};

/// Straight boundary component of a model domain: origin + s * direction.
struct ModelEdge {
    Complex origin;
    Complex direction;
    double s_min;  // may be -infinity
    double s_max;  // may be +infinity
    Complex point(double s) const { return origin + s * direction; }
};

struct DomainSpec {
    std::string id;
    DomainKind kind = DomainKind::Bounded;
    /// For Bounded, loops[0] is the outer loop; all other loops are holes.
    std::vector<BoundaryLoop> loops;

    bool contains_infinity() const;
    bool is_model() const;
    std::size_t component_count() const;
    std::vector<ModelEdge> model_edges() const;

    /// Open-domain membership test (exact for arcs and segments).
    bool contains(Complex z) const;
    double distance_to_boundary(Complex z) const;
    /// Diameter of the bounding box of all loops (models: infinity).
    double extent() const;
};

/// gamma selection: a closed parameter interval of one arc (or model edge).
struct GammaPiece {
    int component = 0;  // loop index, or model edge index
    int arc = 0;        // arc index within the loop (0 for model edges)
    double s0 = 0.0;
    double s1 = 0.0;    // s0 < s1 in native parameters; infinities allowed on model edges
};

struct MarkedDomain {
    DomainSpec domain;
    std::vector<GammaPiece> gamma;
    std::string gamma_name;

    bool is_full_marking() const;
    double distance_to_gamma(Complex z) const;
    double distance_to_free(Complex z) const;
    /// True when z lies on gamma within `tol`.
    bool on_gamma(Complex z, double tol = 1e-9) const;
    /// Dense deterministic samples of gamma and of its complement in the boundary.
    std::vector<Complex> sample_gamma(int count) const;
    std::vector<Complex> sample_free(int count) const;
    std::vector<Complex> sample_interior(int count) const;
    /// Total angular/length measure of gamma (finite pieces only).
    double gamma_length() const;
};

/// Validates loops, normalizes orientation (outer positive, holes negative).
DomainSpec make_domain(DomainSpec spec);

/// Builds the marked domain; selections are validated against the arcs.
MarkedDomain mark_boundary(const DomainSpec& domain, std::vector<GammaPiece> selection,
                           std::string name = {});

/// Marks the whole boundary (the Green-function case).
MarkedDomain mark_full(const DomainSpec& domain);

/// r(B, gamma, z0) = r(B', phi(gamma), phi(z0)) / |phi'(z0)|.
double transfer_radius(double r_model, Complex phi_derivative_at_pole);

// Frequently used domains.
DomainSpec unit_disk();
DomainSpec disk(Complex center, double radius);
DomainSpec annulus(double inner, double outer = 1.0);
DomainSpec half_disk();
DomainSpec model_domain(DomainKind kind);
/// Exterior of a compact set given by closed loops.
DomainSpec exterior_of(std::vector<BoundaryLoop> holes);

/// Unit disk with gamma = union of closed arcs [t0_k, t1_k] (angles, t0 < t1).
MarkedDomain disk_with_arcs(std::span<const std::pair<double, double>> arcs);

/// Point inversion w = 1/(z - pivot) applied to an arc; the result is an arc or a segment.
ArcSegment invert_arc(const ArcSegment& arc, Complex pivot);

}  // namespace robincap
