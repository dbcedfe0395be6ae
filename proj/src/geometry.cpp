#include "robincap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace robincap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * kPi;

double wrap_positive(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

double segment_distance(Complex z, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    double s = len2 > 0 ? dot(z - a, d) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(z - (a + s * d));
}

// Distance from z to origin + s*dir for s in [s0, s1] (infinite bounds allowed).
double ray_distance(Complex z, Complex origin, Complex dir, double s0, double s1) {
    const double s = std::clamp(dot(z - origin, dir) / std::norm(dir), s0, s1);
    return std::abs(z - (origin + s * dir));
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
    const double d1 = cross(q2 - q1, p1 - q1);
    const double d2 = cross(q2 - q1, p2 - q1);
    const double d3 = cross(p2 - p1, q1 - p1);
    const double d4 = cross(p2 - p1, q2 - p1);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Polyline along a loop in traversal order, closed (first point not repeated).
std::vector<Complex> polygonize(const BoundaryLoop& loop, int per_circle = 96) {
    std::vector<Complex> pts;
    for (const auto& arc : loop.arcs) {
        int n = 1;
        if (arc.kind() == ArcKind::Circular)
            n = std::max(4, static_cast<int>(std::ceil(per_circle * std::abs(arc.t1() - arc.t0()) / kTwoPi)));
        const bool fwd = arc.orientation() == Orientation::Positive;
        for (int k = 0; k < n; ++k) {
            const double u = static_cast<double>(k) / n;
            const double t = fwd ? arc.t0() + u * (arc.t1() - arc.t0()) : arc.t1() + u * (arc.t0() - arc.t1());
            pts.push_back(arc.point(t));
        }
    }
    return pts;
}

double signed_area(const std::vector<Complex>& poly) {
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * a;
}

// Exact winding number of a loop around z (z not on the loop).
int winding_number(const BoundaryLoop& loop, Complex z) {
    double total = 0.0;
    for (const auto& arc : loop.arcs) {
        const bool fwd = arc.orientation() == Orientation::Positive;
        const double ta = fwd ? arc.t0() : arc.t1();
        const double tb = fwd ? arc.t1() : arc.t0();
        if (arc.kind() == ArcKind::Line) {
            total += std::arg((arc.point(tb) - z) / (arc.point(ta) - z));
            continue;
        }
        const int n = std::max(1, static_cast<int>(std::ceil(std::abs(tb - ta) / (kPi / 4))));
        const double inside = std::abs(z - arc.center()) < arc.radius() ? 1.0 : 0.0;
        for (int k = 0; k < n; ++k) {
            const double u0 = ta + (tb - ta) * k / n;
            const double u1 = ta + (tb - ta) * (k + 1) / n;
            const Complex p = arc.point(u0);
            const Complex q = arc.point(u1);
            total += std::arg((q - z) / (p - z));
            if (inside > 0) {
                const Complex m = 0.5 * (p + q);
                if (dot(z - m, m - arc.center()) > 0) total += (u1 > u0 ? kTwoPi : -kTwoPi);
            }
        }
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace

// ---------------------------------------------------------------------------
// ArcSegment

ArcSegment ArcSegment::circle(Complex center, double radius) { return arc(center, radius, 0.0, kTwoPi); }

ArcSegment ArcSegment::arc(Complex center, double radius, double t0, double t1) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("arc radius must be positive");
    if (t0 == t1) throw InputError("arc has zero angular span");
    if (std::abs(t1 - t0) > kTwoPi * (1 + 1e-14)) throw InputError("arc span exceeds a full turn");
    ArcSegment s;
    s.kind_ = ArcKind::Circular;
    s.center_ = center;
    s.radius_ = radius;
    s.t0_ = t0;
    s.t1_ = t1;
    s.a_ = s.point(t0);
    s.b_ = s.point(t1);
    return s;
}

ArcSegment ArcSegment::segment(Complex a, Complex b) {
    if (a == b) throw InputError("segment has zero length");
    ArcSegment s;
    s.kind_ = ArcKind::Line;
    s.a_ = a;
    s.b_ = b;
    s.t0_ = 0.0;
    s.t1_ = 1.0;
    return s;
}

bool ArcSegment::is_closed_circle() const {
    return kind_ == ArcKind::Circular && std::abs(std::abs(t1_ - t0_) - kTwoPi) < 1e-12;
}

Complex ArcSegment::point(double t) const {
    if (kind_ == ArcKind::Circular) return center_ + std::polar(radius_, t);
    return a_ + t * (b_ - a_);
}

Complex ArcSegment::tangent(double t) const {
    if (kind_ == ArcKind::Circular) return Complex(0.0, 1.0) * std::polar(1.0, t);
    return (b_ - a_) / std::abs(b_ - a_);
}

double ArcSegment::param_of(Complex z) const {
    if (kind_ == ArcKind::Line) {
        const Complex d = b_ - a_;
        return std::clamp(dot(z - a_, d) / std::norm(d), 0.0, 1.0);
    }
    const double lo = param_lo();
    const double hi = param_hi();
    const double theta = std::arg(z - center_);
    const double t = lo + wrap_positive(theta - lo);
    if (t <= hi + 1e-15) return std::min(t, hi);
    return std::abs(z - point(lo)) <= std::abs(z - point(hi)) ? lo : hi;
}

double ArcSegment::length() const {
    return kind_ == ArcKind::Circular ? radius_ * std::abs(t1_ - t0_) : std::abs(b_ - a_);
}

double ArcSegment::speed() const { return kind_ == ArcKind::Circular ? radius_ : std::abs(b_ - a_); }

Complex ArcSegment::head() const { return orientation_ == Orientation::Positive ? point(t0_) : point(t1_); }
Complex ArcSegment::tail() const { return orientation_ == Orientation::Positive ? point(t1_) : point(t0_); }

double ArcSegment::distance(Complex z) const { return std::abs(z - point(param_of(z))); }

// ---------------------------------------------------------------------------
// DomainSpec

bool DomainSpec::contains_infinity() const { return kind == DomainKind::Exterior || is_model(); }

bool DomainSpec::is_model() const { return kind != DomainKind::Bounded && kind != DomainKind::Exterior; }

std::size_t DomainSpec::component_count() const { return is_model() ? model_edges().size() : loops.size(); }

std::vector<ModelEdge> DomainSpec::model_edges() const {
    const Complex I{0.0, 1.0};
    switch (kind) {
        case DomainKind::UpperHalfPlane: return {{0.0, 1.0, -kInf, kInf}};
        case DomainKind::RightHalfPlane: return {{0.0, I, -kInf, kInf}};
        case DomainKind::Quadrant: return {{0.0, 1.0, 0.0, kInf}, {0.0, I, 0.0, kInf}};
        case DomainKind::Strip: return {{0.0, 1.0, -kInf, kInf}, {I * (kPi / 2), 1.0, -kInf, kInf}};
        default: return {};
    }
}

bool DomainSpec::contains(Complex z) const {
    switch (kind) {
        case DomainKind::UpperHalfPlane: return z.imag() > 0;
        case DomainKind::RightHalfPlane: return z.real() > 0;
        case DomainKind::Quadrant: return z.real() > 0 && z.imag() > 0;
        case DomainKind::Strip: return z.imag() > 0 && z.imag() < kPi / 2;
        default: break;
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return kind == DomainKind::Exterior;
    if (distance_to_boundary(z) == 0.0) return false;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const int w = winding_number(loops[i], z);
        const bool outer = kind == DomainKind::Bounded && i == 0;
        if (outer && w == 0) return false;
        if (!outer && w != 0) return false;
    }
    return true;
}

double DomainSpec::distance_to_boundary(Complex z) const {
    double d = kInf;
    if (is_model()) {
        for (const auto& e : model_edges()) d = std::min(d, ray_distance(z, e.origin, e.direction, e.s_min, e.s_max));
        return d;
    }
    for (const auto& loop : loops)
        for (const auto& arc : loop.arcs) d = std::min(d, arc.distance(z));
    return d;
}

double DomainSpec::extent() const {
    if (is_model() || loops.empty()) return kInf;
    double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
    for (const auto& loop : loops)
        for (const auto& p : polygonize(loop)) {
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, p.imag());
            ymax = std::max(ymax, p.imag());
        }
    return std::hypot(xmax - xmin, ymax - ymin);
}

// ---------------------------------------------------------------------------
// Validation

DomainSpec make_domain(DomainSpec spec) {
    if (spec.is_model()) {
        if (!spec.loops.empty()) throw InputError("model domains take no loops");
        return spec;
    }
    if (spec.loops.empty()) throw InputError("domain has no boundary loops");
    if (spec.kind == DomainKind::Bounded && spec.loops.empty()) throw InputError("bounded domain needs an outer loop");

    double scale = 0.0;
    for (const auto& loop : spec.loops)
        for (const auto& arc : loop.arcs) scale = std::max({scale, std::abs(arc.a()), std::abs(arc.b()), arc.length()});
    const double tol = 1e-9 * std::max(1.0, scale);

    for (std::size_t li = 0; li < spec.loops.size(); ++li) {
        auto& loop = spec.loops[li];
        if (loop.arcs.empty()) throw InputError("loop '" + loop.name + "' is empty");
        if (loop.arcs.size() == 1 && !loop.arcs[0].is_closed_circle())
            throw InputError("loop '" + loop.name + "' with a single piece must be a full circle");
        for (auto& arc : loop.arcs) {
            if (!(arc.length() > 0)) throw InputError("loop '" + loop.name + "' has a degenerate piece");
            arc.set_orientation(Orientation::Positive);
            if (loop.arcs.size() > 1 && arc.is_closed_circle())
                throw InputError("loop '" + loop.name + "' mixes a full circle with other pieces");
        }
        if (loop.arcs.size() > 1) {
            for (std::size_t k = 0; k < loop.arcs.size(); ++k) {
                const auto& cur = loop.arcs[k];
                const auto& next = loop.arcs[(k + 1) % loop.arcs.size()];
                if (std::abs(cur.tail() - next.head()) > tol)
                    throw InputError("loop '" + loop.name + "' does not close: piece " + std::to_string(k) +
                                     " does not end where piece " + std::to_string((k + 1) % loop.arcs.size()) +
                                     " starts");
            }
        }
        const auto poly = polygonize(loop);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            for (std::size_t j = i + 2; j < poly.size(); ++j) {
                if (i == 0 && j == poly.size() - 1) continue;
                if (segments_intersect(poly[i], poly[(i + 1) % poly.size()], poly[j], poly[(j + 1) % poly.size()]))
                    throw InputError("loop '" + loop.name + "' intersects itself");
            }
        }
        const bool outer = spec.kind == DomainKind::Bounded && li == 0;
        const double area = signed_area(poly);
        if ((outer && area < 0) || (!outer && area > 0)) {
            for (auto& arc : loop.arcs) arc.set_orientation(Orientation::Negative);
            std::reverse(loop.arcs.begin(), loop.arcs.end());
        }
    }

    std::vector<std::vector<Complex>> polys;
    for (const auto& loop : spec.loops) polys.push_back(polygonize(loop));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            for (std::size_t a = 0; a < polys[i].size(); ++a)
                for (std::size_t b = 0; b < polys[j].size(); ++b)
                    if (segments_intersect(polys[i][a], polys[i][(a + 1) % polys[i].size()], polys[j][b],
                                           polys[j][(b + 1) % polys[j].size()]))
                        throw InputError("loops '" + spec.loops[i].name + "' and '" + spec.loops[j].name +
                                         "' intersect");
        }
    }
    const std::size_t first_hole = spec.kind == DomainKind::Bounded ? 1 : 0;
    for (std::size_t i = first_hole; i < spec.loops.size(); ++i) {
        const Complex probe = spec.loops[i].arcs[0].head();
        if (spec.kind == DomainKind::Bounded && winding_number(spec.loops[0], probe) == 0)
            throw InputError("hole '" + spec.loops[i].name + "' lies outside the outer loop");
        for (std::size_t j = first_hole; j < spec.loops.size(); ++j) {
            if (i == j) continue;
            if (winding_number(spec.loops[j], probe) != 0)
                throw InputError("hole '" + spec.loops[i].name + "' lies inside hole '" + spec.loops[j].name + "'");
        }
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Marking

namespace {

struct Interval {
    double lo, hi;
};

std::pair<double, double> component_range(const DomainSpec& d, const GammaPiece& p) {
    if (d.is_model()) {
        const auto e = d.model_edges().at(p.component);
        return {e.s_min, e.s_max};
    }
    const auto& arc = d.loops.at(p.component).arcs.at(p.arc);
    return {arc.param_lo(), arc.param_hi()};
}

// gamma intervals on one arc, merged and sorted.
std::vector<Interval> gamma_on(const MarkedDomain& md, int comp, int arc) {
    std::vector<Interval> iv;
    for (const auto& p : md.gamma)
        if (p.component == comp && p.arc == arc) iv.push_back({p.s0, p.s1});
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& i : iv) {
        if (!merged.empty() && i.lo <= merged.back().hi) merged.back().hi = std::max(merged.back().hi, i.hi);
        else merged.push_back(i);
    }
    return merged;
}

std::vector<GammaPiece> free_pieces(const MarkedDomain& md) {
    std::vector<GammaPiece> out;
    const auto& d = md.domain;
    const int ncomp = static_cast<int>(d.component_count());
    for (int c = 0; c < ncomp; ++c) {
        const int narcs = d.is_model() ? 1 : static_cast<int>(d.loops[c].arcs.size());
        for (int a = 0; a < narcs; ++a) {
            const auto [lo, hi] = component_range(d, {c, a, 0, 0});
            double cursor = lo;
            for (const auto& g : gamma_on(md, c, a)) {
                if (g.lo > cursor) out.push_back({c, a, cursor, g.lo});
                cursor = std::max(cursor, g.hi);
            }
            if (cursor < hi) out.push_back({c, a, cursor, hi});
        }
    }
    return out;
}

double piece_distance(const DomainSpec& d, const GammaPiece& p, Complex z) {
    if (d.is_model()) {
        const auto e = d.model_edges()[p.component];
        return ray_distance(z, e.origin, e.direction, p.s0, p.s1);
    }
    const auto& arc = d.loops[p.component].arcs[p.arc];
    if (arc.kind() == ArcKind::Line) return segment_distance(z, arc.point(p.s0), arc.point(p.s1));
    return ArcSegment::arc(arc.center(), arc.radius(), p.s0, p.s1).distance(z);
}

Complex piece_point(const DomainSpec& d, const GammaPiece& p, double s) {
    if (d.is_model()) return d.model_edges()[p.component].point(s);
    return d.loops[p.component].arcs[p.arc].point(s);
}

// Deterministic samples of a list of pieces; infinite ranges are compressed by atan.
std::vector<Complex> sample_pieces(const DomainSpec& d, const std::vector<GammaPiece>& pieces, int count,
                                   bool include_ends) {
    std::vector<Complex> out;
    if (pieces.empty()) return out;
    constexpr double kFar = 1e4;
    std::vector<double> weights;
    double total = 0.0;
    for (const auto& p : pieces) {
        const double lo = std::max(p.s0, -kFar), hi = std::min(p.s1, kFar);
        double w = std::max(hi - lo, 0.0);
        if (!d.is_model()) w *= d.loops[p.component].arcs[p.arc].speed();
        if (d.is_model() && (std::isinf(p.s0) || std::isinf(p.s1))) w = std::max(w, 10.0);
        weights.push_back(w);
        total += w;
    }
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& p = pieces[k];
        const int n = std::max(8, static_cast<int>(std::ceil(count * weights[k] / std::max(total, 1e-300))));
        for (int j = 0; j <= n; ++j) {
            if (!include_ends && (j == 0 || j == n)) continue;
            const double u = static_cast<double>(j) / n;
            double s;
            if (std::isinf(p.s0) || std::isinf(p.s1)) {
                // map u in [0,1] onto [s0, s1] through atan compression, clipped at kFar
                const double a0 = std::atan(std::max(p.s0, -kFar));
                const double a1 = std::atan(std::min(p.s1, kFar));
                s = std::tan(a0 + u * (a1 - a0));
            } else {
                s = p.s0 + u * (p.s1 - p.s0);
            }
            out.push_back(piece_point(d, p, s));
        }
    }
    return out;
}

}  // namespace

MarkedDomain mark_boundary(const DomainSpec& domain, std::vector<GammaPiece> selection, std::string name) {
    if (selection.empty()) throw InputError("gamma selection is empty; the Robin problem is undefined");
    MarkedDomain md;
    md.domain = domain;
    md.gamma_name = std::move(name);
    const int ncomp = static_cast<int>(domain.component_count());
    for (auto p : selection) {
        if (p.component < 0 || p.component >= ncomp) throw InputError("gamma references a missing boundary component");
        if (!domain.is_model() && (p.arc < 0 || p.arc >= static_cast<int>(domain.loops[p.component].arcs.size())))
            throw InputError("gamma references a missing boundary piece");
        if (domain.is_model() && p.arc != 0) throw InputError("model edges have a single piece");
        if (!(p.s1 > p.s0)) throw InputError("gamma interval is degenerate");
        const auto [lo, hi] = component_range(domain, p);
        if (!domain.is_model()) {
            const auto& arc = domain.loops[p.component].arcs[p.arc];
            if (arc.kind() == ArcKind::Circular && (p.s1 - p.s0) * arc.radius() < 1e-12)
                throw InputError("gamma interval is degenerate");
            if (arc.is_closed_circle()) {
                if (p.s1 - p.s0 > kTwoPi + 1e-12) throw InputError("gamma interval exceeds the full circle");
                if (p.s1 - p.s0 >= kTwoPi - 1e-12) {
                    md.gamma.push_back({p.component, p.arc, lo, hi});
                    continue;
                }
                const double shift = lo + wrap_positive(p.s0 - lo) - p.s0;
                p.s0 += shift;
                p.s1 += shift;
                if (p.s1 > hi) {
                    md.gamma.push_back({p.component, p.arc, p.s0, hi});
                    md.gamma.push_back({p.component, p.arc, lo, lo + (p.s1 - hi)});
                    continue;
                }
            }
        }
        const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
        if (p.s0 < lo - slack || p.s1 > hi + slack) throw InputError("gamma interval leaves its boundary piece");
        p.s0 = std::max(p.s0, lo);
        p.s1 = std::min(p.s1, hi);
        md.gamma.push_back(p);
    }
    return md;
}

MarkedDomain mark_full(const DomainSpec& domain) {
    std::vector<GammaPiece> sel;
    for (int c = 0; c < static_cast<int>(domain.component_count()); ++c) {
        if (domain.is_model()) {
            const auto e = domain.model_edges()[c];
            sel.push_back({c, 0, e.s_min, e.s_max});
            continue;
        }
        const auto& arcs = domain.loops[c].arcs;
        for (int a = 0; a < static_cast<int>(arcs.size()); ++a)
            sel.push_back({c, a, arcs[a].param_lo(), arcs[a].param_hi()});
    }
    return mark_boundary(domain, std::move(sel), "full");
}

bool MarkedDomain::is_full_marking() const { return free_pieces(*this).empty(); }

double MarkedDomain::distance_to_gamma(Complex z) const {
    double d = kInf;
    for (const auto& p : gamma) d = std::min(d, piece_distance(domain, p, z));
    return d;
}

double MarkedDomain::distance_to_free(Complex z) const {
    double d = kInf;
    for (const auto& p : free_pieces(*this)) d = std::min(d, piece_distance(domain, p, z));
    return d;
}

bool MarkedDomain::on_gamma(Complex z, double tol) const { return distance_to_gamma(z) <= tol; }

std::vector<Complex> MarkedDomain::sample_gamma(int count) const { return sample_pieces(domain, gamma, count, true); }

std::vector<Complex> MarkedDomain::sample_free(int count) const {
    return sample_pieces(domain, free_pieces(*this), count, false);
}

std::vector<Complex> MarkedDomain::sample_interior(int count) const {
    double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
    switch (domain.kind) {
        case DomainKind::UpperHalfPlane: x0 = -5; x1 = 5; y0 = 0; y1 = 5; break;
        case DomainKind::RightHalfPlane: x0 = 0; x1 = 5; y0 = -5; y1 = 5; break;
        case DomainKind::Quadrant: x0 = 0; x1 = 5; y0 = 0; y1 = 5; break;
        case DomainKind::Strip: x0 = -5; x1 = 5; y0 = 0; y1 = kPi / 2; break;
        case DomainKind::Exterior:
        case DomainKind::Bounded: {
            x0 = y0 = kInf;
            x1 = y1 = -kInf;
            for (const auto& loop : domain.loops)
                for (const auto& p : polygonize(loop)) {
                    x0 = std::min(x0, p.real());
                    x1 = std::max(x1, p.real());
                    y0 = std::min(y0, p.imag());
                    y1 = std::max(y1, p.imag());
                }
            if (domain.kind == DomainKind::Exterior) {
                const double w = std::max(x1 - x0, y1 - y0);
                x0 -= w; x1 += w; y0 -= w; y1 += w;
            }
            break;
        }
    }
    // Halton points in the bounding box
    const auto halton = [](int i, int base) {
        double f = 1.0, r = 0.0;
        while (i > 0) {
            f /= base;
            r += f * (i % base);
            i /= base;
        }
        return r;
    };
    std::vector<Complex> out;
    for (int i = 1; static_cast<int>(out.size()) < count && i < 100 * count + 1000; ++i) {
        const Complex z(x0 + (x1 - x0) * halton(i, 2), y0 + (y1 - y0) * halton(i, 3));
        if (domain.contains(z)) out.push_back(z);
    }
    return out;
}

double MarkedDomain::gamma_length() const {
    double total = 0.0;
    for (const auto& p : gamma) {
        if (domain.is_model()) total += (p.s1 - p.s0) * std::abs(domain.model_edges()[p.component].direction);
        else total += (p.s1 - p.s0) * domain.loops[p.component].arcs[p.arc].speed();
    }
    return total;
}

double transfer_radius(double r_model, Complex phi_derivative_at_pole) {
    const double d = std::abs(phi_derivative_at_pole);
    if (!(d > 0.0)) throw InputError("transfer_radius: conformal map has zero derivative at the pole");
    return r_model / d;
}

// ---------------------------------------------------------------------------
// Catalog

DomainSpec disk(Complex center, double radius) {
    DomainSpec d;
    d.id = "disk";
    d.kind = DomainKind::Bounded;
    d.loops.push_back({"outer", {ArcSegment::circle(center, radius)}});
    return make_domain(std::move(d));
}

DomainSpec unit_disk() {
    auto d = disk(0.0, 1.0);
    d.id = "unit_disk";
    return d;
}

DomainSpec annulus(double inner, double outer) {
    if (!(inner > 0 && inner < outer)) throw InputError("annulus needs 0 < inner < outer");
    DomainSpec d;
    d.id = "annulus";
    d.kind = DomainKind::Bounded;
    d.loops.push_back({"outer", {ArcSegment::circle(0.0, outer)}});
    d.loops.push_back({"inner", {ArcSegment::circle(0.0, inner)}});
    return make_domain(std::move(d));
}

DomainSpec half_disk() {
    DomainSpec d;
    d.id = "half_disk";
    d.kind = DomainKind::Bounded;
    d.loops.push_back({"outer", {ArcSegment::segment(-1.0, 1.0), ArcSegment::arc(0.0, 1.0, 0.0, kPi)}});
    return make_domain(std::move(d));
}

DomainSpec model_domain(DomainKind kind) {
    DomainSpec d;
    d.kind = kind;
    switch (kind) {
        case DomainKind::UpperHalfPlane: d.id = "upper_halfplane"; break;
        case DomainKind::RightHalfPlane: d.id = "right_halfplane"; break;
        case DomainKind::Quadrant: d.id = "quadrant"; break;
        case DomainKind::Strip: d.id = "strip"; break;
        default: throw InputError("model_domain: not a model kind");
    }
    return d;
}

DomainSpec exterior_of(std::vector<BoundaryLoop> holes) {
    DomainSpec d;
    d.id = "exterior";
    d.kind = DomainKind::Exterior;
    d.loops = std::move(holes);
    return make_domain(std::move(d));
}

MarkedDomain disk_with_arcs(std::span<const std::pair<double, double>> arcs) {
    std::vector<GammaPiece> sel;
    for (const auto& [t0, t1] : arcs) sel.push_back({0, 0, t0, t1});
    return mark_boundary(unit_disk(), std::move(sel), "arcs");
}

ArcSegment invert_arc(const ArcSegment& arc, Complex pivot) {
    const auto w = [&](Complex z) { return 1.0 / (z - pivot); };
    const double lo = arc.param_lo(), hi = arc.param_hi();
    const Complex ws = w(arc.point(lo)), wm = w(arc.point(0.5 * (lo + hi))), we = w(arc.point(hi));

    Complex center;
    double radius;
    if (arc.kind() == ArcKind::Circular) {
        const Complex d = arc.center() - pivot;
        const double den = std::norm(d) - arc.radius() * arc.radius();
        if (std::abs(den) < 1e-14) throw InputError("inversion pivot lies on the arc's circle");
        center = std::conj(d) / den;
        radius = arc.radius() / std::abs(den);
    } else {
        // circle through 0, w(a), w(b), or a straight segment when collinear
        const Complex p = ws, q = we;
        const double det = 2.0 * cross(p, q);
        if (std::abs(det) < 1e-14 * std::norm(p) * std::norm(q) / std::max(std::abs(p - q), 1e-300)) {
            return ArcSegment::segment(ws, we);
        }
        const double pp = std::norm(p), qq = std::norm(q);
        center = Complex((pp * q.imag() - qq * p.imag()) / det, (qq * p.real() - pp * q.real()) / det);
        radius = std::abs(center);
    }
    if (arc.is_closed_circle()) {
        // traversal direction of a closed loop is fixed later by make_domain
        const double a0 = std::arg(ws - center);
        return ArcSegment::arc(center, radius, a0, a0 + kTwoPi);
    }
    const double a0 = std::arg(ws - center);
    const double dm = wrap_positive(std::arg(wm - center) - a0);
    const double d1 = wrap_positive(std::arg(we - center) - a0);
    if (dm < d1) return ArcSegment::arc(center, radius, a0, a0 + d1);
    return ArcSegment::arc(center, radius, a0, a0 - (kTwoPi - d1));
}

}  // namespace robincap
