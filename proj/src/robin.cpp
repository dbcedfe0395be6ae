#include "robincap/robin.hpp"

#include <cmath>
#include <limits>

#include "robincap/closed_forms.hpp"
#include "robincap/premap.hpp"

namespace robincap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex piece_point(const DomainSpec& d, const GammaPiece& p, double s) {
    if (d.is_model()) return d.model_edges()[p.component].point(s);
    return d.loops[p.component].arcs[p.arc].point(s);
}

std::vector<Complex> junction_points(const MarkedDomain& md) {
    std::vector<Complex> out;
    if (md.is_full_marking()) return out;
    for (const auto& p : md.gamma) {
        for (double s : {p.s0, p.s1}) {
            if (!std::isfinite(s)) continue;
            const Complex z = piece_point(md.domain, p, s);
            const double scale = std::max(1.0, std::abs(z));
            if (md.distance_to_free(z) > 1e-9 * scale) continue;
            bool seen = false;
            for (auto q : out) seen = seen || std::abs(q - z) < 1e-9 * scale;
            if (!seen) out.push_back(z);
        }
    }
    return out;
}

bool in_closure(const DomainSpec& d, Complex z) { return d.contains(z) || d.distance_to_boundary(z) <= 1e-12; }

void check_finite_pole(const MarkedDomain& md, Complex z0) {
    if (md.on_gamma(z0, 1e-12)) throw InputError("pole lies on gamma");
    if (md.domain.contains(z0)) return;
    if (md.domain.distance_to_boundary(z0) <= 1e-12)
        throw InputError("boundary poles are supported only where a closed form or the exterior solver applies");
    throw InputError("pole lies outside the domain");
}

// ---------------------------------------------------------------- bounded FEM

struct FemSolve {
    std::shared_ptr<const HarmonicField> field;
    double log_radius;
};

FemSolve solve_regular_part(const MarkedDomain& md, Complex z0, double h, bool parallel) {
    MeshOptions mo;
    mo.h = h;
    mo.sources.push_back(point_source(z0, h));
    mo.forced_points.push_back(z0);
    auto mesh = std::make_shared<Mesh>(mesh_domain(md, mo));
    BoundaryData bd;
    bd.dirichlet = [z0](Complex z, int) { return std::log(std::abs(z - z0)); };
    bd.flux = [z0](Complex z, Complex n) {
        const Complex d = z - z0;
        return (d.real() * n.real() + d.imag() * n.imag()) / std::norm(d);
    };
    auto field = std::make_shared<HarmonicField>(solve_mixed(mesh, bd, {parallel}));
    const int v = mesh->nearest_vertex(z0);
    return {field, field->values()[v]};
}

RobinResult robin_bounded(const MarkedDomain& md, Complex z0, const RobinOptions& opt) {
    if (md.gamma.empty()) throw InputError("gamma is empty: the Robin function does not exist");
    const auto coarse = solve_regular_part(md, z0, opt.h, opt.parallel);
    FemSolve fine = coarse;
    double log_r = coarse.log_radius;
    if (opt.richardson) {
        fine = solve_regular_part(md, z0, 0.5 * opt.h, opt.parallel);
        log_r = (4.0 * fine.log_radius - coarse.log_radius) / 3.0;
    }
    auto field = fine.field;
    auto green = [field, md, z0](ExtendedPoint p) -> std::optional<double> {
        if (p.is_infinite()) return std::nullopt;
        const Complex z = p.value();
        if (z == z0) return kInf;
        if (!in_closure(md.domain, z)) return std::nullopt;
        if (md.on_gamma(z, 1e-12)) return 0.0;
        const auto v = field->try_evaluate(z);
        if (!v) return std::nullopt;
        return *v - std::log(std::abs(z - z0));
    };
    RobinResult r(md, z0, std::exp(log_r), opt.richardson ? "fem-richardson" : "fem", green, opt.h);
    r.fine_radius = std::exp(fine.log_radius);
    r.coarse_radius = std::exp(coarse.log_radius);
    r.regular_part = field;
    r.solver_residual = std::max(coarse.field->stats().relative_residual, fine.field->stats().relative_residual);
    return r;
}

// ------------------------------------------------------------- model domains

struct EdgeMarking {
    std::vector<bool> full;
    bool partial = false;
};

EdgeMarking edge_marking(const MarkedDomain& md) {
    const auto edges = md.domain.model_edges();
    EdgeMarking m;
    m.full.assign(edges.size(), false);
    for (const auto& p : md.gamma) {
        const auto& e = edges[p.component];
        if (p.s0 <= e.s_min && p.s1 >= e.s_max) m.full[p.component] = true;
        else m.partial = true;
    }
    return m;
}

// Green function of the upper half-plane composed with a map onto it.
struct UhpComposite {
    std::function<Complex(Complex)> map;
    std::function<Complex(Complex)> derivative;
};

std::optional<RobinResult> model_closed_form(const MarkedDomain& md, Complex z0) {
    const auto m = edge_marking(md);
    if (m.partial) return std::nullopt;
    using Fn = std::function<double(Complex)>;
    Fn g;
    double radius = 0.0;
    const auto via_uhp = [&](const UhpComposite& c) {
        const Complex w0 = c.map(z0);
        g = [c, w0](Complex z) {
            const Complex w = c.map(z);
            return std::log(std::abs(w - std::conj(w0))) - std::log(std::abs(w - w0));
        };
        radius = 2.0 * w0.imag() / std::abs(c.derivative(z0));
    };
    const Complex i(0.0, 1.0);
    switch (md.domain.kind) {
        case DomainKind::UpperHalfPlane:
            via_uhp({[](Complex z) { return z; }, [](Complex) { return Complex(1.0); }});
            break;
        case DomainKind::RightHalfPlane:
            g = [z0](Complex z) { return oracle::halfplane_green(z, z0); };
            radius = oracle::halfplane_radius(z0);
            break;
        case DomainKind::Quadrant:
            if (m.full[0] && m.full[1]) {
                via_uhp({[](Complex z) { return z * z; }, [](Complex z) { return 2.0 * z; }});
            } else if (m.full[1]) {
                g = [z0](Complex z) { return oracle::quarterplane_robin(z, z0); };
                radius = oracle::quarterplane_radius(z0);
            } else {
                // reflection in the diagonal swaps the two edges
                const auto s = [i](Complex z) { return i * std::conj(z); };
                g = [s, z0](Complex z) { return oracle::quarterplane_robin(s(z), s(z0)); };
                radius = oracle::quarterplane_radius(s(z0));
            }
            break;
        case DomainKind::Strip:
            if (m.full[0] && m.full[1]) {
                via_uhp({[](Complex z) { return std::exp(2.0 * z); }, [](Complex z) { return 2.0 * std::exp(2.0 * z); }});
            } else if (m.full[1]) {
                g = [z0](Complex z) { return -std::log(oracle::strip_delta(z, z0)); };
                radius = oracle::strip_radius(z0);
            } else {
                // z -> conj(z) + i pi/2 swaps the two edges
                const auto s = [i](Complex z) { return std::conj(z) + i * (kPi / 2); };
                g = [s, z0](Complex z) { return -std::log(oracle::strip_delta(s(z), s(z0))); };
                radius = oracle::strip_radius(s(z0));
            }
            break;
        default:
            return std::nullopt;
    }
    auto green = [g, md, z0](ExtendedPoint p) -> std::optional<double> {
        if (p.is_infinite()) return std::nullopt;
        const Complex z = p.value();
        if (z == z0) return kInf;
        if (!in_closure(md.domain, z)) return std::nullopt;
        return g(z);
    };
    return RobinResult(md, z0, radius, "closed-form", green);
}

RobinResult robin_reflected(const MarkedDomain& md, const CompactSet& set) {
    auto bem = std::make_shared<ExteriorBem>(set);
    auto green = [bem, md](ExtendedPoint p) -> std::optional<double> {
        if (p.is_infinite()) return kInf;
        if (!in_closure(md.domain, p.value())) return std::nullopt;
        return bem->green_infinity(p.value());
    };
    return RobinResult(md, ExtendedPoint::infinity(), 1.0 / bem->capacity(), "reflection-bem", green);
}

RobinResult robin_model(const MarkedDomain& md, ExtendedPoint pole, const RobinOptions& opt) {
    if (md.gamma.empty()) throw InputError("gamma is empty: the Robin function does not exist");
    if (pole.is_infinite()) {
        if (auto set = reflected_intervals(md)) return robin_reflected(md, *set);
        throw InputError("a pole at infinity needs a half-plane with finitely many bounded gamma intervals");
    }
    const Complex z0 = pole.value();
    check_finite_pole(md, z0);
    if (auto r = model_closed_form(md, z0)) return *r;

    const DiskPremap pm(md.domain.kind);
    const MarkedDomain image = pm.image(md);
    const RobinResult inner = robin_bounded(image, pm(z0), opt);
    const double scale = std::abs(pm.derivative(z0));
    auto green = [inner, pm, md](ExtendedPoint p) -> std::optional<double> {
        if (p.is_infinite()) return std::nullopt;
        if (!in_closure(md.domain, p.value())) return std::nullopt;
        return inner.try_green(pm(p.value()));
    };
    RobinResult r(md, z0, inner.radius() / scale, "premap+" + inner.method(), green, opt.h);
    if (inner.fine_radius) r.fine_radius = *inner.fine_radius / scale;
    if (inner.coarse_radius) r.coarse_radius = *inner.coarse_radius / scale;
    r.regular_part = inner.regular_part;
    r.solver_residual = inner.solver_residual;
    return r;
}

// ----------------------------------------------------------- exterior domains

// Deepest point of the complement region bounded by the given loop.
Complex interior_of_hole(const DomainSpec& d, const BoundaryLoop& loop) {
    double x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
    for (const auto& a : loop.arcs) {
        for (int k = 0; k <= 32; ++k) {
            const Complex z = a.point(a.param_lo() + (a.param_hi() - a.param_lo()) * k / 32.0);
            x0 = std::min(x0, z.real());
            x1 = std::max(x1, z.real());
            y0 = std::min(y0, z.imag());
            y1 = std::max(y1, z.imag());
        }
    }
    Complex best{};
    double best_d = 0.0;
    constexpr int n = 64;
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i < n; ++i) {
            const Complex z(x0 + (x1 - x0) * i / n, y0 + (y1 - y0) * j / n);
            if (d.contains(z)) continue;
            double dist = kInf;
            for (const auto& a : loop.arcs) dist = std::min(dist, a.distance(z));
            if (dist > best_d) {
                best_d = dist;
                best = z;
            }
        }
    }
    if (!(best_d > 0)) throw InputError("cannot find an inversion centre inside the complement");
    return best;
}

bool same_arc(const ArcSegment& a, const ArcSegment& b) {
    const double tol = 1e-9 * std::max(1.0, std::abs(a.point(a.param_lo())));
    return a.kind() == b.kind() && std::abs(a.point(a.param_lo()) - b.point(b.param_lo())) < tol &&
           std::abs(a.point(a.param_hi()) - b.point(b.param_hi())) < tol;
}

struct Inverted {
    MarkedDomain md;
    Complex pivot;
};

Inverted invert_exterior(const MarkedDomain& md) {
    const DomainSpec& d = md.domain;
    if (d.loops.empty()) throw InputError("exterior domain has no boundary");
    const Complex pivot = interior_of_hole(d, d.loops[0]);
    const auto inv = [pivot](Complex z) { return 1.0 / (z - pivot); };

    DomainSpec spec;
    spec.id = d.id + ":inverted";
    spec.kind = DomainKind::Bounded;
    for (const auto& loop : d.loops) {
        BoundaryLoop out{loop.name, {}};
        for (const auto& a : loop.arcs) out.arcs.push_back(invert_arc(a, pivot));
        spec.loops.push_back(std::move(out));
    }
    const DomainSpec norm = make_domain(spec);

    std::vector<GammaPiece> sel;
    for (const auto& p : md.gamma) {
        const ArcSegment& src = d.loops[p.component].arcs[p.arc];
        const auto& images = spec.loops[p.component].arcs;
        const ArcSegment& img = images[p.arc];
        int index = p.arc;
        const auto& normalized = norm.loops[p.component].arcs;
        if (!same_arc(normalized[index], img)) index = static_cast<int>(images.size()) - 1 - p.arc;
        const bool whole = p.s0 <= src.param_lo() + 1e-14 && p.s1 >= src.param_hi() - 1e-14;
        if (whole) {
            sel.push_back({p.component, index, img.param_lo(), img.param_hi()});
            continue;
        }
        const Complex w0 = inv(src.point(p.s0)), w1 = inv(src.point(p.s1));
        const Complex wm = inv(src.point(0.5 * (p.s0 + p.s1)));
        if (img.is_closed_circle()) {
            const auto angle = [&](Complex w) { return std::arg(w - img.center()); };
            const auto wrap = [](double t, double base) {
                while (t < base) t += 2 * kPi;
                while (t >= base + 2 * kPi) t -= 2 * kPi;
                return t;
            };
            const double a = angle(w0);
            const double b = wrap(angle(w1), a);
            const double m = wrap(angle(wm), a);
            if (m < b) sel.push_back({p.component, index, a, b});
            else sel.push_back({p.component, index, b, a + 2 * kPi});
        } else {
            const double t0 = img.param_of(w0), t1 = img.param_of(w1);
            sel.push_back({p.component, index, std::min(t0, t1), std::max(t0, t1)});
        }
    }
    return {mark_boundary(norm, std::move(sel), md.gamma_name), pivot};
}

RobinResult robin_exterior(const MarkedDomain& md, ExtendedPoint pole, const RobinOptions& opt) {
    if (md.gamma.empty()) throw InputError("gamma is empty: the Robin function does not exist");
    if (!pole.is_infinite()) check_finite_pole(md, pole.value());
    const auto [image, pivot] = invert_exterior(md);
    const auto inv = [pivot](Complex z) { return 1.0 / (z - pivot); };
    const Complex w0 = pole.is_infinite() ? Complex(0.0) : inv(pole.value());
    const RobinResult inner = robin_bounded(image, w0, opt);
    // r(B, z0) = r(B', w0) / |dw/dz| with |dw/dz| = |z0 - pivot|^-2; at infinity r(B) = r(B', 0)
    const double scale = pole.is_infinite() ? 1.0 : std::norm(pole.value() - pivot);
    auto green = [inner, inv, md](ExtendedPoint p) -> std::optional<double> {
        if (p.is_infinite()) return inner.try_green(Complex(0.0));
        if (!in_closure(md.domain, p.value())) return std::nullopt;
        return inner.try_green(inv(p.value()));
    };
    RobinResult r(md, pole, inner.radius() * scale, "inversion+" + inner.method(), green, opt.h);
    if (inner.fine_radius) r.fine_radius = *inner.fine_radius * scale;
    if (inner.coarse_radius) r.coarse_radius = *inner.coarse_radius * scale;
    r.regular_part = inner.regular_part;
    r.solver_residual = inner.solver_residual;
    return r;
}

}  // namespace

RobinResult::RobinResult(MarkedDomain marked, ExtendedPoint pole, double radius, std::string method, GreenFn green,
                         double h)
    : marked_(std::move(marked)), pole_(pole), radius_(radius), method_(std::move(method)), green_(std::move(green)),
      h_(h) {
    if (!(radius_ > 0) || !std::isfinite(radius_)) throw NumericError("Robin radius is not a positive number");
    junctions = junction_points(marked_);
}

std::optional<double> RobinResult::try_green(ExtendedPoint z) const { return green_(z); }

double RobinResult::green(ExtendedPoint z) const {
    const auto v = green_(z);
    if (!v) throw InputError("evaluation point lies outside the domain");
    return *v;
}

double RobinResult::junction_factor(Complex z) const {
    for (auto j : junctions)
        if (std::abs(z - j) < h_) return 3.0;
    return 1.0;
}

bool has_model_closed_form(const MarkedDomain& md) {
    return md.domain.is_model() && !md.gamma.empty() && !edge_marking(md).partial;
}

std::optional<CompactSet> reflected_intervals(const MarkedDomain& md) {
    const auto k = md.domain.kind;
    if (k != DomainKind::UpperHalfPlane && k != DomainKind::RightHalfPlane) return std::nullopt;
    if (md.gamma.empty()) return std::nullopt;
    CompactSet set;
    for (const auto& p : md.gamma) {
        if (!std::isfinite(p.s0) || !std::isfinite(p.s1)) return std::nullopt;
        set.pieces.push_back(ArcSegment::segment(piece_point(md.domain, p, p.s0), piece_point(md.domain, p, p.s1)));
    }
    return set;
}

RobinResult robin_function(const MarkedDomain& md, ExtendedPoint pole, const RobinOptions& options) {
    if (!(options.h > 0)) throw InputError("h must be positive");
    switch (md.domain.kind) {
        case DomainKind::Bounded:
            if (pole.is_infinite()) throw InputError("infinity is not a point of a bounded domain");
            check_finite_pole(md, pole.value());
            return robin_bounded(md, pole.value(), options);
        case DomainKind::Exterior:
            return robin_exterior(md, pole, options);
        default:
            return robin_model(md, pole, options);
    }
}

RobinResult green_function(const DomainSpec& domain, ExtendedPoint pole, const RobinOptions& options) {
    return robin_function(mark_full(domain), pole, options);
}

double robin_capacity(const MarkedDomain& md, ExtendedPoint pole, const RobinOptions& options) {
    if (!pole.is_infinite() && !md.domain.contains(pole.value()))
        throw InputError("the Robin capacity is defined for interior poles and infinity only");
    return robin_function(md, pole, options).capacity();
}

double log_capacity(const CompactSet& set, int panels_per_piece) { return ExteriorBem(set, panels_per_piece).capacity(); }

double log_capacity(const DomainSpec& exterior, const RobinOptions& options) {
    if (exterior.kind != DomainKind::Exterior) throw InputError("logarithmic capacity needs an exterior domain");
    return robin_function(mark_full(exterior), ExtendedPoint::infinity(), options).capacity();
}

double delta_invariant(const MarkedDomain& md, Complex z, Complex w, const RobinOptions& options) {
    if (z == w) throw InputError("delta needs two distinct points");
    const double g = robin_function(md, w, options).green(z);
    // g >= 0 by the maximum principle; interpolation noise on gamma is clipped
    return std::exp(-std::max(g, 0.0));
}

}  // namespace robincap
