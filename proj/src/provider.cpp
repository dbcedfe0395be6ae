#include "robincap/provider.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "robincap/closed_forms.hpp"

namespace robincap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<double, double> key(Complex z) { return {z.real(), z.imag()}; }

bool is_unit_disk(const DomainSpec& d) {
    if (d.kind != DomainKind::Bounded || d.loops.size() != 1 || d.loops[0].arcs.size() != 1) return false;
    const auto& a = d.loops[0].arcs[0];
    return a.is_closed_circle() && std::abs(a.center()) < 1e-12 && std::abs(a.radius() - 1.0) < 1e-12;
}

}  // namespace

const char* to_string(Route r) {
    switch (r) {
        case Route::ClosedForm: return "closed-form";
        case Route::Reflection: return "reflection";
        case Route::Mesh: return "mesh";
    }
    return "?";
}

CompactSet gamma_set(const MarkedDomain& md) {
    if (md.domain.is_model()) {
        auto set = reflected_intervals(md);
        if (!set) throw InputError("gamma is not a finite union of bounded intervals");
        return *set;
    }
    // group pieces by arc; merge intervals that touch, including across the seam of a circle
    CompactSet out;
    std::map<std::pair<int, int>, std::vector<std::pair<double, double>>> by_arc;
    for (const auto& p : md.gamma) by_arc[{p.component, p.arc}].emplace_back(p.s0, p.s1);
    for (auto& [ca, iv] : by_arc) {
        const auto& arc = md.domain.loops[ca.first].arcs[ca.second];
        std::sort(iv.begin(), iv.end());
        std::vector<std::pair<double, double>> merged;
        for (const auto& x : iv) {
            if (!merged.empty() && x.first <= merged.back().second + 1e-12) merged.back().second = std::max(merged.back().second, x.second);
            else merged.push_back(x);
        }
        if (arc.is_closed_circle() && merged.size() > 1 &&
            merged.front().first <= arc.param_lo() + 1e-12 && merged.back().second >= arc.param_hi() - 1e-12) {
            merged.back().second = merged.front().second + (arc.param_hi() - arc.param_lo());
            merged.erase(merged.begin());
        }
        for (const auto& [s0, s1] : merged) {
            if (arc.kind() == ArcKind::Line) {
                out.pieces.push_back(ArcSegment::segment(arc.point(s0), arc.point(s1)));
            } else if (s1 - s0 >= 2 * kPi - 1e-12) {
                out.pieces.push_back(ArcSegment::circle(arc.center(), arc.radius()));
            } else {
                out.pieces.push_back(ArcSegment::arc(arc.center(), arc.radius(), s0, s1));
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------ complement

ComplementProvider::ComplementProvider(CompactSet set, int panels_per_piece) : bem_(std::move(set), panels_per_piece) {}

const ExteriorBem::PoleSolution& ComplementProvider::pole(Complex w) {
    auto it = cache_.find(key(w));
    if (it == cache_.end()) it = cache_.emplace(key(w), bem_.solve_pole(w)).first;
    return it->second;
}

double ComplementProvider::log_radius(ExtendedPoint z) {
    if (z.is_infinite()) return -bem_.robin_constant();
    return std::log(pole(z.value()).radius);
}

double ComplementProvider::green(Complex z, ExtendedPoint w) {
    if (w.is_infinite()) return bem_.green_infinity(z);
    if (z == w.value()) return kInf;
    return bem_.green(pole(w.value()), z);
}

// ---------------------------------------------------------------------- robin

RobinProvider::RobinProvider(MarkedDomain md, RobinOptions options) : md_(std::move(md)), options_(options) {
    if (md_.gamma.empty()) throw InputError("gamma is empty: the Robin function does not exist");
    const auto& d = md_.domain;
    if (is_unit_disk(d)) {
        if (md_.is_full_marking()) {
            unit_disk_full_ = true;
            route_ = Route::ClosedForm;
        } else {
            route_ = Route::Reflection;
            complement_ = std::make_unique<ComplementProvider>(gamma_set(md_));
        }
    } else if (d.kind == DomainKind::UpperHalfPlane || d.kind == DomainKind::RightHalfPlane) {
        if (auto set = reflected_intervals(md_)) {
            route_ = Route::Reflection;
            complement_ = std::make_unique<ComplementProvider>(*set);
        } else {
            route_ = has_model_closed_form(md_) ? Route::ClosedForm : Route::Mesh;
        }
    } else if (d.is_model()) {
        route_ = has_model_closed_form(md_) ? Route::ClosedForm : Route::Mesh;
    }
}

Complex RobinProvider::mirror(Complex w) const {
    switch (md_.domain.kind) {
        case DomainKind::UpperHalfPlane: return std::conj(w);
        case DomainKind::RightHalfPlane: return -std::conj(w);
        default: return 1.0 / std::conj(w);  // unit circle; w != 0
    }
}

const RobinResult& RobinProvider::mesh_result(ExtendedPoint w) {
    const auto k = w.is_infinite() ? std::pair{kInf, kInf} : key(w.value());
    auto it = results_.find(k);
    if (it == results_.end())
        it = results_.emplace(k, std::make_unique<RobinResult>(robin_function(md_, w, options_))).first;
    return *it->second;
}

double RobinProvider::log_radius(ExtendedPoint z) {
    if (unit_disk_full_) {
        if (z.is_infinite() || !(std::abs(z.value()) < 1)) throw InputError("point outside the unit disk");
        return std::log(oracle::disk_radius(z.value()));
    }
    if (complement_) {
        if (z.is_infinite()) {
            if (md_.domain.kind == DomainKind::Bounded) throw InputError("infinity is not a point of the disk");
            return complement_->log_radius(z);
        }
        const Complex w = z.value();
        if (!md_.domain.contains(w)) throw InputError("point outside the domain");
        // log r_B(w) = log r_C(w) + g_C(w, mirror of w)
        const ExtendedPoint m = (md_.domain.kind == DomainKind::Bounded && w == Complex(0.0))
                                    ? ExtendedPoint::infinity()
                                    : ExtendedPoint(mirror(w));
        return complement_->log_radius(w) + complement_->green(w, m);
    }
    return std::log(mesh_result(z).radius());
}

double RobinProvider::green(ExtendedPoint z, ExtendedPoint w) {
    if (!z.is_infinite() && !w.is_infinite() && z.value() == w.value()) return kInf;
    if (unit_disk_full_) {
        if (z.is_infinite() || w.is_infinite()) throw InputError("infinity is not a point of the disk");
        return oracle::disk_green(z.value(), w.value());
    }
    if (complement_) {
        if (z.is_infinite()) std::swap(z, w);  // symmetry
        if (z.is_infinite()) return kInf;
        if (w.is_infinite()) {
            if (md_.domain.kind == DomainKind::Bounded) throw InputError("infinity is not a point of the disk");
            return complement_->green(z.value(), w);
        }
        const Complex p = w.value();
        const ExtendedPoint m = (md_.domain.kind == DomainKind::Bounded && p == Complex(0.0))
                                    ? ExtendedPoint::infinity()
                                    : ExtendedPoint(mirror(p));
        return complement_->green(z.value(), p) + complement_->green(z.value(), m);
    }
    return mesh_result(w).green(z);
}

// ----------------------------------------------------------------- calibration

namespace {

// Joukowski-type map of the complement of [-1, 1] onto |w| > 1.
Complex joukowski_inverse(Complex z) {
    Complex w = z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
    if (std::abs(w) < 1) w = 1.0 / w;
    return w;
}

double reflection_discrepancy() {
    double worst = 0.0;
    for (double m : {kPi / 2, kPi, 3 * kPi / 2}) {
        CompactSet set{{ArcSegment::arc(0.0, 1.0, 0.0, m)}};
        worst = std::max(worst, std::abs(std::log(log_capacity(set)) - std::log(oracle::arc_capacity(m))));
    }
    ComplementProvider seg(CompactSet{{ArcSegment::segment(-1.0, 1.0)}});
    for (Complex z : {Complex(0, 0.5), Complex(1.2, 0), Complex(0.3, 0.1), Complex(2, -1)})
        worst = std::max(worst, std::abs(seg.green(z, ExtendedPoint::infinity()) - std::log(std::abs(joukowski_inverse(z)))));
    const Complex z0(0.2, 0.3);
    const Complex w0 = joukowski_inverse(z0);
    for (Complex z : {Complex(0, -0.5), Complex(1.5, 0.2), Complex(-0.4, 0.05)}) {
        const Complex w = joukowski_inverse(z);
        const double exact = std::log(std::abs(1.0 - std::conj(w0) * w) / std::abs(w - w0));
        worst = std::max(worst, std::abs(seg.green(z, z0) - exact));
    }
    const Complex dj = w0 / (std::sqrt(z0 - 1.0) * std::sqrt(z0 + 1.0));
    const double exact_r = (std::norm(w0) - 1.0) / std::abs(dj);
    worst = std::max(worst, std::abs(seg.log_radius(z0) - std::log(exact_r)));
    return worst;
}

double mesh_discrepancy(double h) {
    RobinOptions opt;
    opt.h = h;
    double worst = 0.0;
    const Complex z0(0.3, 0.2);
    const auto g = green_function(unit_disk(), z0, opt);
    worst = std::max(worst, std::abs(std::log(g.radius()) - std::log(oracle::disk_radius(z0))));
    for (Complex z : {Complex(-0.5, 0.1), Complex(0.1, -0.6), Complex(0.6, 0.5)})
        worst = std::max(worst, std::abs(g.green(z) - oracle::disk_green(z, z0)));
    const std::pair<double, double> half[] = {{0.0, kPi}};
    const auto r = robin_function(disk_with_arcs(half), Complex(0.0), opt);
    worst = std::max(worst, std::abs(std::log(r.radius()) - std::log(2.0)));
    return worst;
}

}  // namespace

double calibration_discrepancy(Route route, double h) {
    static std::mutex mutex;
    static std::map<std::pair<int, double>, double> cache;
    if (route == Route::ClosedForm) return 0.0;
    const std::pair<int, double> k{static_cast<int>(route), route == Route::Mesh ? h : 0.0};
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    const double d = route == Route::Mesh ? mesh_discrepancy(h) : reflection_discrepancy();
    cache.emplace(k, d);
    return d;
}

double numeric_budget(Route route, double h) { return std::max(1e-9, 3.0 * calibration_discrepancy(route, h)); }

}  // namespace robincap
