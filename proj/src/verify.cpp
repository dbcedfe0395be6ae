#include "robincap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "robincap/closed_forms.hpp"
#include "robincap/preimage.hpp"

namespace robincap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogFloor = 1e-300;

double safe_log(double x) { return std::log(std::max(x, kLogFloor)); }

class Context {
public:
    Context(const Scenario& s, VerificationReport& rep, bool parallel) : s_(s), rep_(rep) {
        opt_.h = s.h;
        opt_.parallel = parallel;
    }

    const Scenario& s() const { return s_; }
    const RobinOptions& options() const { return opt_; }

    RobinProvider& source() { return provider(src_, s_.source); }
    RobinProvider& target() { return provider(tgt_, s_.target); }

    void use(Route r) {
        const std::string name = to_string(r);
        if (std::find(rep_.routes.begin(), rep_.routes.end(), name) == rep_.routes.end()) rep_.routes.push_back(name);
        rep_.budget = std::max(rep_.budget, numeric_budget(r, s_.h));
    }
    void detail(const std::string& key, double v) { rep_.details.emplace_back(key, v); }

    void finish(double lhs_log, double rhs_log, int dir) {
        rep_.relation = dir > 0 ? ">=" : "<=";
        rep_.lhs_log = lhs_log;
        rep_.rhs_log = rhs_log;
        rep_.lhs = std::exp(lhs_log);
        rep_.rhs = std::exp(rhs_log);
        if (std::isinf(lhs_log) && std::isinf(rhs_log) && (lhs_log > 0) == (rhs_log > 0))
            throw NumericError("both sides are infinite with the same sign");
        rep_.margin = dir * (lhs_log - rhs_log);
        if (std::isnan(rep_.margin)) throw NumericError("margin is not a number");
        rep_.satisfied = rep_.margin >= -rep_.budget;
        rep_.equality = std::abs(rep_.margin) <= equality_threshold(rep_.budget);
        rep_.status = rep_.satisfied ? VerdictStatus::Satisfied : VerdictStatus::Violated;
    }

private:
    RobinProvider& provider(std::unique_ptr<RobinProvider>& slot, const MarkedDomain& md) {
        if (!slot) {
            slot = std::make_unique<RobinProvider>(md, opt_);
            use(slot->route());
        }
        return *slot;
    }

    const Scenario& s_;
    VerificationReport& rep_;
    RobinOptions opt_;
    std::unique_ptr<RobinProvider> src_, tgt_;
};

bool is_unit_disk_marked(const MarkedDomain& md) {
    const auto& d = md.domain;
    if (d.kind != DomainKind::Bounded || d.loops.size() != 1 || d.loops[0].arcs.size() != 1) return false;
    const auto& a = d.loops[0].arcs[0];
    return a.is_closed_circle() && std::abs(a.center()) < 1e-12 && std::abs(a.radius() - 1) < 1e-12;
}

void require_points(const Scenario& s, std::size_t n) {
    if (s.points.size() != n)
        throw InputError(std::string(to_string(s.kind)) + " needs " + std::to_string(n) + " point(s), got " +
                         std::to_string(s.points.size()));
}

// weights for one or two points; a single point carries weight 1
std::vector<double> weights_for(const Scenario& s) {
    if (s.points.size() == 1 && s.weights.empty()) return {1.0};
    if (s.weights.size() != s.points.size()) throw InputError("weights must match points one to one");
    return s.weights;
}

ExtendedPoint reflect_in_circle(Complex z) {
    if (z == Complex(0.0)) return ExtendedPoint::infinity();
    return 1.0 / std::conj(z);
}

// ----------------------------------------------------------- two-point forms

// sum t_k^2 log|Df(z_k)|  versus  2 t1 t2 (g_G(f1,f2) - g_B(z1,z2))
void two_point(Context& c, int dir, std::optional<std::vector<double>> weights = std::nullopt) {
    const auto& s = c.s();
    if (s.points.empty() || s.points.size() > 2) throw InputError("two-point forms take one or two points");
    const auto t = weights ? *weights : weights_for(s);
    auto& b = c.source();
    auto& g = c.target();
    const auto& f = s.f();
    double lhs = 0.0;
    for (std::size_t k = 0; k < s.points.size(); ++k) {
        const double ld = log_weighted_derivative(b, g, f, s.points[k]);
        c.detail("log_Df_" + std::to_string(k + 1), ld);
        lhs += t[k] * t[k] * ld;
    }
    double rhs = 0.0;
    if (s.points.size() == 2 && t[0] * t[1] != 0.0) {
        const Complex z1 = s.points[0], z2 = s.points[1];
        if (z1 == z2) throw InputError("the two points must be distinct");
        const double gg = g.green(f(z1), f(z2));
        const double gb = b.green(z1, z2);
        c.detail("g_target", gg);
        c.detail("g_source", gb);
        rhs = 2 * t[0] * t[1] * (gg - gb);
    }
    c.finish(lhs, rhs, dir);
}

void hyp_21(const Scenario& s) {
    check_maps_into(s.f(), s.source, s.target);
    check_univalent(s.f(), s.source);
    check_gamma_into(s.f(), s.source, s.target);
}

void hyp_22(const Scenario& s) {
    check_maps_into(s.f(), s.source, s.target);
    check_free_into_free(s.f(), s.source, s.target);
}

// ------------------------------------------------------- unit disk, arcs

void pommerenke(Context& c) {
    const auto& s = c.s();
    const auto& f = s.f();
    if (!is_unit_disk_marked(s.source) || !is_unit_disk_marked(s.target))
        throw InputError("Pommerenke32cor works on the unit disk in both planes");
    if (s.source.is_full_marking() || s.target.is_full_marking())
        throw InputError("gamma and Gamma must be proper subsets of the circle");
    if (std::abs(f(0.0)) > 1e-12) throw HypothesisFailed("f(0) = 0 fails");
    const std::string variant = s.aux_text("variant", "cor32");
    c.use(Route::Reflection);
    const double cap_src = log_capacity(gamma_set(s.source));
    const double cap_tgt = log_capacity(gamma_set(s.target));
    c.detail("cap_gamma", cap_src);
    c.detail("cap_Gamma", cap_tgt);
    c.detail("abs_f_prime_0", std::abs(f.derivative(0.0)));
    const double lhs = 0.5 * safe_log(std::abs(f.derivative(0.0))) + std::log(cap_tgt);
    if (variant == "cor32") {
        hyp_21(s);
        c.finish(lhs, std::log(cap_src), +1);
    } else if (variant == "cor31") {
        hyp_22(s);
        // refined right side with the other zeros of f when they can be enumerated
        double zeros = 0.0;
        if (f.rational()) {
            auto& b = c.source();
            for (const auto& p : preimages(f, 0.0, s.source.domain))
                if (std::abs(p.z) > 1e-8) zeros += 0.5 * p.multiplicity * b.green(p.z, Complex(0.0));
        }
        c.detail("zeros_term", zeros);
        c.finish(lhs, std::log(cap_src) - zeros, -1);
    } else {
        throw InputError("aux.variant must be cor32 or cor31");
    }
}

void nehari(Context& c) {
    const auto& s = c.s();
    if (!is_unit_disk_marked(s.source) || !is_unit_disk_marked(s.target) || !s.source.is_full_marking() ||
        !s.target.is_full_marking())
        throw InputError("Nehari33 works on the unit disk with the whole circle marked");
    check_maps_into(s.f(), s.source, s.target);
    const auto t = weights_for(s);
    // the two-point product needs univalence; Pick holds for every self-map
    if (s.points.size() == 2 && t[1] != 0.0) check_univalent(s.f(), s.source);
    if (s.points.size() == 1 || t[1] == 0.0) {
        // Pick: |f'(z)|(1-|z|^2) <= 1-|f(z)|^2, evaluated independently of the providers
        const Complex z = s.points[0];
        c.detail("pick_lhs", std::abs(s.f().derivative(z)) * (1 - std::norm(z)));
        c.detail("pick_rhs", 1 - std::norm(s.f()(z)));
    }
    two_point(c, -1);
}

void schwarzian_bound(Context& c) {
    const auto& s = c.s();
    const auto& f = s.f();
    if (!is_unit_disk_marked(s.source) || !is_unit_disk_marked(s.target))
        throw InputError("Schwarzian34 works on the unit disk");
    if (std::abs(f(0.0)) > 1e-12) throw HypothesisFailed("f(0) = 0 fails");
    check_maps_into(f, s.source, s.target);
    check_univalent(f, s.source);
    const Complex s1 = schwarzian(f, 0.0);
    const Complex s2 = schwarzian_from_coefficients(f, 0.0);
    c.detail("schwarzian_re", s1.real());
    c.detail("schwarzian_im", s1.imag());
    c.detail("schwarzian_route_gap", std::abs(s1 - s2));
    if (std::abs(s1 - s2) > 1e-10 * std::max(1.0, std::abs(s1)))
        throw NumericError("the two Schwarzian evaluations disagree");
    const double c1 = std::abs(f.derivative(0.0));
    c.detail("abs_c1", c1);
    c.finish(safe_log(std::abs(s1)), safe_log(6 * (1 - c1 * c1)), -1);
}

// complement-of-arcs form of the two-point inequality on the disk
void cor35(Context& c) {
    const auto& s = c.s();
    const auto& f = s.f();
    if (!is_unit_disk_marked(s.source) || !is_unit_disk_marked(s.target))
        throw InputError("Cor35 works on the unit disk in both planes");
    if (s.source.is_full_marking() || s.target.is_full_marking())
        throw InputError("gamma and Gamma must be proper subsets of the circle");
    require_points(s, 2);
    hyp_21(s);
    const auto t = weights_for(s);
    c.use(Route::Reflection);
    ComplementProvider cg(gamma_set(s.source)), cG(gamma_set(s.target));
    double lhs = 0.0;
    for (int k = 0; k < 2; ++k) {
        const Complex z = s.points[k], w = f(z);
        if (!(std::abs(z) < 1) || !(std::abs(w) < 1)) throw InputError("points and images must lie in the disk");
        const double term = 2 * cg.log_radius(z) + std::log(1 - std::norm(w)) + safe_log(std::abs(f.derivative(z))) -
                            2 * cG.log_radius(w) - std::log(1 - std::norm(z));
        lhs += t[k] * t[k] * term;
    }
    const Complex z1 = s.points[0], z2 = s.points[1], w1 = f(z1), w2 = f(z2);
    const double gw = cG.green(w1, w2) + cG.green(w1, reflect_in_circle(w2));
    const double gz = cg.green(z1, z2) + cg.green(z1, reflect_in_circle(z2));
    c.detail("g_target", gw);
    c.detail("g_source", gz);
    if (s.aux_real("identity_check", 0) != 0) {
        // r(U,gamma,z) = r(C\gamma,z)^2 / (1-|z|^2), the left side from the mesh solver
        c.use(Route::Mesh);
        const double fem = std::log(robin_function(s.source, z1, c.options()).radius());
        const double bem = 2 * cg.log_radius(z1) - std::log(1 - std::norm(z1));
        c.detail("identity_mesh_log_r", fem);
        c.detail("identity_bem_log_r", bem);
        c.detail("identity_gap", std::abs(fem - bem));
    }
    c.finish(lhs, 2 * t[0] * t[1] * (gw - gz), +1);
}

void boundary36(Context& c) {
    const auto& s = c.s();
    const auto& f = s.f();
    if (!is_unit_disk_marked(s.source) || !is_unit_disk_marked(s.target))
        throw InputError("Boundary36 works on the unit disk in both planes");
    if (!f.rational()) throw InputError("Boundary36 needs a closed-form (rational) map for angular derivatives");
    require_points(s, 2);
    hyp_21(s);
    const auto t = weights_for(s);
    c.use(Route::Reflection);
    ComplementProvider cg(gamma_set(s.source)), cG(gamma_set(s.target));
    double lhs = 0.0;
    for (int k = 0; k < 2; ++k) {
        const Complex z = s.points[k], w = f(z);
        if (std::abs(std::abs(z) - 1) > 1e-12 || s.source.distance_to_gamma(z) <= kHypothesisTol)
            throw InputError("Boundary36 points must lie on the circle off gamma");
        if (std::abs(std::abs(w) - 1) > 1e-9 || s.target.distance_to_gamma(w) <= kHypothesisTol)
            throw HypothesisFailed("f(z_k) must lie on the circle off Gamma");
        lhs += t[k] * t[k] * (cg.log_radius(z) - cG.log_radius(w) + safe_log(std::abs(f.derivative(z))));
    }
    const Complex z1 = s.points[0], z2 = s.points[1];
    const double gw = cG.green(f(z1), f(z2)), gz = cg.green(z1, z2);
    c.detail("g_target", gw);
    c.detail("g_source", gz);
    c.finish(lhs, 2 * t[0] * t[1] * (gw - gz), +1);
}

void annulus37(Context& c) {
    const auto& s = c.s();
    const auto& d = s.source.domain;
    if (d.kind != DomainKind::Bounded || d.loops.size() != 2) throw InputError("Annulus37 needs an annulus source");
    if (!is_unit_disk_marked(s.target)) throw InputError("Annulus37 maps into the unit disk");
    require_points(s, 2);
    for (Complex z : s.points)
        if (!d.contains(z)) throw InputError("Annulus37 points must be interior points of the annulus");
    if (!s.weights.empty() && (s.weights.size() != 2 || s.weights[0] != 1 || s.weights[1] != -1))
        throw InputError("Annulus37 uses the weights (1, -1)");
    check_univalent(s.f(), s.source);
    hyp_22(s);
    two_point(c, -1, std::vector<double>{1.0, -1.0});
}

// ------------------------------------------------------ coverings, p-valent

struct PreimageData {
    Complex z;
    int mult;
    Complex c;  // leading coefficient of f - w at z
};

std::vector<PreimageData> expansion_points(const HolomorphicMap& f, Complex w, const DomainSpec& d) {
    std::vector<PreimageData> out;
    for (const auto& p : preimages(f, w, d)) {
        const auto coeff = f.taylor(p.z, p.multiplicity);
        out.push_back({p.z, p.multiplicity, coeff[p.multiplicity]});
    }
    return out;
}

void lindelof(Context& c) {
    const auto& s = c.s();
    if (!s.w0) throw InputError("Lindelof41 needs w0");
    require_points(s, 1);
    hyp_22(s);
    const auto& f = s.f();
    auto& b = c.source();
    auto& g = c.target();
    const Complex z = s.points[0];
    if (std::abs(f(z) - *s.w0) < 1e-14) throw InputError("z is a preimage of w0");
    const double lhs = g.green(f(z), *s.w0);
    double rhs = 0.0;
    int count = 0;
    for (const auto& p : preimages(f, *s.w0, s.source.domain)) {
        rhs += p.multiplicity * b.green(z, p.z);
        count += p.multiplicity;
    }
    c.detail("preimage_count", count);
    c.detail("g_target", lhs);
    c.detail("sum_g_source", rhs);
    c.finish(safe_log(lhs), count ? safe_log(rhs) : -kInf, +1);
}

void radius42(Context& c) {
    const auto& s = c.s();
    require_points(s, 1);
    hyp_22(s);
    const auto& f = s.f();
    auto& b = c.source();
    auto& g = c.target();
    const Complex z0 = s.points[0], w0 = f(z0);
    const int n = local_order(f, z0);
    const Complex cn = f.taylor(z0, n)[n];
    double rhs = std::log(std::abs(cn)) + n * b.log_radius(z0);
    for (const auto& p : preimages(f, w0, s.source.domain))
        if (std::abs(p.z - z0) > 1e-8) rhs += p.multiplicity * b.green(z0, p.z);
    c.detail("local_order", n);
    c.detail("abs_c_n", std::abs(cn));
    c.finish(g.log_radius(w0), rhs, +1);
}

struct PValentSides {
    double lhs, rhs;
};

PValentSides pvalent_sides(Context& c, const std::vector<Complex>& w, const std::vector<double>& t, int p) {
    const auto& s = c.s();
    auto& b = c.source();
    auto& g = c.target();
    const std::size_t m = w.size();
    if (t.size() != m) throw InputError("weights must match the target points");
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t k = l + 1; k < m; ++k)
            if (w[l] == w[k]) throw InputError("target points must be distinct");
    std::vector<std::vector<PreimageData>> pre(m);
    for (std::size_t l = 0; l < m; ++l) {
        pre[l] = expansion_points(s.f(), w[l], s.source.domain);
        int total = 0;
        for (const auto& q : pre[l]) total += q.mult;
        if (total != p)
            throw InputError("preimage count mismatch: w_" + std::to_string(l + 1) + " has " + std::to_string(total) +
                             " preimages, valence is " + std::to_string(p));
    }
    double lhs = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
        lhs += t[l] * t[l] * g.log_radius(w[l]);
        for (std::size_t k = 0; k < m; ++k)
            if (k != l) lhs += t[k] * t[l] * g.green(w[k], w[l]);
    }
    lhs *= p;
    // a zero of multiplicity q is listed q times; pairs of equal copies are excluded
    double rhs = 0.0;
    for (std::size_t l = 0; l < m; ++l)
        for (const auto& q : pre[l]) rhs += t[l] * t[l] * (q.mult * std::log(std::abs(q.c)) + q.mult * q.mult * b.log_radius(q.z));
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t i = 0; i < pre[l].size(); ++i)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t j = 0; j < pre[k].size(); ++j) {
                    if (l == k && i == j) continue;
                    rhs += t[l] * t[k] * pre[l][i].mult * pre[k][j].mult * b.green(pre[l][i].z, pre[k][j].z);
                }
    return {lhs, rhs};
}

void pvalent(Context& c) {
    const auto& s = c.s();
    if (s.targets.empty()) throw InputError("PValent43 needs target points");
    hyp_22(s);
    const auto sides = pvalent_sides(c, s.targets, s.weights, s.valence);
    c.finish(sides.lhs, sides.rhs, +1);
}

// --------------------------------------------------------- model domains

void invariant51(Context& c) {
    const auto& s = c.s();
    require_points(s, 2);
    hyp_22(s);
    const auto& f = s.f();
    const Complex z = s.points[0], zeta = s.points[1];
    if (z == zeta) throw InputError("the two points must be distinct");
    const double gg = c.target().green(f(z), f(zeta));
    const double gb = c.source().green(z, zeta);
    c.detail("delta_target", std::exp(-gg));
    c.detail("delta_source", std::exp(-gb));
    c.finish(-gg, -gb, -1);
}

void multiplicity52(Context& c) {
    const auto& s = c.s();
    const auto& f = s.f();
    hyp_22(s);
    auto& b = c.source();
    auto& g = c.target();
    const std::string mode = s.aux_text("mode", "finite");
    if (mode == "infinity") {
        if (!s.source.domain.contains_infinity() && !s.source.domain.is_model())
            throw InputError("infinity mode needs unbounded domains");
        // f(z) ~ a z at infinity
        const Complex probe(0.0, 1e7);
        const Complex a = s.aux_complex("a", f(probe) / probe);
        const double lb = b.log_radius(ExtendedPoint::infinity());
        const double lg = g.log_radius(ExtendedPoint::infinity());
        c.detail("abs_a", std::abs(a));
        c.detail("r_source_inf", std::exp(lb));
        c.detail("r_target_inf", std::exp(lg));
        if (s.target.domain.is_model()) c.detail("target_gamma_length", s.target.gamma_length());
        c.finish(lb, std::log(std::abs(a)) + lg, -1);
        return;
    }
    if (mode != "finite") throw InputError("aux.mode must be finite or infinity");
    require_points(s, 1);
    const Complex z0 = s.points[0];
    double rhs = 0.0;
    for (const auto& p : preimages(f, f(z0), s.source.domain))
        if (std::abs(p.z - z0) > 1e-8) rhs -= p.multiplicity * b.green(z0, p.z);
    const double fp = std::abs(f.derivative(z0));
    const double lhs = fp == 0 ? -kInf : log_weighted_derivative(b, g, f, z0);
    c.finish(lhs, rhs, -1);
}

// the two-target case of the p-valent form on the quadrant; also the bracket form as a cross-check
void quarterplane53(Context& c) {
    const auto& s = c.s();
    const auto& f = s.f();
    require_points(s, 1);
    if (s.source.domain.kind != DomainKind::Quadrant || s.target.domain.kind != DomainKind::Quadrant)
        throw InputError("QuarterPlane53 works on the quadrant");
    if (!s.aux.count("zeta")) throw InputError("QuarterPlane53 needs aux.zeta");
    hyp_22(s);
    const Complex z0 = s.points[0], zeta = s.aux_complex("zeta", 0.0), w2 = f(z0);
    const int p = s.valence;
    const auto sides = pvalent_sides(c, {zeta, w2}, {1.0, -1.0}, p);

    const auto pre = preimages(f, zeta, s.source.domain);
    if (static_cast<int>(pre.size()) != p) throw InputError("zeta must have exactly p distinct preimages");
    const auto rho = [](Complex z) { return std::log(std::abs(z * z.real() / z.imag())); };
    const auto lb = [](Complex a, Complex b) { return std::log(oracle::bracket(a, b)); };
    const int n = local_order(f, z0);
    const Complex cp = f.taylor(z0, n)[n];
    double lit_l = p * rho(zeta) + 2 * p * lb(zeta, w2);
    double lit_r = std::log(std::abs(cp));
    for (const auto& q : pre) lit_r += std::log(std::abs(f.derivative(q.z))) + rho(q.z) + 2 * lb(q.z, z0);
    for (const auto& q : pre)
        for (const auto& r : pre)
            if (q.z != r.z) lit_r -= lb(q.z, r.z);
    c.detail("bracket_form_lhs_log", lit_l);
    c.detail("bracket_form_rhs_log", lit_r);
    c.detail("bracket_form_margin", lit_l - lit_r);
    // the bracket form takes f(z0) = z0; shifting by log r(f(z0)) - log r(z0) restores the p = 1 case
    c.detail("bracket_form_margin_shifted",
             lit_l - lit_r + c.target().log_radius(w2) - c.source().log_radius(z0));
    c.finish(sides.lhs, sides.rhs, +1);
}

}  // namespace

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Satisfied: return "satisfied";
        case VerdictStatus::Violated: return "violated";
        case VerdictStatus::HypothesisFailed: return "hypothesis_failed";
        case VerdictStatus::Error: return "error";
    }
    return "?";
}

double VerificationReport::detail(const std::string& key) const {
    for (const auto& [k, v] : details)
        if (k == key) return v;
    throw InputError("report has no detail '" + key + "'");
}

double equality_threshold(double budget) { return std::max(1e-6, budget); }

double log_weighted_derivative(RobinProvider& b, RobinProvider& g, const HolomorphicMap& f, Complex z) {
    const Complex w = f(z);
    return b.log_radius(z) + safe_log(std::abs(f.derivative(z))) - g.log_radius(w);
}

double weighted_derivative(RobinProvider& b, RobinProvider& g, const HolomorphicMap& f, Complex z) {
    return std::exp(log_weighted_derivative(b, g, f, z));
}

VerificationReport verify(const Scenario& s, bool parallel) {
    VerificationReport rep;
    rep.id = s.id;
    rep.kind = s.kind;
    rep.h = s.h;
    Context c(s, rep, parallel);
    try {
        switch (s.kind) {
            case ScenarioKind::TwoPoint21: hyp_21(s); require_points(s, 2); two_point(c, +1); break;
            case ScenarioKind::TwoPoint22: hyp_22(s); require_points(s, 2); two_point(c, -1); break;
            case ScenarioKind::Major31: hyp_21(s); require_points(s, 1); two_point(c, +1); break;
            case ScenarioKind::Major32: hyp_22(s); require_points(s, 1); two_point(c, -1); break;
            case ScenarioKind::Pommerenke32cor: pommerenke(c); break;
            case ScenarioKind::Nehari33: nehari(c); break;
            case ScenarioKind::Schwarzian34: schwarzian_bound(c); break;
            case ScenarioKind::Cor35: cor35(c); break;
            case ScenarioKind::Boundary36: boundary36(c); break;
            case ScenarioKind::Annulus37: annulus37(c); break;
            case ScenarioKind::Lindelof41: lindelof(c); break;
            case ScenarioKind::Radius42: radius42(c); break;
            case ScenarioKind::PValent43: pvalent(c); break;
            case ScenarioKind::Invariant51: invariant51(c); break;
            case ScenarioKind::Multiplicity52: multiplicity52(c); break;
            case ScenarioKind::QuarterPlane53: quarterplane53(c); break;
        }
    } catch (const HypothesisFailed& e) {
        rep.status = VerdictStatus::HypothesisFailed;
        rep.satisfied = false;
        rep.message = e.what();
    } catch (const std::exception& e) {
        rep.status = VerdictStatus::Error;
        rep.satisfied = false;
        rep.message = e.what();
    }
    return rep;
}

}  // namespace robincap
