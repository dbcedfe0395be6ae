// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "robincap/closed_forms.hpp"
#include "robincap/condenser.hpp"
#include "robincap/domain_io.hpp"
#include "robincap/provider.hpp"
#include "robincap/robin.hpp"
#include "robincap/scenario.hpp"
#include "robincap/study.hpp"
#include "robincap/verify.hpp"
#include "support.hpp"

using namespace robincap;
using robincap::test::Rng;

namespace {

// pinned tolerances
constexpr double kGreenTol = 5e-3;
constexpr double kGreenRatio = 1.7;
constexpr double kGreenSeconds = 30;
constexpr double kArcTol = 1e-2;
constexpr double kArcOracleTol = 1e-5;
constexpr double kCapacitorRel = 1e-2;
constexpr double kResidualSeconds = 180;
constexpr double kInvarianceRel = 1e-2;
constexpr double kMobiusMargin = 1e-6;
constexpr double kSchwarzianRoutes = 1e-10;
constexpr double kCoveringTol = 1e-8;
constexpr double kHalfPlaneRadiusTol = 1e-2;
constexpr double kQuarterPlaneTol = 1e-9;
constexpr double kSuiteSeconds = 600;

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const char* fmt, auto... args) {
        char buf[256];
        std::snprintf(buf, sizeof buf, fmt, args...);
        if (!detail.empty()) detail += "; ";
        detail += buf;
        if (!ok) {
            pass = false;
            detail += " [x]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scenario bundled(const std::string& id) { return load_scenario(test::data_dir() / "scenarios" / (id + ".scn")); }

Outcome green_oracle() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const Complex pole(0.3, -0.2);
    const auto error = [&](double h) {
        RobinOptions opt;
        opt.h = h;
        opt.richardson = false;
        const RobinResult r = green_function(unit_disk(), pole, opt);
        Rng rng(101);
        double err = 0;
        for (int n = 0; n < 50;) {
            const Complex z = rng.in_disk(0.95);
            if (std::abs(z - pole) < 0.05) continue;
            err = std::max(err, std::abs(r.green(z) - oracle::disk_green(z, pole)));
            ++n;
        }
        return err;
    };
    const double e1 = error(0.04), e2 = error(0.02);
    const double dt = seconds_since(t0);
    o.check(e2 <= kGreenTol, "max err at h=0.02 %.3e", e2);
    o.check(e1 / e2 >= kGreenRatio, "ratio %.2f", e1 / e2);
    o.check(dt <= kGreenSeconds, "%.1f s", dt);
    return o;
}

const double kArcMeasures[] = {kPi / 2, kPi, 3 * kPi / 2};

MarkedDomain arc_domain(double measure) {
    char desc[96];
    std::snprintf(desc, sizeof desc, "disk_arcs(0, %.17g)", measure);
    return resolve_domain(desc);
}

Outcome arc_radius_capacity() {
    Outcome o;
    for (double m : kArcMeasures) {
        const MarkedDomain md = arc_domain(m);
        const double cap = oracle::arc_capacity(m);
        const double bem = ComplementProvider(gamma_set(md)).capacity();
        const double r = robin_function(md, Complex(0.0)).radius();
        o.check(std::abs(bem - cap) <= kArcOracleTol, "cap %.6f vs exterior %.6f", cap, bem);
        o.check(std::abs(r * cap * cap - 1) <= kArcTol, "r*cap^2 = %.5f", r * cap * cap);
    }
    return o;
}

Outcome arc_decomposition() {
    Outcome o;
    const Complex base[] = {Complex(0.3, 0.2), Complex(-0.2, -0.45)};
    for (double m : kArcMeasures) {
        const MarkedDomain md = arc_domain(m);
        ComplementProvider cp(gamma_set(md));
        const double gap = std::abs(cp.log_radius(Complex(0.0)) - cp.green(0.0, ExtendedPoint::infinity()));
        o.check(gap <= kArcTol, "log r(0) - g(0,inf) = %.1e", gap);
        for (Complex z : base) {
            const double mesh = std::log(robin_function(md, z).radius());
            const double split = 2 * cp.log_radius(z) - std::log(1 - std::norm(z));
            const double mirror = cp.green(z, 1.0 / std::conj(z)) - (cp.log_radius(z) - std::log(1 - std::norm(z)));
            o.check(std::abs(mesh - split) <= kArcTol && std::abs(mirror) <= kArcTol, "log r gap %.1e", mesh - split);
        }
    }
    return o;
}

Condenser plates(double r, std::function<Complex(Complex)> shape = {}) {
    Condenser c;
    c.marked = resolve_domain("disk");
    c.plates = {{Complex(0.5), 1.0, 1.0, 1.0}, {Complex(-0.5), 1.0, 1.0, -1.0}};
    c.r = r;
    c.shape = std::move(shape);
    return c;
}

Outcome radial_capacitor() {
    Outcome o;
    Condenser c;
    c.marked = resolve_domain("disk");
    c.plates = {{Complex(0.0), 1.0, 1.0, 1.0}};
    c.r = 0.1;
    const double exact = 2 * kPi / std::log(10.0);
    const double direct = condenser_capacity(c).capacity;
    const RobinData data = disk_robin_data({0.0});
    const double asym = asymptotic_capacity(c.plates, data, c.r);
    const double second = asym - 2 * kPi / -std::log(c.r);
    o.check(std::abs(direct / exact - 1) <= kCapacitorRel, "direct %.5f vs %.5f", direct, exact);
    o.check(std::abs(asym / exact - 1) <= kCapacitorRel, "asymptotic %.5f", asym);
    o.check(second == 0.0 && data.radii[0] == 1.0, "second term %.1e", second);
    return o;
}

Outcome residual_decay() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const Study s = load_study(test::data_dir() / "studies/two_plate.scn");
    const auto study = residual_study(s.condenser, s.robin_data(), {1e-2, 1e-3, 1e-4});
    const double dt = seconds_since(t0);
    for (std::size_t i = 0; i < study.rows.size(); ++i) {
        const double v = std::abs(study.rows[i].residual_times_log2r);
        const bool down = i == 0 || v < std::abs(study.rows[i - 1].residual_times_log2r);
        o.check(down, "r=%.0e |res log^2 r|=%.4e", study.rows[i].r, v);
    }
    o.check(study.rows.size() == 3 && study.passed, "study %s", study.passed ? "passed" : "failed");
    o.check(dt <= kResidualSeconds, "%.1f s", dt);
    return o;
}

Outcome conformal_invariance() {
    Outcome o;
    const auto phi = HolomorphicMap::parse("disk_auto(z, 0.3+0.2i)");
    const double base = condenser_capacity(plates(0.1)).capacity;
    const double moved = condenser_capacity(plates(0.1, [phi](Complex z) { return phi(z); })).capacity;
    o.check(std::abs(moved / base - 1) <= kInvarianceRel, "cap %.5f vs moved %.5f", base, moved);
    return o;
}

Outcome two_point_equality() {
    Outcome o;
    for (const char* id : {"thm_2_1_twopoint21_mobius", "twopoint22_mobius"}) {
        const auto r = verify(bundled(id));
        const bool closed = r.routes == std::vector<std::string>{"closed-form"};
        o.check(r.status == VerdictStatus::Satisfied && r.equality && std::abs(r.margin) <= kMobiusMargin && closed,
                "%s margin %.1e", id, r.margin);
    }
    const auto strict = verify(bundled("thm_2_1_twopoint22_half"));
    o.check(strict.status == VerdictStatus::Satisfied && strict.margin > 0, "z/2 margin %.4f", strict.margin);
    return o;
}

// bounded catalog of self-maps of the disk
std::string random_self_map(Rng& rng) {
    char buf[256];
    const Complex a = rng.in_disk(0.8), b = rng.in_disk(0.8);
    const double theta = rng.uniform(0, 2 * kPi), c = rng.uniform(0.1, 1);
    switch (rng.integer(0, 3)) {
    case 0: std::snprintf(buf, sizeof buf, "disk_auto(z, %.17g%+.17gi, %.17g)", a.real(), a.imag(), theta); break;
    case 1:
        std::snprintf(buf, sizeof buf, "blaschke(z, %.17g%+.17gi, %.17g%+.17gi)", a.real(), a.imag(), b.real(),
                      b.imag());
        break;
    case 2: std::snprintf(buf, sizeof buf, "%.17g*z^%d", c, rng.integer(1, 4)); break;
    default:
        std::snprintf(buf, sizeof buf, "%.17g*blaschke(z, %.17g%+.17gi)^2", c, a.real(), a.imag());
        break;
    }
    return buf;
}

Outcome pick_and_schwarzian() {
    Outcome o;
    Rng rng(808);
    int held = 0, agreed = 0;
    for (int i = 0; i < 100; ++i) {
        const std::string map = random_self_map(rng);
        const Complex z = rng.in_disk(0.9);
        char text[512];
        std::snprintf(text, sizeof text, "id = pick_%d\nkind = Nehari33\nmap = %s\npoints = %.17g%+.17gi\nweights = 1\n",
                      i, map.c_str(), z.real(), z.imag());
        const auto r = verify(parse_scenario(text));
        const auto f = HolomorphicMap::parse(map);
        const double lhs = std::abs(f.derivative(z)) * (1 - std::norm(z)), rhs = 1 - std::norm(f(z));
        held += r.status == VerdictStatus::Satisfied && lhs <= rhs * (1 + 1e-12);
        agreed += std::abs(r.margin - std::log(rhs / lhs)) <= 1e-9 || lhs == 0;
    }
    o.check(held == 100 && agreed == 100, "Pick %d/100, independent %d/100", held, agreed);
    for (double a : {0.1, 0.3, 0.45}) {
        char text[256];
        std::snprintf(text, sizeof text, "id = s\nkind = Schwarzian34\nmap = (z + %.17g*z^2)/(1 + %.17g)\npoints = 0\n",
                      a, a);
        const Scenario s = parse_scenario(text);
        const auto r = verify(s);
        const Complex s1 = schwarzian(s.f(), 0.0), s2 = schwarzian_from_coefficients(s.f(), 0.0);
        const double bound = 6 * (1 - std::norm(s.f().derivative(0.0)));
        o.check(r.status == VerdictStatus::Satisfied && std::abs(s1 - s2) <= kSchwarzianRoutes &&
                    std::abs(s1 + 6 * a * a) <= kSchwarzianRoutes && std::abs(s1) <= bound,
                "a=%.2f S=%.6f gap %.1e", a, s1.real(), std::abs(s1 - s2));
    }
    return o;
}

Outcome covering_equality() {
    Outcome o;
    for (const char* id : {"thm_4_1_lindelof", "thm_4_2_radius"}) {
        const auto r = verify(bundled(id));
        o.check(r.status == VerdictStatus::Satisfied && std::abs(r.lhs_log - r.rhs_log) <= kCoveringTol,
                "%s gap %.1e", id, r.lhs_log - r.rhs_log);
    }
    for (const char* id : {"thm_4_1_lindelof_strict", "thm_4_2_radius_strict"}) {
        const auto r = verify(bundled(id));
        o.check(r.status == VerdictStatus::Satisfied && r.margin > kCoveringTol, "%s margin %.4f", id, r.margin);
    }
    return o;
}

Outcome pvalent_equality() {
    Outcome o;
    const auto r = verify(bundled("thm_4_3_pvalent"));
    o.check(r.status == VerdictStatus::Satisfied && std::abs(r.lhs_log - r.rhs_log) <= kCoveringTol, "gap %.1e",
            r.lhs_log - r.rhs_log);
    return o;
}

Outcome model_examples() {
    Outcome o;
    const auto strip = verify(bundled("cor_5_1_strip"));
    o.check(strip.status == VerdictStatus::Satisfied && strip.equality, "strip translation margin %.1e", strip.margin);
    const auto strict = verify(bundled("cor_5_1_strip_strict"));
    o.check(strict.status == VerdictStatus::Satisfied && strict.margin > 0, "strip z/2 margin %.4f", strict.margin);
    const auto half = verify(bundled("cor_5_2_halfplane"));
    const double r_inf = half.detail("r_source_inf");
    o.check(half.status == VerdictStatus::Satisfied && std::abs(r_inf - 2) <= kHalfPlaneRadiusTol &&
                half.detail("target_gamma_length") <= 2,
            "r(inf) %.6f", r_inf);
    const auto quarter = verify(bundled("cor_5_3_quarterplane"));
    o.check(quarter.status == VerdictStatus::Satisfied && std::abs(quarter.margin) <= kQuarterPlaneTol,
            "quarter-plane margin %.1e", quarter.margin);
    return o;
}

Outcome bundled_suite() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = verify_all(load_scenario_dir(test::data_dir() / "scenarios"),
                                    static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
    const double dt = seconds_since(t0);
    int bad = 0;
    for (const auto& r : reports) bad += r.status != VerdictStatus::Satisfied;
    o.check(bad == 0 && !reports.empty(), "%zu scenarios, %d not satisfied", reports.size(), bad);
    o.check(dt <= kSuiteSeconds, "%.1f s", dt);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"disk Green function against its closed form", green_oracle},
        {"arc Robin radius times squared capacity", arc_radius_capacity},
        {"arc complement radius decomposition", arc_decomposition},
        {"radial capacitor and its asymptotic", radial_capacitor},
        {"two-plate residual decay", residual_decay},
        {"condenser capacity under a disk automorphism", conformal_invariance},
        {"two-point bounds: Moebius equality, z/2 strict", two_point_equality},
        {"Pick inequality and Schwarzian bound", pick_and_schwarzian},
        {"covering equality for z^2", covering_equality},
        {"p-valent covering equality", pvalent_equality},
        {"strip, half-plane and quarter-plane examples", model_examples},
        {"bundled scenario suite", bundled_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::printf("%s %2zu %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    seconds_since(t0), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
