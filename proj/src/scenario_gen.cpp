#include "robincap/scenario_gen.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

namespace robincap {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string cnum(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.17g%c%.17gi)", z.real(), std::signbit(z.imag()) ? '-' : '+', std::abs(z.imag()));
    return buf;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    Complex in_disk(double rmax) { return std::polar(rmax * std::sqrt(uniform(0, 1)), uniform(0, 2 * kPi)); }
    Complex in_annulus(double r0, double r1) { return std::polar(uniform(r0, r1), uniform(0, 2 * kPi)); }
    double weight() { return uniform(0.3, 1.5) * (uniform(0, 1) < 0.5 ? -1 : 1); }

private:
    std::mt19937_64 rng_;
};

struct Text {
    std::string body;
    void kv(const std::string& k, const std::string& v) { body += k + " = " + v + "\n"; }
};

// arc [a, a + m] and a wider arc around its image under rotation by phi
struct ArcPair {
    double a, m, phi, lo, hi;
};

ArcPair arc_pair(Gen& g, bool widen) {
    ArcPair p;
    p.a = g.uniform(0, 2 * kPi);
    p.m = g.uniform(0.4, 2.5);
    p.phi = g.uniform(-kPi, kPi);
    const double d1 = widen ? g.uniform(0.05, 0.8) : 0.0, d2 = widen ? g.uniform(0.05, 0.8) : 0.0;
    p.lo = p.a + p.phi - d1;
    p.hi = p.a + p.phi + p.m + d2;
    return p;
}

std::string rotation(double phi) { return "exp(" + num(phi) + "i)*z"; }

std::string disk_arcs(double lo, double hi) { return "disk_arcs(" + num(lo) + ", " + num(hi) + ")"; }

void two_points(Gen& g, Text& t, double rmax, bool weights) {
    const Complex z1 = g.in_disk(rmax);
    Complex z2 = g.in_disk(rmax);
    while (std::abs(z2 - z1) < 0.1) z2 = g.in_disk(rmax);
    t.kv("points", cnum(z1) + ", " + cnum(z2));
    if (weights) t.kv("weights", num(g.weight()) + ", " + num(g.weight()));
}

// univalent self-map of the disk: automorphism after a scaled z + a z^2
std::string univalent_map(Gen& g, Complex& c1) {
    const Complex a = g.in_disk(0.45);
    const double rho = g.uniform(0.4, 1.0);
    const Complex b = g.in_disk(0.5);
    const double th = g.uniform(0, 2 * kPi);
    c1 = rho / (1 + std::abs(a));
    return "disk_auto(" + num(rho / (1 + std::abs(a))) + "*(z + " + cnum(a) + "*z^2), " + cnum(b) + ", " + num(th) + ")";
}

std::string blaschke(Gen& g, int degree) {
    std::string s = "blaschke(z";
    for (int k = 0; k < degree; ++k) s += ", " + cnum(g.in_disk(0.6));
    return s + ")";
}

std::string instance(ScenarioKind kind, Gen& g, int k) {
    Text t;
    t.kv("kind", to_string(kind));
    Complex c1;
    switch (kind) {
        case ScenarioKind::TwoPoint21:
        case ScenarioKind::Cor35:
        case ScenarioKind::Major31: {
            const auto p = arc_pair(g, k % 2 == 1);
            t.kv("source", disk_arcs(p.a, p.a + p.m));
            t.kv("target", disk_arcs(p.lo, p.hi));
            t.kv("map", rotation(p.phi));
            if (kind == ScenarioKind::Major31) t.kv("points", cnum(g.in_disk(0.7)));
            else two_points(g, t, 0.7, true);
            break;
        }
        case ScenarioKind::TwoPoint22: {
            const Complex a = g.in_disk(0.6);
            const double rho = k % 2 ? g.uniform(0.3, 1.0) : 1.0;
            t.kv("source", "disk");
            t.kv("target", "disk");
            t.kv("map", num(rho) + "*disk_auto(z, " + cnum(a) + ", " + num(g.uniform(0, 2 * kPi)) + ")");
            two_points(g, t, 0.7, true);
            break;
        }
        case ScenarioKind::Major32: {
            // Gamma is the image of a sub-arc of gamma, so the free arcs are nested
            const double a = g.uniform(0, 2 * kPi), m = g.uniform(0.8, 3.0), phi = g.uniform(-kPi, kPi);
            const double d1 = g.uniform(0.05, 0.3) * m, d2 = g.uniform(0.05, 0.3) * m;
            t.kv("source", disk_arcs(a, a + m));
            t.kv("target", disk_arcs(a + phi + d1, a + phi + m - d2));
            t.kv("map", rotation(phi));
            t.kv("points", cnum(g.in_disk(0.7)));
            break;
        }
        case ScenarioKind::Pommerenke32cor: {
            const auto p = arc_pair(g, k % 2 == 1);
            t.kv("source", disk_arcs(p.a, p.a + p.m));
            t.kv("target", disk_arcs(p.lo, p.hi));
            t.kv("map", rotation(p.phi));
            t.kv("aux.variant", "cor32");
            break;
        }
        case ScenarioKind::Nehari33: {
            t.kv("source", "disk");
            t.kv("target", "disk");
            t.kv("map", univalent_map(g, c1));
            if (k % 2) {
                t.kv("points", cnum(g.in_disk(0.8)));
            } else {
                two_points(g, t, 0.7, true);
            }
            break;
        }
        case ScenarioKind::Schwarzian34: {
            const Complex a = g.in_disk(0.45);
            const double rho = g.uniform(0.3, 1.0);
            t.kv("source", "disk");
            t.kv("target", "disk");
            t.kv("map", "exp(" + num(g.uniform(0, 2 * kPi)) + "i)*" + num(rho / (1 + std::abs(a))) + "*(z + " + cnum(a) + "*z^2)");
            break;
        }
        case ScenarioKind::Boundary36: {
            const auto p = arc_pair(g, true);
            t.kv("source", disk_arcs(p.a, p.a + p.m));
            t.kv("target", disk_arcs(p.lo, p.hi));
            t.kv("map", rotation(p.phi));
            // boundary points whose images avoid Gamma
            const double from = p.hi - p.phi + 0.1, to = p.lo - p.phi + 2 * kPi - 0.1;
            const double s1 = g.uniform(from, to);
            double s2 = g.uniform(from, to);
            while (std::abs(s2 - s1) < 0.05) s2 = g.uniform(from, to);
            t.kv("points", cnum(std::polar(1.0, s1)) + ", " + cnum(std::polar(1.0, s2)));
            t.kv("weights", num(g.weight()) + ", " + num(g.weight()));
            break;
        }
        case ScenarioKind::Annulus37: {
            const double rho = g.uniform(0.3, 0.5), a = g.uniform(0, 2 * kPi), m = g.uniform(0.8, 3.0);
            const double phi = g.uniform(-kPi, kPi);
            t.kv("source", "annulus_arcs(" + num(rho) + ", " + num(a) + ", " + num(a + m) + ")");
            t.kv("target", disk_arcs(a + phi, a + phi + m));
            t.kv("map", rotation(phi));
            const Complex z1 = g.in_annulus(rho + 0.1, 0.9);
            Complex z2 = g.in_annulus(rho + 0.1, 0.9);
            while (std::abs(z2 - z1) < 0.15) z2 = g.in_annulus(rho + 0.1, 0.9);
            t.kv("points", cnum(z1) + ", " + cnum(z2));
            t.kv("weights", "1, -1");
            t.kv("h", "0.03");
            break;
        }
        case ScenarioKind::Lindelof41:
        case ScenarioKind::Radius42: {
            const double rho = k % 2 ? g.uniform(0.4, 0.95) : 1.0;
            t.kv("source", "disk");
            t.kv("target", "disk");
            t.kv("map", num(rho) + "*" + blaschke(g, 2 + k % 2));
            t.kv("points", cnum(g.in_disk(0.7)));
            if (kind == ScenarioKind::Lindelof41) t.kv("w0", cnum(g.in_disk(0.3 * rho)));
            break;
        }
        case ScenarioKind::PValent43: {
            const int p = 2 + k % 2;
            t.kv("source", "disk");
            t.kv("target", "disk");
            t.kv("map", blaschke(g, p));
            t.kv("valence", std::to_string(p));
            const Complex w1 = g.in_disk(0.6);
            Complex w2 = g.in_disk(0.6);
            while (std::abs(w2 - w1) < 0.1) w2 = g.in_disk(0.6);
            t.kv("targets", cnum(w1) + ", " + cnum(w2));
            t.kv("weights", num(g.weight()) + ", " + num(g.weight()));
            break;
        }
        case ScenarioKind::Invariant51: {
            const double lambda = k % 2 ? g.uniform(0.3, 1.0) : 1.0;
            t.kv("source", "strip");
            t.kv("target", "strip");
            t.kv("map", num(lambda) + "*z + " + num(g.uniform(-2, 2)));
            const Complex z1(g.uniform(-2, 2), g.uniform(0.1, 1.4));
            const Complex z2(g.uniform(-2, 2), g.uniform(0.1, 1.4));
            t.kv("points", cnum(z1) + ", " + cnum(z2));
            break;
        }
        case ScenarioKind::Multiplicity52: {
            if (k % 2) {
                const double s = g.uniform(0.3, 0.95), c = g.uniform(0.5, 2.0), u = g.uniform(0.5, 1.0);
                t.kv("source", "halfplane_interval(-1, 1)");
                t.kv("target", "halfplane_interval(" + num(-c * s * u) + ", " + num(c * s * u) + ")");
                t.kv("map", num(c) + "*z*sqrt(1 - " + num(1 - s * s) + "/z^2)");
                t.kv("aux.mode", "infinity");
            } else {
                t.kv("source", "disk");
                t.kv("target", "disk");
                t.kv("map", blaschke(g, 2));
                t.kv("points", cnum(g.in_disk(0.7)));
            }
            break;
        }
        case ScenarioKind::QuarterPlane53: {
            const double c = g.uniform(0.3, 3.0), b = k % 2 ? g.uniform(0.1, 1.0) : 0.0;
            t.kv("source", "quadrant");
            t.kv("target", "quadrant");
            t.kv("map", num(c) + "*z + " + num(b));
            t.kv("points", cnum({g.uniform(0.1, 2), g.uniform(0.1, 2)}));
            t.kv("aux.zeta", cnum({g.uniform(0.1, 2) * c + b + 0.05, g.uniform(0.1, 2) * c}));
            break;
        }
    }
    return t.body;
}

}  // namespace

std::vector<Scenario> random_scenarios(ScenarioKind kind, int count, std::uint64_t seed) {
    Gen g(seed * 1000003u + static_cast<std::uint64_t>(kind));
    std::vector<Scenario> out;
    for (int k = 0; k < count; ++k) {
        char id[96];
        std::snprintf(id, sizeof id, "%s_rand_%llu_%02d", to_string(kind), static_cast<unsigned long long>(seed), k);
        out.push_back(parse_scenario("id = " + std::string(id) + "\n" + instance(kind, g, k)));
    }
    return out;
}

std::vector<Scenario> random_suite(int count, std::uint64_t seed) {
    std::vector<Scenario> out;
    for (int k = 0; k < kScenarioKindCount; ++k) {
        auto part = random_scenarios(static_cast<ScenarioKind>(k), count, seed);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace robincap
