#include "robincap/domain_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "robincap/expr.hpp"

namespace robincap {

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

double parse_real_value(const std::string& text, int line, int column) {
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    Complex v;
    try {
        v = expr::parse_constant(text, line);
    } catch (const InputError&) {
        throw ParseError("bad number '" + text + "'", line, column);
    }
    if (v.imag() != 0.0) throw ParseError("expected a real number, got '" + text + "'", line, column);
    return v.real();
}

Complex parse_complex_value(const std::string& text, int line, int column) {
    try {
        return expr::parse_constant(text, line);
    } catch (const InputError&) {
        throw ParseError("bad number '" + text + "'", line, column);
    }
}

// key=value arguments of a piece line
std::map<std::string, Token> keyed(const std::vector<Token>& toks, std::size_t from, int line) {
    std::map<std::string, Token> kv;
    for (std::size_t i = from; i < toks.size(); ++i) {
        const auto eq = toks[i].text.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("expected key=value, got '" + toks[i].text + "'", line, toks[i].column);
        kv[toks[i].text.substr(0, eq)] = {toks[i].text.substr(eq + 1), toks[i].column + static_cast<int>(eq) + 1};
    }
    return kv;
}

const Token& need(const std::map<std::string, Token>& kv, const std::string& key, int line, int column) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing '" + key + "='", line, column);
    return it->second;
}

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt(Complex z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) return fmt(z.real());
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

DomainKind model_kind(const std::string& name, int line, int column) {
    if (name == "upper_halfplane") return DomainKind::UpperHalfPlane;
    if (name == "right_halfplane") return DomainKind::RightHalfPlane;
    if (name == "quadrant") return DomainKind::Quadrant;
    if (name == "strip") return DomainKind::Strip;
    throw ParseError("unknown model '" + name + "'", line, column);
}

std::string model_name(DomainKind k) {
    switch (k) {
        case DomainKind::UpperHalfPlane: return "upper_halfplane";
        case DomainKind::RightHalfPlane: return "right_halfplane";
        case DomainKind::Quadrant: return "quadrant";
        case DomainKind::Strip: return "strip";
        default: return {};
    }
}

struct PendingGamma {
    std::string name;
    std::vector<Token> refs;
    int line;
};

std::vector<GammaPiece> resolve_refs(const DomainSpec& d, const PendingGamma& g) {
    std::vector<GammaPiece> out;
    for (const auto& ref : g.refs) {
        std::string head = ref.text, range;
        if (const auto at = head.find('@'); at != std::string::npos) {
            range = head.substr(at + 1);
            head = head.substr(0, at);
        }
        int comp = -1, arc = -1;
        if (d.is_model()) {
            if (head.rfind("edge", 0) != 0) throw ParseError("expected edge<k>, got '" + head + "'", g.line, ref.column);
            try {
                comp = std::stoi(head.substr(4));
            } catch (const std::exception&) {
                throw ParseError("bad edge index in '" + head + "'", g.line, ref.column);
            }
            if (comp < 0 || comp >= static_cast<int>(d.component_count()))
                throw ParseError("no such edge '" + head + "'", g.line, ref.column);
            arc = 0;
        } else {
            const auto dot = head.find('.');
            const std::string loop = head.substr(0, dot);
            for (std::size_t i = 0; i < d.loops.size(); ++i)
                if (d.loops[i].name == loop) comp = static_cast<int>(i);
            if (comp < 0) throw ParseError("no loop named '" + loop + "'", g.line, ref.column);
            if (dot != std::string::npos) {
                try {
                    arc = std::stoi(head.substr(dot + 1));
                } catch (const std::exception&) {
                    throw ParseError("bad piece index in '" + head + "'", g.line, ref.column);
                }
                if (arc < 0 || arc >= static_cast<int>(d.loops[comp].arcs.size()))
                    throw ParseError("no piece " + std::to_string(arc) + " in loop '" + loop + "'", g.line, ref.column);
            }
        }
        const int rcol = ref.column + static_cast<int>(head.size()) + 1;
        if (arc < 0) {
            if (!range.empty()) throw ParseError("an interval needs a piece index", g.line, rcol);
            for (int k = 0; k < static_cast<int>(d.loops[comp].arcs.size()); ++k) {
                const auto& a = d.loops[comp].arcs[k];
                out.push_back({comp, k, a.param_lo(), a.param_hi()});
            }
            continue;
        }
        double s0, s1;
        if (range.empty()) {
            if (d.is_model()) {
                const auto e = d.model_edges()[comp];
                s0 = e.s_min;
                s1 = e.s_max;
            } else {
                s0 = d.loops[comp].arcs[arc].param_lo();
                s1 = d.loops[comp].arcs[arc].param_hi();
            }
        } else {
            const auto colon = range.find(':');
            if (colon == std::string::npos) throw ParseError("expected <s0>:<s1>", g.line, rcol);
            s0 = parse_real_value(range.substr(0, colon), g.line, rcol);
            s1 = parse_real_value(range.substr(colon + 1), g.line, rcol + static_cast<int>(colon) + 1);
        }
        out.push_back({comp, arc, s0, s1});
    }
    return out;
}

}  // namespace

MarkedDomain DomainFile::marked(std::string_view gamma_name) const {
    if (gammas.empty()) {
        if (!gamma_name.empty() && gamma_name != "full")
            throw InputError("domain '" + domain.id + "' has no gamma named '" + std::string(gamma_name) + "'");
        return mark_full(domain);
    }
    if (gamma_name == "full") return mark_full(domain);
    for (const auto& [name, pieces] : gammas)
        if (gamma_name.empty() || name == gamma_name) return mark_boundary(domain, pieces, name);
    throw InputError("domain '" + domain.id + "' has no gamma named '" + std::string(gamma_name) + "'");
}

DomainFile parse_domain(std::string_view text) {
    DomainSpec spec;
    bool have_id = false;
    std::vector<PendingGamma> pending;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (kw == "domain") {
            if (toks.size() != 2) throw ParseError("expected 'domain <id>'", line, toks[0].column);
            spec.id = toks[1].text;
            have_id = true;
        } else if (kw == "model") {
            if (toks.size() != 2) throw ParseError("expected 'model <kind>'", line, toks[0].column);
            spec.kind = model_kind(toks[1].text, line, toks[1].column);
        } else if (kw == "exterior") {
            spec.kind = DomainKind::Exterior;
        } else if (kw == "loop") {
            if (toks.size() != 2) throw ParseError("expected 'loop <name>'", line, toks[0].column);
            for (const auto& l : spec.loops)
                if (l.name == toks[1].text) throw ParseError("duplicate loop '" + toks[1].text + "'", line, toks[1].column);
            spec.loops.push_back({toks[1].text, {}});
        } else if (kw == "circle" || kw == "arc" || kw == "segment") {
            if (spec.loops.empty()) throw ParseError("'" + kw + "' outside a loop", line, toks[0].column);
            const auto kv = keyed(toks, 1, line);
            const int col = toks[0].column;
            try {
                if (kw == "segment") {
                    const auto& a = need(kv, "a", line, col);
                    const auto& b = need(kv, "b", line, col);
                    spec.loops.back().arcs.push_back(ArcSegment::segment(parse_complex_value(a.text, line, a.column),
                                                                         parse_complex_value(b.text, line, b.column)));
                } else {
                    const auto& c = need(kv, "c", line, col);
                    const auto& r = need(kv, "r", line, col);
                    const Complex center = parse_complex_value(c.text, line, c.column);
                    const double radius = parse_real_value(r.text, line, r.column);
                    if (kw == "circle") {
                        spec.loops.back().arcs.push_back(ArcSegment::circle(center, radius));
                    } else {
                        const auto& t0 = need(kv, "t0", line, col);
                        const auto& t1 = need(kv, "t1", line, col);
                        spec.loops.back().arcs.push_back(
                            ArcSegment::arc(center, radius, parse_real_value(t0.text, line, t0.column),
                                            parse_real_value(t1.text, line, t1.column)));
                    }
                }
            } catch (const ParseError&) {
                throw;
            } catch (const InputError& e) {
                throw ParseError(e.what(), line, col);
            }
        } else if (kw == "gamma") {
            if (toks.size() < 4 || toks[2].text != "=")
                throw ParseError("expected 'gamma <name> = <ref> ...'", line, toks[0].column);
            pending.push_back({toks[1].text, {toks.begin() + 3, toks.end()}, line});
        } else {
            throw ParseError("unknown keyword '" + kw + "'", line, toks[0].column);
        }
    }
    if (!have_id) throw ParseError("missing 'domain <id>' line", 1, 1);
    DomainFile file;
    file.domain = make_domain(spec);
    for (const auto& g : pending) {
        // piece indices refer to the order as written; validation may reverse a loop
        auto pieces = resolve_refs(spec, g);
        for (auto& p : pieces) {
            if (file.domain.is_model()) continue;
            const auto& arcs = file.domain.loops[p.component].arcs;
            if (arcs.size() > 1 && arcs[0].orientation() == Orientation::Negative)
                p.arc = static_cast<int>(arcs.size()) - 1 - p.arc;
        }
        try {
            (void)mark_boundary(file.domain, pieces, g.name);
        } catch (const InputError& e) {
            throw ParseError(std::string("gamma '") + g.name + "': " + e.what(), g.line, 1);
        }
        file.gammas.emplace_back(g.name, std::move(pieces));
    }
    return file;
}

DomainFile load_domain(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read domain file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_domain(ss.str());
}

std::string serialize_domain(const DomainFile& file) {
    const auto& d = file.domain;
    std::string out = "domain " + d.id + "\n";
    if (d.is_model()) out += "model " + model_name(d.kind) + "\n";
    if (d.kind == DomainKind::Exterior) out += "exterior\n";
    for (const auto& loop : d.loops) {
        out += "loop " + loop.name + "\n";
        // pieces are written in traversal direction, so re-validation keeps their order
        for (const auto& arc : loop.arcs) {
            const bool fwd = arc.orientation() == Orientation::Positive;
            if (arc.kind() == ArcKind::Line) {
                out += "  segment a=" + fmt(fwd ? arc.a() : arc.b()) + " b=" + fmt(fwd ? arc.b() : arc.a()) + "\n";
            } else if (fwd && arc.is_closed_circle() && arc.t0() == 0.0) {
                out += "  circle c=" + fmt(arc.center()) + " r=" + fmt(arc.radius()) + "\n";
            } else {
                out += "  arc c=" + fmt(arc.center()) + " r=" + fmt(arc.radius()) + " t0=" +
                       fmt(fwd ? arc.t0() : arc.t1()) + " t1=" + fmt(fwd ? arc.t1() : arc.t0()) + "\n";
            }
        }
    }
    for (const auto& [name, pieces] : file.gammas) {
        out += "gamma " + name + " =";
        for (const auto& p : pieces) {
            out += " ";
            out += d.is_model() ? "edge" + std::to_string(p.component)
                                : d.loops[p.component].name + "." + std::to_string(p.arc);
            out += "@" + fmt(p.s0) + ":" + fmt(p.s1);
        }
        out += "\n";
    }
    return out;
}

namespace {

std::vector<double> call_args(std::string_view desc, std::string_view name) {
    std::vector<double> args;
    const auto open = desc.find('(');
    const auto close = desc.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw InputError("malformed domain descriptor '" + std::string(desc) + "'");
    std::string inner(desc.substr(open + 1, close - open - 1));
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Complex v = expr::parse_constant(item);
        if (v.imag() != 0) throw InputError(std::string(name) + ": arguments must be real");
        args.push_back(v.real());
    }
    return args;
}

}  // namespace

MarkedDomain resolve_domain(std::string_view descriptor, const std::filesystem::path& base) {
    const std::string desc(descriptor);
    const std::string name = desc.substr(0, desc.find('('));
    if (name == "disk") return mark_full(unit_disk());
    if (name == "disk_arcs") {
        const auto a = call_args(desc, name);
        if (a.empty() || a.size() % 2) throw InputError("disk_arcs needs pairs t0,t1");
        std::vector<std::pair<double, double>> arcs;
        for (std::size_t i = 0; i < a.size(); i += 2) arcs.emplace_back(a[i], a[i + 1]);
        return disk_with_arcs(arcs);
    }
    if (name == "annulus" || name == "annulus_outer" || name == "annulus_inner") {
        const auto a = call_args(desc, name);
        if (a.size() != 1) throw InputError(name + " needs the inner radius");
        const auto d = annulus(a[0]);
        if (name == "annulus") return mark_full(d);
        const int comp = name == "annulus_outer" ? 0 : 1;
        const auto& arc = d.loops[comp].arcs[0];
        return mark_boundary(d, {{comp, 0, arc.param_lo(), arc.param_hi()}}, name == "annulus_outer" ? "outer" : "inner");
    }
    if (name == "annulus_arcs") {
        // inner circle plus closed arcs [t0_k, t1_k] of the outer circle
        const auto a = call_args(desc, name);
        if (a.size() < 3 || a.size() % 2 == 0) throw InputError("annulus_arcs needs rho and pairs t0,t1");
        const auto d = annulus(a[0]);
        const auto& inner = d.loops[1].arcs[0];
        const auto& outer = d.loops[0].arcs[0];
        std::vector<GammaPiece> sel{{1, 0, inner.param_lo(), inner.param_hi()}};
        for (std::size_t i = 1; i < a.size(); i += 2) {
            double t0 = a[i], t1 = a[i + 1];
            if (!(t0 < t1) || t1 - t0 > 2 * kPi) throw InputError("annulus_arcs: need t0 < t1 <= t0 + 2pi");
            const double shift = std::floor((t0 - outer.param_lo()) / (2 * kPi)) * 2 * kPi;
            t0 -= shift;
            t1 -= shift;
            if (t1 <= outer.param_hi()) {
                sel.push_back({0, 0, t0, t1});
            } else {
                sel.push_back({0, 0, t0, outer.param_hi()});
                sel.push_back({0, 0, outer.param_lo(), t1 - 2 * kPi});
            }
        }
        return mark_boundary(d, sel, "inner_and_arcs");
    }
    if (name == "half_disk") return mark_full(half_disk());
    if (name == "halfplane") return mark_full(model_domain(DomainKind::UpperHalfPlane));
    if (name == "halfplane_interval") {
        const auto a = call_args(desc, name);
        if (a.size() != 2 || !(a[0] < a[1])) throw InputError("halfplane_interval needs a < b");
        return mark_boundary(model_domain(DomainKind::UpperHalfPlane), {{0, 0, a[0], a[1]}}, "interval");
    }
    if (name == "right_halfplane") return mark_full(model_domain(DomainKind::RightHalfPlane));
    if (name == "quadrant") {
        const auto d = model_domain(DomainKind::Quadrant);
        return mark_boundary(d, {{1, 0, 0.0, std::numeric_limits<double>::infinity()}}, "imaginary_axis");
    }
    if (name == "quadrant_full") return mark_full(model_domain(DomainKind::Quadrant));
    if (name == "strip_full") return mark_full(model_domain(DomainKind::Strip));
    if (name == "strip") {
        const auto d = model_domain(DomainKind::Strip);
        constexpr double inf = std::numeric_limits<double>::infinity();
        return mark_boundary(d, {{1, 0, -inf, inf}}, "upper_edge");
    }
    std::string path = desc, gamma;
    if (const auto colon = desc.rfind(':'); colon != std::string::npos && colon + 1 < desc.size() &&
                                            desc.find('/', colon) == std::string::npos) {
        path = desc.substr(0, colon);
        gamma = desc.substr(colon + 1);
    }
    std::filesystem::path p(path);
    if (p.is_relative() && !base.empty()) p = base / p;
    return load_domain(p).marked(gamma);
}

}  // namespace robincap
