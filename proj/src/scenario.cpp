#include "robincap/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "robincap/domain_io.hpp"
#include "robincap/preimage.hpp"

namespace robincap {

namespace {

constexpr std::array<const char*, kScenarioKindCount> kKindNames = {
    "TwoPoint21", "TwoPoint22",  "Major31",   "Major32",    "Pommerenke32cor", "Nehari33",
    "Schwarzian34", "Cor35",     "Boundary36", "Annulus37", "Lindelof41",      "Radius42",
    "PValent43",  "Invariant51", "Multiplicity52", "QuarterPlane53",
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string format_complex(Complex z) {
    char buf[96];
    if (z.imag() == 0) std::snprintf(buf, sizeof buf, "%.17g", z.real());
    else std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", z.real(), std::signbit(z.imag()) ? '-' : '+', std::abs(z.imag()));
    return buf;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool finite(Complex w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); }

double tol_at(Complex w) { return kHypothesisTol * std::max(1.0, std::abs(w)); }

std::string where(Complex z) { return format_complex(z); }

}  // namespace

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

ScenarioKind parse_kind(std::string_view name) {
    for (int k = 0; k < kScenarioKindCount; ++k)
        if (name == kKindNames[k]) return static_cast<ScenarioKind>(k);
    throw InputError("unknown scenario kind '" + std::string(name) + "'");
}

const char* to_string(ScenarioKind kind) { return kKindNames[static_cast<int>(kind)]; }

const HolomorphicMap& Scenario::f() const {
    if (!map) throw InputError("scenario '" + id + "' has no map");
    return *map;
}

double Scenario::aux_real(const std::string& key, double fallback) const {
    auto it = aux.find(key);
    if (it == aux.end()) return fallback;
    const Complex v = expr::parse_constant(it->second);
    if (v.imag() != 0) throw InputError("aux." + key + " must be real");
    return v.real();
}

Complex Scenario::aux_complex(const std::string& key, Complex fallback) const {
    auto it = aux.find(key);
    return it == aux.end() ? fallback : expr::parse_constant(it->second);
}

std::string Scenario::aux_text(const std::string& key, const std::string& fallback) const {
    auto it = aux.find(key);
    return it == aux.end() ? fallback : it->second;
}

Scenario parse_scenario(std::string_view text, const std::filesystem::path& base) {
    Scenario s;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    bool have_kind = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string content = raw.substr(0, raw.find('#'));
        if (trim(content).empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, 1);
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        const int col = static_cast<int>(content.find_first_not_of(" \t", eq + 1)) + 1;
        if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line, 1);
        try {
            if (key == "id") s.id = value;
            else if (key == "description") s.description = value;
            else if (key == "kind") { s.kind = parse_kind(value); have_kind = true; }
            else if (key == "source") s.source_descriptor = value;
            else if (key == "target") s.target_descriptor = value;
            else if (key == "map") s.map_text = value;
            else if (key == "points") for (const auto& p : split_list(value)) s.points.push_back(expr::parse_constant(p, line));
            else if (key == "targets") for (const auto& p : split_list(value)) s.targets.push_back(expr::parse_constant(p, line));
            else if (key == "weights") {
                for (const auto& p : split_list(value)) {
                    const Complex t = expr::parse_constant(p, line);
                    if (t.imag() != 0) throw InputError("weights must be real");
                    s.weights.push_back(t.real());
                }
            } else if (key == "w0") s.w0 = expr::parse_constant(value, line);
            else if (key == "valence") s.valence = std::stoi(value);
            else if (key == "h") s.h = expr::parse_constant(value, line).real();
            else if (key.rfind("aux.", 0) == 0 && key.size() > 4) s.aux[key.substr(4)] = value;
            else throw ParseError("unknown key '" + key + "'", line, 1);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line, col);
        }
    }
    if (!have_kind) throw ParseError("missing key 'kind'", std::max(line, 1), 1);
    if (s.id.empty()) throw ParseError("missing key 'id'", std::max(line, 1), 1);
    if (!(s.h > 0)) throw InputError("h must be positive");
    if (s.valence < 1) throw InputError("valence must be >= 1");
    s.source = resolve_domain(s.source_descriptor, base);
    s.target = resolve_domain(s.target_descriptor, base);
    s.map = HolomorphicMap::parse(s.map_text, s.valence);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_scenario(ss.str(), path.parent_path());
    } catch (const ParseError& e) {
        throw ParseError(path.filename().string() + ": " + e.what(), e.line(), e.column());
    }
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    const auto list = [](const auto& v, auto fmt) {
        std::string r;
        for (std::size_t i = 0; i < v.size(); ++i) r += (i ? ", " : "") + fmt(v[i]);
        return r;
    };
    out << "id = " << s.id << "\n";
    if (!s.description.empty()) out << "description = " << s.description << "\n";
    out << "kind = " << to_string(s.kind) << "\n";
    out << "source = " << s.source_descriptor << "\n";
    out << "target = " << s.target_descriptor << "\n";
    out << "map = " << s.map_text << "\n";
    if (!s.points.empty()) out << "points = " << list(s.points, format_complex) << "\n";
    if (!s.weights.empty()) out << "weights = " << list(s.weights, format_real) << "\n";
    if (!s.targets.empty()) out << "targets = " << list(s.targets, format_complex) << "\n";
    if (s.w0) out << "w0 = " << format_complex(*s.w0) << "\n";
    if (s.valence != 1) out << "valence = " << s.valence << "\n";
    out << "h = " << format_real(s.h) << "\n";
    for (const auto& [k, v] : s.aux) out << "aux." << k << " = " << v << "\n";
    return out.str();
}

std::vector<Scenario> load_scenario_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw InputError("not a directory: '" + dir.string() + "'");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".scn") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Scenario> out;
    for (const auto& p : files) out.push_back(load_scenario(p));
    return out;
}

// ------------------------------------------------------------- hypotheses

void check_maps_into(const HolomorphicMap& f, const MarkedDomain& b, const MarkedDomain& g) {
    for (Complex z : b.sample_interior(kHypothesisSamples)) {
        const Complex w = f(z);
        if (!finite(w)) throw HypothesisFailed("f(B) in G fails: f has a pole near " + where(z));
        if (!g.domain.contains(w) && g.domain.distance_to_boundary(w) > tol_at(w))
            throw HypothesisFailed("f(B) in G fails: f(" + where(z) + ") = " + where(w) + " lies outside G");
    }
}

void check_gamma_into(const HolomorphicMap& f, const MarkedDomain& b, const MarkedDomain& g) {
    for (Complex z : b.sample_gamma(kHypothesisSamples)) {
        const Complex w = f(z);
        // a boundary point sent to infinity is accepted only when Gamma is unbounded
        if (!finite(w)) {
            if (g.domain.is_model()) continue;
            throw HypothesisFailed("f(gamma) in Gamma fails: f is infinite at " + where(z));
        }
        if (g.distance_to_gamma(w) > tol_at(w))
            throw HypothesisFailed("f(gamma) in Gamma fails: f(" + where(z) + ") = " + where(w) + " is off Gamma");
    }
}

void check_free_into_free(const HolomorphicMap& f, const MarkedDomain& b, const MarkedDomain& g) {
    for (Complex z : b.sample_free(kHypothesisSamples)) {
        const Complex w = f(z);
        if (!finite(w)) {
            if (g.domain.is_model()) continue;
            throw HypothesisFailed("f(dB\\gamma) in dG\\Gamma fails: f is infinite at " + where(z));
        }
        const double t = tol_at(w);
        if (g.domain.distance_to_boundary(w) > t || g.distance_to_free(w) > t)
            throw HypothesisFailed("f(dB\\gamma) in dG\\Gamma fails: f(" + where(z) + ") = " + where(w));
    }
}

void check_univalent(const HolomorphicMap& f, const MarkedDomain& b) {
    if (!f.rational()) return;  // transcendental catalog maps are taken as declared
    for (Complex z : b.sample_interior(8)) {
        int count = 0;
        for (const auto& p : preimages(f, f(z), b.domain)) count += p.multiplicity;
        if (count != 1)
            throw HypothesisFailed("f is not univalent: the value at " + where(z) + " is taken " +
                                   std::to_string(count) + " times");
    }
}

}  // namespace robincap
