#include "robincap/study.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "robincap/domain_io.hpp"
#include "robincap/expr.hpp"
#include "robincap/scenario.hpp"

namespace robincap {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double real_of(const std::string& text, int line) {
    const Complex v = expr::parse_constant(text, line);
    if (v.imag() != 0) throw InputError("expected a real number, got '" + text + "'");
    return v.real();
}

bool full_unit_disk(const MarkedDomain& md) {
    const auto& d = md.domain;
    if (d.kind != DomainKind::Bounded || d.loops.size() != 1 || d.loops[0].arcs.size() != 1) return false;
    const auto& a = d.loops[0].arcs[0];
    return a.is_closed_circle() && std::abs(a.center()) < 1e-12 && std::abs(a.radius() - 1) < 1e-12 &&
           md.is_full_marking();
}

}  // namespace

RobinData Study::robin_data(const RobinOptions& options) const {
    std::vector<Complex> centers;
    for (const auto& p : condenser.plates) {
        if (p.center.is_infinite()) throw InputError("plates at infinity are not supported");
        centers.push_back(p.center.value());
    }
    const bool oracle = robin == "oracle" || (robin == "auto" && full_unit_disk(condenser.marked));
    if (oracle) {
        if (!full_unit_disk(condenser.marked)) throw InputError("robin = oracle needs the unit disk");
        return disk_robin_data(centers);
    }
    return robincap::robin_data(condenser.marked, centers, options);
}

Study parse_study(std::string_view text, const std::filesystem::path& base) {
    Study s;
    std::map<int, PlateSpec> plates;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string content = raw.substr(0, raw.find('#'));
        if (trim(content).empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, 1);
        const std::string key = trim(content.substr(0, eq)), value = trim(content.substr(eq + 1));
        const int col = static_cast<int>(content.find_first_not_of(" \t", eq + 1)) + 1;
        try {
            if (key == "id") s.id = value;
            else if (key == "domain") s.domain_descriptor = value;
            else if (key == "shape") s.shape_text = value;
            else if (key == "r") s.condenser.r = real_of(value, line);
            else if (key == "h") s.h = real_of(value, line);
            else if (key == "robin") {
                if (value != "oracle" && value != "solver" && value != "auto")
                    throw InputError("robin must be oracle, solver or auto");
                s.robin = value;
            } else if (key == "r_list") {
                for (const auto& x : split_list(value)) s.r_list.push_back(real_of(x, line));
            } else if (key.rfind("plate.", 0) == 0) {
                const int k = std::stoi(key.substr(6));
                const auto f = split_list(value);
                if (f.size() != 4) throw InputError("a plate is: center, mu, nu, potential");
                PlateSpec p;
                p.center = trim(f[0]) == "inf" ? ExtendedPoint::infinity() : ExtendedPoint(expr::parse_constant(f[0], line));
                p.mu = real_of(f[1], line);
                p.nu = real_of(f[2], line);
                p.potential = real_of(f[3], line);
                if (!plates.emplace(k, p).second) throw InputError("duplicate plate " + std::to_string(k));
            } else {
                throw ParseError("unknown key '" + key + "'", line, 1);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line, col);
        }
    }
    if (plates.empty()) throw ParseError("a study needs at least one plate", std::max(line, 1), 1);
    if (!(s.h > 0)) throw InputError("h must be positive");
    for (auto& [k, p] : plates) s.condenser.plates.push_back(p);
    s.condenser.marked = resolve_domain(s.domain_descriptor, base);
    if (!s.shape_text.empty()) {
        const auto map = std::make_shared<HolomorphicMap>(HolomorphicMap::parse(s.shape_text));
        s.condenser.shape = [map](Complex z) { return (*map)(z); };
    }
    return s;
}

Study load_study(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_study(ss.str(), path.parent_path());
}

}  // namespace robincap
