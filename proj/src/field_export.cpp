#include "robincap/field_export.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace robincap {

GridWindow default_window(const DomainSpec& d) {
    switch (d.kind) {
        case DomainKind::UpperHalfPlane: return {-3, 3, 0, 3};
        case DomainKind::RightHalfPlane: return {0, 3, -3, 3};
        case DomainKind::Quadrant: return {0, 3, 0, 3};
        case DomainKind::Strip: return {-3, 3, 0, kPi / 2};
        default: break;
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    GridWindow w{inf, -inf, inf, -inf};
    for (const auto& loop : d.loops)
        for (const auto& a : loop.arcs)
            for (int k = 0; k <= 64; ++k) {
                const Complex z = a.point(a.param_lo() + (a.param_hi() - a.param_lo()) * k / 64.0);
                w.x0 = std::min(w.x0, z.real());
                w.x1 = std::max(w.x1, z.real());
                w.y0 = std::min(w.y0, z.imag());
                w.y1 = std::max(w.y1, z.imag());
            }
    if (d.kind == DomainKind::Exterior) {
        const double pad = std::max(w.x1 - w.x0, w.y1 - w.y0);
        w = {w.x0 - pad, w.x1 + pad, w.y0 - pad, w.y1 + pad};
    }
    return w;
}

void export_field(const std::function<std::optional<double>(Complex)>& value, const GridWindow& window, int nx,
                  int ny, const std::filesystem::path& path) {
    if (nx < 2 || ny < 2) throw InputError("grid needs at least 2 x 2 points");
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    if (!f) throw InputError("cannot write '" + path.string() + "'");
    std::fputs("x,y,value\n", f);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double x = window.x0 + (window.x1 - window.x0) * i / (nx - 1);
            const double y = window.y0 + (window.y1 - window.y0) * j / (ny - 1);
            const auto v = value({x, y});
            if (v) std::fprintf(f, "%.17g,%.17g,%.17g\n", x, y, *v);
            else std::fprintf(f, "%.17g,%.17g,\n", x, y);
        }
    if (std::fclose(f) != 0) throw InputError("write to '" + path.string() + "' failed");
}

}  // namespace robincap
