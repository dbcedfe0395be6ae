#include "robincap/condenser.hpp"

#include <cmath>
#include <cstdio>
#include <exception>

#include "robincap/closed_forms.hpp"
#include "robincap/kernels.hpp"

namespace robincap {

double PlateSpec::radius(double r) const { return mu * std::pow(r, nu); }

namespace {

struct PlateShape {
    BoundaryLoop loop;
    Complex center;
    double rho;  // mean radius, for grading
};

PlateShape build_plate(const Condenser& c, int k, double h) {
    const PlateSpec& p = c.plates[k];
    if (p.center.is_infinite())
        throw InputError("plates at infinity are not supported by the mesh solver");
    if (!(p.mu > 0) || !(p.nu > 0)) throw InputError("plate parameters mu and nu must be positive");
    const Complex z = p.center.value();
    const double rho = p.radius(c.r);
    if (!(rho > 0)) throw InputError("plate radius must be positive");
    const std::string name = "plate" + std::to_string(k + 1);
    if (!c.shape) return {{name, {ArcSegment::circle(z, rho)}}, z, rho};

    // polygon through images of circle points, spacing <= h/2 and >= 128 vertices
    const double est = std::abs(c.shape(z + rho) - c.shape(z - rho)) * kPi / 2;
    const int n = std::max(128, static_cast<int>(std::ceil(est / (0.5 * h))));
    std::vector<Complex> pts(n);
    for (int j = 0; j < n; ++j) pts[j] = c.shape(z + rho * std::polar(1.0, 2 * kPi * j / n));
    BoundaryLoop loop{name, {}};
    Complex centroid{};
    for (int j = 0; j < n; ++j) {
        loop.arcs.push_back(ArcSegment::segment(pts[j], pts[(j + 1) % n]));
        centroid += pts[j];
    }
    centroid /= static_cast<double>(n);
    double mean = 0.0;
    for (auto q : pts) mean += std::abs(q - centroid);
    return {loop, centroid, mean / n};
}

void check_plates(const Condenser& c, const std::vector<PlateShape>& shapes) {
    const auto& md = c.marked;
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        for (const auto& a : shapes[k].loop.arcs) {
            for (double u : {0.0, 0.5}) {
                const Complex z = a.point(a.param_lo() + u * (a.param_hi() - a.param_lo()));
                if (md.distance_to_gamma(z) <= 0 || !md.domain.contains(z)) {
                    if (md.distance_to_gamma(z) < 1e-9 || md.domain.distance_to_boundary(z) < 1e-9)
                        throw InputError("plate " + std::to_string(k + 1) + " touches the boundary");
                    throw InputError("plate " + std::to_string(k + 1) + " leaves the domain");
                }
            }
        }
        if (!c.shape) {
            const double need = shapes[k].rho;
            if (md.distance_to_gamma(shapes[k].center) <= need)
                throw InputError("plate " + std::to_string(k + 1) + " touches gamma");
            if (md.domain.distance_to_boundary(shapes[k].center) <= need)
                throw InputError("plate " + std::to_string(k + 1) + " touches the boundary");
        }
    }
    // the shape map is injective, so image plates are disjoint exactly when their disks are
    for (std::size_t i = 0; i < c.plates.size(); ++i)
        for (std::size_t j = i + 1; j < c.plates.size(); ++j) {
            const double d = std::abs(c.plates[i].center.value() - c.plates[j].center.value());
            if (d <= c.plates[i].radius(c.r) + c.plates[j].radius(c.r))
                throw InputError("plates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
        }
}

}  // namespace

CondenserResult condenser_capacity(const Condenser& c, const CondenserOptions& options) {
    if (!(options.h > 0)) throw InputError("h must be positive");
    if (!(c.r > 0 && c.r < 1)) throw InputError("condenser parameter r must lie in (0, 1)");
    if (c.plates.empty()) throw InputError("a condenser needs at least one plate");
    if (c.marked.domain.kind != DomainKind::Bounded)
        throw InputError("condenser capacity is computed on bounded domains");

    std::vector<PlateShape> shapes;
    for (int k = 0; k < static_cast<int>(c.plates.size()); ++k) shapes.push_back(build_plate(c, k, options.h));
    check_plates(c, shapes);

    MeshOptions mo;
    mo.h = options.h;
    for (const auto& s : shapes) {
        mo.plates.push_back(s.loop);
        mo.sources.push_back(plate_source(s.center, s.rho, options.h));
    }
    auto mesh = std::make_shared<Mesh>(mesh_domain(c.marked, mo));
    BoundaryData bd;
    bd.dirichlet = [&c](Complex, int tag) { return tag == kGammaTag ? 0.0 : c.plates[tag - 1].potential; };
    auto field = std::make_shared<HarmonicField>(solve_mixed(mesh, bd, {options.parallel}));
    CondenserResult out;
    out.capacity = dirichlet_energy(*field, options.parallel);
    out.potential = field;
    out.r = c.r;
    out.h = options.h;
    return out;
}

RobinData robin_data(const MarkedDomain& md, const std::vector<Complex>& points, const RobinOptions& options) {
    const std::size_t n = points.size();
    RobinData d;
    d.radii.resize(n);
    d.green.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const auto res = robin_function(md, points[k], options);
        d.radii[k] = res.radius();
        for (std::size_t l = 0; l < n; ++l)
            if (l != k) d.green[k][l] = res.green(points[l]);
    }
    // the Robin function is symmetric; average out discretization asymmetry
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) d.green[k][l] = d.green[l][k] = 0.5 * (d.green[k][l] + d.green[l][k]);
    return d;
}

RobinData disk_robin_data(const std::vector<Complex>& points) {
    const std::size_t n = points.size();
    RobinData d;
    d.green.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        if (!(std::abs(points[k]) < 1)) throw InputError("point outside the unit disk");
        d.radii.push_back(oracle::disk_radius(points[k]));
        for (std::size_t l = 0; l < n; ++l)
            if (l != k) d.green[k][l] = oracle::disk_green(points[k], points[l]);
    }
    return d;
}

double asymptotic_capacity(const std::vector<PlateSpec>& plates, const RobinData& data, double r) {
    const std::size_t n = plates.size();
    if (data.radii.size() != n || data.green.size() != n) throw InputError("Robin data do not match the plates");
    if (!(r > 0 && r < 1)) throw InputError("r must lie in (0, 1)");
    const double L = std::log(r);
    if (!(-1.0 / L < 1.0)) throw InputError("r is too large for the expansion (-1/log r >= 1)");
    double t2 = 0.0;
    for (const auto& p : plates) t2 += p.potential * p.potential;
    if (!(t2 > 0)) throw InputError("the expansion needs a nonzero potential vector");

    double first = 0.0, second = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& p = plates[k];
        if (!(p.mu > 0) || !(p.nu > 0)) throw InputError("plate parameters mu and nu must be positive");
        first += p.potential * p.potential / p.nu;
        second += p.potential * p.potential / (p.nu * p.nu) * std::log(data.radii[k] / p.mu);
        for (std::size_t l = 0; l < n; ++l)
            if (l != k) second += p.potential / p.nu * plates[l].potential / plates[l].nu * data.green[k][l];
    }
    return 2 * kPi * first * (-1.0 / L) - 2 * kPi * second / (L * L);
}

ResidualStudy residual_study(const Condenser& c, const RobinData& data, const std::vector<double>& r_list,
                             const CondenserOptions& options) {
    if (r_list.size() < 3) throw InputError("a residual study needs at least three r values");
    for (std::size_t i = 0; i < r_list.size(); ++i) {
        if (i > 0 && !(r_list[i] < r_list[i - 1])) throw InputError("r values must be strictly decreasing");
        for (const auto& p : c.plates)
            if (!p.center.is_infinite() && p.radius(r_list[i]) < kSmallestStudyRadius)
                throw InputError("plate radius below the smallest supported scale 1e-5");
    }
    const int n = static_cast<int>(r_list.size());
    ResidualStudy study;
    study.rows.resize(n);
    std::vector<std::exception_ptr> errors(n);
    // one independent solve per r value
    CondenserOptions inner = options;
    inner.parallel = false;
#pragma omp parallel for schedule(dynamic) num_threads(std::min(n, kernels::worker_count()))
    for (int i = 0; i < n; ++i) {
        try {
            Condenser ci = c;
            ci.r = r_list[i];
            const double direct = condenser_capacity(ci, inner).capacity;
            const double asym = asymptotic_capacity(c.plates, data, r_list[i]);
            const double L = std::log(r_list[i]);
            study.rows[i] = {r_list[i], direct, asym, direct - asym, (direct - asym) * L * L};
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    bool negligible = true, decreasing = true;
    for (int i = 0; i < n; ++i) {
        const auto& row = study.rows[i];
        negligible = negligible && std::abs(row.residual) <= 1e-2 * std::abs(row.direct);
        if (i > 0)
            decreasing = decreasing && std::abs(row.residual_times_log2r) < std::abs(study.rows[i - 1].residual_times_log2r);
    }
    study.passed = negligible || decreasing;
    return study;
}

void write_residual_csv(const ResidualStudy& study, const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    if (!f) throw InputError("cannot write '" + path.string() + "'");
    std::fputs("r,direct_cap,asym_cap,residual,residual_times_log2r\n", f);
    for (const auto& row : study.rows)
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g\n", row.r, row.direct, row.asymptotic, row.residual,
                     row.residual_times_log2r);
    if (std::fclose(f) != 0) throw InputError("write to '" + path.string() + "' failed");
}

}  // namespace robincap
