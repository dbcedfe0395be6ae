#include "robincap/fem.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "robincap/kernels.hpp"

namespace robincap {

static_assert(std::endian::native == std::endian::little, "binary field dumps assume a little-endian host");

HarmonicField::HarmonicField(std::shared_ptr<const Mesh> mesh, std::vector<double> values, SolveStats stats)
    : mesh_(std::move(mesh)), values_(std::move(values)), stats_(stats) {
    if (!mesh_ || values_.size() != mesh_->vertices.size())
        throw InputError("field values do not match the mesh");
}

std::optional<double> HarmonicField::try_evaluate(Complex z) const {
    const Mesh& m = *mesh_;
    int t = m.locate(z);
    if (t < 0) {
        // just outside a curved boundary: extrapolate from the nearest boundary element
        const int v = m.nearest_vertex(z);
        if (v < 0 || std::abs(m.vertices[v] - z) > 2.0 * m.h) return std::nullopt;
        double best = -std::numeric_limits<double>::infinity();
        for (int s = 0; s < static_cast<int>(m.triangles.size()); ++s) {
            const auto& tri = m.triangles[s];
            if (tri[0] != v && tri[1] != v && tri[2] != v) continue;
            const auto l = m.barycentric(s, z);
            const double mn = std::min({l[0], l[1], l[2]});
            if (mn > best) {
                best = mn;
                t = s;
            }
        }
        if (t < 0) return std::nullopt;
    }
    const auto l = m.barycentric(t, z);
    const auto& tri = m.triangles[t];
    return l[0] * values_[tri[0]] + l[1] * values_[tri[1]] + l[2] * values_[tri[2]];
}

double HarmonicField::evaluate(Complex z) const {
    const auto v = try_evaluate(z);
    if (!v) throw InputError("evaluation point lies outside the meshed domain");
    return *v;
}

HarmonicField solve_mixed(std::shared_ptr<const Mesh> mesh, const BoundaryData& data, const SolveOptions& options) {
    const Mesh& m = *mesh;
    const int n = static_cast<int>(m.vertices.size());
    std::vector<int> index(n, -1);
    std::vector<double> u(n, 0.0);
    int nfree = 0, nfixed = 0;
    for (int v = 0; v < n; ++v) {
        if (m.vertex_tag[v] >= 0) {
            if (!data.dirichlet) throw InputError("Dirichlet data missing");
            u[v] = data.dirichlet(m.vertices[v], m.vertex_tag[v]);
            ++nfixed;
        } else {
            index[v] = nfree++;
        }
    }
    if (nfixed == 0) throw InputError("no Dirichlet nodes: the mixed problem is singular (empty gamma)");

    // load vector: natural boundary term on free edges (two-point Gauss)
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nfree);
    if (data.flux) {
        const double g = 0.5 / std::sqrt(3.0);
        for (const auto& e : m.boundary) {
            if (e.tag != kFreeTag) continue;
            const Complex a = m.vertices[e.a], b = m.vertices[e.b];
            const double len = std::abs(b - a);
            const Complex normal = (b - a) * Complex(0.0, -1.0) / len;
            for (double s : {0.5 - g, 0.5 + g}) {
                const double q = data.flux(a + s * (b - a), normal) * 0.5 * len;
                if (index[e.a] >= 0) rhs[index[e.a]] += q * (1.0 - s);
                if (index[e.b] >= 0) rhs[index[e.b]] += q * s;
            }
        }
    }

    const auto trip = options.parallel ? kernels::stiffness_parallel(m) : kernels::stiffness_serial(m);
    std::vector<Eigen::Triplet<double>> reduced;
    reduced.reserve(trip.size());
    for (const auto& t : trip) {
        const int i = index[t.row()], j = index[t.col()];
        if (i < 0) continue;
        if (j >= 0) reduced.emplace_back(i, j, t.value());
        else rhs[i] -= t.value() * u[t.col()];
    }
    SolveStats stats;
    stats.dirichlet_nodes = nfixed;
    stats.free_nodes = nfree;
    if (nfree > 0) {
        Eigen::SparseMatrix<double> K(nfree, nfree);
        K.setFromTriplets(reduced.begin(), reduced.end());
        Eigen::VectorXd x;
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(K);
        const double bnorm = std::max(rhs.norm(), 1e-300);
        if (ldlt.info() == Eigen::Success) {
            x = ldlt.solve(rhs);
            stats.relative_residual = (K * x - rhs).norm() / bnorm;
        }
        if (ldlt.info() != Eigen::Success || !(stats.relative_residual <= options.tolerance)) {
            Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg(K);
            cg.setTolerance(1e-12);
            cg.setMaxIterations(20 * nfree);
            if (ldlt.info() == Eigen::Success) x = cg.solveWithGuess(rhs, x);
            else x = cg.solve(rhs);
            stats.used_iterative = true;
            stats.relative_residual = (K * x - rhs).norm() / bnorm;
            if (!(stats.relative_residual <= options.tolerance))
                throw NumericError("linear solve did not converge (relative residual " +
                                   std::to_string(stats.relative_residual) + ")");
        }
        for (int v = 0; v < n; ++v)
            if (index[v] >= 0) u[v] = x[index[v]];
    }
    return HarmonicField(std::move(mesh), std::move(u), stats);
}

double dirichlet_energy(const HarmonicField& field, bool parallel) {
    const double e = parallel ? kernels::energy_parallel(field.mesh(), field.values())
                              : kernels::energy_serial(field.mesh(), field.values());
    return std::max(e, 0.0);
}

namespace {

template <typename T>
void put(std::ofstream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw InputError("truncated field dump");
    return v;
}

}  // namespace

void write_field_binary(const HarmonicField& field, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    const Mesh& m = field.mesh();
    out.write("RCFD", 4);
    put<std::uint32_t>(out, 1);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(m.vertices.size()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(m.triangles.size()));
    for (auto z : m.vertices) {
        put(out, z.real());
        put(out, z.imag());
    }
    for (const auto& t : m.triangles)
        for (int v : t) put<std::int32_t>(out, v);
    for (int tag : m.vertex_tag) put<std::int32_t>(out, tag);
    for (double v : field.values()) put(out, v);
    if (!out) throw InputError("write to '" + path.string() + "' failed");
}

HarmonicField read_field_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != "RCFD") throw InputError("not a field dump: bad magic");
    if (get<std::uint32_t>(in) != 1) throw InputError("unsupported field dump version");
    const auto nv = get<std::uint32_t>(in);
    const auto nt = get<std::uint32_t>(in);
    auto mesh = std::make_shared<Mesh>();
    mesh->vertices.resize(nv);
    for (auto& z : mesh->vertices) {
        const double x = get<double>(in);
        z = Complex(x, get<double>(in));
    }
    mesh->triangles.resize(nt);
    for (auto& t : mesh->triangles)
        for (int& v : t) v = get<std::int32_t>(in);
    mesh->vertex_tag.resize(nv);
    for (int& tag : mesh->vertex_tag) tag = get<std::int32_t>(in);
    std::vector<double> values(nv);
    for (double& v : values) v = get<double>(in);
    mesh->build_locator();
    return HarmonicField(std::move(mesh), std::move(values));
}

void write_grid_csv(const std::filesystem::path& path, Complex lo, Complex hi, int nx, int ny,
                    const std::function<std::optional<double>(Complex)>& value) {
    if (nx < 1 || ny < 1) throw InputError("grid dimensions must be positive");
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    if (!f) throw InputError("cannot write '" + path.string() + "'");
    std::fputs("x,y,value\n", f);
    for (int j = 0; j < ny; ++j) {
        const double y = ny == 1 ? lo.imag() : lo.imag() + (hi.imag() - lo.imag()) * j / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = nx == 1 ? lo.real() : lo.real() + (hi.real() - lo.real()) * i / (nx - 1);
            const auto v = value(Complex(x, y));
            if (v) std::fprintf(f, "%.17g,%.17g,%.17g\n", x, y, *v);
            else std::fprintf(f, "%.17g,%.17g,\n", x, y);
        }
    }
    if (std::fclose(f) != 0) throw InputError("write to '" + path.string() + "' failed");
}

}  // namespace robincap
