#include "robincap/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include <omp.h>

namespace robincap::kernels {

namespace {

constexpr int kChunks = 64;

std::pair<std::size_t, std::size_t> chunk_range(std::size_t n, int c) {
    return {n * c / kChunks, n * (c + 1) / kChunks};
}

void stiffness_chunk(const Mesh& mesh, int c, Triplets& out) {
    const auto [b, e] = chunk_range(mesh.triangles.size(), c);
    out.reserve(9 * (e - b));
    for (std::size_t t = b; t < e; ++t) {
        const auto k = local_stiffness(mesh, static_cast<int>(t));
        const auto& tri = mesh.triangles[t];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out.emplace_back(tri[i], tri[j], k[3 * i + j]);
    }
}

double energy_chunk(const Mesh& mesh, const std::vector<double>& u, int c) {
    const auto [b, e] = chunk_range(mesh.triangles.size(), c);
    double s = 0.0;
    for (std::size_t t = b; t < e; ++t) {
        const auto k = local_stiffness(mesh, static_cast<int>(t));
        const auto& tri = mesh.triangles[t];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += u[tri[i]] * k[3 * i + j] * u[tri[j]];
    }
    return s;
}

double sample_one(const Mesh& mesh, const std::vector<double>& u, Complex z) {
    const int t = mesh.locate(z);
    if (t < 0) return std::numeric_limits<double>::quiet_NaN();
    const auto l = mesh.barycentric(t, z);
    const auto& tri = mesh.triangles[t];
    return l[0] * u[tri[0]] + l[1] * u[tri[1]] + l[2] * u[tri[2]];
}

Triplets concat(std::vector<Triplets>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    Triplets out;
    out.reserve(n);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("ROBINCAP_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

std::array<double, 9> local_stiffness(const Mesh& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    const Complex p[3] = {mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]};
    // edge opposite vertex i
    Complex e[3];
    for (int i = 0; i < 3; ++i) e[i] = p[(i + 2) % 3] - p[(i + 1) % 3];
    const double area2 = (p[1] - p[0]).real() * (p[2] - p[0]).imag() - (p[1] - p[0]).imag() * (p[2] - p[0]).real();
    std::array<double, 9> k{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            k[3 * i + j] = (e[i].real() * e[j].real() + e[i].imag() * e[j].imag()) / (2.0 * area2);
    return k;
}

Triplets stiffness_serial(const Mesh& mesh) {
    std::vector<Triplets> parts(kChunks);
    for (int c = 0; c < kChunks; ++c) stiffness_chunk(mesh, c, parts[c]);
    return concat(parts);
}

Triplets stiffness_parallel(const Mesh& mesh) {
    std::vector<Triplets> parts(kChunks);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int c = 0; c < kChunks; ++c) stiffness_chunk(mesh, c, parts[c]);
    return concat(parts);
}

double energy_serial(const Mesh& mesh, const std::vector<double>& u) {
    double s = 0.0;
    for (int c = 0; c < kChunks; ++c) s += energy_chunk(mesh, u, c);
    return s;
}

double energy_parallel(const Mesh& mesh, const std::vector<double>& u) {
    std::array<double, kChunks> part{};
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int c = 0; c < kChunks; ++c) part[c] = energy_chunk(mesh, u, c);
    double s = 0.0;
    for (double v : part) s += v;
    return s;
}

std::vector<double> sample_serial(const Mesh& mesh, const std::vector<double>& u, const std::vector<Complex>& pts) {
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = sample_one(mesh, u, pts[i]);
    return out;
}

std::vector<double> sample_parallel(const Mesh& mesh, const std::vector<double>& u, const std::vector<Complex>& pts) {
    std::vector<double> out(pts.size());
    const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long i = 0; i < n; ++i) out[i] = sample_one(mesh, u, pts[i]);
    return out;
}

}  // namespace robincap::kernels
