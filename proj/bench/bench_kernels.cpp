// Serial reference vs OpenMP element kernels on disk meshes of decreasing h.

#include <cmath>
#include <map>
#include <random>

#include <benchmark/benchmark.h>

#include "robincap/domain_io.hpp"
#include "robincap/kernels.hpp"
#include "robincap/mesh.hpp"

using namespace robincap;

namespace {

const Mesh& disk_mesh(int per_unit) {
    static std::map<int, Mesh> cache;
    auto it = cache.find(per_unit);
    if (it == cache.end()) it = cache.emplace(per_unit, mesh_domain(resolve_domain("disk"), 1.0 / per_unit)).first;
    return it->second;
}

std::vector<double> field(const Mesh& m) {
    std::vector<double> u(m.vertices.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::sin(3 * m.vertices[i].real()) * m.vertices[i].imag();
    return u;
}

std::vector<Complex> points(int n) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-0.99, 0.99);
    std::vector<Complex> p;
    while (static_cast<int>(p.size()) < n) {
        const Complex z(d(rng), d(rng));
        if (std::abs(z) < 0.99) p.push_back(z);
    }
    return p;
}

template <auto Kernel>
void stiffness(benchmark::State& state) {
    const Mesh& m = disk_mesh(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
    state.counters["triangles"] = static_cast<double>(m.triangles.size());
}

template <auto Kernel>
void energy(benchmark::State& state) {
    const Mesh& m = disk_mesh(static_cast<int>(state.range(0)));
    const auto u = field(m);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, u));
}

template <auto Kernel>
void sample(benchmark::State& state) {
    const Mesh& m = disk_mesh(static_cast<int>(state.range(0)));
    const auto u = field(m);
    const auto p = points(2000);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, u, p));
}

}  // namespace

BENCHMARK(stiffness<kernels::stiffness_serial>)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(stiffness<kernels::stiffness_parallel>)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(energy<kernels::energy_serial>)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(energy<kernels::energy_parallel>)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(sample<kernels::sample_serial>)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(sample<kernels::sample_parallel>)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
