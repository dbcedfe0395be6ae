#pragma once

// Element loops of the P1 discretization. Every kernel has a serial reference
// and an OpenMP version; both split the work into the same fixed chunks and
// combine partial results in chunk order, so their output is identical for any
// thread count.

#include <vector>

#include <Eigen/SparseCore>

#include "robincap/mesh.hpp"

namespace robincap::kernels {

using Triplets = std::vector<Eigen::Triplet<double>>;

/// Local P1 stiffness of triangle t (3x3, row-major).
std::array<double, 9> local_stiffness(const Mesh& mesh, int t);

Triplets stiffness_serial(const Mesh& mesh);
Triplets stiffness_parallel(const Mesh& mesh);

/// Sum over triangles of |grad u|^2 * area.
double energy_serial(const Mesh& mesh, const std::vector<double>& u);
double energy_parallel(const Mesh& mesh, const std::vector<double>& u);

/// Barycentric interpolation at many points; NaN where a point is outside.
std::vector<double> sample_serial(const Mesh& mesh, const std::vector<double>& u, const std::vector<Complex>& pts);
std::vector<double> sample_parallel(const Mesh& mesh, const std::vector<double>& u, const std::vector<Complex>& pts);

/// Number of threads OpenMP kernels use (ROBINCAP_THREADS overrides).
int worker_count();

}  // namespace robincap::kernels
