#pragma once

// Generalized condensers: gamma at potential 0, disk plates E(z_k, psi_k(r))
// at potentials t_k. The capacity is the Dirichlet energy of the potential.

#include <filesystem>
#include <functional>
#include <memory>
#include <vector>

#include "robincap/fem.hpp"
#include "robincap/robin.hpp"

namespace robincap {

struct PlateSpec {
    ExtendedPoint center;
    double mu = 1.0;
    double nu = 1.0;
    double potential = 1.0;

    /// psi(r) = mu * r^nu.
    double radius(double r) const;
};

struct Condenser {
    MarkedDomain marked;
    std::vector<PlateSpec> plates;
    double r = 0.1;
    /// When set, plate k is the image of its disk under this map (an almost
    /// disk), approximated by a polygon with vertex spacing at most h/2.
    std::function<Complex(Complex)> shape;
};

struct CondenserOptions {
    double h = 0.02;
    bool parallel = true;
};

struct CondenserResult {
    double capacity = 0.0;
    std::shared_ptr<const HarmonicField> potential;
    double r = 0.0;
    double h = 0.0;
};

CondenserResult condenser_capacity(const Condenser& c, const CondenserOptions& options = {});

/// Robin radii r(B, gamma, z_k) and the matrix g_B(z_k, z_l, gamma).
struct RobinData {
    std::vector<double> radii;
    std::vector<std::vector<double>> green;  // diagonal unused
};

/// Robin data from the solver.
RobinData robin_data(const MarkedDomain& md, const std::vector<Complex>& points, const RobinOptions& options = {});
/// Robin data of the unit disk with gamma = the whole circle, from the closed form.
RobinData disk_robin_data(const std::vector<Complex>& points);

/// The two-term expansion of cap C(r) for small r.
double asymptotic_capacity(const std::vector<PlateSpec>& plates, const RobinData& data, double r);

struct ResidualRow {
    double r;
    double direct;
    double asymptotic;
    double residual;
    double residual_times_log2r;
};

struct ResidualStudy {
    std::vector<ResidualRow> rows;
    /// |residual * log^2 r| strictly decreasing, or every residual negligible
    /// (at most 1e-2 of the direct capacity).
    bool passed = false;
};

/// Smallest plate scale the residual study accepts.
inline constexpr double kSmallestStudyRadius = 1e-5;

ResidualStudy residual_study(const Condenser& c, const RobinData& data, const std::vector<double>& r_list,
                             const CondenserOptions& options = {});

/// CSV columns: r, direct_cap, asym_cap, residual, residual_times_log2r.
void write_residual_csv(const ResidualStudy& study, const std::filesystem::path& path);

}  // namespace robincap
