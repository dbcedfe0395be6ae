#pragma once

// Mixed Dirichlet / Neumann Laplace problems with P1 elements.

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "robincap/mesh.hpp"

namespace robincap {

struct BoundaryData {
    /// Value at a Dirichlet vertex (tag >= 0: gamma or a plate).
    std::function<double(Complex z, int tag)> dirichlet;
    /// Outward normal derivative on free edges; empty means zero flux.
    std::function<double(Complex z, Complex outward_normal)> flux;
};

struct SolveStats {
    double relative_residual = 0.0;
    bool used_iterative = false;
    int dirichlet_nodes = 0;
    int free_nodes = 0;
};

class HarmonicField {
public:
    HarmonicField(std::shared_ptr<const Mesh> mesh, std::vector<double> values, SolveStats stats = {});

    const Mesh& mesh() const { return *mesh_; }
    std::shared_ptr<const Mesh> mesh_ptr() const { return mesh_; }
    const std::vector<double>& values() const { return values_; }
    const SolveStats& stats() const { return stats_; }

    /// Barycentric interpolation. Points just outside the polygonal mesh
    /// boundary (within one element) are extrapolated from the nearest element.
    double evaluate(Complex z) const;
    std::optional<double> try_evaluate(Complex z) const;

private:
    std::shared_ptr<const Mesh> mesh_;
    std::vector<double> values_;
    SolveStats stats_;
};

struct SolveOptions {
    bool parallel = true;
    double tolerance = 1e-10;
};

HarmonicField solve_mixed(std::shared_ptr<const Mesh> mesh, const BoundaryData& data, const SolveOptions& options = {});

double dirichlet_energy(const HarmonicField& field, bool parallel = true);

/// Flat binary dump: "RCFD", u32 version, u32 vertex count, u32 triangle
/// count, f64 x/y pairs, i32 triangle triples, i32 vertex tags, f64 values;
/// all little-endian.
void write_field_binary(const HarmonicField& field, const std::filesystem::path& path);
HarmonicField read_field_binary(const std::filesystem::path& path);

/// CSV grid export: header `x,y,value`, one row per grid point in row-major
/// order (y outer), empty value where `value` returns nothing.
void write_grid_csv(const std::filesystem::path& path, Complex lo, Complex hi, int nx, int ny,
                    const std::function<std::optional<double>(Complex)>& value);

}  // namespace robincap
