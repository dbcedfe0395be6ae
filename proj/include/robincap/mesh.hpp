#pragma once

#include <array>
#include <vector>

#include "robincap/geometry.hpp"

namespace robincap {

/// Local size request: size `size` within distance `radius` of `center`,
/// growing linearly with slope `growth` outside it.
struct SizeSource {
    Complex center;
    double radius = 0.0;
    double size = 0.0;
    double growth = 0.2;
};

/// Graded source around a point: six halvings below h.
SizeSource point_source(Complex z, double h);
/// Source around a circular plate of radius rho; the circle gets
/// max(32, 1.28/h) nodes.
SizeSource plate_source(Complex center, double rho, double h);

struct MeshOptions {
    double h = 0.05;
    std::vector<SizeSource> sources;
    /// Points that become mesh vertices (poles).
    std::vector<Complex> forced_points;
    /// Extra holes (condenser plates); plate k is tagged k + 1.
    std::vector<BoundaryLoop> plates;
};

inline constexpr int kInteriorTag = -2;
inline constexpr int kFreeTag = -1;
inline constexpr int kGammaTag = 0;

struct BoundaryEdge {
    int a, b;      // vertex indices, domain on the left of a -> b
    int tag;       // kFreeTag, kGammaTag, or plate index + 1
    int loop;
    int arc;
};

struct Mesh {
    std::vector<Complex> vertices;
    std::vector<std::array<int, 3>> triangles;  // counter-clockwise
    std::vector<BoundaryEdge> boundary;
    /// Per vertex: kInteriorTag, kFreeTag, kGammaTag, or a plate tag. Junction
    /// vertices carry the Dirichlet tag.
    std::vector<int> vertex_tag;
    double h = 0.0;
    std::vector<SizeSource> sources;

    /// Index of a triangle containing z (with a small tolerance), or -1.
    int locate(Complex z) const;
    /// Barycentric coordinates of z in triangle t.
    std::array<double, 3> barycentric(int t, Complex z) const;
    double max_edge_length() const;
    double area() const;
    int nearest_vertex(Complex z) const;

    void build_locator();

private:
    double gx0_ = 0, gy0_ = 0, cell_ = 1;
    int gnx_ = 0, gny_ = 0;
    std::vector<std::vector<int>> buckets_;
};

/// Deterministic graded Delaunay mesh of a bounded marked domain.
Mesh mesh_domain(const MarkedDomain& md, const MeshOptions& options);
/// Convenience form: grading and a forced vertex at every refine point.
Mesh mesh_domain(const MarkedDomain& md, double h, const std::vector<Complex>& refine_at = {});

/// The raw triangulation kernel, exposed for tests: Delaunay triangulation of
/// the points (counter-clockwise triangles, convex hull).
std::vector<std::array<int, 3>> delaunay(const std::vector<Complex>& points);

}  // namespace robincap
