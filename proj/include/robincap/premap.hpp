#pragma once

// Conformal maps from the unbounded model domains onto the unit disk.
//
//   upper half-plane   (z - i) / (z + i)
//   right half-plane   (z - 1) / (z + 1)
//   quadrant           z^2, then the upper half-plane map
//   strip              e^z, then the quadrant map

#include "robincap/geometry.hpp"

namespace robincap {

class DiskPremap {
public:
    explicit DiskPremap(DomainKind kind);

    DomainKind kind() const { return kind_; }
    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;
    Complex inverse(Complex w) const;

    /// Angle on the unit circle of the image of edge point s (in [0, 2 pi]).
    double boundary_angle(int edge, double s) const;

    /// The disk with gamma replaced by its image arcs.
    MarkedDomain image(const MarkedDomain& md) const;

private:
    DomainKind kind_;
};

}  // namespace robincap
