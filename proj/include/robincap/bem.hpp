#pragma once

// Boundary integral solver for the complement of a compact set made of
// circular arcs, segments and full circles.
//
// The unknown is a charge measure on the set. On every open piece the
// parameter is written as mid - half*cos(theta), which absorbs the inverse
// square-root endpoint behaviour, and the density per unit theta is taken
// piecewise constant on uniform theta panels. Collocation is at panel
// midpoints; the logarithmic self-interaction is integrated analytically.

#include <vector>

#include <Eigen/Dense>

#include "robincap/geometry.hpp"

namespace robincap {

struct CompactSet {
    std::vector<ArcSegment> pieces;
};

class ExteriorBem {
public:
    explicit ExteriorBem(CompactSet set, int panels_per_piece = 160);

    /// Logarithmic capacity of the set.
    double capacity() const { return std::exp(robin_constant_); }
    /// Equilibrium potential on the set: log cap.
    double robin_constant() const { return robin_constant_; }
    /// g(z, infinity) for the complement.
    double green_infinity(Complex z) const;

    struct PoleSolution {
        Complex pole;
        std::vector<double> density;
        double constant = 0.0;
        /// Robin (here: Green) radius of the complement at the pole.
        double radius = 0.0;
    };
    PoleSolution solve_pole(Complex z0) const;
    /// g(z, pole) for the complement.
    double green(const PoleSolution& sol, Complex z) const;

    /// Distance from z to the set.
    double distance(Complex z) const;
    std::size_t unknowns() const { return panels_.size(); }

private:
    struct Panel {
        int piece;
        double a, b;  // theta range
    };

    Complex point(int piece, double theta) const;
    double panel_integral(const Panel& p, Complex x, int depth = 0) const;
    double self_integral(const Panel& p, double theta_i) const;
    double potential(const std::vector<double>& mu, Complex z) const;
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

    CompactSet set_;
    std::vector<Panel> panels_;
    std::vector<Complex> colloc_;
    std::vector<double> colloc_theta_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    std::vector<double> equilibrium_;
    double robin_constant_ = 0.0;
};

}  // namespace robincap
