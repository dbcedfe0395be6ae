#pragma once

// All solutions of f(z) = w0 in a domain, with multiplicities.
//
// Enumeration is complete only for rational maps: the equation becomes the
// polynomial N(z) - w0 D(z) = 0, solved through its companion matrix and
// polished by Newton steps. Other maps are refused.

#include <vector>

#include "robincap/expr.hpp"
#include "robincap/geometry.hpp"

namespace robincap {

struct Preimage {
    Complex z;
    int multiplicity = 1;
};

/// Roots of a polynomial (coefficients in increasing degree), each listed once
/// with its multiplicity.
std::vector<Preimage> polynomial_roots(const Polynomial& p);

/// Solutions of f(z) = w0 inside the open domain, ordered by real then imaginary part.
std::vector<Preimage> preimages(const HolomorphicMap& f, Complex w0, const DomainSpec& region);

/// Order of the zero of f - f(z) at z: the index of the first nonzero Taylor
/// coefficient c_n, n >= 1 (relative threshold `tol`).
int local_order(const HolomorphicMap& f, Complex z, int max_order = 12, double tol = 1e-9);

}  // namespace robincap
