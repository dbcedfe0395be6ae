#include "robincap/preimage.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace robincap {

namespace {

Complex horner(const Polynomial& p, Complex z) {
    Complex s{};
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * z + *it;
    return s;
}

Polynomial derivative(const Polynomial& p) {
    Polynomial d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<double>(k) * p[k]);
    return d;
}

Polynomial trimmed(Polynomial p) {
    double scale = 0.0;
    for (auto c : p) scale = std::max(scale, std::abs(c));
    while (!p.empty() && std::abs(p.back()) <= 1e-14 * scale) p.pop_back();
    return p;
}

}  // namespace

std::vector<Preimage> polynomial_roots(const Polynomial& input) {
    const Polynomial p = trimmed(input);
    if (p.empty()) throw InputError("the zero polynomial has no isolated roots");
    const int n = static_cast<int>(p.size()) - 1;
    if (n == 0) return {};

    // companion matrix of the monic polynomial
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -p[i] / p[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    if (es.info() != Eigen::Success) throw NumericError("companion eigenvalue solve failed");
    std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);

    // a root of multiplicity m spreads into a cluster of radius ~ eps^(1/m)
    double scale = 1.0;
    for (auto r : roots) scale = std::max(scale, std::abs(r));
    const double cluster = 1e-4 * scale;
    std::vector<Preimage> out;
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        Complex sum = roots[i];
        int m = 1;
        used[i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (!used[j] && std::abs(roots[j] - roots[i]) < cluster) {
                used[j] = true;
                sum += roots[j];
                ++m;
            }
        }
        Complex z = sum / static_cast<double>(m);
        // Newton on the (m-1)-th derivative, where the root is simple
        Polynomial q = p;
        for (int k = 1; k < m; ++k) q = derivative(q);
        const Polynomial dq = derivative(q);
        for (int it = 0; it < 8; ++it) {
            const Complex d = horner(dq, z);
            if (std::abs(d) == 0) break;
            const Complex step = horner(q, z) / d;
            z -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
        }
        out.push_back({z, m});
    }
    return out;
}

std::vector<Preimage> preimages(const HolomorphicMap& f, Complex w0, const DomainSpec& region) {
    const auto& rf = f.rational();
    if (!rf)
        throw InputError("preimage enumeration is complete only for rational maps; refusing '" + f.source() + "'");
    const auto& num = rf->numerator;
    const auto& den = rf->denominator;
    Polynomial p(std::max(num.size(), den.size()), Complex{});
    for (std::size_t k = 0; k < num.size(); ++k) p[k] += num[k];
    for (std::size_t k = 0; k < den.size(); ++k) p[k] -= w0 * den[k];
    if (trimmed(p).empty()) throw InputError("the map is constant and equal to w0");

    std::vector<Preimage> out;
    for (const auto& r : polynomial_roots(p)) {
        if (!region.contains(r.z)) continue;
        // a common zero of numerator and denominator is not a solution
        if (std::abs(horner(den, r.z)) < 1e-12 * std::max(1.0, std::abs(horner(num, r.z)))) continue;
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](const Preimage& a, const Preimage& b) {
        return a.z.real() != b.z.real() ? a.z.real() < b.z.real() : a.z.imag() < b.z.imag();
    });
    return out;
}

int local_order(const HolomorphicMap& f, Complex z, int max_order, double tol) {
    const auto c = f.taylor(z, max_order);
    double scale = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) scale = std::max(scale, std::abs(c[k]));
    for (std::size_t k = 1; k < c.size(); ++k)
        if (std::abs(c[k]) > tol * std::max(scale, 1e-300)) return static_cast<int>(k);
    throw NumericError("map is locally constant to order " + std::to_string(max_order));
}

}  // namespace robincap
