#include "robincap/bem.hpp"

#include <array>
#include <cmath>

#include "robincap/kernels.hpp"

namespace robincap {

namespace {

// 8-point Gauss-Legendre on [-1, 1]
constexpr std::array<double, 8> kNodes = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                          -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                          0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kWeights = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                            0.2223810344533745, 0.1012285362903763};

// integral of log|u| du from u0 to u1
double log_abs_integral(double u0, double u1) {
    const auto F = [](double u) { return u == 0.0 ? 0.0 : u * std::log(std::abs(u)) - u; };
    return F(u1) - F(u0);
}

double theta_span(const ArcSegment& piece) { return piece.is_closed_circle() ? 2 * kPi : kPi; }

}  // namespace

ExteriorBem::ExteriorBem(CompactSet set, int panels_per_piece) : set_(std::move(set)) {
    if (set_.pieces.empty()) throw InputError("compact set is empty (polar)");
    if (panels_per_piece < 4) throw InputError("too few boundary panels");
    for (int k = 0; k < static_cast<int>(set_.pieces.size()); ++k) {
        if (!(set_.pieces[k].length() > 0)) throw InputError("compact set contains a degenerate piece");
        const double span = theta_span(set_.pieces[k]);
        for (int j = 0; j < panels_per_piece; ++j)
            panels_.push_back({k, span * j / panels_per_piece, span * (j + 1) / panels_per_piece});
    }
    const int n = static_cast<int>(panels_.size());
    for (const auto& p : panels_) {
        colloc_theta_.push_back(0.5 * (p.a + p.b));
        colloc_.push_back(point(p.piece, colloc_theta_.back()));
    }

    // [A 1; w^T 0] with A_ij = integral of log|x_i - X| over panel j
    Eigen::MatrixXd M(n + 1, n + 1);
#pragma omp parallel for schedule(static) num_threads(kernels::worker_count())
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            M(i, j) = i == j ? self_integral(panels_[j], colloc_theta_[i]) : panel_integral(panels_[j], colloc_[i]);
        M(i, n) = 1.0;
    }
    for (int j = 0; j < n; ++j) M(n, j) = panels_[j].b - panels_[j].a;
    M(n, n) = 0.0;
    lu_ = M.partialPivLu();

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs[n] = 1.0;
    const Eigen::VectorXd x = solve(rhs);
    equilibrium_.assign(x.data(), x.data() + n);
    robin_constant_ = -x[n];
}

Eigen::VectorXd ExteriorBem::solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd x = lu_.solve(rhs);
    // one step of iterative refinement
    const Eigen::VectorXd r = rhs - lu_.reconstructedMatrix() * x;
    x += lu_.solve(r);
    return x;
}

Complex ExteriorBem::point(int piece, double theta) const {
    const auto& arc = set_.pieces[piece];
    if (arc.is_closed_circle()) return arc.point(arc.param_lo() + theta);
    const double lo = arc.param_lo(), hi = arc.param_hi();
    return arc.point(0.5 * (lo + hi) - 0.5 * (hi - lo) * std::cos(theta));
}

double ExteriorBem::panel_integral(const Panel& p, Complex x, int depth) const {
    const Complex za = point(p.piece, p.a), zb = point(p.piece, p.b);
    const Complex zm = point(p.piece, 0.5 * (p.a + p.b));
    const double len = std::abs(zm - za) + std::abs(zb - zm);
    const double d = std::abs(x - zm);
    if (depth < 40 && d < 1.5 * len) {
        const double m = 0.5 * (p.a + p.b);
        return panel_integral({p.piece, p.a, m}, x, depth + 1) + panel_integral({p.piece, m, p.b}, x, depth + 1);
    }
    const double half = 0.5 * (p.b - p.a), mid = 0.5 * (p.a + p.b);
    double s = 0.0;
    for (int q = 0; q < 8; ++q) {
        const double r = std::abs(x - point(p.piece, mid + half * kNodes[q]));
        s += kWeights[q] * std::log(std::max(r, 1e-300));
    }
    return s * half;
}

double ExteriorBem::self_integral(const Panel& p, double ti) const {
    // log|X(ti) - X(t)| = log|t - ti| + smooth remainder
    const Complex xi = point(p.piece, ti);
    double s = log_abs_integral(p.a - ti, p.b - ti);
    for (const auto& [lo, hi] : {std::pair{p.a, ti}, std::pair{ti, p.b}}) {
        const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        double part = 0.0;
        for (int q = 0; q < 8; ++q) {
            const double t = mid + half * kNodes[q];
            part += kWeights[q] * std::log(std::abs(xi - point(p.piece, t)) / std::abs(t - ti));
        }
        s += part * half;
    }
    return s;
}

double ExteriorBem::potential(const std::vector<double>& mu, Complex z) const {
    double u = 0.0;
    for (std::size_t j = 0; j < panels_.size(); ++j) u += mu[j] * panel_integral(panels_[j], z);
    return u;
}

double ExteriorBem::distance(Complex z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& p : set_.pieces) d = std::min(d, p.distance(z));
    return d;
}

double ExteriorBem::green_infinity(Complex z) const {
    if (distance(z) == 0.0) return 0.0;
    return potential(equilibrium_, z) - robin_constant_;
}

ExteriorBem::PoleSolution ExteriorBem::solve_pole(Complex z0) const {
    if (!(distance(z0) > 0)) throw InputError("pole lies on the compact set");
    const int n = static_cast<int>(panels_.size());
    Eigen::VectorXd rhs(n + 1);
    for (int i = 0; i < n; ++i) rhs[i] = std::log(std::abs(colloc_[i] - z0));
    rhs[n] = 1.0;
    const Eigen::VectorXd x = solve(rhs);
    PoleSolution sol;
    sol.pole = z0;
    sol.density.assign(x.data(), x.data() + n);
    sol.constant = x[n];
    sol.radius = std::exp(potential(sol.density, z0) + sol.constant);
    return sol;
}

double ExteriorBem::green(const PoleSolution& sol, Complex z) const {
    if (distance(z) == 0.0) return 0.0;
    return -std::log(std::abs(z - sol.pole)) + potential(sol.density, z) + sol.constant;
}

}  // namespace robincap
