#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "varpert/anharmonic.hpp"
#include "varpert/ho_matrix.hpp"
#include "varpert/rkf45.hpp"

namespace varpert {

struct ShootingConfig {
    double x_max = 0.0;        ///< integration half-width in A; <= 0 picks it from the level's energy scale
    double abs_tol = 1e-11;    ///< local RKF45 tolerance, must lie in (0, 1e-6]
    double energy_tol = 1e-10; ///< final bracket width in eV
    int max_bisections = 200;

    void validate() const {
        if (!(abs_tol > 0.0 && abs_tol <= 1e-6))
            throw DomainError("shooting: abs_tol must lie in (0, 1e-6]");
        if (!(energy_tol > 0.0)) throw DomainError("shooting: energy_tol must be positive");
        if (max_bisections < 1) throw DomainError("shooting: max_bisections must be positive");
    }
};

/// Outer turning point of k x^2 + b x^4 = energy.
inline double classical_turning_point(const AnharmonicSpec& spec, double energy) {
    const double k = spec.stiffness_k, b = spec.quartic_b;
    if (energy <= 0.0) return 0.0;
    if (b == 0.0) return std::sqrt(energy / k);
    return std::sqrt((-k + std::sqrt(k * k + 4.0 * b * energy)) / (2.0 * b));
}

/// Default half-width. The wall sits at least 25 hbar w above the level's variational
/// energy, and far enough out that the WKB decay exponent int sqrt((V - E)/kappa) dx
/// past the turning point reaches 36. A steep quartic wall needs the second condition.
inline double default_x_max(const AnharmonicSpec& spec, int n) {
    const double guess = energy_variational(spec, n).e_total;
    const double floor = classical_turning_point(spec, guess + 25.0 * hbar_omega(spec));
    const double turning = classical_turning_point(spec, guess);
    auto decay = [&](double x) {
        const double x2 = x * x;
        return std::sqrt(std::max(0.0, spec.stiffness_k * x2 + spec.quartic_b * x2 * x2 - guess) / spec.kappa());
    };
    const double dx = 1e-3 * turning;
    double x = turning, action = 0.0;
    while (action < 36.0) {
        action += 0.5 * dx * (decay(x) + decay(x + dx));
        x += dx;
    }
    return std::max(floor, x);
}

namespace detail {

/// Sign changes of psi on (0, x_max] for -kappa psi'' + V psi = E psi, starting
/// from the parity-adapted initial condition at the origin.
inline int count_nodes(const AnharmonicSpec& spec, bool odd, double energy, double x_max,
                       const Rkf45Options& opt) {
    const double kappa = spec.kappa();
    auto rhs = [&](double x, const std::array<double, 2>& y) {
        const double x2 = x * x;
        const double v = spec.stiffness_k * x2 + spec.quartic_b * x2 * x2;
        return std::array<double, 2>{y[1], (v - energy) / kappa * y[0]};
    };
    std::array<double, 2> y = odd ? std::array<double, 2>{0.0, 1.0} : std::array<double, 2>{1.0, 0.0};
    const double turning = classical_turning_point(spec, energy);

    int nodes = 0;
    double last_sign = 1.0;  // psi starts (or immediately becomes) positive
    integrate_rkf45<2>(rhs, 0.0, y, x_max, opt, [&](double x, const std::array<double, 2>& s) {
        if (s[0] != 0.0) {
            const double sign = s[0] > 0.0 ? 1.0 : -1.0;
            if (sign != last_sign) ++nodes;
            last_sign = sign;
        }
        // Past the wall with psi and psi' of equal sign the solution runs away: no more nodes.
        return !(x > turning && s[0] * s[1] > 0.0);
    });
    return nodes;
}

} // namespace detail

/// n-th eigenvalue of -kappa psi'' + (k x^2 + b x^4) psi = E psi by shooting.
/// Parity fixes the initial condition at x = 0 (psi'(0) = 0 for even n, psi(0) = 0
/// for odd n); the solution is integrated outward with adaptive RKF45 and the
/// energy is bisected on the node count, which steps from n/2 to n/2 + 1 as E
/// crosses the eigenvalue (equivalently psi(x_max) changes sign).
inline double shoot_eigenvalue(const AnharmonicSpec& spec, int n, const ShootingConfig& cfg = {}) {
    detail::require_level(n);
    cfg.validate();
    const bool odd = n % 2 == 1;
    const int target = n / 2;
    const double hw = hbar_omega(spec);
    const double x_max = cfg.x_max > 0.0 ? cfg.x_max : default_x_max(spec, n);

    Rkf45Options opt;
    opt.tolerance = cfg.abs_tol;
    opt.initial_step = 1e-3 * x_max;
    auto above = [&](double e) { return detail::count_nodes(spec, odd, e, x_max, opt) > target; };

    // b x^4 >= 0 puts E_n above the harmonic level hbar w (n + 1/2).
    double lo = hw * (n + 0.25);
    if (above(lo))
        throw ConvergenceError("shoot_eigenvalue", "lower bracket E=" + std::to_string(lo) +
                                                       " already has too many nodes for n=" +
                                                       std::to_string(n));
    double hi = energy_variational(spec, n).e_total + hw;
    for (int i = 0; !above(hi); ++i) {
        if (i > 60)
            throw ConvergenceError("shoot_eigenvalue", "no upper bracket for n=" + std::to_string(n) +
                                                           " up to E=" + std::to_string(hi));
        hi += (hi - lo);
    }

    for (int i = 0; hi - lo > cfg.energy_tol; ++i) {
        if (i >= cfg.max_bisections)
            throw ConvergenceError("shoot_eigenvalue", "bisection budget exhausted, bracket [" +
                                                           std::to_string(lo) + ", " +
                                                           std::to_string(hi) + "]");
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Lowest `n_levels` eigenvalues of the truncated Hamiltonian matrix in the
/// oscillator basis with quantum `basis_u`, ascending.
inline std::vector<double> diag_eigenvalues(const AnharmonicSpec& spec, std::size_t dim, double basis_u,
                                            std::size_t n_levels) {
    if (dim < n_levels + 20)
        throw DomainError("diag_eigenvalues: dim must be at least n_levels + 20");
    const OscBasis basis(basis_u, spec.kappa());
    const BandMatrix h = build_hamiltonian(spec, basis, dim);

    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < std::min(dim, i + h.half_bandwidth() + 1); ++j)
            dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                dense(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = h.entry(i, j);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("diag_eigenvalues", "symmetric eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + n_levels};
}

} // namespace varpert
