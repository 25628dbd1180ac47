#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "varpert/ho_matrix.hpp"
#include "varpert/model.hpp"

namespace varpert {

/// Optimized parent-Hamiltonian quantum for one level.
struct OmegaSolution {
    int n = 0;
    double hbar_Omega_n = 0.0;
    double residual = 0.0;      ///< cubic residual at the root, eV^3
    double stationarity = 0.0;  ///< d<n|H|n>/d(hbar Omega) at the root, dimensionless
};

namespace detail {

inline void require_level(int n) {
    if (n < 0) throw DomainError("quantum number must be non-negative, got " + std::to_string(n));
}

/// (2n^2 + 2n + 1) / (2n + 1)
inline double level_ratio(int n) {
    const double nn = n;
    return (2.0 * nn * nn + 2.0 * nn + 1.0) / (2.0 * nn + 1.0);
}

/// Constant term of the stationarity cubic u^3 - (hbar w)^2 u - c = 0.
inline double cubic_constant(const AnharmonicSpec& spec, int n) {
    const double kappa = spec.kappa();
    return 24.0 * spec.quartic_b * kappa * kappa * level_ratio(n);
}

inline double cubic_residual(const AnharmonicSpec& spec, int n, double u) {
    const double hw = hbar_omega(spec);
    return u * u * u - hw * hw * u - cubic_constant(spec, n);
}

} // namespace detail

/// Stationarity condition d<n_Omega|H|n_Omega>/dOmega = 0, written in u = hbar Omega_n:
///   u^3 - (hbar w)^2 u - 24 b kappa^2 (2n^2+2n+1)/(2n+1) = 0.
/// The cubic has exactly one positive root for b >= 0 and it lies in [hbar w, inf).
/// Safeguarded Newton: a Newton step is taken when it stays inside the current
/// sign bracket, bisection otherwise.
inline OmegaSolution solve_omega(const AnharmonicSpec& spec, int n) {
    detail::require_level(n);
    const double hw = hbar_omega(spec);
    const double c = detail::cubic_constant(spec, n);
    const double g = 2.0 * n + 1.0;

    OmegaSolution sol{n, hw, 0.0, 0.0};
    if (c == 0.0) return sol;

    auto f = [&](double u) { return u * u * u - hw * hw * u - c; };

    double lo = hw;  // f(hw) = -c < 0
    double hi = 1.5 * std::max(hw, std::cbrt(c));
    for (int j = 0; f(hi) <= 0.0; ++j) {
        if (j > 200) throw ConvergenceError("solve_omega", "no upper bracket found");
        hi *= 2.0;
    }

    double u = hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double fu = f(u);
        if (fu == 0.0) break;
        (fu < 0.0 ? lo : hi) = u;
        const double df = 3.0 * u * u - hw * hw;
        double next = u - fu / df;
        if (!(df > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const bool done = std::abs(next - u) <= 4.0 * std::numeric_limits<double>::epsilon() * u;
        u = next;
        if (done || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * u) break;
    }

    sol.hbar_Omega_n = u;
    sol.residual = f(u);
    sol.stationarity = g / (4.0 * u * u * u) * sol.residual;
    if (!(std::abs(sol.residual) <= 1e-10 * u * u * u))
        throw ConvergenceError("solve_omega", "residual " + std::to_string(sol.residual) +
                                                  " at u=" + std::to_string(u));
    return sol;
}

/// <n_Omega|H|n_Omega> with u = hbar Omega, evaluated term by term:
///   u(n + 1/2) - (u^2 - (hbar w)^2)/(4u) (2n+1) + 3 b s^4 (2n^2+2n+1),  s^2 = kappa/u.
/// At u = hbar Omega_n this is the variational energy of level n.
inline double energy_first_order(const AnharmonicSpec& spec, int n, double u) {
    detail::require_level(n);
    if (!(u > 0.0)) throw DomainError("energy_first_order: u must be positive");
    const double hw = hbar_omega(spec);
    const double nn = n;
    const double s2 = spec.kappa() / u;
    return u * (nn + 0.5) - (u * u - hw * hw) / (4.0 * u) * (2.0 * nn + 1.0) +
           3.0 * spec.quartic_b * s2 * s2 * (2.0 * nn * nn + 2.0 * nn + 1.0);
}

/// Numerator polynomial of the on-shell second-order correction. The linear
/// coefficient is -280; it is fixed by the brute-force sum over the four
/// coupled states (see tests).
inline double second_order_polynomial(int n) {
    const double x = n;
    return (((64.0 * x + 160.0) * x - 336.0) * x - 664.0) * x * x - 280.0 * x - 24.0;
}

/// Closed-form second-order correction, valid only at the stationary point
/// u = hbar Omega_n (the stationarity cubic was used to eliminate Omega^2 - w^2):
///   (beta^2 / 4u) P(n) / (2n+1)^2,  beta = b kappa^2 / u^2.
inline double second_order_closed_form(const AnharmonicSpec& spec, int n, double u) {
    detail::require_level(n);
    if (!(u > 0.0)) throw DomainError("second_order_closed_form: u must be positive");
    const double residual = detail::cubic_residual(spec, n, u);
    if (std::abs(residual) > 1e-8 * u * u * u)
        throw DomainError("second_order_closed_form: u is not a stationary point for level " +
                          std::to_string(n) + " (relative residual " +
                          std::to_string(residual / (u * u * u)) + ")");
    const double kappa = spec.kappa();
    const double beta = spec.quartic_b * kappa * kappa / (u * u);
    const double g = 2.0 * n + 1.0;
    return beta * beta / (4.0 * u) * second_order_polynomial(n) / (g * g);
}

/// Rayleigh-Schroedinger second-order sum  sum_{k != n} |<k|H'|n>|^2 / (u (n - k)).
/// H' couples n only to n +- 2 and n +- 4, so the sum is exact. Valid for any u > 0.
inline double second_order_sum(const AnharmonicSpec& spec, int n, double u) {
    detail::require_level(n);
    if (!(u > 0.0)) throw DomainError("second_order_sum: u must be positive");
    const OscBasis basis(u, spec.kappa());
    double sum = 0.0;
    for (int d : {-4, -2, 2, 4}) {
        const int k = n + d;
        if (k < 0) continue;
        const double h = hprime_element(spec, basis, k, n);
        sum += h * h / (u * static_cast<double>(n - k));
    }
    return sum;
}

/// Variational estimate of level n: first-order energy at hbar Omega_n.
inline LevelResult energy_variational(const AnharmonicSpec& spec, int n) {
    const auto sol = solve_omega(spec, n);
    const double e1 = energy_first_order(spec, n, sol.hbar_Omega_n);
    return {n, sol.hbar_Omega_n, e1, 0.0, e1, Method::variational};
}

/// Perturbation with a variational basis: first order plus the closed-form
/// second-order correction, both at hbar Omega_n.
inline LevelResult energy_present(const AnharmonicSpec& spec, int n) {
    const auto sol = solve_omega(spec, n);
    const double u = sol.hbar_Omega_n;
    const double e1 = energy_first_order(spec, n, u);
    const double e2 = second_order_closed_form(spec, n, u);
    return {n, u, e1, e2, e1 + e2, Method::present};
}

/// Ordinary perturbation theory around the bare oscillator (Omega = w).
inline LevelResult energy_conventional_pt(const AnharmonicSpec& spec, int n, int order) {
    detail::require_level(n);
    if (order != 1 && order != 2)
        throw DomainError("energy_conventional_pt: order must be 1 or 2, got " + std::to_string(order));
    const double hw = hbar_omega(spec);
    const double e1 = energy_first_order(spec, n, hw);
    const double e2 = order == 2 ? second_order_sum(spec, n, hw) : 0.0;
    return {n, hw, e1, e2, e1 + e2, order == 1 ? Method::conventional_pt1 : Method::conventional_pt2};
}

/// The bare series is flagged divergent when the second-order correction exceeds
/// the first-order quartic shift b<n|x^4|n> in magnitude. Never flagged at b = 0.
inline bool conventional_pt_diverges(const AnharmonicSpec& spec, int n) {
    if (spec.quartic_b == 0.0) return false;
    const double hw = hbar_omega(spec);
    const OscBasis bare(hw, spec.kappa());
    const double first = spec.quartic_b * x4_element(bare, n, n);
    return std::abs(second_order_sum(spec, n, hw)) > std::abs(first);
}

/// m Omega_n^2 / 2 for a solved level, in eV A^-2.
inline double parent_stiffness(const AnharmonicSpec& spec, double hbar_Omega_n) {
    return OscBasis(hbar_Omega_n, spec.kappa()).stiffness();
}

} // namespace varpert
