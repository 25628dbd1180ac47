#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

#include "varpert/errors.hpp"

namespace varpert {

struct Rkf45Options {
    double tolerance = 1e-10;   ///< per-step error relative to |y| + |h y'|
    double initial_step = 1e-3;
    double min_step = 1e-14;
    double safety = 0.9;
    std::size_t max_steps = 1'000'000;
};

struct Rkf45Stats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

/// Adaptive Runge-Kutta-Fehlberg 4(5) integration of y' = rhs(x, y) from x0 to x1.
/// The fifth-order solution is propagated; the embedded fourth-order one only
/// drives step control. `observer(x, y)` runs after every accepted step and may
/// return false to stop early.
template <std::size_t N, class Rhs, class Observer>
Rkf45Stats integrate_rkf45(Rhs&& rhs, double x0, std::array<double, N>& y, double x1,
                           const Rkf45Options& opt, Observer&& observer) {
    using State = std::array<double, N>;

    // Fehlberg tableau
    constexpr double c2 = 1.0 / 4, c3 = 3.0 / 8, c4 = 12.0 / 13, c6 = 1.0 / 2;
    constexpr double a21 = 1.0 / 4;
    constexpr double a31 = 3.0 / 32, a32 = 9.0 / 32;
    constexpr double a41 = 1932.0 / 2197, a42 = -7200.0 / 2197, a43 = 7296.0 / 2197;
    constexpr double a51 = 439.0 / 216, a52 = -8.0, a53 = 3680.0 / 513, a54 = -845.0 / 4104;
    constexpr double a61 = -8.0 / 27, a62 = 2.0, a63 = -3544.0 / 2565, a64 = 1859.0 / 4104,
                     a65 = -11.0 / 40;
    constexpr double b1 = 16.0 / 135, b3 = 6656.0 / 12825, b4 = 28561.0 / 56430, b5 = -9.0 / 50,
                     b6 = 2.0 / 55;
    constexpr double e1 = 1.0 / 360, e3 = -128.0 / 4275, e4 = -2197.0 / 75240, e5 = 1.0 / 50,
                     e6 = 2.0 / 55;  // b(5th) - b(4th)

    if (!(opt.tolerance > 0.0)) throw DomainError("rkf45: tolerance must be positive");
    const double direction = x1 >= x0 ? 1.0 : -1.0;
    double h = direction * std::min(std::abs(opt.initial_step), std::abs(x1 - x0));
    double x = x0;
    Rkf45Stats stats;

    auto axpy = [](const State& base, double h, std::initializer_list<std::pair<double, const State*>> terms) {
        State out = base;
        for (const auto& [coef, k] : terms)
            for (std::size_t i = 0; i < N; ++i) out[i] += h * coef * (*k)[i];
        return out;
    };

    while (direction * (x1 - x) > 0.0) {
        if (stats.accepted + stats.rejected >= opt.max_steps)
            throw ConvergenceError("rkf45", "step budget exhausted at x=" + std::to_string(x));
        if (direction * (x + h - x1) > 0.0) h = x1 - x;

        const State k1 = rhs(x, y);
        const State k2 = rhs(x + c2 * h, axpy(y, h, {{a21, &k1}}));
        const State k3 = rhs(x + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(x + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(x + h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 =
            rhs(x + c6 * h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double local = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i]);
            const double scale = std::abs(y[i]) + std::abs(h * k1[i]) + 1e-300;
            err = std::max(err, std::abs(local) / (opt.tolerance * scale));
        }

        if (err <= 1.0) {
            y = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
            x += h;
            ++stats.accepted;
            if (!observer(x, static_cast<const State&>(y))) break;
        } else {
            ++stats.rejected;
        }

        const double factor = err > 0.0 ? opt.safety * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.1, 5.0);
        if (std::abs(h) < opt.min_step)
            throw ConvergenceError("rkf45", "step size underflow at x=" + std::to_string(x));
    }
    return stats;
}

} // namespace varpert
