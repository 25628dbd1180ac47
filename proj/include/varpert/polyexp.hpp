#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "varpert/errors.hpp"

namespace varpert {

/// f(r) = sum_j c_j r^p_j exp(-gamma r). Lengths in bohr.
struct PolyExp {
    struct Term {
        double coeff = 0.0;
        int power = 0;
    };
    std::vector<Term> terms;
    double gamma = 1.0;

    double operator()(double r) const {
        double s = 0.0;
        for (const auto& t : terms) s += t.coeff * std::pow(r, t.power);
        return s * std::exp(-gamma * r);
    }
};

namespace detail {

inline long double factorial(int k) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(171, 1.0L);
        for (int i = 1; i < 171; ++i) t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * i;
        return t;
    }();
    if (k < 0 || k > 170) throw DomainError("factorial: argument out of range");
    return table[static_cast<std::size_t>(k)];
}

/// int_0^inf r^p exp(-lambda r) dr = p! / lambda^(p+1)
inline long double full_moment(int p, long double lambda) {
    if (p < 0) throw DomainError("radial moment: negative total power " + std::to_string(p));
    return factorial(p) / std::pow(lambda, static_cast<long double>(p + 1));
}

} // namespace detail

/// Pointwise product; the decay rates add.
inline PolyExp operator*(const PolyExp& f, const PolyExp& g) {
    std::map<int, double> acc;
    for (const auto& a : f.terms)
        for (const auto& b : g.terms) acc[a.power + b.power] += a.coeff * b.coeff;
    PolyExp out;
    out.gamma = f.gamma + g.gamma;
    for (const auto& [p, c] : acc) out.terms.push_back({c, p});
    return out;
}

/// Exact int_0^inf r^p f(r) g(r) dr.
inline double polyexp_moment(const PolyExp& f, const PolyExp& g, int p) {
    const long double lambda = static_cast<long double>(f.gamma) + g.gamma;
    if (!(lambda > 0.0L)) throw DomainError("polyexp_moment: decay rates must sum to a positive value");
    long double s = 0.0L;
    for (const auto& a : f.terms)
        for (const auto& b : g.terms)
            s += static_cast<long double>(a.coeff) * b.coeff * detail::full_moment(a.power + b.power + p, lambda);
    return static_cast<double>(s);
}

/// Normalized hydrogenic radial function R_nl for nuclear charge z (bohr units),
///   R_nl = N (2zr/n)^l exp(-zr/n) L^{2l+1}_{n-l-1}(2zr/n).
inline PolyExp hydrogenic_radial(int n, int l, double z) {
    if (n < 1 || l < 0 || l >= n)
        throw DomainError("hydrogenic_radial: need n >= 1 and 0 <= l < n, got n=" + std::to_string(n) +
                          " l=" + std::to_string(l));
    if (!(z > 0.0)) throw DomainError("hydrogenic_radial: charge must be positive");

    const double rho_scale = 2.0 * z / n;  // rho = rho_scale * r
    const int k = n - l - 1;
    const int alpha = 2 * l + 1;
    const long double norm =
        std::sqrt(std::pow(static_cast<long double>(rho_scale), 3.0L) * detail::factorial(k) /
                  (2.0L * n * detail::factorial(n + l)));

    PolyExp f;
    f.gamma = z / n;
    // L^alpha_k(rho) = sum_i (-1)^i C(k+alpha, k-i) rho^i / i!
    for (int i = 0; i <= k; ++i) {
        const long double binom =
            detail::factorial(k + alpha) / (detail::factorial(k - i) * detail::factorial(alpha + i));
        const long double c = (i % 2 ? -1.0L : 1.0L) * binom / detail::factorial(i) *
                              std::pow(static_cast<long double>(rho_scale), static_cast<long double>(i + l));
        f.terms.push_back({static_cast<double>(norm * c), i + l});
    }
    return f;
}

namespace detail {

/// Terms of U(x) = int_x^inf r^(p + shift) f(r) dr, each of the form
/// coeff * x^power * exp(-gamma x). Uses
///   int_x^inf r^p e^{-g r} dr = e^{-g x} sum_{i=0}^p p!/i! x^i / g^(p-i+1).
struct TailTerm {
    long double coeff;
    int power;
};

inline std::vector<TailTerm> upper_tail(const PolyExp& f, int shift) {
    std::vector<TailTerm> out;
    const long double g = f.gamma;
    for (const auto& t : f.terms) {
        const int p = t.power + shift;
        if (p < 0) throw DomainError("slater_radial: integrand singular at the origin");
        for (int i = 0; i <= p; ++i)
            out.push_back({t.coeff * factorial(p) / factorial(i) / std::pow(g, static_cast<long double>(p - i + 1)), i});
    }
    return out;
}

/// int_0^inf r^shift f(r) U(r) dr where U carries decay rate u_gamma.
inline long double contract(const PolyExp& f, int shift, const std::vector<TailTerm>& tail, long double u_gamma) {
    const long double lambda = static_cast<long double>(f.gamma) + u_gamma;
    long double s = 0.0L;
    for (const auto& t : f.terms)
        for (const auto& u : tail) s += t.coeff * u.coeff * full_moment(t.power + shift + u.power, lambda);
    return s;
}

} // namespace detail

/// Slater radial integral
///   R^k(a, b; c, d) = int int r1^2 r2^2 a(r1) b(r2) r<^k / r>^(k+1) c(r1) d(r2) dr1 dr2
/// in closed form. Each ordering region reduces to a single integral of a PolyExp
/// against an upper incomplete-gamma tail, both of which are finite sums.
inline double slater_radial(int k, const PolyExp& a, const PolyExp& b, const PolyExp& c, const PolyExp& d) {
    if (k < 0) throw DomainError("slater_radial: multipole order must be non-negative");
    const PolyExp first = a * c;   // electron 1 pair density
    const PolyExp second = b * d;  // electron 2 pair density

    // r2 < r1: int dr2 second(r2) r2^(k+2) int_{r2}^inf dr1 first(r1) r1^(1-k)
    const auto tail_first = detail::upper_tail(first, 1 - k);
    const long double inner = detail::contract(second, k + 2, tail_first, first.gamma);
    // r1 < r2: mirror image
    const auto tail_second = detail::upper_tail(second, 1 - k);
    const long double outer = detail::contract(first, k + 2, tail_second, second.gamma);
    return static_cast<double>(inner + outer);
}

} // namespace varpert
