#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "varpert/model.hpp"

namespace varpert {

/// Eigenbasis |n_Omega> of the harmonic parent Hamiltonian p^2/2m + m Omega^2 x^2 / 2.
/// Everything is written in terms of (hbar Omega, kappa); the oscillator length
/// squared is s2 = hbar / (2 m Omega) = kappa / (hbar Omega).
class OscBasis {
public:
    OscBasis(double hbar_Omega, double kappa) : hbar_Omega_(hbar_Omega), kappa_(kappa) {
        if (!(hbar_Omega > 0.0)) throw DomainError("oscillator basis: hbar_Omega must be positive");
        if (!(kappa > 0.0)) throw DomainError("oscillator basis: kappa must be positive");
    }

    double hbar_Omega() const noexcept { return hbar_Omega_; }
    double kappa() const noexcept { return kappa_; }
    double s2() const noexcept { return kappa_ / hbar_Omega_; }
    /// m Omega^2 / 2, the stiffness of the parent Hamiltonian.
    double stiffness() const noexcept { return hbar_Omega_ * hbar_Omega_ / (4.0 * kappa_); }

private:
    double hbar_Omega_;
    double kappa_;
};

/// <k|x^2|n>.
inline double x2_element(const OscBasis& basis, int k, int n) {
    if (k < 0 || n < 0) throw DomainError("x2_element: quantum numbers must be non-negative");
    if (k < n) std::swap(k, n);
    const double s2 = basis.s2();
    const double nn = n;
    switch (k - n) {
    case 0: return s2 * (2.0 * nn + 1.0);
    case 2: return s2 * std::sqrt((nn + 1.0) * (nn + 2.0));
    default: return 0.0;
    }
}

/// <k|x^4|n>. Off-diagonal entries follow from x = s (a + a^dagger).
inline double x4_element(const OscBasis& basis, int k, int n) {
    if (k < 0 || n < 0) throw DomainError("x4_element: quantum numbers must be non-negative");
    if (k < n) std::swap(k, n);
    const double s4 = basis.s2() * basis.s2();
    const double nn = n;
    switch (k - n) {
    case 0: return s4 * (6.0 * nn * nn + 6.0 * nn + 3.0);
    case 2: return s4 * (4.0 * nn + 6.0) * std::sqrt((nn + 1.0) * (nn + 2.0));
    case 4: return s4 * std::sqrt((nn + 1.0) * (nn + 2.0) * (nn + 3.0) * (nn + 4.0));
    default: return 0.0;
    }
}

/// <k|H'|n> with H' = H - H_Omega = (k_spec - m Omega^2/2) x^2 + b x^4.
inline double hprime_element(const AnharmonicSpec& spec, const OscBasis& basis, int k, int n) {
    const double c2 = spec.stiffness_k - basis.stiffness();
    return c2 * x2_element(basis, k, n) + spec.quartic_b * x4_element(basis, k, n);
}

/// Real symmetric band matrix. Only the diagonal and the upper `half_bandwidth`
/// super-diagonals are stored; entry(i, j) with |i - j| > half_bandwidth is zero.
class BandMatrix {
public:
    BandMatrix(std::size_t dim, std::size_t half_bandwidth)
        : dim_(dim), hbw_(half_bandwidth), band_((half_bandwidth + 1) * dim, 0.0) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t half_bandwidth() const noexcept { return hbw_; }

    double entry(std::size_t i, std::size_t j) const {
        check(i, j);
        if (j < i) std::swap(i, j);
        if (j - i > hbw_) return 0.0;
        return band_[(j - i) * dim_ + i];
    }

    /// Sets entry (i, j) and its mirror (j, i).
    void set(std::size_t i, std::size_t j, double value) {
        check(i, j);
        if (j < i) std::swap(i, j);
        if (j - i > hbw_)
            throw DomainError("band matrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") lies outside the band");
        band_[(j - i) * dim_ + i] = value;
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= dim_ || j >= dim_) throw DomainError("band matrix: index out of range");
    }

    std::size_t dim_;
    std::size_t hbw_;
    std::vector<double> band_;  // diagonal-major: band_[d * dim + i] = A(i, i + d)
};

/// Matrix of H = H_Omega + H' in the first `dim` states of `basis`.
inline BandMatrix build_hamiltonian(const AnharmonicSpec& spec, const OscBasis& basis, std::size_t dim) {
    if (dim < 8) throw DomainError("build_hamiltonian: dim must be at least 8, got " + std::to_string(dim));
    BandMatrix h(dim, 4);
    for (std::size_t i = 0; i < dim; ++i) {
        const int n = static_cast<int>(i);
        h.set(i, i, basis.hbar_Omega() * (n + 0.5) + hprime_element(spec, basis, n, n));
        for (std::size_t d : {2u, 4u}) {
            if (i + d < dim) h.set(i, i + d, hprime_element(spec, basis, n + static_cast<int>(d), n));
        }
    }
    return h;
}

} // namespace varpert
