#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "varpert/polyexp.hpp"

// Two-electron atom in a screened-charge hydrogenic basis. Energies in ryd,
// lengths in bohr: e^2/a0 = 2 ryd and m c^2 alpha^2 / 2 = 1 ryd.

namespace varpert::helium {

inline constexpr double e2 = 2.0;  ///< e^2 in ryd * bohr

/// Key for one cached radial integral: X_n (kind X, n_prime = l = 0) or Y_{n n' l}.
struct IntegralKey {
    char kind = 'X';
    int n = 1;
    int n_prime = 0;
    int l = 0;
    double z_star = 1.0;
};

/// Optional memo for radial integrals. Implementations must tolerate concurrent `find`.
class IntegralStore {
public:
    virtual ~IntegralStore() = default;
    virtual std::optional<double> find(const IntegralKey& key) const = 0;
    virtual void store(const IntegralKey& key, double value) = 0;
};

namespace detail {
template <class Compute>
double memoized(IntegralStore* store, const IntegralKey& key, Compute&& compute) {
    if (store) {
        if (auto hit = store->find(key)) return *hit;
    }
    const double value = compute();
    if (store) store->store(key, value);
    return value;
}
} // namespace detail

/// X_n = int r^2 R_n0 (1/r) R_10 dr at common charge z_star, in 1/bohr.
inline double x_integral(int n, double z_star, IntegralStore* store = nullptr) {
    if (n < 1) throw DomainError("x_integral: n must be at least 1");
    return detail::memoized(store, {'X', n, 0, 0, z_star}, [&] {
        return polyexp_moment(hydrogenic_radial(n, 0, z_star), hydrogenic_radial(1, 0, z_star), 1);
    });
}

/// Y_{n n' l} = R^l(R_nl, R_n'l; R_10, R_10) at common charge z_star, in 1/bohr.
inline double y_integral(int n, int n_prime, int l, double z_star, IntegralStore* store = nullptr) {
    return detail::memoized(store, {'Y', n, n_prime, l, z_star}, [&] {
        const PolyExp s1 = hydrogenic_radial(1, 0, z_star);
        return slater_radial(l, hydrogenic_radial(n, l, z_star), hydrogenic_radial(n_prime, l, z_star), s1, s1);
    });
}

/// <Phi_0|H|Phi_0> for the screened 1s^2 product state.
inline double variational_ground_energy(double z_star, double z) {
    if (!(z_star > 0.0)) throw DomainError("variational_ground_energy: z_star must be positive");
    return -(4.0 * z_star * z - 2.0 * z_star * z_star - 1.25 * z_star);
}

/// Minimizer of variational_ground_energy: z - 5/16.
inline double optimal_zstar_ground(double z) {
    if (!(z >= 1.0)) throw DomainError("optimal_zstar_ground: nuclear charge must be at least 1");
    return z - 5.0 / 16.0;
}

/// Spin-singlet intermediate state A[phi_nlm(1) phi_n'l-m(2) + (1 <-> 2)].
struct HeliumChannel {
    int n = 1;
    int n_prime = 2;
    int l = 0;
    int m = 0;
    double A = 1.0 / std::sqrt(2.0);
};

inline HeliumChannel make_channel(int n, int n_prime, int l, int m) {
    if (n < 1 || n_prime < n) throw DomainError("helium channel: need 1 <= n <= n'");
    if (l < 0 || l > n - 1) throw DomainError("helium channel: need 0 <= l <= n-1");
    if (m < 0 || m > l) throw DomainError("helium channel: need 0 <= m <= l");
    if (n == 1 && n_prime == 1) throw DomainError("helium channel: (1,1) is the reference state");
    // The partner orbital is (n', l, -m); both orbitals coincide only for n = n', m = 0.
    const double A = (n == n_prime && m == 0) ? 0.5 : 1.0 / std::sqrt(2.0);
    return {n, n_prime, l, m, A};
}

enum class MRange { paper, full };
enum class PairOrder { both, ordered };

/// Which intermediate states enter the second-order sum.
///  - pairs = both: n and n' each run over 1..n_max independently, so a state
///    with n != n' is visited once per ordering. This reproduces the published
///    helium correction.
///  - pairs = ordered: n <= n' only.
///  - m_range = paper: 0 <= m <= l. m_range = full: -l <= m <= l whenever the
///    two orbitals differ in n (for n = n' the states m and -m coincide).
struct ChannelOptions {
    MRange m_range = MRange::paper;
    PairOrder pairs = PairOrder::both;
};

struct WeightedChannel {
    HeliumChannel channel;
    int multiplicity = 1;
};

inline std::vector<WeightedChannel> enumerate_channels(int n_max, const ChannelOptions& opt = {}) {
    if (n_max < 2) throw DomainError("helium: n_max must be at least 2");
    std::vector<WeightedChannel> out;
    for (int np = 1; np <= n_max; ++np)
        for (int n = 1; n <= np; ++n) {
            if (n == 1 && np == 1) continue;
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m) {
                    int mult = 1;
                    if (n != np && opt.pairs == PairOrder::both) mult *= 2;
                    if (n != np && m > 0 && opt.m_range == MRange::full) mult *= 2;
                    out.push_back({make_channel(n, np, l, m), mult});
                }
        }
    return out;
}

/// <Phi_channel|H'|Phi_0> in ryd, H' = -(Z - Z*) e^2 (1/r1 + 1/r2) + e^2/r12.
inline double channel_amplitude(const HeliumChannel& ch, double z_star, double z, IntegralStore* store = nullptr) {
    double amp = 0.0;
    if (ch.l == 0 && ch.m == 0) {
        double x = 0.0;
        if (ch.n_prime == 1) x += x_integral(ch.n, z_star, store);
        if (ch.n == 1) x += x_integral(ch.n_prime, z_star, store);
        amp += -2.0 * ch.A * (z - z_star) * e2 * x;
    }
    const double sign = ch.m % 2 ? -1.0 : 1.0;
    amp += 2.0 * ch.A * e2 * sign / (2.0 * ch.l + 1.0) * y_integral(ch.n, ch.n_prime, ch.l, z_star, store);
    return amp;
}

inline double channel_amplitude_sq(const HeliumChannel& ch, double z_star, double z, IntegralStore* store = nullptr) {
    const double a = channel_amplitude(ch, z_star, z, store);
    return a * a;
}

/// E_0 - E_channel of the parent Hamiltonian, in ryd (always negative).
inline double channel_denominator(const HeliumChannel& ch, double z_star) {
    const double n = ch.n, np = ch.n_prime;
    return -z_star * z_star * (2.0 - 1.0 / (n * n) - 1.0 / (np * np));
}

/// Second-order correction summed over bound intermediate states up to n_max.
inline double second_order_correction(double z_star, double z, int n_max, const ChannelOptions& opt = {},
                                      IntegralStore* store = nullptr) {
    double sum = 0.0;
    for (const auto& [ch, mult] : enumerate_channels(n_max, opt))
        sum += mult * channel_amplitude_sq(ch, z_star, z, store) / channel_denominator(ch, z_star);
    return sum;
}

/// Partial sums for n_max = 2, 3, ..., n_max (index 0 holds n_max = 2).
inline std::vector<double> second_order_partial_sums(double z_star, double z, int n_max,
                                                     const ChannelOptions& opt = {},
                                                     IntegralStore* store = nullptr) {
    std::vector<double> sums;
    for (int top = 2; top <= n_max; ++top) sums.push_back(second_order_correction(z_star, z, top, opt, store));
    return sums;
}

struct HeliumResult {
    double z_star = 0.0;
    double e_variational = 0.0;
    double e_second = 0.0;
    double e_total = 0.0;
    int n_max = 0;
};

inline HeliumResult ground_state(double z = 2.0, int n_max = 7, const ChannelOptions& opt = {},
                                 IntegralStore* store = nullptr) {
    const double zs = optimal_zstar_ground(z);
    const double ev = variational_ground_energy(zs, z);
    const double e2nd = second_order_correction(zs, z, n_max, opt, store);
    return {zs, ev, e2nd, ev + e2nd, n_max};
}

/// Direct and exchange Coulomb integrals of the 1s2s pair at charge z_star, in ryd.
struct CoulombPair {
    double direct = 0.0;
    double exchange = 0.0;
};

inline CoulombPair coulomb_1s2s(double z_star) {
    const PolyExp s1 = hydrogenic_radial(1, 0, z_star);
    const PolyExp s2 = hydrogenic_radial(2, 0, z_star);
    return {e2 * slater_radial(0, s1, s2, s1, s2), e2 * slater_radial(0, s1, s2, s2, s1)};
}

/// <H> in the spin-triplet (spatially antisymmetric) 1s2s state with both
/// orbitals at charge z_star:  (5/4) z*^2 - (5/2) z z* + J - K.
inline double excited_triplet_energy(double z_star, double z) {
    if (!(z_star > 0.0)) throw DomainError("excited_triplet_energy: z_star must be positive");
    const auto jk = coulomb_1s2s(z_star);
    return 1.25 * z_star * z_star - 2.5 * z * z_star + jk.direct - jk.exchange;
}

/// J - K is linear in z_star, so the optimum is z - (J - K)(1) / (5/2).
inline double optimal_zstar_excited(double z) {
    if (!(z >= 1.0)) throw DomainError("optimal_zstar_excited: nuclear charge must be at least 1");
    const auto jk = coulomb_1s2s(1.0);
    return z - (jk.direct - jk.exchange) / 2.5;
}

} // namespace varpert::helium
