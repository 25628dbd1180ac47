#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "varpert/constants.hpp"

namespace varpert {

/// H = p^2/2m + k x^2 + b x^4 with k = m w^2 / 2. Energies in eV, lengths in A.
struct AnharmonicSpec {
    double stiffness_k = 0.5;  ///< eV A^-2
    double quartic_b = 0.0;    ///< eV A^-4
    Constants constants{};

    double kappa() const noexcept { return constants.kappa; }
};

inline AnharmonicSpec make_anharmonic_spec(double k, double b, const Constants& constants = {}) {
    constants.validate();
    if (!(k > 0.0) || !std::isfinite(k))
        throw DomainError("anharmonic spec: stiffness_k must be positive, got " + std::to_string(k));
    if (!(b >= 0.0) || !std::isfinite(b))
        throw DomainError("anharmonic spec: quartic_b must be non-negative, got " + std::to_string(b));
    return AnharmonicSpec{k, b, constants};
}

/// hbar*omega = 2 sqrt(kappa k).
inline double hbar_omega(const AnharmonicSpec& spec) noexcept {
    return 2.0 * std::sqrt(spec.kappa() * spec.stiffness_k);
}

enum class Method { variational, present, conventional_pt1, conventional_pt2, exact };

inline std::string_view to_string(Method m) noexcept {
    switch (m) {
    case Method::variational: return "variational";
    case Method::present: return "present";
    case Method::conventional_pt1: return "conventional_pt1";
    case Method::conventional_pt2: return "conventional_pt2";
    case Method::exact: return "exact";
    }
    return "unknown";
}

/// One energy level as estimated by one method.
/// For perturbative methods e_total = e_first + e_second_corr; otherwise e_second_corr = 0.
struct LevelResult {
    int n = 0;
    double hbar_omega_n = 0.0;
    double e_first = 0.0;
    double e_second_corr = 0.0;
    double e_total = 0.0;
    Method method = Method::variational;
};

} // namespace varpert
