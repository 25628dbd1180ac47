#pragma once

#include "varpert/errors.hpp"

namespace varpert {

/// Unit bridge for both problems. The oscillator lives in (eV, Angstrom),
/// helium in (ryd, bohr).
struct Constants {
    double kappa = 3.8099821;        ///< hbar^2 / 2 m_e in eV A^2 (CODATA 2018)
    double rydberg = 13.605693;      ///< eV
    double bohr_radius = 0.5291772;  ///< A

    void validate() const {
        if (!(kappa > 0.0)) throw DomainError("constants: kappa must be positive");
        if (!(rydberg > 0.0)) throw DomainError("constants: rydberg must be positive");
        if (!(bohr_radius > 0.0)) throw DomainError("constants: bohr_radius must be positive");
    }
};

} // namespace varpert
