// Lowest few levels of k x^2 + b x^4 by every method in the library.

#include <cstdio>

#include "varpert/varpert.hpp"

int main() {
    const auto spec = varpert::make_anharmonic_spec(0.5, 0.1);
    std::printf("hbar w = %.7f eV\n", varpert::hbar_omega(spec));
    std::printf("%2s %12s %12s %12s %12s %12s\n", "n", "hbar Omega_n", "PT(2)", "variational", "present", "exact");
    for (int n = 0; n < 5; ++n) {
        const auto pres = varpert::energy_present(spec, n);
        std::printf("%2d %12.7f %12.7f %12.7f %12.7f %12.7f\n", n, pres.hbar_omega_n,
                    varpert::energy_conventional_pt(spec, n, 2).e_total, pres.e_first, pres.e_total,
                    varpert::shoot_eigenvalue(spec, n));
    }

    const auto he = varpert::helium::ground_state();
    std::printf("\nhelium: Z* = %.4f  E_var = %.4f  E2 = %.4f  E = %.4f ryd\n", he.z_star, he.e_variational,
                he.e_second, he.e_total);
}
