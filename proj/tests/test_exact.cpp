#include <cmath>

#include <gtest/gtest.h>

#include "varpert/exact.hpp"

using namespace varpert;

namespace {
AnharmonicSpec spec_b(double b) { return make_anharmonic_spec(0.5, b); }
}

TEST(Rkf45, ExponentialGrowth) {
    std::array<double, 1> y{1.0};
    Rkf45Options opt;
    opt.tolerance = 1e-12;
    integrate_rkf45<1>([](double, const std::array<double, 1>& s) { return s; }, 0.0, y, 3.0, opt,
                       [](double, const std::array<double, 1>&) { return true; });
    EXPECT_NEAR(y[0], std::exp(3.0), 1e-9 * std::exp(3.0));
}

TEST(Rkf45, HarmonicPeriodAndEarlyStop) {
    std::array<double, 2> y{1.0, 0.0};
    Rkf45Options opt;
    opt.tolerance = 1e-12;
    auto rhs = [](double, const std::array<double, 2>& s) { return std::array<double, 2>{s[1], -s[0]}; };
    const auto stats = integrate_rkf45<2>(rhs, 0.0, y, 2.0 * M_PI, opt,
                                          [](double, const std::array<double, 2>&) { return true; });
    EXPECT_NEAR(y[0], 1.0, 1e-9);
    EXPECT_NEAR(y[1], 0.0, 1e-9);
    EXPECT_GT(stats.accepted, 10u);

    std::array<double, 2> z{1.0, 0.0};
    double stopped_at = 0.0;
    integrate_rkf45<2>(rhs, 0.0, z, 10.0, opt, [&](double x, const std::array<double, 2>& s) {
        stopped_at = x;
        return s[0] > 0.0;
    });
    EXPECT_GT(stopped_at, M_PI / 2);
    EXPECT_LT(stopped_at, 2.0);
}

TEST(ShootingConfig, Validation) {
    ShootingConfig c;
    c.abs_tol = 1e-5;
    EXPECT_THROW(c.validate(), DomainError);
    c = {};
    c.energy_tol = 0.0;
    EXPECT_THROW(shoot_eigenvalue(spec_b(0.01), 0, c), DomainError);
}

TEST(ShootEigenvalue, PublishedExactValues) {
    EXPECT_NEAR(shoot_eigenvalue(spec_b(0.01), 0), 1.4327725, 2e-4);
    EXPECT_NEAR(shoot_eigenvalue(spec_b(0.05), 1), 5.091282, 2e-4);
}

TEST(ShootEigenvalue, HarmonicLevels) {
    const auto s = spec_b(0.0);
    const double hw = hbar_omega(s);
    for (int n = 0; n < 6; ++n) EXPECT_NEAR(shoot_eigenvalue(s, n), hw * (n + 0.5), 1e-8) << n;
}

TEST(ShootEigenvalue, HalvingToleranceIsConsistent) {
    const auto s = spec_b(0.05);
    for (int n = 0; n < 3; ++n) {
        ShootingConfig coarse;
        coarse.energy_tol = 1e-6;
        ShootingConfig fine = coarse;
        fine.energy_tol = coarse.energy_tol / 2;
        EXPECT_LE(std::abs(shoot_eigenvalue(s, n, coarse) - shoot_eigenvalue(s, n, fine)), coarse.energy_tol);
    }
}

TEST(DiagEigenvalues, HarmonicSpectrum) {
    const auto s = spec_b(0.0);
    const double hw = hbar_omega(s);
    const auto ev = diag_eigenvalues(s, 40, hw, 5);
    ASSERT_EQ(ev.size(), 5u);
    for (int n = 0; n < 5; ++n) EXPECT_NEAR(ev[n], hw * (n + 0.5), 1e-12 * hw);
}

TEST(DiagEigenvalues, PublishedStrongCoupling) {
    const auto s = spec_b(0.25);
    const double u = solve_omega(s, 0).hbar_Omega_n;
    EXPECT_NEAR(diag_eigenvalues(s, 80, u, 1)[0], 2.0474629, 2e-4);
}

TEST(DiagEigenvalues, BasisSizeConvergence) {
    const auto s = spec_b(0.05);
    const double u = solve_omega(s, 0).hbar_Omega_n;
    const auto a = diag_eigenvalues(s, 80, u, 4);
    const auto b = diag_eigenvalues(s, 120, u, 4);
    for (int n = 0; n < 4; ++n) EXPECT_NEAR(a[n], b[n], 1e-8);
}

TEST(DiagEigenvalues, BasisIndependence) {
    for (double b : {0.01, 0.05, 0.25}) {
        const auto s = spec_b(b);
        const auto bare = diag_eigenvalues(s, 120, hbar_omega(s), 4);
        const auto opt = diag_eigenvalues(s, 120, solve_omega(s, 0).hbar_Omega_n, 4);
        for (int n = 0; n < 4; ++n) EXPECT_NEAR(bare[n], opt[n], 1e-8) << "b=" << b << " n=" << n;
    }
}

TEST(DiagEigenvalues, RejectsSmallBasis) {
    EXPECT_THROW(diag_eigenvalues(spec_b(0.05), 20, 3.0, 4), DomainError);
}

TEST(ExactOracles, CrossAgreementAndOrdering) {
    for (double b : {0.01, 0.05, 0.25}) {
        const auto s = spec_b(b);
        const auto diag = diag_eigenvalues(s, 120, solve_omega(s, 0).hbar_Omega_n, 4);
        double prev = -1.0;
        for (int n = 0; n <= 3; ++n) {
            const double shot = shoot_eigenvalue(s, n);
            EXPECT_NEAR(shot, diag[n], 1e-5) << "b=" << b << " n=" << n;
            EXPECT_GT(shot, prev);
            prev = shot;
        }
    }
}

TEST(ExactOracles, VariationalBoundsGroundStateFromAbove) {
    for (double b : {0.0, 0.001, 0.01, 0.05, 0.25, 1.0}) {
        const auto s = spec_b(b);
        const double exact = shoot_eigenvalue(s, 0);
        const double var = energy_variational(s, 0).e_total;
        if (b > 0.0)
            EXPECT_GT(var, exact) << b;
        else
            EXPECT_NEAR(var, exact, 1e-8);
    }
}

TEST(ExactOracles, PresentMethodUndershootsGroundState) {
    for (double b : {0.01, 0.05, 0.25}) {
        const auto s = spec_b(b);
        EXPECT_LT(energy_present(s, 0).e_total, shoot_eigenvalue(s, 0)) << b;
    }
}

TEST(DefaultXMax, SteepWallReachesPastEnergyRule) {
    for (double b : {0.01, 0.25, 1.0}) {
        const auto s = spec_b(b);
        const double energy_rule = classical_turning_point(s, energy_variational(s, 0).e_total + 25.0 * hbar_omega(s));
        EXPECT_GE(default_x_max(s, 0), energy_rule) << b;
    }
    const auto s = spec_b(1.0);
    const auto diag = diag_eigenvalues(s, 160, solve_omega(s, 0).hbar_Omega_n, 6);
    for (int n = 0; n < 6; ++n) EXPECT_NEAR(shoot_eigenvalue(s, n), diag[static_cast<std::size_t>(n)], 1e-7) << n;
}
