// Acceptance suite: one PASS/FAIL line per criterion, sub-checks indented below it.
// Exit status is nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "varpert/report.hpp"
#include "varpert/varpert.hpp"

using namespace varpert;

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> lines;
    bool pass = true;

    void near(const std::string& what, double actual, double expected, double tol) {
        const bool ok = std::abs(actual - expected) <= tol;
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s %-48s got %.9f  want %.9f  tol %.1e", ok ? "ok  " : "FAIL", what.c_str(),
                      actual, expected, tol);
        lines.emplace_back(buf);
        pass = pass && ok;
    }

    void holds(const std::string& what, bool ok) {
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        pass = pass && ok;
    }

    void note(const std::string& what) { lines.push_back("note " + what); }
};

constexpr double table_tol = 2e-4;

AnharmonicSpec spec_b(double b) { return make_anharmonic_spec(0.5, b); }

Criterion table1() {
    Criterion c{"1. Table I reproduction (ground state, b = 0.01, 0.05, 0.25)", {}};
    struct Ref { double b; double pt2; double var; double present; double exact; double stiff; };
    for (const Ref& r : {Ref{0.01, 1.4318427, 1.4333279, 1.4327276, 1.4327725, 0.5770839},
                         Ref{0.05, 1.5279252, 1.5968858, 1.5912088, 1.5922195, 0.8227827},
                         Ref{0.25, NAN, 2.0664772, 2.0412648, 2.0474629, 1.6423320}}) {
        const auto s = spec_b(r.b);
        const std::string tag = "b=" + std::to_string(r.b).substr(0, 4) + " ";
        if (std::isnan(r.pt2))
            c.holds(tag + "perturbation theory flagged divergent", conventional_pt_diverges(s, 0));
        else {
            c.near(tag + "perturbation theory (second order)", energy_conventional_pt(s, 0, 2).e_total, r.pt2, table_tol);
            c.holds(tag + "perturbation theory not flagged divergent", !conventional_pt_diverges(s, 0));
        }
        const auto var = energy_variational(s, 0);
        c.near(tag + "variational", var.e_total, r.var, table_tol);
        c.near(tag + "present method", energy_present(s, 0).e_total, r.present, table_tol);
        c.near(tag + "exact (shooting)", shoot_eigenvalue(s, 0), r.exact, table_tol);
        c.near(tag + "1/2 m Omega_0^2", parent_stiffness(s, var.hbar_omega_n), r.stiff, table_tol);
    }
    return c;
}

Criterion table2() {
    Criterion c{"2. Table II reproduction (b = 0.05, first vs second order)", {}};
    const auto s = spec_b(0.05);
    c.near("perturbation theory first order", energy_conventional_pt(s, 0, 1).e_total, 1.6659633, table_tol);
    c.near("perturbation theory second order", energy_conventional_pt(s, 0, 2).e_total, 1.5279252, table_tol);
    c.near("variational", energy_variational(s, 0).e_total, 1.5968858, table_tol);
    const auto p = energy_present(s, 0);
    c.near("present method first order", p.e_first, 1.5968858, table_tol);
    c.near("present method second order", p.e_total, 1.5912088, table_tol);
    return c;
}

Criterion table3() {
    Criterion c{"3. Table III reproduction (first excited state, b = 0.05)", {}};
    const auto s = spec_b(0.05);
    c.near("perturbation theory (second order)", energy_conventional_pt(s, 1, 2).e_total, 4.484801, table_tol);
    const auto var = energy_variational(s, 1);
    c.near("variational", var.e_total, 5.106102, table_tol);
    const auto pres = energy_present(s, 1);
    c.near("present method", pres.e_total, 5.092412, table_tol);
    c.near("exact (shooting)", shoot_eigenvalue(s, 1), 5.091282, table_tol);
    c.near("1/2 m Omega_1^2", parent_stiffness(s, var.hbar_omega_n), 0.990354, table_tol);

    // Diagnostic for the present-method cell: the closed form with linear coefficient
    // -28 instead of -280 (which the brute-force sum rules out) lands on the tabulated value.
    const double u = pres.hbar_omega_n;
    const double beta = 0.05 * s.kappa() * s.kappa() / (u * u);
    const double alt = pres.e_first + beta * beta / (4 * u) * (64 + 160 - 336 - 664 - 28 - 24) / 9.0;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "closed form with linear coefficient -28 gives %.7f; brute-force sum gives %.7f (closed form %.7f)",
                  alt, pres.e_first + second_order_sum(s, 1, u), pres.e_total);
    c.note(buf);
    return c;
}

Criterion helium_numbers() {
    using namespace helium;
    Criterion c{"4. Helium ground and excited state", {}};
    const auto g = ground_state(2.0, 7, {MRange::paper, PairOrder::both});
    c.holds("Z* = 1.6875 exactly", g.z_star == 1.6875);
    c.near("variational energy (ryd)", g.e_variational, -5.6953, 1e-4);
    c.near("second-order correction, m-range paper (ryd)", g.e_second, -0.0249, 1e-3);
    c.near("total (ryd)", g.e_total, -5.7202, 1e-3);
    const double zx = optimal_zstar_excited(2.0);
    c.near("excited-state Z*", zx, 1.8497, 1e-4);
    c.near("excited-state energy (ryd)", excited_triplet_energy(zx, 2.0), -4.2765, 1e-4);

    char buf[200];
    for (auto [label, opt] : {std::pair{"m-range paper, ordered pairs", ChannelOptions{MRange::paper, PairOrder::ordered}},
                              std::pair{"m-range full, ordered pairs", ChannelOptions{MRange::full, PairOrder::ordered}},
                              std::pair{"m-range full, both pairs", ChannelOptions{MRange::full, PairOrder::both}}}) {
        std::snprintf(buf, sizeof buf, "%s: second order %.7f ryd", label, second_order_correction(g.z_star, 2.0, 7, opt));
        c.note(buf);
    }
    return c;
}

Criterion properties() {
    Criterion c{"5. Property suite", {}};

    double worst = 0.0;
    for (double b : {0.001, 0.01, 0.05, 0.25, 1.0}) {
        const auto s = spec_b(b);
        for (int n = 0; n <= 12; ++n) {
            const double u = solve_omega(s, n).hbar_Omega_n;
            const double sum = second_order_sum(s, n, u);
            worst = std::max(worst, std::abs(second_order_closed_form(s, n, u) - sum) / std::abs(sum));
        }
    }
    c.near("closed form vs brute-force sum, max relative gap", worst, 0.0, 1e-10);

    double gap = 0.0;
    bool bound = true, undershoot = true;
    for (double b : {0.01, 0.05, 0.25}) {
        const auto s = spec_b(b);
        const auto diag = diag_eigenvalues(s, 120, solve_omega(s, 0).hbar_Omega_n, 4);
        for (int n = 0; n <= 3; ++n) gap = std::max(gap, std::abs(shoot_eigenvalue(s, n) - diag[static_cast<std::size_t>(n)]));
        const double exact = shoot_eigenvalue(s, 0);
        bound = bound && energy_variational(s, 0).e_total > exact;
        undershoot = undershoot && energy_present(s, 0).e_total < exact;
    }
    c.near("shooting vs diagonalization, max |dE| n<=3 (eV)", gap, 0.0, 1e-5);
    for (double b : {0.001, 1.0}) {
        const auto s = spec_b(b);
        bound = bound && energy_variational(s, 0).e_total > shoot_eigenvalue(s, 0);
    }
    c.holds("variational ground energy lies above exact for b > 0", bound);
    c.holds("present ground energy lies below exact for b = 0.01, 0.05, 0.25", undershoot);

    double ortho = 0.0;
    for (double z : {1.0, 1.6875})
        for (int l = 0; l < 7; ++l)
            for (int n = l + 1; n <= 7; ++n)
                for (int m = l + 1; m <= 7; ++m)
                    ortho = std::max(ortho, std::abs(polyexp_moment(hydrogenic_radial(n, l, z), hydrogenic_radial(m, l, z), 2) -
                                                     (n == m ? 1.0 : 0.0)));
    c.near("hydrogenic orthonormality, max deviation n<=7", ortho, 0.0, 1e-10);
    const double zs = 1.6875;
    c.near("X_1 / Z*", helium::x_integral(1, zs) / zs, 1.0, 1e-10);
    c.near("Y_110 / Z*", helium::y_integral(1, 1, 0, zs) / zs, 5.0 / 8.0, 1e-10);
    const auto jk = helium::coulomb_1s2s(1.0);
    c.near("(J - K) slope in Z*", jk.direct - jk.exchange, 274.0 / 729.0, 1e-10);
    return c;
}

Criterion determinism() {
    Criterion c{"6. Determinism of table1 --format csv", {}};
    report::RunConfig cfg;
    cfg.command = report::Command::table1;
    cfg.format = report::Format::csv;
    const auto a = report::render(report::run_table(cfg), cfg.format);
    const auto b = report::render(report::run_table(cfg), cfg.format);
    c.holds("two consecutive renders are byte-identical (" + std::to_string(a.size()) + " bytes)", a == b);
    return c;
}

} // namespace

int main() {
    const std::vector<std::function<Criterion()>> suite = {table1, table2, table3, helium_numbers, properties, determinism};
    int failed = 0;
    for (const auto& run : suite) {
        const Criterion c = run();
        std::printf("%s  %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str());
        for (const auto& l : c.lines) std::printf("        %s\n", l.c_str());
        failed += c.pass ? 0 : 1;
    }
    std::printf("\n%d of %zu criteria passed\n", static_cast<int>(suite.size()) - failed, suite.size());
    return failed == 0 ? 0 : 1;
}
