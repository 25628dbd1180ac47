#pragma once

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "varpert/anharmonic.hpp"
#include "varpert/exact.hpp"
#include "varpert/helium.hpp"

namespace varpert::report {

enum class Command { table1, table2, table3, helium, sweep };
enum class Format { markdown, csv, json };

struct RunConfig {
    Command command = Command::table1;
    std::vector<double> b_values;  ///< empty selects default_b_values(command)
    int n_levels = 1;
    int n_max_helium = 7;
    helium::ChannelOptions channels{};
    std::size_t exact_dim = 120;
    double exact_tol = 1e-10;
    Format format = Format::markdown;
    double stiffness_k = 0.5;  ///< m w^2 / 2 in eV A^-2
    Constants constants{};
    std::optional<std::filesystem::path> constants_path;
    std::optional<std::filesystem::path> cache_path;
    bool check = false;
};

inline std::vector<double> default_b_values(Command c) {
    switch (c) {
    case Command::table1: return {0.01, 0.05, 0.25};
    case Command::table2:
    case Command::table3: return {0.05};
    case Command::sweep: return {0.0, 0.001, 0.01, 0.05, 0.1, 0.25, 0.5, 1.0};
    case Command::helium: return {};
    }
    return {};
}

inline std::vector<double> b_values(const RunConfig& cfg) {
    return cfg.b_values.empty() ? default_b_values(cfg.command) : cfg.b_values;
}

// Comparison constants for helium, in ryd.
inline constexpr double helium_experimental_ground = -5.8070;
inline constexpr double helium_experimental_triplet = -4.3504;

struct Cell {
    std::optional<double> value;
    std::optional<double> percent;  ///< value as a percentage of the reference (exact or experimental)
    std::string note;
};

struct Row {
    std::string label;
    std::vector<Cell> cells;
};

struct Section {
    std::string title;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    std::vector<std::string> notes;
};

struct Report {
    std::string title;
    std::vector<Section> sections;
    bool solver_failure = false;
};

namespace detail {

inline std::string b_label(double b) { return fmt::format("b={:g}", b); }

inline Cell energy_cell(double value, std::optional<double> reference) {
    Cell c{value, std::nullopt, {}};
    if (reference && *reference != 0.0) c.percent = 100.0 * value / *reference;
    return c;
}

inline Cell failed_cell(const std::string& what) { return {std::nullopt, std::nullopt, "did not converge: " + what}; }

/// Both exact oracles for one level; failures become annotated cells.
struct ExactPair {
    std::optional<double> shooting;
    std::optional<double> diag;
    std::string shooting_error;
    std::string diag_error;
};

inline ExactPair exact_level(const RunConfig& cfg, const AnharmonicSpec& spec, int n) {
    ExactPair out;
    try {
        ShootingConfig sc;
        sc.energy_tol = cfg.exact_tol;
        out.shooting = shoot_eigenvalue(spec, n, sc);
    } catch (const ConvergenceError& e) {
        out.shooting_error = e.diagnostics();
    }
    try {
        const double u = solve_omega(spec, n).hbar_Omega_n;
        out.diag = diag_eigenvalues(spec, cfg.exact_dim, u, static_cast<std::size_t>(n) + 1)[static_cast<std::size_t>(n)];
    } catch (const ConvergenceError& e) {
        out.diag_error = e.diagnostics();
    }
    return out;
}

inline Section level_section(const RunConfig& cfg, int n, bool& failure) {
    const auto bs = b_values(cfg);
    Section s;
    s.title = n == 0 ? "Ground state energies (eV)" : fmt::format("Level n={} energies (eV)", n);
    for (double b : bs) s.columns.push_back(b_label(b));

    Row pt{"Perturbation theory (second order)", {}};
    Row var{"Variational", {}};
    Row present{"Present method", {}};
    Row exact{"Exact (RKF45 shooting)", {}};
    Row diag{fmt::format("Exact (basis diagonalization, dim {})", cfg.exact_dim), {}};
    Row stiff{fmt::format("1/2 m Omega_{}^2 (eV A^-2)", n), {}};

    for (double b : bs) {
        const auto spec = make_anharmonic_spec(cfg.stiffness_k, b, cfg.constants);
        const auto ex = exact_level(cfg, spec, n);
        if (!ex.shooting || !ex.diag) failure = true;

        Cell c = energy_cell(energy_conventional_pt(spec, n, 2).e_total, ex.shooting);
        if (conventional_pt_diverges(spec, n)) c.note = "does not converge";
        pt.cells.push_back(c);
        const auto v = energy_variational(spec, n);
        var.cells.push_back(energy_cell(v.e_total, ex.shooting));
        present.cells.push_back(energy_cell(energy_present(spec, n).e_total, ex.shooting));
        exact.cells.push_back(ex.shooting ? Cell{ex.shooting, std::nullopt, {}} : failed_cell(ex.shooting_error));
        diag.cells.push_back(ex.diag ? energy_cell(*ex.diag, ex.shooting) : failed_cell(ex.diag_error));
        stiff.cells.push_back({parent_stiffness(spec, v.hbar_omega_n), std::nullopt, {}});
    }
    s.rows = {pt, var, present, exact, diag, stiff};
    s.notes.push_back("Percentages are relative to the shooting eigenvalue.");
    return s;
}

inline Section order_section(const RunConfig& cfg, double b, bool& failure) {
    const auto spec = make_anharmonic_spec(cfg.stiffness_k, b, cfg.constants);
    const auto ex = exact_level(cfg, spec, 0);
    if (!ex.shooting) failure = true;
    Section s;
    s.title = fmt::format("Ground state by perturbative order, {} (eV)", b_label(b));
    s.columns = {"First order", "Second order"};
    const auto pt1 = energy_conventional_pt(spec, 0, 1);
    const auto pt2 = energy_conventional_pt(spec, 0, 2);
    const auto var = energy_variational(spec, 0);
    const auto pres = energy_present(spec, 0);
    s.rows = {
        {"Perturbation theory", {energy_cell(pt1.e_total, ex.shooting), energy_cell(pt2.e_total, ex.shooting)}},
        {"Variational", {energy_cell(var.e_total, ex.shooting), Cell{}}},
        {"Present method", {energy_cell(pres.e_first, ex.shooting), energy_cell(pres.e_total, ex.shooting)}},
    };
    if (ex.shooting)
        s.notes.push_back(fmt::format("Exact (RKF45 shooting): {:.7f} eV", *ex.shooting));
    else
        s.notes.push_back("Exact (RKF45 shooting) did not converge: " + ex.shooting_error);
    return s;
}

inline Section sweep_section(const RunConfig& cfg, bool& failure) {
    Section s;
    s.title = "Energy levels across quartic couplings (eV)";
    s.columns = {"hbar Omega_n", "PT first order", "PT second order", "Variational", "Present method", "Exact"};
    for (double b : b_values(cfg)) {
        const auto spec = make_anharmonic_spec(cfg.stiffness_k, b, cfg.constants);
        for (int n = 0; n < cfg.n_levels; ++n) {
            const auto ex = exact_level(cfg, spec, n);
            if (!ex.shooting) failure = true;
            const auto pres = energy_present(spec, n);
            Cell pt2 = energy_cell(energy_conventional_pt(spec, n, 2).e_total, ex.shooting);
            if (conventional_pt_diverges(spec, n)) pt2.note = "does not converge";
            s.rows.push_back({fmt::format("{} n={}", b_label(b), n),
                              {Cell{pres.hbar_omega_n, std::nullopt, {}},
                               energy_cell(energy_conventional_pt(spec, n, 1).e_total, ex.shooting), pt2,
                               energy_cell(pres.e_first, ex.shooting), energy_cell(pres.e_total, ex.shooting),
                               ex.shooting ? Cell{ex.shooting, std::nullopt, {}} : failed_cell(ex.shooting_error)}});
        }
    }
    return s;
}

inline std::string channel_label(const helium::ChannelOptions& o) {
    return fmt::format("m-range {}, pairs {}", o.m_range == helium::MRange::paper ? "paper" : "full",
                       o.pairs == helium::PairOrder::both ? "both" : "ordered");
}

} // namespace detail

inline Report run_table(const RunConfig& cfg) {
    Report r;
    switch (cfg.command) {
    case Command::table1:
        r.title = fmt::format("Anharmonic oscillator, k={:g} eV A^-2", cfg.stiffness_k);
        for (int n = 0; n < std::max(1, cfg.n_levels); ++n)
            r.sections.push_back(detail::level_section(cfg, n, r.solver_failure));
        break;
    case Command::table2:
        r.title = fmt::format("Anharmonic oscillator, k={:g} eV A^-2, first vs second order", cfg.stiffness_k);
        for (double b : b_values(cfg)) r.sections.push_back(detail::order_section(cfg, b, r.solver_failure));
        break;
    case Command::table3:
        r.title = fmt::format("Anharmonic oscillator, k={:g} eV A^-2, first excited state", cfg.stiffness_k);
        r.sections.push_back(detail::level_section(cfg, 1, r.solver_failure));
        break;
    case Command::sweep:
        r.title = fmt::format("Anharmonic oscillator sweep, k={:g} eV A^-2", cfg.stiffness_k);
        r.sections.push_back(detail::sweep_section(cfg, r.solver_failure));
        break;
    case Command::helium: throw DomainError("run_table: use run_helium for the helium command");
    }
    return r;
}

inline constexpr double helium_published_second_order = -0.0249;
inline constexpr double helium_second_order_band = 0.0010;

inline Report run_helium(const RunConfig& cfg, helium::IntegralStore* store = nullptr) {
    using namespace helium;
    constexpr double z = 2.0;
    const int n_max = cfg.n_max_helium;
    Report r;
    r.title = "Helium atom, screened hydrogenic basis (ryd)";

    const auto g = ground_state(z, n_max, cfg.channels, store);
    Section ground;
    ground.title = "Ground state (ryd)";
    ground.columns = {"value"};
    ground.rows = {
        {"Z* (optimal)", {Cell{g.z_star, std::nullopt, {}}}},
        {"Variational energy", {detail::energy_cell(g.e_variational, helium_experimental_ground)}},
        {fmt::format("Second-order correction (n_max={})", n_max), {Cell{g.e_second, std::nullopt, {}}}},
        {"Total", {detail::energy_cell(g.e_total, helium_experimental_ground)}},
    };
    ground.notes.push_back(fmt::format("Channel set: {}.", detail::channel_label(cfg.channels)));
    ground.notes.push_back(fmt::format("Percentages relative to experiment, {:.4f} ryd.", helium_experimental_ground));
    r.sections.push_back(ground);

    Section partial;
    partial.title = "Second-order partial sums (ryd)";
    partial.columns = {"correction", "total"};
    const auto sums = second_order_partial_sums(g.z_star, z, n_max, cfg.channels, store);
    for (std::size_t i = 0; i < sums.size(); ++i)
        partial.rows.push_back({fmt::format("n_max={}", i + 2),
                                {Cell{sums[i], std::nullopt, {}},
                                 detail::energy_cell(g.e_variational + sums[i], helium_experimental_ground)}});
    r.sections.push_back(partial);

    Section sets;
    sets.title = fmt::format("Channel-set comparison, n_max={} (ryd)", n_max);
    sets.columns = {"correction", "total", fmt::format("within {:.4f} of {:.4f}", helium_second_order_band,
                                                       helium_published_second_order)};
    for (auto mr : {MRange::paper, MRange::full})
        for (auto po : {PairOrder::both, PairOrder::ordered}) {
            const ChannelOptions o{mr, po};
            const double c = second_order_correction(g.z_star, z, n_max, o, store);
            const bool selected = o.m_range == cfg.channels.m_range && o.pairs == cfg.channels.pairs;
            const bool inside = std::abs(c - helium_published_second_order) <= helium_second_order_band;
            sets.rows.push_back({detail::channel_label(o) + (selected ? " (selected)" : " (investigative)"),
                                 {Cell{c, std::nullopt, {}},
                                  detail::energy_cell(g.e_variational + c, helium_experimental_ground),
                                  Cell{std::nullopt, std::nullopt, inside ? "yes" : "no"}}});
        }
    sets.notes.push_back("pairs both: n and n' run independently; pairs ordered: n <= n' only.");
    r.sections.push_back(sets);

    Section excited;
    excited.title = "First excited state, spin-triplet 1s2s (ryd)";
    excited.columns = {"value"};
    const double zx = optimal_zstar_excited(z);
    const auto jk = coulomb_1s2s(zx);
    excited.rows = {
        {"Z* (optimal)", {Cell{zx, std::nullopt, {}}}},
        {"Variational energy", {detail::energy_cell(excited_triplet_energy(zx, z), helium_experimental_triplet)}},
        {"Direct integral J", {Cell{jk.direct, std::nullopt, {}}}},
        {"Exchange integral K", {Cell{jk.exchange, std::nullopt, {}}}},
    };
    excited.notes.push_back(fmt::format("Percentages relative to experiment, {:.4f} ryd.", helium_experimental_triplet));
    r.sections.push_back(excited);
    return r;
}

// ---- published-value self-check ------------------------------------------

struct CheckItem {
    std::string label;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

namespace detail {

inline CheckItem compare(std::string label, double expected, double actual, double tol) {
    return {std::move(label), expected, actual, tol, std::abs(actual - expected) <= tol};
}

struct OscillatorReference {
    double b;
    int n;
    std::optional<double> pt2;  ///< empty: series flagged divergent
    double variational;
    double present;
    double exact;
    double parent_stiffness;
};

inline const std::vector<OscillatorReference>& oscillator_references() {
    static const std::vector<OscillatorReference> refs = {
        {0.01, 0, 1.4318427, 1.4333279, 1.4327276, 1.4327725, 0.5770839},
        {0.05, 0, 1.5279252, 1.5968858, 1.5912088, 1.5922195, 0.8227827},
        {0.25, 0, std::nullopt, 2.0664772, 2.0412648, 2.0474629, 1.6423320},
        {0.05, 1, 4.484801, 5.106102, 5.092412, 5.091282, 0.990354},
    };
    return refs;
}

inline void check_level(const RunConfig& cfg, const OscillatorReference& ref, std::vector<CheckItem>& out) {
    constexpr double tol = 2e-4;
    const auto spec = make_anharmonic_spec(cfg.stiffness_k, ref.b, cfg.constants);
    const std::string tag = fmt::format("{} n={}", b_label(ref.b), ref.n);
    if (ref.pt2) {
        out.push_back(compare(tag + " perturbation theory (second order)", *ref.pt2,
                              energy_conventional_pt(spec, ref.n, 2).e_total, tol));
    } else {
        const bool flagged = conventional_pt_diverges(spec, ref.n);
        out.push_back({tag + " perturbation theory flagged divergent", 1.0, flagged ? 1.0 : 0.0, 0.0, flagged});
    }
    const auto var = energy_variational(spec, ref.n);
    out.push_back(compare(tag + " variational", ref.variational, var.e_total, tol));
    out.push_back(compare(tag + " present method", ref.present, energy_present(spec, ref.n).e_total, tol));
    ShootingConfig sc;
    sc.energy_tol = cfg.exact_tol;
    out.push_back(compare(tag + " exact", ref.exact, shoot_eigenvalue(spec, ref.n, sc), tol));
    out.push_back(compare(tag + " 1/2 m Omega^2", ref.parent_stiffness, parent_stiffness(spec, var.hbar_omega_n), tol));
}

} // namespace detail

/// Compares this build against the published values that belong to cfg.command.
inline std::vector<CheckItem> check_against_published(const RunConfig& cfg, helium::IntegralStore* store = nullptr) {
    std::vector<CheckItem> out;
    constexpr double tol = 2e-4;
    switch (cfg.command) {
    case Command::table1:
        for (const auto& ref : detail::oscillator_references())
            if (ref.n == 0) detail::check_level(cfg, ref, out);
        break;
    case Command::table2: {
        const auto spec = make_anharmonic_spec(cfg.stiffness_k, 0.05, cfg.constants);
        out.push_back(detail::compare("b=0.05 perturbation theory first order", 1.6659633,
                                      energy_conventional_pt(spec, 0, 1).e_total, tol));
        out.push_back(detail::compare("b=0.05 perturbation theory second order", 1.5279252,
                                      energy_conventional_pt(spec, 0, 2).e_total, tol));
        out.push_back(detail::compare("b=0.05 variational", 1.5968858, energy_variational(spec, 0).e_total, tol));
        const auto pres = energy_present(spec, 0);
        out.push_back(detail::compare("b=0.05 present method first order", 1.5968858, pres.e_first, tol));
        out.push_back(detail::compare("b=0.05 present method second order", 1.5912088, pres.e_total, tol));
        break;
    }
    case Command::table3:
        for (const auto& ref : detail::oscillator_references())
            if (ref.n == 1) detail::check_level(cfg, ref, out);
        break;
    case Command::helium: {
        using namespace helium;
        const auto g = ground_state(2.0, cfg.n_max_helium, cfg.channels, store);
        out.push_back(detail::compare("helium Z*", 1.6875, g.z_star, 1e-12));
        out.push_back(detail::compare("helium variational", -5.6953, g.e_variational, 1e-4));
        out.push_back(detail::compare("helium second order", helium_published_second_order, g.e_second,
                                      helium_second_order_band));
        out.push_back(detail::compare("helium total", -5.7202, g.e_total, helium_second_order_band));
        const double zx = optimal_zstar_excited(2.0);
        out.push_back(detail::compare("helium triplet Z*", 1.8497, zx, 1e-4));
        out.push_back(detail::compare("helium triplet energy", -4.2765, excited_triplet_energy(zx, 2.0), 1e-4));
        break;
    }
    case Command::sweep: break;
    }
    return out;
}

// ---- rendering -------------------------------------------------------------

namespace detail {

inline std::string markdown_cell(const Cell& c) {
    std::string s;
    if (c.value) s = fmt::format("{:.7f}", *c.value);
    if (c.percent) s += fmt::format(" ({:.3f}%)", *c.percent);
    if (!c.note.empty()) s += s.empty() ? c.note : " [" + c.note + "]";
    return s.empty() ? "---" : s;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

inline std::string csv_number(const std::optional<double>& v) { return v ? fmt::format("{:.7g}", *v) : ""; }

} // namespace detail

inline std::string render_markdown(const Report& r) {
    std::string out = "# " + r.title + "\n";
    for (const auto& s : r.sections) {
        out += "\n## " + s.title + "\n\n| |";
        for (const auto& c : s.columns) out += " " + c + " |";
        out += "\n|---|";
        for (std::size_t i = 0; i < s.columns.size(); ++i) out += "---|";
        out += "\n";
        for (const auto& row : s.rows) {
            out += "| " + row.label + " |";
            for (const auto& c : row.cells) out += " " + detail::markdown_cell(c) + " |";
            out += "\n";
        }
        for (const auto& n : s.notes) out += "\n" + n + "\n";
    }
    return out;
}

inline std::string render_csv(const Report& r) {
    std::string out = "section,row,column,value,percent,note\n";
    for (const auto& s : r.sections)
        for (const auto& row : s.rows)
            for (std::size_t i = 0; i < row.cells.size(); ++i) {
                const auto& c = row.cells[i];
                out += detail::csv_field(s.title) + "," + detail::csv_field(row.label) + "," +
                       detail::csv_field(i < s.columns.size() ? s.columns[i] : "") + "," +
                       detail::csv_number(c.value) + "," + detail::csv_number(c.percent) + "," +
                       detail::csv_field(c.note) + "\n";
            }
    return out;
}

inline std::string render_json(const Report& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["title"] = r.title;
    j["solver_failure"] = r.solver_failure;
    j["sections"] = ordered_json::array();
    for (const auto& s : r.sections) {
        ordered_json js;
        js["title"] = s.title;
        js["columns"] = s.columns;
        js["rows"] = ordered_json::array();
        for (const auto& row : s.rows) {
            ordered_json jr;
            jr["label"] = row.label;
            jr["cells"] = ordered_json::array();
            for (const auto& c : row.cells) {
                ordered_json jc;
                jc["value"] = c.value ? ordered_json(*c.value) : ordered_json(nullptr);
                jc["percent"] = c.percent ? ordered_json(*c.percent) : ordered_json(nullptr);
                jc["note"] = c.note;
                jr["cells"].push_back(jc);
            }
            js["rows"].push_back(jr);
        }
        js["notes"] = s.notes;
        j["sections"].push_back(js);
    }
    return j.dump(2) + "\n";
}

inline std::string render(const Report& r, Format f) {
    switch (f) {
    case Format::markdown: return render_markdown(r);
    case Format::csv: return render_csv(r);
    case Format::json: return render_json(r);
    }
    return {};
}

} // namespace varpert::report
