// varpert: regenerate the anharmonic-oscillator tables and the helium numbers.

#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "varpert/constants_json.hpp"
#include "varpert/integral_cache.hpp"
#include "varpert/report.hpp"

namespace {

constexpr int exit_check_failed = 2;
constexpr int exit_no_convergence = 3;

using varpert::report::Command;
using varpert::report::Format;

int run(const varpert::report::RunConfig& cfg) {
    std::unique_ptr<varpert::IntegralCache> cache;
    if (cfg.cache_path) cache = std::make_unique<varpert::IntegralCache>(*cfg.cache_path, std::cerr);

    const auto report = cfg.command == Command::helium ? varpert::report::run_helium(cfg, cache.get())
                                                       : varpert::report::run_table(cfg);
    std::cout << varpert::report::render(report, cfg.format);

    int status = report.solver_failure ? exit_no_convergence : 0;
    if (cfg.check) {
        bool all = true;
        for (const auto& item : varpert::report::check_against_published(cfg, cache.get())) {
            std::cerr << (item.pass ? "PASS " : "FAIL ") << item.label << ": expected " << item.expected
                      << ", got " << item.actual << " (tolerance " << item.tolerance << ")\n";
            all = all && item.pass;
        }
        if (!all && status == 0) status = exit_check_failed;
    }
    if (cache) {
        cache->save();
        std::cerr << "integral cache: " << cache->hits() << " hits, " << cache->misses() << " misses\n";
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perturbation theory with a variationally optimized basis: anharmonic oscillator and helium"};
    varpert::report::RunConfig cfg;

    const std::map<std::string, Command> commands{{"table1", Command::table1}, {"table2", Command::table2},
                                                  {"table3", Command::table3}, {"helium", Command::helium},
                                                  {"sweep", Command::sweep}};
    const std::map<std::string, Format> formats{
        {"markdown", Format::markdown}, {"csv", Format::csv}, {"json", Format::json}};
    const std::map<std::string, varpert::helium::MRange> m_ranges{{"paper", varpert::helium::MRange::paper},
                                                                  {"full", varpert::helium::MRange::full}};
    const std::map<std::string, varpert::helium::PairOrder> pair_orders{
        {"both", varpert::helium::PairOrder::both}, {"ordered", varpert::helium::PairOrder::ordered}};

    std::string constants_file, cache_file;
    app.add_option("command", cfg.command, "table1 | table2 | table3 | helium | sweep")
        ->required()
        ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
    app.add_option("--b", cfg.b_values, "quartic couplings b in eV A^-4 (comma separated)")->delimiter(',');
    app.add_option("--k", cfg.stiffness_k, "harmonic stiffness m w^2/2 in eV A^-2")->check(CLI::PositiveNumber);
    app.add_option("--levels", cfg.n_levels, "number of levels for table1/sweep")->check(CLI::Range(1, 50));
    app.add_option("--n-max", cfg.n_max_helium, "highest principal quantum number in the helium sum")
        ->check(CLI::Range(2, 12));
    app.add_option("--m-range", cfg.channels.m_range, "helium m range: paper (0..l) or full (-l..l)")
        ->transform(CLI::CheckedTransformer(m_ranges, CLI::ignore_case));
    app.add_option("--pairs", cfg.channels.pairs, "helium (n, n') enumeration: both or ordered (n <= n')")
        ->transform(CLI::CheckedTransformer(pair_orders, CLI::ignore_case));
    app.add_option("--exact-dim", cfg.exact_dim, "basis size for the diagonalization oracle")
        ->check(CLI::Range(30, 2000));
    app.add_option("--exact-tol", cfg.exact_tol, "energy tolerance of the shooting oracle (eV)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "markdown | csv | json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--constants", constants_file, "JSON file overriding kappa_eV_A2, rydberg_eV, bohr_A")
        ->check(CLI::ExistingFile);
    app.add_option("--cache", cache_file, "JSON cache for helium radial integrals");
    app.add_flag("--check", cfg.check, "compare against published values; exit 2 on a violation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!constants_file.empty()) {
            cfg.constants_path = constants_file;
            cfg.constants = varpert::load_constants(constants_file);
        }
        if (!cache_file.empty()) cfg.cache_path = cache_file;
        return run(cfg);
    } catch (const varpert::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_no_convergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
