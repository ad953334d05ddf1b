// bsdcheck: command-line front end for the bounded-symmetric-domain
// verification library.  Configures a single check, runs it, and emits a
// machine-readable (JSON) or human-readable (text) report.
//
// Exit codes: 0 = check passed, 1 = check failed, 2 = configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bsdv/checks.hpp"
#include "bsdv/errors.hpp"
#include "bsdv/version.hpp"

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{"bsdcheck: numerical verification of Bergman-quotient "
                 "invariants on bounded symmetric domains"};
    app.set_version_flag("--version", std::string(bsdv::library_version));

    std::string check_name;
    std::string format = "json";
    std::string mu_grid_text;
    std::string out_path;
    bsdv::CheckRun run;

    app.add_option("--check", check_name,
                   "Check to run: psh | strict | invariance | identity | "
                   "exponent_scan | df_scan | section")
        ->required();
    app.add_option("--domain", run.domain,
                   "Domain token, e.g. I:2,2  II:3  III:2  IV:4  V  VI")
        ->capture_default_str();
    app.add_option("--seed", run.seed, "RNG seed (64-bit unsigned)")
        ->capture_default_str();
    app.add_option("--samples", run.samples, "Number of samples / trials")
        ->capture_default_str();
    app.add_option("--step", run.step,
                   "Finite-difference step (0 = automatic)")
        ->capture_default_str();
    app.add_option("--tol", run.tol,
                   "Tolerance override (0 = per-check default)")
        ->capture_default_str();
    app.add_option("--r", run.r,
                   "Exponent parameter r for strict/psh checks of -delta^(1/r) "
                   "(0 = check default)")
        ->capture_default_str();
    app.add_option("--mu-grid", mu_grid_text,
                   "Exponent grid as a:b:step (e.g. 0.05:0.95:0.05)");
    app.add_option("--section", run.section,
                   "Section kind for --check section: const | holo | antiholo")
        ->capture_default_str();
    app.add_option("--section-base-dim", run.section_base_dim,
                   "Base polydisc dimension of the test section")
        ->capture_default_str();
    app.add_option("--genus", run.genus, "Genus factor g in log psi = -g log delta")
        ->capture_default_str();
    app.add_option("--format", format, "Report format: json | text")
        ->capture_default_str();
    app.add_option("--out", out_path,
                   "Write the report to PATH instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // 0 covers --help/--version
    }

    run.check_id = bsdv::parse_check_id(check_name);
    if (!mu_grid_text.empty()) run.mu_grid = bsdv::parse_mu_grid(mu_grid_text);
    if (format != "json" && format != "text")
        throw bsdv::Error(bsdv::ErrorCode::config_error,
                          "unknown --format '" + format + "' (json | text)");

    const bsdv::Report report = bsdv::run_check(run);
    const std::string payload = bsdv::emit_report(report, format);

    if (out_path.empty()) {
        std::cout << payload << '\n';
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw bsdv::Error(bsdv::ErrorCode::config_error,
                              "cannot open --out path '" + out_path + "'");
        out << payload << '\n';
        if (!out)
            throw bsdv::Error(bsdv::ErrorCode::config_error,
                              "failed writing report to '" + out_path + "'");
    }
    return bsdv::report_exit_code(report);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const bsdv::Error& e) {
        std::cerr << "bsdcheck: " << bsdv::error_code_name(e.code()) << ": "
                  << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "bsdcheck: " << e.what() << '\n';
        return 2;
    }
}
