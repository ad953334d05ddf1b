#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsdv/domains.hpp"
#include "bsdv/exhaustions.hpp"

namespace bsdv {

/// Named verification suites runnable from the command line (and from the
/// acceptance harness).  Every check is deterministic given its
/// configuration: sampling uses per-sample substreams keyed by
/// (seed, sample index), so two runs of the same CheckRun produce the same
/// verdict, the same worst point, and byte-identical JSON apart from the
/// wall_time field.
enum class CheckId {
    psh,           // log psi (or -delta^(1/r) when r is set) over random pairs
    strict,        // -delta_bar^(1/r) strictly psh; r defaults to 2*rank
    invariance,    // |change of log psi| under random automorphisms
    identity,      // closed-form Hessian identity suites (kinds I and IV)
    exponent_scan, // -delta^mu over a mu grid, gated at mu <= 1/(2*rank)
    df_scan,       // boundary exponent estimate on the ball pair (kind I, p=1)
    section,       // log psi(h(xi), w) for a random bundle section
};

const char* check_id_name(CheckId id);
CheckId parse_check_id(const std::string& text); // ConfigError on junk

/// "a:b:step" -> {a, a+step, ..., <= b + 1e-12}; ConfigError on junk.
std::vector<double> parse_mu_grid(const std::string& text);

struct CheckRun {
    CheckId check_id = CheckId::psh;
    std::string domain = "I:2,2"; // DomainSpec token
    std::uint64_t seed = 1;
    int samples = 200;
    double step = 0.0;            // finite-difference step; 0 = automatic
    double tol = 0.0;             // 0 = per-check default (see run_check)
    double r = 0.0;               // exponent divisor; 0 = per-check default
    std::vector<double> mu_grid;  // scans; empty = 0.05, 0.10, ..., 0.95
    std::string section = "holo"; // section kind for the section check
    int section_base_dim = 1;
    double genus = 1.0;

    bool operator==(const CheckRun& other) const;
};

struct ScanEntry {
    double mu = 0.0;
    std::string verdict;        // pass / fail / pass-with-flag
    double worst_min_eig = 0.0;
    double worst_scale = 1.0;
    std::vector<cx> worst_point;
};

struct FamilyEntry {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    std::vector<cx> worst_point;
};

struct Report {
    CheckRun run;
    std::string verdict;          // "pass" | "pass-with-flag" | "fail"
    double worst_min_eig = 0.0;   // signed margin; negative means failing
    double worst_scale = 1.0;
    std::vector<cx> worst_point;  // replayable witness (joint coordinates)
    int samples_evaluated = 0;
    double wall_time = 0.0;       // seconds; the only nondeterministic field
    std::string library_version;
    std::string schema_version;
    std::string error_code;       // empty unless a numerical error aborted
    std::string error_message;

    // Check-specific payloads (empty when not applicable).
    std::vector<FamilyEntry> families; // identity
    std::vector<ScanEntry> scan;       // exponent_scan / df_scan
    double estimate = 0.0;             // df_scan
    double mu_threshold = 0.0;         // exponent_scan / df_scan: 1/(2*rank)
    double exponent = 0.0;             // psh/strict/invariance: mu actually used

    bool passed() const { return verdict == "pass" || verdict == "pass-with-flag"; }
};

/// Executes the configured check.  Configuration problems (bad token, bad
/// grid, unsupported domain for the check) throw Error; numerical errors
/// raised during evaluation are embedded in the report with verdict
/// "fail".  Exit-code contract: 0 pass, 1 fail, 2 configuration error.
Report run_check(const CheckRun& config);

/// "json": single UTF-8 object, stable key order, round-trip exact
/// numbers.  "text": one-screen human summary.  ConfigError on other
/// formats.
std::string emit_report(const Report& report, const std::string& format);

/// Inverse of emit_report(., "json"); every field round-trips.
Report parse_report_json(const std::string& text);

int report_exit_code(const Report& report); // 0 or 1

} // namespace bsdv
