#include "doctest.h"

#include <string>
#include <vector>

#include "bsdv/checks.hpp"
#include "bsdv/errors.hpp"
#include "bsdv/version.hpp"

using namespace bsdv;

namespace {

CheckRun base_run(CheckId id, const std::string& domain, int samples) {
    CheckRun run;
    run.check_id = id;
    run.domain = domain;
    run.seed = 7;
    run.samples = samples;
    return run;
}

std::string json_without_wall_time(const Report& rep) {
    Report copy = rep;
    copy.wall_time = 0.0;
    return emit_report(copy, "json");
}

} // namespace

TEST_CASE("check id and mu grid parsing") {
    CHECK(parse_check_id("psh") == CheckId::psh);
    CHECK(parse_check_id("df_scan") == CheckId::df_scan);
    CHECK(check_id_name(CheckId::exponent_scan) == std::string("exponent_scan"));
    CHECK_THROWS_AS(parse_check_id("wibble"), Error);

    const std::vector<double> grid = parse_mu_grid("0.05:0.95:0.05");
    REQUIRE(grid.size() == 19);
    CHECK(grid.front() == doctest::Approx(0.05));
    CHECK(grid.back() == doctest::Approx(0.95));
    CHECK(parse_mu_grid("0.25:0.25:0.1") == std::vector<double>{0.25});

    CHECK_THROWS_AS(parse_mu_grid("junk"), Error);
    CHECK_THROWS_AS(parse_mu_grid("0.5"), Error);
    CHECK_THROWS_AS(parse_mu_grid("0:1:0.1"), Error);
    CHECK_THROWS_AS(parse_mu_grid("0.5:0.1:0.1"), Error);
    CHECK_THROWS_AS(parse_mu_grid("1e-9:100:1e-9"), Error);
    CHECK_THROWS_AS(parse_mu_grid("0.1:0.9:-0.1"), Error);
}

TEST_CASE("run_check: psh on pairs certifies the invariant potential") {
    const Report rep = run_check(base_run(CheckId::psh, "I:2,2", 20));
    CHECK(rep.passed());
    CHECK(rep.verdict == "pass");
    CHECK(rep.samples_evaluated == 20);
    CHECK(rep.exponent == 0.0);
    CHECK(rep.worst_point.size() == 8);
    CHECK(rep.error_code.empty());
    CHECK(rep.library_version == std::string(library_version));
    CHECK(rep.schema_version == std::string(report_schema_version));
    CHECK(report_exit_code(rep) == 0);

    // Exponent variant: -delta^{1/r} at the rank threshold r = 2*rank.
    CheckRun pow_run = base_run(CheckId::psh, "I:2,2", 12);
    pow_run.r = 4.0;
    const Report pow_rep = run_check(pow_run);
    CHECK(pow_rep.passed());
    CHECK(pow_rep.exponent == doctest::Approx(0.25));
}

TEST_CASE("run_check: strict positivity of the conjugate-quotient exhaustion") {
    const Report rep = run_check(base_run(CheckId::strict, "III:2", 10));
    CHECK(rep.passed());
    CHECK(rep.exponent == doctest::Approx(0.25)); // 1/(2*rank), rank 2
    CHECK(rep.worst_min_eig > 0.0);
}

TEST_CASE("run_check: invariance under random automorphisms") {
    for (const char* domain : {"I:2,2", "IV:3"}) {
        const Report rep = run_check(base_run(CheckId::invariance, domain, 100));
        INFO(domain);
        CHECK(rep.passed());
        CHECK(rep.worst_min_eig <= 0.0);
        CHECK(rep.worst_min_eig >= -1e-10 * rep.worst_scale);
    }

    // The tolerance is honored: demanding exact agreement fails.
    CheckRun strict_tol = base_run(CheckId::invariance, "I:2,2", 50);
    strict_tol.tol = 1e-18;
    const Report rep = run_check(strict_tol);
    CHECK_FALSE(rep.passed());
    CHECK(report_exit_code(rep) == 1);
    CHECK(rep.worst_point.size() == 8); // replayable witness
}

TEST_CASE("run_check: identity suites and their thresholds") {
    const Report rep_i = run_check(base_run(CheckId::identity, "I:2,2", 5));
    CHECK(rep_i.passed());
    REQUIRE(rep_i.families.size() == 5);
    for (const FamilyEntry& fam : rep_i.families) {
        CHECK(fam.threshold == doctest::Approx(1e-6));
        CHECK(fam.residual <= fam.threshold);
    }

    const Report rep_iv = run_check(base_run(CheckId::identity, "IV:3", 40));
    CHECK(rep_iv.passed());
    REQUIRE(rep_iv.families.size() == 5);
    CHECK(rep_iv.families[0].threshold == doctest::Approx(1e-12));
    CHECK(rep_iv.families[3].threshold == doctest::Approx(1e-9));
    CHECK(rep_iv.families[4].threshold == doctest::Approx(1e-9));

    CHECK_THROWS_AS(run_check(base_run(CheckId::identity, "II:4", 5)), Error);
    CHECK_THROWS_AS(run_check(base_run(CheckId::identity, "V", 5)), Error);
}

TEST_CASE("run_check: exponent scan gates at the rank threshold") {
    CheckRun run = base_run(CheckId::exponent_scan, "I:1,1", 8);
    run.mu_grid = {0.25, 0.5};
    const Report rep = run_check(run);
    CHECK(rep.passed());
    CHECK(rep.mu_threshold == doctest::Approx(0.5));
    REQUIRE(rep.scan.size() == 2);
    CHECK(rep.scan[0].mu == doctest::Approx(0.25));
    CHECK(rep.scan[0].verdict == "pass");
    CHECK(rep.scan[1].verdict == "pass");
    CHECK(rep.samples_evaluated == 16);
}

TEST_CASE("run_check: df_scan estimates the ball exponent") {
    CheckRun run = base_run(CheckId::df_scan, "I:1,1", 50);
    const Report rep = run_check(run);
    CHECK(rep.passed());
    CHECK(rep.estimate >= 0.45);
    CHECK(rep.estimate <= 0.55);
    CHECK(rep.mu_threshold == doctest::Approx(0.5));
    CHECK(rep.scan.size() == 19);

    CHECK_THROWS_AS(run_check(base_run(CheckId::df_scan, "I:2,2", 50)), Error);
    CHECK_THROWS_AS(run_check(base_run(CheckId::df_scan, "IV:3", 50)), Error);
}

TEST_CASE("run_check: bundle sections of both chiralities") {
    for (const char* kind : {"holo", "antiholo", "const"}) {
        CheckRun run = base_run(CheckId::section, "I:1,1", 15);
        run.section = kind;
        const Report rep = run_check(run);
        INFO(kind);
        CHECK(rep.passed());
    }

    CheckRun bad = base_run(CheckId::section, "I:1,1", 5);
    bad.section = "spline";
    CHECK_THROWS_AS(run_check(bad), Error);
    CheckRun bad_dim = base_run(CheckId::section, "I:1,1", 5);
    bad_dim.section_base_dim = 0;
    CHECK_THROWS_AS(run_check(bad_dim), Error);
}

TEST_CASE("run_check: configuration errors throw, numerical errors embed") {
    CHECK_THROWS_AS(run_check(base_run(CheckId::psh, "VII:3", 5)), Error);
    CHECK_THROWS_AS(run_check(base_run(CheckId::psh, "I:2,2", 0)), Error);

    CheckRun bad_genus = base_run(CheckId::psh, "I:2,2", 5);
    bad_genus.genus = 0.0;
    CHECK_THROWS_AS(run_check(bad_genus), Error);

    CheckRun bad_r = base_run(CheckId::psh, "I:2,2", 5);
    bad_r.r = 0.5;
    CHECK_THROWS_AS(run_check(bad_r), Error);

    // A hopeless finite-difference step cannot fit inside the domain; the
    // resulting numerical error lands in the report instead of escaping.
    CheckRun absurd = base_run(CheckId::psh, "I:1,1", 3);
    absurd.step = 1e6;
    const Report rep = run_check(absurd);
    CHECK_FALSE(rep.passed());
    CHECK(rep.verdict == "fail");
    CHECK(rep.error_code == "stencil_out_of_domain");
    CHECK_FALSE(rep.error_message.empty());
    CHECK(report_exit_code(rep) == 1);
}

TEST_CASE("reports: json round-trip preserves every field") {
    CheckRun run = base_run(CheckId::df_scan, "I:1,1", 50);
    run.mu_grid = {0.25, 0.5, 0.75};
    run.tol = 1e-6;
    const Report rep = run_check(run);

    const std::string text = emit_report(rep, "json");
    const Report back = parse_report_json(text);
    CHECK(back.run == rep.run);
    CHECK(back.verdict == rep.verdict);
    CHECK(back.worst_min_eig == rep.worst_min_eig);
    CHECK(back.worst_scale == rep.worst_scale);
    CHECK(back.worst_point == rep.worst_point);
    CHECK(back.samples_evaluated == rep.samples_evaluated);
    CHECK(back.wall_time == rep.wall_time);
    CHECK(back.estimate == rep.estimate);
    CHECK(back.mu_threshold == rep.mu_threshold);
    CHECK(back.scan.size() == rep.scan.size());
    for (std::size_t i = 0; i < rep.scan.size(); ++i) {
        CHECK(back.scan[i].mu == rep.scan[i].mu);
        CHECK(back.scan[i].verdict == rep.scan[i].verdict);
        CHECK(back.scan[i].worst_min_eig == rep.scan[i].worst_min_eig);
        CHECK(back.scan[i].worst_point == rep.scan[i].worst_point);
    }
    // emit(parse(emit(r))) is byte-identical to emit(r).
    CHECK(emit_report(back, "json") == text);

    const Report rep_id = run_check(base_run(CheckId::identity, "IV:3", 10));
    const std::string text_id = emit_report(rep_id, "json");
    const Report back_id = parse_report_json(text_id);
    CHECK(emit_report(back_id, "json") == text_id);
    REQUIRE(back_id.families.size() == rep_id.families.size());
    CHECK(back_id.families[2].name == rep_id.families[2].name);
    CHECK(back_id.families[2].residual == rep_id.families[2].residual);
    CHECK(back_id.families[2].worst_point == rep_id.families[2].worst_point);
}

TEST_CASE("reports: determinism modulo wall_time") {
    for (CheckId id : {CheckId::psh, CheckId::invariance, CheckId::exponent_scan}) {
        CheckRun run = base_run(id, "I:1,1", 10);
        run.mu_grid = {0.25, 0.5};
        const Report a = run_check(run);
        const Report b = run_check(run);
        INFO(check_id_name(id));
        CHECK(json_without_wall_time(a) == json_without_wall_time(b));
    }
}

TEST_CASE("reports: text format and format validation") {
    const Report rep = run_check(base_run(CheckId::identity, "I:2,2", 3));
    const std::string text = emit_report(rep, "text");
    CHECK(text.find("verdict: pass") != std::string::npos);
    CHECK(text.find("i_diag") != std::string::npos);
    CHECK(text.find("wall time") != std::string::npos);
    CHECK_THROWS_AS(emit_report(rep, "yaml"), Error);
}
