// Acceptance harness: eleven go/no-go gates for the bounded-symmetric-domain
// verification library.  Each criterion prints exactly one PASS/FAIL line
// with its measured worst-case numbers and runtime; the process exits 0 only
// if every gate passes.  Gates with a stated runtime budget fail when the
// budget is exceeded, even if the numbers are good.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bsdv/checks.hpp"
#include "bsdv/domains.hpp"
#include "bsdv/errors.hpp"
#include "bsdv/exhaustions.hpp"
#include "bsdv/moebius.hpp"
#include "bsdv/octonion.hpp"
#include "bsdv/rng.hpp"

using namespace bsdv;

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CheckRun make_run(CheckId id, const std::string& domain, std::uint64_t seed, int samples) {
    CheckRun run;
    run.check_id = id;
    run.domain = domain;
    run.seed = seed;
    run.samples = samples;
    return run;
}

// Random point of the maximal polydisc slice, coordinate moduli in
// [0.05, 0.9) so every sample keeps boundary clearance.
DomainPoint random_slice_point(const DomainSpec& spec, Rng& rng) {
    std::vector<cx> zeta(static_cast<size_t>(spec.rank()));
    for (cx& z : zeta) z = rng.uniform(0.05, 0.9) * rng.unit_phase();
    return polydisc_embed(spec, zeta);
}

// ---------------------------------------------------------------------------
// 1. Type I closed-form Hessian identities at diagonal points, p = q in {2,3}.
bool crit_identity_i(std::string& detail) {
    double worst = 0.0;
    for (const char* tok : {"I:2,2", "I:3,3"}) {
        const DomainSpec spec = DomainSpec::parse(tok);
        Rng rng(101);
        const IdentityReport rep = identity_suite(spec, 50, rng);
        for (const IdentityFamily& fam : rep.families) worst = std::max(worst, fam.residual);
    }
    detail = "max residual " + fmt(worst) + " <= 1e-06 across all five families, 50 diagonal points each";
    return worst <= 1e-6;
}

// ---------------------------------------------------------------------------
// 2. Type IV polydisc identities: norm product formula and the 2x2
//    comparison-matrix determinant, 100 random slice parameters.
bool crit_identity_iv(std::string& detail) {
    Rng rng(202);
    const IdentityReport rep = identity_suite(DomainSpec::parse("IV:3"), 100, rng);
    double norm_res = 1.0, det_res = 1.0;
    for (const IdentityFamily& fam : rep.families) {
        if (fam.name == "iv_norm") norm_res = fam.residual;
        if (fam.name == "iv_det") det_res = fam.residual;
    }
    detail = "norm product residual " + fmt(norm_res) + " <= 1e-12, determinant residual " +
             fmt(det_res) + " <= 1e-09 relative, 100 samples";
    return norm_res <= 1e-12 && det_res <= 1e-9;
}

// ---------------------------------------------------------------------------
// 3. log psi is psh: min Hessian eigenvalue >= -1e-6 * scale over 200
//    interior pairs per domain (kinds I-IV), and 200 polydisc-slice pairs
//    for kinds V and VI.
bool crit_psh(std::string& detail) {
    const char* toks[] = {"I:2,2", "I:3,3", "II:3", "II:4", "III:2", "III:3", "IV:3", "IV:4"};
    bool ok = true;
    double worst_norm = 1e30; // most negative min_eig / scale seen
    for (const char* tok : toks) {
        const Report rep = run_check(make_run(CheckId::psh, tok, 301, 200));
        ok = ok && report_exit_code(rep) == 0;
        worst_norm = std::min(worst_norm, rep.worst_min_eig / rep.worst_scale);
    }
    for (const char* tok : {"V", "VI"}) {
        const DomainSpec spec = DomainSpec::parse(tok);
        const Field field = pair_field_log_psi(spec);
        std::vector<std::vector<cx>> pts;
        for (int k = 0; k < 200; ++k) {
            Rng rng = Rng::substream(302, static_cast<std::uint64_t>(k));
            const DomainPoint z = random_slice_point(spec, rng);
            const DomainPoint w = random_slice_point(spec, rng);
            pts.push_back(joint_coords(z, w));
        }
        const PshVerdict v = psh_check(field, pts, 1e-6);
        ok = ok && v.pass;
        worst_norm = std::min(worst_norm, v.worst_min_eig / v.worst_scale);
    }
    detail = "worst normalized min eigenvalue " + fmt(worst_norm) +
             " >= -1e-06, 200 pairs x 10 domains";
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Invariance of log psi: 500 matrix Moebius trials on I:2,2, 500 isotropy
//    trials on IV:3, and 500 polydisc Moebius trials on IV:3 slice pairs.
bool crit_invariance(std::string& detail) {
    bool ok = true;
    double worst = 0.0; // normalized |delta log psi|

    for (const char* tok : {"I:2,2", "IV:3"}) {
        const Report rep = run_check(make_run(CheckId::invariance, tok, 401, 500));
        ok = ok && report_exit_code(rep) == 0;
        worst = std::max(worst, -rep.worst_min_eig / rep.worst_scale);
    }

    const DomainSpec spec = DomainSpec::parse("IV:3");
    for (int k = 0; k < 500; ++k) {
        Rng rng = Rng::substream(402, static_cast<std::uint64_t>(k));
        std::vector<cx> zeta(2), xi(2);
        for (cx& c : zeta) c = rng.uniform(0.05, 0.9) * rng.unit_phase();
        for (cx& c : xi) c = rng.uniform(0.05, 0.9) * rng.unit_phase();
        const PolydiscMoebius m = PolydiscMoebius::random(2, rng);
        const double before = log_psi(spec, polydisc_embed(spec, zeta), polydisc_embed(spec, xi));
        const double after =
            log_psi(spec, polydisc_embed(spec, m.apply(zeta)), polydisc_embed(spec, m.apply(xi)));
        const double res = std::abs(after - before) / (1.0 + std::abs(before));
        worst = std::max(worst, res);
        ok = ok && res <= 1e-10;
    }

    detail = "worst |delta log psi| / (1 + |log psi|) = " + fmt(worst) +
             " <= 1e-10, 500 trials per action family";
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Bounded exhaustion exponent: -delta^(1/(2 rank)) is psh on kinds I-IV at
//    the criterion-3 sampling, while -delta^0.55 on the disc pair fails at a
//    boundary-approach sample (t in [0.99, 0.999]).
bool crit_exponent(std::string& detail) {
    const char* toks[] = {"I:2,2", "I:3,3", "II:3", "II:4", "III:2", "III:3", "IV:3", "IV:4"};
    bool ok = true;
    for (const char* tok : toks) {
        CheckRun run = make_run(CheckId::psh, tok, 301, 200);
        run.r = 2.0 * DomainSpec::parse(tok).rank();
        ok = ok && report_exit_code(run_check(run)) == 0;
    }

    const DomainSpec disc = DomainSpec::parse("I:1,1");
    const Field field = pair_field_neg_delta_pow(disc, 0.55);
    std::vector<std::vector<cx>> pts;
    int idx = 0;
    for (double t : {0.99, 0.995, 0.999}) {
        for (int j = 0; j < 4; ++j) {
            Rng rng = Rng::substream(503, static_cast<std::uint64_t>(idx++));
            const PairPoint p = boundary_pair(disc, t, rng);
            pts.push_back(joint_coords(p.z, p.w));
        }
    }
    const PshVerdict v = psh_check(field, pts, 1e-6);
    const bool fail_detected = !v.pass;
    detail = std::string("-delta^(1/(2 rank)) psh on kinds I-IV; disc -delta^0.55 ") +
             (fail_detected ? "fails as required" : "did NOT fail") + " (worst normalized eig " +
             fmt(v.worst_min_eig / v.worst_scale) + " at boundary approach)";
    return ok && fail_detected;
}

// ---------------------------------------------------------------------------
// 6. Diederich-Fornaess scan on the disc pair, grid step 0.05, estimate
//    within [0.45, 0.55].
bool crit_df(std::string& detail) {
    CheckRun run = make_run(CheckId::df_scan, "I:1,1", 601, 50);
    run.mu_grid = parse_mu_grid("0.05:0.95:0.05");
    const Report rep = run_check(run);
    detail = "estimate " + fmt(rep.estimate) + " in [0.45, 0.55], grid step 0.05";
    return report_exit_code(rep) == 0 && rep.estimate >= 0.45 && rep.estimate <= 0.55;
}

// ---------------------------------------------------------------------------
// 7. Strict plurisubharmonicity of -delta_bar^(1/(2 rank)) with positive
//    margin on interior samples (ray clearance >= 0.1), kinds I-IV.
bool crit_strict(std::string& detail) {
    const char* toks[] = {"I:2,2", "I:3,3", "II:3", "II:4", "III:2", "III:3", "IV:3", "IV:4"};
    bool ok = true;
    double margin = 1e30;
    for (const char* tok : toks) {
        const Report rep = run_check(make_run(CheckId::strict, tok, 701, 200));
        ok = ok && report_exit_code(rep) == 0 && rep.worst_min_eig > 0.0;
        margin = std::min(margin, rep.worst_min_eig / rep.worst_scale);
    }
    detail = "smallest normalized margin " + fmt(margin) + " > 1e-06, 200 pairs x 8 domains";
    return ok;
}

// ---------------------------------------------------------------------------
// 8. Cycle sums: psi_k equals the log of the delta product to 1e-12 for
//    k in {2,3,4} on 100 tuples each; the k=2 doubling is bitwise exact.
bool crit_psi_k(std::string& detail) {
    const DomainSpec specs[] = {DomainSpec::parse("I:2,2"), DomainSpec::parse("II:3"),
                                DomainSpec::parse("III:2"), DomainSpec::parse("IV:3")};
    bool ok = true;
    double worst = 0.0;
    for (int k = 2; k <= 4; ++k) {
        for (int trial = 0; trial < 100; ++trial) {
            const DomainSpec& spec = specs[trial % 4];
            Rng rng = Rng::substream(800 + static_cast<std::uint64_t>(k),
                                     static_cast<std::uint64_t>(trial));
            std::vector<DomainPoint> cycle;
            for (int i = 0; i < k; ++i) cycle.push_back(sample_interior(spec, rng));
            const double sum = psi_k(spec, cycle);
            double prod = 1.0;
            for (int i = 0; i < k; ++i) prod *= delta(spec, cycle[i], cycle[(i + 1) % k]);
            const double res = std::abs(sum + std::log(prod)) / std::max(1.0, std::abs(sum));
            worst = std::max(worst, res);
            ok = ok && res <= 1e-12;
            if (k == 2) ok = ok && sum == 2.0 * log_psi(spec, cycle[0], cycle[1]);
        }
    }
    detail = "worst product-vs-sum residual " + fmt(worst) +
             " <= 1e-12, 100 tuples per k; k=2 doubling exact";
    return ok;
}

// ---------------------------------------------------------------------------
// 9. Bundle sections: log psi(h(xi), w) stays psh for 10 holomorphic-affine
//    and 10 antiholomorphic-affine sections into I:2,2 and the disc, 100
//    joint samples each.
bool crit_sections(std::string& detail) {
    bool ok = true;
    double worst_norm = 1e30;
    for (const char* dom : {"I:2,2", "I:1,1"}) {
        for (const char* kind : {"holo", "antiholo"}) {
            for (std::uint64_t s = 1; s <= 10; ++s) {
                CheckRun run = make_run(CheckId::section, dom, 900 + s, 100);
                run.section = kind;
                const Report rep = run_check(run);
                ok = ok && report_exit_code(rep) == 0;
                worst_norm = std::min(worst_norm, rep.worst_min_eig / rep.worst_scale);
            }
        }
    }
    detail = "worst normalized min eigenvalue " + fmt(worst_norm) +
             " >= -1e-06, 10 sections x 2 chiralities x 2 domains, 100 joint samples each";
    return ok;
}

// ---------------------------------------------------------------------------
// 10. Octonion / Jordan kernel: alternativity, norm multiplicativity on the
//     real slice, the adjoint identity (A#)# = det(A) A, and scalarity of the
//     Hermitian product, 1000 random trials each.
bool crit_octonion(std::string& detail) {
    auto odist = [](const Octonion& a, const Octonion& b) {
        double d = 0.0;
        for (int i = 0; i < 8; ++i) d = std::max(d, std::abs(a[i] - b[i]));
        return d;
    };
    auto hdist = [&](const H3Matrix& a, const H3Matrix& b) {
        double d = 0.0;
        for (int i = 0; i < 3; ++i) {
            d = std::max(d, std::abs(a.diag[i] - b.diag[i]));
            d = std::max(d, odist(a.off[i], b.off[i]));
        }
        return d;
    };

    bool ok = true;
    double worst = 0.0;
    Rng rng(1001);

    for (int trial = 0; trial < 1000; ++trial) {
        Octonion a, b;
        for (int i = 0; i < 8; ++i) {
            a[i] = rng.complex_in_disc(1.0);
            b[i] = rng.complex_in_disc(1.0);
        }
        const double scale = std::max(1.0, a.norm2() * std::sqrt(b.norm2()));
        const double r1 = odist(mul(mul(a, a), b), mul(a, mul(a, b))) / scale;
        const double r2 = odist(mul(mul(a, b), b), mul(a, mul(b, b))) / scale;
        worst = std::max({worst, r1, r2});
        ok = ok && r1 <= 1e-12 && r2 <= 1e-12;
    }

    for (int trial = 0; trial < 1000; ++trial) {
        Octonion a, b;
        for (int i = 0; i < 8; ++i) {
            a[i] = rng.uniform(-1.0, 1.0);
            b[i] = rng.uniform(-1.0, 1.0);
        }
        const double qa = 0.5 * scalar_product(a, a).real();
        const double qb = 0.5 * scalar_product(b, b).real();
        const double qab = 0.5 * scalar_product(mul(a, b), mul(a, b)).real();
        const double res = std::abs(qab - qa * qb) / std::max(1.0, qa * qb);
        worst = std::max(worst, res);
        ok = ok && res <= 1e-12;
    }

    for (int trial = 0; trial < 1000; ++trial) {
        H3Matrix m;
        for (int i = 0; i < 3; ++i) {
            m.diag[i] = rng.complex_in_disc(1.0);
            for (int j = 0; j < 8; ++j) m.off[i][j] = rng.complex_in_disc(1.0);
        }
        const H3Matrix lhs = h3_adjoint(h3_adjoint(m));
        const H3Matrix rhs = h3_det(m) * m;
        const double res = hdist(lhs, rhs) / std::max(1.0, rhs.max_abs());
        ok = ok && res <= 1e-10;
    }

    int non_scalar = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Octonion a, b;
        for (int i = 0; i < 8; ++i) {
            a[i] = rng.complex_in_disc(1.0);
            b[i] = rng.complex_in_disc(1.0);
        }
        try {
            (void)scalar_product(a, b); // throws if any non-scalar part survives
        } catch (const Error&) {
            ++non_scalar;
        }
    }
    ok = ok && non_scalar == 0;

    detail = "alternativity/norm residuals <= " + fmt(std::max(worst, 1e-16)) +
             ", adjoint identity <= 1e-10 relative, 0 non-scalar products, 1000 trials each";
    return ok;
}

// ---------------------------------------------------------------------------
// 11. Determinism and the CLI exit-code contract: identical runs produce
//     byte-identical JSON once wall_time is zeroed, in-process and through
//     the command-line binary; exit codes are 0/1/2 for pass/fail/config.
std::string normalized_json(Report rep) {
    rep.wall_time = 0.0;
    return emit_report(rep, "json");
}

int spawn_cli(const std::string& args) {
    const std::string cmd = std::string(BSDV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool crit_determinism(std::string& detail) {
    bool ok = true;

    std::vector<CheckRun> runs;
    runs.push_back(make_run(CheckId::psh, "I:2,2", 7, 40));
    runs.push_back(make_run(CheckId::strict, "III:2", 11, 30));
    runs.push_back(make_run(CheckId::invariance, "IV:3", 13, 80));
    runs.push_back(make_run(CheckId::identity, "I:3,3", 17, 50));
    runs.push_back(make_run(CheckId::identity, "IV:3", 19, 100));
    {
        CheckRun run = make_run(CheckId::exponent_scan, "I:2,2", 23, 10);
        run.mu_grid = {0.25, 0.5};
        runs.push_back(run);
    }
    {
        CheckRun run = make_run(CheckId::df_scan, "I:1,1", 29, 40);
        run.mu_grid = parse_mu_grid("0.05:0.95:0.05");
        runs.push_back(run);
    }
    {
        CheckRun run = make_run(CheckId::section, "I:2,2", 31, 30);
        run.section = "antiholo";
        runs.push_back(run);
    }
    int replayed = 0;
    for (const CheckRun& run : runs) {
        const std::string first = normalized_json(run_check(run));
        const std::string second = normalized_json(run_check(run));
        if (first == second) ++replayed;
        ok = ok && first == second;
    }

    // Through the CLI binary: same flags, byte-identical normalized reports.
    const std::string flags = "--check psh --domain I:2,2 --seed 7 --samples 40";
    const int e1 = spawn_cli(flags + " --out /tmp/bsdv_acceptance_a.json");
    const int e2 = spawn_cli(flags + " --out /tmp/bsdv_acceptance_b.json");
    ok = ok && e1 == 0 && e2 == 0;
    const std::string ja = slurp("/tmp/bsdv_acceptance_a.json");
    const std::string jb = slurp("/tmp/bsdv_acceptance_b.json");
    ok = ok && !ja.empty() && !jb.empty();
    ok = ok && normalized_json(parse_report_json(ja)) == normalized_json(parse_report_json(jb));

    const int efail = spawn_cli("--check invariance --domain I:2,2 --samples 20 --tol 1e-18");
    const int econf1 = spawn_cli("--check identity --domain II:4");
    const int econf2 = spawn_cli("--check psh --domain bogus");
    ok = ok && efail == 1 && econf1 == 2 && econf2 == 2;

    detail = std::to_string(replayed) + "/" + std::to_string(runs.size()) +
             " configs byte-identical modulo wall_time; CLI exits pass=" + std::to_string(e1) +
             " fail=" + std::to_string(efail) + " config=" + std::to_string(econf1) + "," +
             std::to_string(econf2);
    return ok;
}

struct Criterion {
    const char* label;
    bool (*fn)(std::string&);
    double budget_s; // 0 = no stated budget
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"type I closed-form Hessian identities", crit_identity_i, 30.0},
        {"type IV polydisc norm and determinant identities", crit_identity_iv, 5.0},
        {"log psi plurisubharmonic on kinds I-VI", crit_psh, 300.0},
        {"log psi invariant under automorphism actions", crit_invariance, 60.0},
        {"exhaustion exponent 1/(2 rank) psh; disc exponent 0.55 rejected", crit_exponent, 0.0},
        {"Diederich-Fornaess scan on the disc pair", crit_df, 120.0},
        {"strict psh of -delta_bar^(1/(2 rank)) on interior pairs", crit_strict, 0.0},
        {"cycle sum psi_k matches delta products; doubling exact", crit_psi_k, 0.0},
        {"bundle sections keep joint log psi psh", crit_sections, 0.0},
        {"octonion and Jordan algebra kernel identities", crit_octonion, 10.0},
        {"deterministic reports and CLI exit codes", crit_determinism, 0.0},
    };

    int passed = 0;
    const int total = static_cast<int>(sizeof criteria / sizeof criteria[0]);
    for (int i = 0; i < total; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criteria[i].budget_s > 0.0 && secs > criteria[i].budget_s) {
            ok = false;
            detail += "; exceeded " + fmt(criteria[i].budget_s) + " s budget";
        }
        if (ok) ++passed;
        std::printf("[%2d/%d] %s  %s (%s; %.1f s)\n", i + 1, total, ok ? "PASS" : "FAIL",
                    criteria[i].label, detail.c_str(), secs);
        std::fflush(stdout);
    }

    std::printf("acceptance: %d/%d criteria passed\n", passed, total);
    return passed == total ? 0 : 1;
}
