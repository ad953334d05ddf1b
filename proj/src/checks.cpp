#include "bsdv/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "bsdv/errors.hpp"
#include "bsdv/moebius.hpp"
#include "bsdv/rng.hpp"
#include "bsdv/version.hpp"

#include "json.hpp"

namespace bsdv {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kCheckNames[] = {"psh",      "strict",        "invariance", "identity",
                                       "exponent_scan", "df_scan", "section"};

std::string verdict_word(bool pass, bool flagged) {
    if (!pass) return "fail";
    return flagged ? "pass-with-flag" : "pass";
}

std::vector<double> default_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
    return grid;
}

double default_tol(CheckId id) {
    return id == CheckId::invariance ? 1e-10 : 1e-6;
}

// Deterministic pair sample: one substream per sample index.
std::vector<PairPoint> seeded_pairs(const DomainSpec& spec, std::uint64_t seed, int count,
                                    double max_fill) {
    std::vector<PairPoint> pairs;
    pairs.reserve(count);
    for (int k = 0; k < count; ++k) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(k));
        pairs.push_back(sample_pair(spec, rng, max_fill));
    }
    return pairs;
}

std::vector<std::vector<cx>> to_points(const std::vector<PairPoint>& pairs) {
    std::vector<std::vector<cx>> pts;
    pts.reserve(pairs.size());
    for (const PairPoint& p : pairs) pts.push_back(joint_coords(p.z, p.w));
    return pts;
}

void fill_from_psh(Report& rep, const PshVerdict& v) {
    rep.verdict = verdict_word(v.pass, v.flagged);
    rep.worst_min_eig = v.worst_min_eig;
    rep.worst_scale = v.worst_scale;
    rep.worst_point = v.worst_point;
    rep.samples_evaluated = v.samples;
}

void run_psh_like(Report& rep, const DomainSpec& spec, const CheckRun& run, double tol) {
    const bool strict = run.check_id == CheckId::strict;
    double exponent = 0.0;
    Field field;
    if (strict) {
        const double r = run.r > 0.0 ? run.r : 2.0 * spec.rank();
        if (r < 1.0) throw Error(ErrorCode::config_error, "strict: r must be >= 1");
        exponent = 1.0 / r;
        field = pair_field_neg_delta_bar_pow(spec, exponent);
    } else if (run.r > 0.0) {
        if (run.r < 1.0) throw Error(ErrorCode::config_error, "psh: r must be >= 1");
        exponent = 1.0 / run.r;
        field = pair_field_neg_delta_pow(spec, exponent);
    } else {
        field = pair_field_log_psi(spec, run.genus);
    }
    rep.exponent = exponent;

    const auto points = to_points(seeded_pairs(spec, run.seed, run.samples, 0.9));
    const PshVerdict v = strict ? strict_psh_check(field, points, tol, run.step)
                                : psh_check(field, points, tol, run.step);
    fill_from_psh(rep, v);
}

void run_invariance(Report& rep, const DomainSpec& spec, const CheckRun& run, double tol) {
    double worst = -1.0; // normalized residual
    for (int k = 0; k < run.samples; ++k) {
        Rng rng = Rng::substream(run.seed, static_cast<std::uint64_t>(k));
        const PairPoint p = sample_pair(spec, rng, 0.9);
        const DomainAutomorphism g = random_automorphism(spec, rng);
        const double before = log_psi(spec, p.z, p.w, run.genus);
        const double after = log_psi(spec, g.apply(p.z), g.apply(p.w), run.genus);
        const double scale = 1.0 + std::abs(before);
        const double res = std::abs(after - before);
        if (res / scale > worst) {
            worst = res / scale;
            rep.worst_min_eig = -res;
            rep.worst_scale = scale;
            rep.worst_point = joint_coords(p.z, p.w);
        }
    }
    rep.samples_evaluated = run.samples;
    rep.verdict = verdict_word(worst <= tol, worst > 0.5 * tol);
}

void run_identity(Report& rep, const DomainSpec& spec, const CheckRun& run, double tol) {
    if (spec.kind != DomainKind::I && spec.kind != DomainKind::IV) {
        throw Error(ErrorCode::unsupported_domain,
                    "identity: closed forms are available for kinds I and IV only");
    }
    const double step = run.step > 0.0 ? run.step : 1e-4;
    Rng rng = Rng::substream(run.seed, 0);
    const IdentityReport suite = identity_suite(spec, run.samples, rng, step);

    double worst_ratio = 0.0;
    for (const IdentityFamily& fam : suite.families) {
        FamilyEntry entry;
        entry.name = fam.name;
        entry.residual = fam.residual;
        if (spec.kind == DomainKind::I) {
            entry.threshold = tol;
        } else {
            entry.threshold = (fam.name == "iv_det" || fam.name == "iv_bound") ? 1e-9 : 1e-12;
        }
        entry.worst_point = fam.worst_point;
        const double ratio = entry.residual / entry.threshold;
        if (ratio >= worst_ratio) {
            worst_ratio = ratio;
            rep.worst_min_eig = -ratio;
            rep.worst_scale = 1.0;
            rep.worst_point = fam.worst_point;
        }
        rep.families.push_back(std::move(entry));
    }
    rep.samples_evaluated = run.samples;
    rep.verdict = verdict_word(worst_ratio <= 1.0, worst_ratio > 0.5);
}

void fill_from_scan(Report& rep, const ExponentScanResult& scan, int hessians) {
    rep.mu_threshold = scan.mu_threshold;
    bool any_flag = false;
    bool have_worst = false;
    double worst_margin = 0.0;
    for (const ExponentVerdict& v : scan.verdicts) {
        rep.scan.push_back({v.mu, verdict_word(v.pass, v.flagged), v.worst_min_eig,
                            v.worst_scale, v.worst_point});
        if (v.mu <= scan.mu_threshold + 1e-12) {
            any_flag = any_flag || v.flagged;
            const double margin = v.worst_min_eig / v.worst_scale;
            if (!have_worst || margin < worst_margin) {
                have_worst = true;
                worst_margin = margin;
                rep.worst_min_eig = v.worst_min_eig;
                rep.worst_scale = v.worst_scale;
                rep.worst_point = v.worst_point;
            }
        }
    }
    if (!have_worst && !scan.verdicts.empty()) {
        const ExponentVerdict& v = scan.verdicts.front();
        rep.worst_min_eig = v.worst_min_eig;
        rep.worst_scale = v.worst_scale;
        rep.worst_point = v.worst_point;
    }
    rep.samples_evaluated = hessians;
    rep.verdict = verdict_word(scan.pass, any_flag);
}

void run_exponent_scan(Report& rep, const DomainSpec& spec, const CheckRun& run, double tol) {
    const std::vector<double> grid = run.mu_grid.empty() ? default_grid() : run.mu_grid;
    const std::vector<PairPoint> pairs = seeded_pairs(spec, run.seed, run.samples, 0.9);
    const ExponentScanResult scan = exponent_scan(spec, grid, pairs, tol, run.step);
    fill_from_scan(rep, scan, static_cast<int>(pairs.size() * grid.size()));
}

void run_df_scan(Report& rep, const DomainSpec& spec, const CheckRun& run, double tol) {
    if (spec.kind != DomainKind::I || spec.p != 1) {
        throw Error(ErrorCode::config_error,
                    "df_scan: the boundary-exponent scan runs on ball pairs I:1,n");
    }
    const std::vector<double> grid = run.mu_grid.empty() ? default_grid() : run.mu_grid;
    const int per_level = std::min(8, std::max(2, run.samples / 25));
    Rng rng = Rng::substream(run.seed, 0);
    const DfScanResult result = df_scan(spec.q, grid, rng, tol, per_level);
    rep.estimate = result.estimate;
    fill_from_scan(rep, result.scan,
                   static_cast<int>((6 * per_level + 16) * grid.size()));
}

void run_section(Report& rep, const DomainSpec& spec, const CheckRun& run, double tol) {
    if (run.section_base_dim < 1) {
        throw Error(ErrorCode::config_error, "section: base_dim must be >= 1");
    }
    const SectionKind kind = parse_section_kind(run.section);
    Rng rng = Rng::substream(run.seed, 0);
    const SectionSpec h = random_section(spec, kind, run.section_base_dim, rng);
    const Field field = bundle_field(spec, h, run.genus);

    std::vector<std::vector<cx>> points;
    points.reserve(run.samples);
    for (int k = 0; k < run.samples; ++k) {
        Rng sub = Rng::substream(run.seed, static_cast<std::uint64_t>(k + 1));
        std::vector<cx> pt(h.base_dim);
        for (cx& v : pt) v = sub.complex_in_disc(0.9);
        const DomainPoint w = sample_interior(spec, sub, 0.05, 0.9);
        pt.insert(pt.end(), w.coords.begin(), w.coords.end());
        points.push_back(std::move(pt));
    }
    fill_from_psh(rep, psh_check(field, points, tol, run.step));
}

ordered_json point_json(const std::vector<cx>& point) {
    ordered_json arr = ordered_json::array();
    for (const cx& v : point) arr.push_back(ordered_json::array({v.real(), v.imag()}));
    return arr;
}

std::vector<cx> point_from_json(const ordered_json& arr) {
    std::vector<cx> out;
    for (const auto& item : arr) {
        out.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
    }
    return out;
}

} // namespace

const char* check_id_name(CheckId id) { return kCheckNames[static_cast<int>(id)]; }

CheckId parse_check_id(const std::string& text) {
    for (int i = 0; i < 7; ++i) {
        if (text == kCheckNames[i]) return static_cast<CheckId>(i);
    }
    throw Error(ErrorCode::config_error, "unknown check '" + text + "'");
}

std::vector<double> parse_mu_grid(const std::string& text) {
    double a = 0.0, b = 0.0, step = 0.0;
    char c1 = 0, c2 = 0, tail = 0;
    std::istringstream in(text);
    if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || (in >> tail)) {
        throw Error(ErrorCode::config_error, "mu grid must look like a:b:step, got '" + text + "'");
    }
    if (!(a > 0.0) || !(step > 0.0) || b < a) {
        throw Error(ErrorCode::config_error, "mu grid needs 0 < a <= b and step > 0");
    }
    if ((b - a) / step > 400.0) {
        throw Error(ErrorCode::config_error, "mu grid has too many points");
    }
    std::vector<double> grid;
    for (double mu = a; mu <= b + 1e-12; mu += step) grid.push_back(mu);
    return grid;
}

bool CheckRun::operator==(const CheckRun& other) const {
    return check_id == other.check_id && domain == other.domain && seed == other.seed &&
           samples == other.samples && step == other.step && tol == other.tol &&
           r == other.r && mu_grid == other.mu_grid && section == other.section &&
           section_base_dim == other.section_base_dim && genus == other.genus;
}

Report run_check(const CheckRun& config) {
    // Configuration validation happens before any numerics; these throw.
    const DomainSpec spec = DomainSpec::parse(config.domain);
    if (config.samples < 1) {
        throw Error(ErrorCode::config_error, "samples must be >= 1");
    }
    if (config.step < 0.0 || config.tol < 0.0 || config.r < 0.0) {
        throw Error(ErrorCode::config_error, "step, tol and r must be nonnegative");
    }
    if (!(config.genus > 0.0)) {
        throw Error(ErrorCode::config_error, "genus must be positive");
    }
    const double tol = config.tol > 0.0 ? config.tol : default_tol(config.check_id);

    Report rep;
    rep.run = config;
    rep.library_version = library_version;
    rep.schema_version = report_schema_version;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (config.check_id) {
            case CheckId::psh:
            case CheckId::strict: run_psh_like(rep, spec, config, tol); break;
            case CheckId::invariance: run_invariance(rep, spec, config, tol); break;
            case CheckId::identity: run_identity(rep, spec, config, tol); break;
            case CheckId::exponent_scan: run_exponent_scan(rep, spec, config, tol); break;
            case CheckId::df_scan: run_df_scan(rep, spec, config, tol); break;
            case CheckId::section: run_section(rep, spec, config, tol); break;
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::config_error || e.code() == ErrorCode::unsupported_domain) {
            throw; // misconfiguration, not a numerical outcome
        }
        rep.verdict = "fail";
        rep.error_code = error_code_name(e.code());
        rep.error_message = e.what();
    }
    rep.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string emit_report(const Report& rep, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = rep.schema_version;
        j["library_version"] = rep.library_version;
        ordered_json run;
        run["check_id"] = check_id_name(rep.run.check_id);
        run["domain"] = rep.run.domain;
        run["seed"] = rep.run.seed;
        run["samples"] = rep.run.samples;
        run["step"] = rep.run.step;
        run["tol"] = rep.run.tol;
        run["r"] = rep.run.r;
        run["mu_grid"] = rep.run.mu_grid;
        run["section"] = rep.run.section;
        run["section_base_dim"] = rep.run.section_base_dim;
        run["genus"] = rep.run.genus;
        j["run"] = std::move(run);
        j["verdict"] = rep.verdict;
        j["worst_min_eig"] = rep.worst_min_eig;
        j["worst_scale"] = rep.worst_scale;
        j["worst_point"] = point_json(rep.worst_point);
        j["samples_evaluated"] = rep.samples_evaluated;
        j["wall_time"] = rep.wall_time;
        j["error_code"] = rep.error_code;
        j["error_message"] = rep.error_message;
        j["exponent"] = rep.exponent;
        j["mu_threshold"] = rep.mu_threshold;
        j["estimate"] = rep.estimate;
        ordered_json families = ordered_json::array();
        for (const FamilyEntry& fam : rep.families) {
            ordered_json f;
            f["name"] = fam.name;
            f["residual"] = fam.residual;
            f["threshold"] = fam.threshold;
            f["worst_point"] = point_json(fam.worst_point);
            families.push_back(std::move(f));
        }
        j["families"] = std::move(families);
        ordered_json scan = ordered_json::array();
        for (const ScanEntry& entry : rep.scan) {
            ordered_json s;
            s["mu"] = entry.mu;
            s["verdict"] = entry.verdict;
            s["worst_min_eig"] = entry.worst_min_eig;
            s["worst_scale"] = entry.worst_scale;
            s["worst_point"] = point_json(entry.worst_point);
            scan.push_back(std::move(s));
        }
        j["scan"] = std::move(scan);
        return j.dump();
    }
    if (format == "text") {
        std::ostringstream out;
        out << "check " << check_id_name(rep.run.check_id) << " on " << rep.run.domain
            << " (seed " << rep.run.seed << ", samples " << rep.run.samples << ")\n";
        out << "verdict: " << rep.verdict << "\n";
        if (!rep.error_code.empty()) {
            out << "error: [" << rep.error_code << "] " << rep.error_message << "\n";
        }
        out << "worst_min_eig: " << rep.worst_min_eig << " (scale " << rep.worst_scale
            << ")\n";
        if (rep.run.check_id == CheckId::df_scan) {
            out << "estimate: " << rep.estimate << " (threshold " << rep.mu_threshold
                << ")\n";
        }
        for (const FamilyEntry& fam : rep.families) {
            out << "  " << fam.name << ": residual " << fam.residual << " (threshold "
                << fam.threshold << ")\n";
        }
        for (const ScanEntry& entry : rep.scan) {
            out << "  mu " << entry.mu << ": " << entry.verdict << " (worst "
                << entry.worst_min_eig << " / scale " << entry.worst_scale << ")\n";
        }
        out << "samples evaluated: " << rep.samples_evaluated << "\n";
        out << "wall time: " << rep.wall_time << " s\n";
        return out.str();
    }
    throw Error(ErrorCode::config_error, "unknown report format '" + format + "'");
}

Report parse_report_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    Report rep;
    rep.schema_version = j.at("schema_version").get<std::string>();
    rep.library_version = j.at("library_version").get<std::string>();
    const ordered_json& run = j.at("run");
    rep.run.check_id = parse_check_id(run.at("check_id").get<std::string>());
    rep.run.domain = run.at("domain").get<std::string>();
    rep.run.seed = run.at("seed").get<std::uint64_t>();
    rep.run.samples = run.at("samples").get<int>();
    rep.run.step = run.at("step").get<double>();
    rep.run.tol = run.at("tol").get<double>();
    rep.run.r = run.at("r").get<double>();
    rep.run.mu_grid = run.at("mu_grid").get<std::vector<double>>();
    rep.run.section = run.at("section").get<std::string>();
    rep.run.section_base_dim = run.at("section_base_dim").get<int>();
    rep.run.genus = run.at("genus").get<double>();
    rep.verdict = j.at("verdict").get<std::string>();
    rep.worst_min_eig = j.at("worst_min_eig").get<double>();
    rep.worst_scale = j.at("worst_scale").get<double>();
    rep.worst_point = point_from_json(j.at("worst_point"));
    rep.samples_evaluated = j.at("samples_evaluated").get<int>();
    rep.wall_time = j.at("wall_time").get<double>();
    rep.error_code = j.at("error_code").get<std::string>();
    rep.error_message = j.at("error_message").get<std::string>();
    rep.exponent = j.at("exponent").get<double>();
    rep.mu_threshold = j.at("mu_threshold").get<double>();
    rep.estimate = j.at("estimate").get<double>();
    for (const auto& f : j.at("families")) {
        FamilyEntry fam;
        fam.name = f.at("name").get<std::string>();
        fam.residual = f.at("residual").get<double>();
        fam.threshold = f.at("threshold").get<double>();
        fam.worst_point = point_from_json(f.at("worst_point"));
        rep.families.push_back(std::move(fam));
    }
    for (const auto& s : j.at("scan")) {
        ScanEntry entry;
        entry.mu = s.at("mu").get<double>();
        entry.verdict = s.at("verdict").get<std::string>();
        entry.worst_min_eig = s.at("worst_min_eig").get<double>();
        entry.worst_scale = s.at("worst_scale").get<double>();
        entry.worst_point = point_from_json(s.at("worst_point"));
        rep.scan.push_back(std::move(entry));
    }
    return rep;
}

int report_exit_code(const Report& rep) { return rep.passed() ? 0 : 1; }

} // namespace bsdv
