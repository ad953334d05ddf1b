#include "bsdv/exhaustions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "bsdv/errors.hpp"
#include "bsdv/linalg.hpp"

namespace bsdv {

namespace {

// log delta without membership validation; callers guarantee both points
// are interior, which keeps the generic norms positive and the polarized
// norm bounded away from zero (two-point inequality).
double log_delta_raw(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w) {
    const double sz = generic_norm(spec, z);
    const double sw = generic_norm(spec, w);
    const cx n = generic_norm_polarized(spec, z, w);
    return norm_exponent(spec) * (std::log(sz) + std::log(sw) - std::log(std::norm(n)));
}

void require_interior(const DomainSpec& spec, const DomainPoint& z, const char* who) {
    if (!contains(spec, z)) {
        throw Error(ErrorCode::outside_domain,
                    std::string(who) + ": point is not interior to " + spec.token());
    }
}

DomainPoint point_from_range(const std::vector<cx>& joint, int begin, int count) {
    DomainPoint p;
    p.coords.assign(joint.begin() + begin, joint.begin() + begin + count);
    return p;
}

// Membership of z scaled by 1/(1-c); the domains are balanced and convex,
// so this witnesses star clearance >= c.
bool has_clearance(const DomainSpec& spec, const DomainPoint& z, double c) {
    DomainPoint scaled = z;
    const double f = 1.0 / (1.0 - c);
    for (cx& v : scaled.coords) v *= f;
    return contains(spec, scaled);
}

} // namespace

double delta(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w) {
    require_interior(spec, z, "delta");
    require_interior(spec, w, "delta");
    return std::exp(log_delta_raw(spec, z, w));
}

double log_psi(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w,
               double genus) {
    if (!(genus > 0.0)) {
        throw Error(ErrorCode::config_error, "log_psi: genus must be positive");
    }
    require_interior(spec, z, "log_psi");
    require_interior(spec, w, "log_psi");
    return -genus * log_delta_raw(spec, z, w);
}

double hyperconvex_fn(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w,
                      double r) {
    if (!(r >= 1.0)) {
        throw Error(ErrorCode::config_error, "hyperconvex_fn: exponent r must be >= 1");
    }
    require_interior(spec, z, "hyperconvex_fn");
    require_interior(spec, w, "hyperconvex_fn");
    return -std::exp(log_delta_raw(spec, z, w) / r);
}

double psi_k(const DomainSpec& spec, const std::vector<DomainPoint>& cycle, double genus) {
    if (cycle.size() < 2) {
        throw Error(ErrorCode::config_error, "psi_k: need at least two points in the cycle");
    }
    if (!(genus > 0.0)) {
        throw Error(ErrorCode::config_error, "psi_k: genus must be positive");
    }
    for (const DomainPoint& p : cycle) require_interior(spec, p, "psi_k");
    double total = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const DomainPoint& a = cycle[i];
        const DomainPoint& b = cycle[(i + 1) % cycle.size()];
        total += -genus * log_delta_raw(spec, a, b);
    }
    return total;
}

double delta_bar(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w) {
    require_interior(spec, z, "delta_bar");
    require_interior(spec, w, "delta_bar");
    return std::exp(log_delta_raw(spec, z, conj_point(spec, w)));
}

std::vector<cx> joint_coords(const DomainPoint& z, const DomainPoint& w) {
    std::vector<cx> joint;
    joint.reserve(z.coords.size() + w.coords.size());
    joint.insert(joint.end(), z.coords.begin(), z.coords.end());
    joint.insert(joint.end(), w.coords.begin(), w.coords.end());
    return joint;
}

std::pair<DomainPoint, DomainPoint> split_joint(const DomainSpec& spec,
                                                const std::vector<cx>& joint) {
    const int d = spec.ambient_dim();
    if (static_cast<int>(joint.size()) != 2 * d) {
        throw Error(ErrorCode::shape_mismatch,
                    "split_joint: expected " + std::to_string(2 * d) + " coordinates, got " +
                        std::to_string(joint.size()));
    }
    return {point_from_range(joint, 0, d), point_from_range(joint, d, d)};
}

Field pair_field_log_psi(const DomainSpec& spec, double genus) {
    if (!(genus > 0.0)) {
        throw Error(ErrorCode::config_error, "pair_field_log_psi: genus must be positive");
    }
    const int d = spec.ambient_dim();
    Field f;
    f.dim = 2 * d;
    f.eval = [spec, genus, d](const std::vector<cx>& x) {
        return -genus * log_delta_raw(spec, point_from_range(x, 0, d), point_from_range(x, d, d));
    };
    f.inside = [spec, d](const std::vector<cx>& x) {
        return contains(spec, point_from_range(x, 0, d)) &&
               contains(spec, point_from_range(x, d, d));
    };
    return f;
}

Field pair_field_neg_delta_pow(const DomainSpec& spec, double mu) {
    if (!(mu > 0.0)) {
        throw Error(ErrorCode::config_error, "pair_field_neg_delta_pow: mu must be positive");
    }
    const int d = spec.ambient_dim();
    Field f;
    f.dim = 2 * d;
    f.eval = [spec, mu, d](const std::vector<cx>& x) {
        return -std::exp(mu * log_delta_raw(spec, point_from_range(x, 0, d),
                                            point_from_range(x, d, d)));
    };
    f.inside = [spec, d](const std::vector<cx>& x) {
        return contains(spec, point_from_range(x, 0, d)) &&
               contains(spec, point_from_range(x, d, d));
    };
    return f;
}

Field pair_field_neg_delta_bar_pow(const DomainSpec& spec, double mu) {
    if (!(mu > 0.0)) {
        throw Error(ErrorCode::config_error, "pair_field_neg_delta_bar_pow: mu must be positive");
    }
    const int d = spec.ambient_dim();
    Field f;
    f.dim = 2 * d;
    f.eval = [spec, mu, d](const std::vector<cx>& x) {
        const DomainPoint z = point_from_range(x, 0, d);
        const DomainPoint w = point_from_range(x, d, d);
        return -std::exp(mu * log_delta_raw(spec, z, conj_point(spec, w)));
    };
    f.inside = [spec, d](const std::vector<cx>& x) {
        return contains(spec, point_from_range(x, 0, d)) &&
               contains(spec, point_from_range(x, d, d));
    };
    return f;
}

const char* section_kind_name(SectionKind kind) {
    switch (kind) {
        case SectionKind::constant: return "constant";
        case SectionKind::holomorphic_affine: return "holomorphic_affine";
        case SectionKind::antiholomorphic_affine: return "antiholomorphic_affine";
    }
    return "unknown";
}

SectionKind parse_section_kind(const std::string& text) {
    if (text == "const" || text == "constant") return SectionKind::constant;
    if (text == "holo" || text == "holomorphic_affine") return SectionKind::holomorphic_affine;
    if (text == "antiholo" || text == "antiholomorphic_affine") {
        return SectionKind::antiholomorphic_affine;
    }
    throw Error(ErrorCode::config_error, "unknown section kind '" + text + "'");
}

DomainPoint SectionSpec::apply(const DomainSpec& spec, const std::vector<cx>& xi) const {
    const int d = spec.ambient_dim();
    if (static_cast<int>(xi.size()) != base_dim ||
        static_cast<int>(dirs.size()) != base_dim ||
        static_cast<int>(center.coords.size()) != d) {
        throw Error(ErrorCode::shape_mismatch, "section: base/ambient dimensions disagree");
    }
    DomainPoint out = center;
    if (kind == SectionKind::constant) return out;
    for (int j = 0; j < base_dim; ++j) {
        if (static_cast<int>(dirs[j].size()) != d) {
            throw Error(ErrorCode::shape_mismatch, "section: direction has wrong length");
        }
        const cx c = (kind == SectionKind::antiholomorphic_affine) ? std::conj(xi[j]) : xi[j];
        for (int a = 0; a < d; ++a) out.coords[a] += c * dirs[j][a];
    }
    return out;
}

SectionSpec random_section(const DomainSpec& spec, SectionKind kind, int base_dim,
                           Rng& rng, double clearance) {
    if (base_dim < 1) {
        throw Error(ErrorCode::config_error, "random_section: base_dim must be >= 1");
    }
    if (!(clearance > 0.0) || !(clearance < 0.9)) {
        throw Error(ErrorCode::config_error, "random_section: clearance must lie in (0, 0.9)");
    }
    const int d = spec.ambient_dim();
    SectionSpec s;
    s.kind = kind;
    s.base_dim = base_dim;
    s.center = sample_interior(spec, rng, 0.05, 0.5);
    s.dirs.assign(base_dim, std::vector<cx>(d, cx(0.0, 0.0)));
    if (kind == SectionKind::constant) return s;

    for (int j = 0; j < base_dim; ++j) {
        double norm2 = 0.0;
        for (int a = 0; a < d; ++a) {
            s.dirs[j][a] = rng.complex_normal();
            norm2 += std::norm(s.dirs[j][a]);
        }
        const double target = 0.15 / std::sqrt(static_cast<double>(base_dim));
        const double f = target / std::sqrt(std::max(norm2, 1e-300));
        for (cx& v : s.dirs[j]) v *= f;
    }

    // Deterministic boundary-biased base sample used for every shrink round.
    const int probes = 160;
    std::vector<std::vector<cx>> sample(probes, std::vector<cx>(base_dim));
    for (auto& xi : sample) {
        for (cx& v : xi) {
            const double radius = 0.999 * std::pow(rng.uniform01(), 0.25);
            v = radius * rng.unit_phase();
        }
    }

    for (int attempt = 0; attempt < 14; ++attempt) {
        bool ok = has_clearance(spec, s.center, clearance);
        for (int i = 0; ok && i < probes; ++i) {
            ok = has_clearance(spec, s.apply(spec, sample[i]), clearance);
        }
        if (ok) return s;
        for (auto& dir : s.dirs) {
            for (cx& v : dir) v *= 0.5;
        }
    }
    throw Error(ErrorCode::section_escaped_domain,
                "random_section: could not fit a section with the requested clearance");
}

double bundle_section_fn(const DomainSpec& spec, const SectionSpec& section,
                         const std::vector<cx>& xi, const DomainPoint& w, double genus) {
    if (!(genus > 0.0)) {
        throw Error(ErrorCode::config_error, "bundle_section_fn: genus must be positive");
    }
    const DomainPoint z = section.apply(spec, xi);
    if (!contains(spec, z)) {
        throw Error(ErrorCode::section_escaped_domain,
                    "bundle_section_fn: section image left the domain");
    }
    require_interior(spec, w, "bundle_section_fn");
    return -genus * log_delta_raw(spec, z, w);
}

Field bundle_field(const DomainSpec& spec, const SectionSpec& section, double genus) {
    if (!(genus > 0.0)) {
        throw Error(ErrorCode::config_error, "bundle_field: genus must be positive");
    }
    const int b = section.base_dim;
    const int d = spec.ambient_dim();
    const SectionSpec h = section;
    Field f;
    f.dim = b + d;
    f.eval = [spec, h, genus, b, d](const std::vector<cx>& x) {
        std::vector<cx> xi(x.begin(), x.begin() + b);
        return -genus * log_delta_raw(spec, h.apply(spec, xi), point_from_range(x, b, d));
    };
    f.inside = [spec, h, b, d](const std::vector<cx>& x) {
        for (int j = 0; j < b; ++j) {
            if (std::abs(x[j]) >= 1.0) return false;
        }
        std::vector<cx> xi(x.begin(), x.begin() + b);
        return contains(spec, point_from_range(x, b, d)) && contains(spec, h.apply(spec, xi));
    };
    return f;
}

double boundary_scale(const DomainSpec& spec, const std::vector<cx>& direction) {
    const int d = spec.ambient_dim();
    if (static_cast<int>(direction.size()) != d) {
        throw Error(ErrorCode::shape_mismatch, "boundary_scale: wrong coordinate count");
    }
    double mag = 0.0;
    for (const cx& v : direction) mag = std::max(mag, std::abs(v));
    if (mag == 0.0) {
        throw Error(ErrorCode::config_error, "boundary_scale: zero direction");
    }
    auto inside_at = [&](double t) {
        DomainPoint p;
        p.coords.resize(d);
        for (int a = 0; a < d; ++a) p.coords[a] = t * direction[a];
        return contains(spec, p);
    };
    double lo = 0.0;
    double hi = 1.0 / mag; // normalized start; the domains are bounded
    int guard = 0;
    while (inside_at(hi) && guard++ < 80) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (inside_at(mid) ? lo : hi) = mid;
    }
    return lo;
}

DomainPoint sample_interior(const DomainSpec& spec, Rng& rng, double min_fill,
                            double max_fill) {
    if (!(min_fill > 0.0) || !(min_fill <= max_fill) || !(max_fill < 1.0)) {
        throw Error(ErrorCode::config_error, "sample_interior: need 0 < min_fill <= max_fill < 1");
    }
    const int d = spec.ambient_dim();
    std::vector<cx> dir(d);
    for (cx& v : dir) v = rng.complex_normal();
    const double edge = boundary_scale(spec, dir);
    const double fill = rng.uniform(min_fill, max_fill);
    DomainPoint p;
    p.coords.resize(d);
    for (int a = 0; a < d; ++a) p.coords[a] = (fill * edge) * dir[a];
    return p;
}

PairPoint sample_pair(const DomainSpec& spec, Rng& rng, double max_fill) {
    if (spec.kind == DomainKind::V || spec.kind == DomainKind::VI) {
        if (rng.uniform01() < 0.7) {
            const int r = spec.rank();
            std::vector<cx> zeta(r), xi(r);
            for (cx& v : zeta) v = rng.uniform(0.05, std::min(max_fill, 0.8)) * rng.unit_phase();
            for (cx& v : xi) v = rng.uniform(0.05, std::min(max_fill, 0.8)) * rng.unit_phase();
            return {polydisc_embed(spec, zeta), polydisc_embed(spec, xi)};
        }
        auto small_point = [&]() {
            const int d = spec.ambient_dim();
            DomainPoint p;
            p.coords.resize(d);
            double norm2 = 0.0;
            for (cx& v : p.coords) {
                v = rng.complex_normal();
                norm2 += std::norm(v);
            }
            const double target = rng.uniform(0.05, 0.3);
            const double f = target / std::sqrt(std::max(norm2, 1e-300));
            for (cx& v : p.coords) v *= f;
            return p;
        };
        return {small_point(), small_point()};
    }
    return {sample_interior(spec, rng, 0.05, max_fill),
            sample_interior(spec, rng, 0.05, max_fill)};
}

std::vector<PairPoint> sample_pairs(const DomainSpec& spec, int count, Rng& rng,
                                    double max_fill) {
    std::vector<PairPoint> out;
    out.reserve(std::max(count, 0));
    for (int i = 0; i < count; ++i) out.push_back(sample_pair(spec, rng, max_fill));
    return out;
}

PairPoint boundary_pair(const DomainSpec& spec, double t, Rng& rng) {
    if (!(t > 0.0) || !(t < 1.0)) {
        throw Error(ErrorCode::config_error, "boundary_pair: t must lie in (0, 1)");
    }
    const int d = spec.ambient_dim();
    std::vector<cx> dir(d);
    for (cx& v : dir) v = rng.complex_normal();
    const double edge = boundary_scale(spec, dir);
    DomainPoint w;
    w.coords.resize(d);
    for (int a = 0; a < d; ++a) w.coords[a] = (t * edge) * dir[a];
    return {DomainPoint::zero(spec), w};
}

ExponentScanResult exponent_scan(const DomainSpec& spec, const std::vector<double>& grid,
                                 const std::vector<PairPoint>& pairs, double tol,
                                 double step) {
    if (grid.empty()) {
        throw Error(ErrorCode::config_error, "exponent_scan: empty exponent grid");
    }
    if (pairs.empty()) {
        throw Error(ErrorCode::config_error, "exponent_scan: no sample pairs");
    }
    std::vector<double> mus = grid;
    std::sort(mus.begin(), mus.end());
    if (!(mus.front() > 0.0)) {
        throw Error(ErrorCode::config_error, "exponent_scan: exponents must be positive");
    }
    std::vector<std::vector<cx>> points;
    points.reserve(pairs.size());
    for (const PairPoint& p : pairs) points.push_back(joint_coords(p.z, p.w));

    ExponentScanResult result;
    result.mu_threshold = 1.0 / (2.0 * spec.rank());
    result.pass = true;
    for (double mu : mus) {
        const Field f = pair_field_neg_delta_pow(spec, mu);
        const PshVerdict v = psh_check(f, points, tol, step);
        result.verdicts.push_back(
            {mu, v.pass, v.flagged, v.worst_min_eig, v.worst_scale, v.worst_point});
        if (mu <= result.mu_threshold + 1e-12 && !v.pass) result.pass = false;
    }
    return result;
}

DfScanResult df_scan(int ball_dim, const std::vector<double>& grid, Rng& rng, double tol,
                     int directions_per_level) {
    if (ball_dim < 1) {
        throw Error(ErrorCode::config_error, "df_scan: ball dimension must be >= 1");
    }
    if (directions_per_level < 1) {
        throw Error(ErrorCode::config_error, "df_scan: need at least one direction per level");
    }
    const DomainSpec spec = DomainSpec::type_i(1, ball_dim);
    std::vector<PairPoint> pairs;
    const double levels[] = {0.9, 0.925, 0.95, 0.975, 0.99, 0.999};
    for (double t : levels) {
        for (int i = 0; i < directions_per_level; ++i) {
            pairs.push_back(boundary_pair(spec, t, rng));
        }
    }
    for (int i = 0; i < 16; ++i) pairs.push_back(sample_pair(spec, rng));

    DfScanResult out;
    out.scan = exponent_scan(spec, grid, pairs, tol);
    out.estimate = 0.0;
    for (const ExponentVerdict& v : out.scan.verdicts) {
        if (!v.pass) break;
        out.estimate = v.mu;
    }
    return out;
}

double IdentityReport::max_residual() const {
    double worst = 0.0;
    for (const IdentityFamily& fam : families) worst = std::max(worst, fam.residual);
    return worst;
}

namespace {

// Keeps the running per-family maximum together with the sample realizing it.
void bump(IdentityFamily& fam, double residual, const std::vector<cx>& point) {
    if (residual >= fam.residual) {
        fam.residual = residual;
        fam.worst_point = point;
    }
}

// Type I: finite differences of log det(I - W W*) at diagonal base points
// against the closed-form entries.
IdentityReport identity_suite_type_i(const DomainSpec& spec, int samples, Rng& rng,
                                     double step) {
    const int p = spec.p;
    const int q = spec.q;
    const int rank = std::min(p, q);
    const int dim = p * q;

    Field f;
    f.dim = dim;
    f.eval = [spec](const std::vector<cx>& x) {
        DomainPoint z;
        z.coords = x;
        return std::log(generic_norm(spec, z));
    };
    f.inside = [spec](const std::vector<cx>& x) {
        DomainPoint z;
        z.coords = x;
        return contains(spec, z);
    };

    IdentityReport out;
    out.families = {{"i_diag", 0.0, {}},
                    {"i_diag_cross", 0.0, {}},
                    {"i_mixed", 0.0, {}},
                    {"i_other", 0.0, {}},
                    {"i_bound", 0.0, {}}};

    for (int s = 0; s < samples; ++s) {
        std::vector<cx> diag(rank);
        for (cx& v : diag) v = rng.uniform(0.0, 0.6) * rng.unit_phase();

        std::vector<cx> x(dim, cx(0.0, 0.0));
        for (int i = 0; i < rank; ++i) x[i * q + i] = diag[i];

        const HessianReport rep = complex_hessian_fd(f, x, step);
        const CMat& H = rep.hessian;

        auto row_factor = [&](int i) { return i < rank ? 1.0 - std::norm(diag[i]) : 1.0; };
        auto col_factor = [&](int j) { return j < rank ? 1.0 - std::norm(diag[j]) : 1.0; };

        for (int i = 0; i < p; ++i) {
            for (int j = 0; j < q; ++j) {
                const int a = i * q + j;
                for (int k = 0; k < p; ++k) {
                    for (int l = 0; l < q; ++l) {
                        const int b = k * q + l;
                        const cx h = H(a, b);
                        if (a == b) {
                            const double expected = -1.0 / (row_factor(i) * col_factor(j));
                            bump(out.families[i == j ? 0 : 2], std::abs(h - cx(expected, 0.0)), x);
                        } else if (i == j && k == l) {
                            bump(out.families[1], std::abs(h), x);
                        } else {
                            bump(out.families[3], std::abs(h), x);
                        }
                    }
                }
            }
        }

        CMat bound(dim, dim);
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) bound(a, b) = -H(a, b) - (a == b ? cx(1.0) : cx(0.0));
        }
        bump(out.families[4], std::max(0.0, -min_eigenvalue_hermitian(bound)), x);
    }
    return out;
}

// Type IV: analytic first/second derivatives of
// S(w) = 1 - 2 sum |w_j|^2 + |sum w_j^2|^2 at polydisc points, against the
// closed forms in (zeta_1, zeta_2).
IdentityReport identity_suite_type_iv(const DomainSpec& spec, int samples, Rng& rng) {
    const int n = spec.n;

    IdentityReport out;
    out.families = {{"iv_norm", 0.0, {}},
                    {"iv_entry_diag", 0.0, {}},
                    {"iv_entry_off", 0.0, {}},
                    {"iv_det", 0.0, {}},
                    {"iv_bound", 0.0, {}}};

    for (int s = 0; s < samples; ++s) {
        cx z1, z2;
        double a = 0.0;
        // Keep the moduli separated so the determinant identity has a
        // well-conditioned relative scale 4 a^2 S.
        do {
            z1 = rng.uniform(0.0, 0.9) * rng.unit_phase();
            z2 = rng.uniform(0.0, 0.9) * rng.unit_phase();
            a = std::norm(z1) - std::norm(z2);
        } while (std::abs(a) < 0.05);
        const double b = 2.0 - std::norm(z1) - std::norm(z2);
        const double s_closed = (1.0 - std::norm(z1)) * (1.0 - std::norm(z2));

        const DomainPoint w = polydisc_embed(spec, {z1, z2});
        const double S = generic_norm(spec, w);
        bump(out.families[0], std::abs(S - s_closed), w.coords);

        cx sigma(0.0, 0.0);
        for (const cx& v : w.coords) sigma += v * v;
        std::vector<cx> dS(n);
        for (int j = 0; j < n; ++j) {
            dS[j] = -2.0 * (std::conj(w.coords[j]) - w.coords[j] * std::conj(sigma));
        }
        auto combo = [&](int j, int k) {
            const cx hjk = (j == k ? cx(-2.0) : cx(0.0)) +
                           4.0 * w.coords[j] * std::conj(w.coords[k]);
            return -S * hjk + dS[j] * std::conj(dS[k]);
        };

        const cx c00 = combo(0, 0);
        const cx c11 = combo(1, 1);
        const cx c01 = combo(0, 1);
        const cx expected_diag(2.0 * s_closed + a * a, 0.0);
        const cx expected_off(0.0, a * b);
        bump(out.families[1],
             std::max(std::abs(c00 - expected_diag), std::abs(c11 - expected_diag)), w.coords);
        bump(out.families[2], std::abs(c01 - expected_off), w.coords);

        // 2x2 comparison block (the combination matrix minus 2S on the
        // diagonal); the magnitude of its determinant is 4 a^2 S.
        const cx m00 = c00 - 2.0 * S;
        const cx m11 = c11 - 2.0 * S;
        const cx det2 = m00 * m11 - c01 * std::conj(c01);
        const double target = 4.0 * a * a * s_closed;
        bump(out.families[3], std::abs(std::abs(det2) - target) / target, w.coords);

        CMat M(n, n);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k <= j; ++k) {
                const cx c = combo(j, k) / (S * S);
                M(j, k) = c - (j == k ? cx(2.0) : cx(0.0));
                if (j != k) M(k, j) = std::conj(M(j, k));
            }
        }
        bump(out.families[4], std::max(0.0, -min_eigenvalue_hermitian(M)), w.coords);
    }
    return out;
}

} // namespace

IdentityReport identity_suite(const DomainSpec& spec, int samples, Rng& rng, double step) {
    if (samples < 1) {
        throw Error(ErrorCode::config_error, "identity_suite: samples must be >= 1");
    }
    switch (spec.kind) {
        case DomainKind::I: return identity_suite_type_i(spec, samples, rng, step);
        case DomainKind::IV: return identity_suite_type_iv(spec, samples, rng);
        default:
            throw Error(ErrorCode::unsupported_domain,
                        "identity_suite: closed forms are available for kinds I and IV only");
    }
}

} // namespace bsdv
