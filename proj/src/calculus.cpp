#include "bsdv/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "bsdv/errors.hpp"

namespace bsdv {

namespace {

constexpr double step_floor = 1e-8;
constexpr int max_halvings = 10;

// Probe entries for the cross-route asymmetry measurement: a short fixed
// list of index pairs spread over the matrix.
std::vector<std::pair<int, int>> probe_pairs(int dim) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j + 1 < dim && j < 5; ++j) out.emplace_back(j, j + 1);
    if (dim >= 3) out.emplace_back(0, dim - 1);
    return out;
}

// Visit every displaced point the Hessian stencils will touch.  The visitor
// returns false to abort the walk (used for the membership scan).
template <typename Visit>
bool walk_stencil(int dim, const std::vector<cx>& z, double h, Visit visit) {
    std::vector<cx> p = z;
    auto probe = [&](int j, cx dj, int k, cx dk) {
        p[static_cast<size_t>(j)] += dj;
        if (k >= 0) p[static_cast<size_t>(k)] += dk;
        const bool keep = visit(static_cast<const std::vector<cx>&>(p));
        p[static_cast<size_t>(j)] = z[static_cast<size_t>(j)];
        if (k >= 0) p[static_cast<size_t>(k)] = z[static_cast<size_t>(k)];
        return keep;
    };
    const double sg[2] = {1.0, -1.0};
    for (int j = 0; j < dim; ++j)
        for (double s : sg) {
            if (!probe(j, cx(s * h, 0.0), -1, 0.0)) return false;
            if (!probe(j, cx(0.0, s * h), -1, 0.0)) return false;
        }
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k)
            for (double s1 : sg)
                for (double s2 : sg) {
                    if (!probe(j, cx(s1 * h, 0.0), k, cx(s2 * h, 0.0))) return false; // D_xx
                    if (!probe(j, cx(0.0, s1 * h), k, cx(0.0, s2 * h))) return false; // D_yy
                    if (!probe(j, cx(s1 * h, 0.0), k, cx(0.0, s2 * h))) return false; // D_xy
                    if (!probe(j, cx(0.0, s1 * h), k, cx(s2 * h, 0.0))) return false; // D_yx
                }
    // Polarization probes move along u = e_j + w e_k, |w| = 1.
    for (auto [j, k] : probe_pairs(dim))
        for (cx w : {cx(1, 0), cx(-1, 0), cx(0, -1), cx(0, 1)})
            for (double s : sg) {
                if (!probe(j, cx(s * h, 0.0), k, s * h * w)) return false;
                if (!probe(j, cx(0.0, s * h), k, cx(0.0, 1.0) * (s * h) * w)) return false;
            }
    return true;
}

bool stencil_inside(const Field& f, const std::vector<cx>& z, double h) {
    return walk_stencil(f.dim, z, h, [&](const std::vector<cx>& p) { return f.inside(p); });
}

double settle_step(const Field& f, const std::vector<cx>& z, double step) {
    double h = step;
    if (h <= 0.0) h = std::min(1e-3, 0.05 * star_clearance(f, z));
    if (h < step_floor)
        throw Error(ErrorCode::step_underflow, "finite-difference step below 1e-8");
    int halvings = 0;
    while (!stencil_inside(f, z, h)) {
        if (halvings >= max_halvings)
            throw Error(ErrorCode::stencil_out_of_domain, "stencil leaves the domain after 10 halvings");
        h *= 0.5;
        ++halvings;
        if (h < step_floor)
            throw Error(ErrorCode::step_underflow, "finite-difference step below 1e-8");
    }
    return h;
}

// Core evaluation at a fixed, already validated step.
HessianReport eval_hessian(const Field& f, const std::vector<cx>& z, double h) {
    const int d = f.dim;
    std::vector<cx> p = z;
    auto at = [&](int j, cx dj, int k, cx dk) {
        p[static_cast<size_t>(j)] += dj;
        if (k >= 0) p[static_cast<size_t>(k)] += dk;
        const double v = f.eval(p);
        p[static_cast<size_t>(j)] = z[static_cast<size_t>(j)];
        if (k >= 0) p[static_cast<size_t>(k)] = z[static_cast<size_t>(k)];
        return v;
    };
    const double f0 = f.eval(z);
    const double h2 = h * h;

    HessianReport rep;
    rep.step = h;
    rep.hessian = CMat(d, d);
    for (int j = 0; j < d; ++j) {
        const double lap = at(j, cx(h, 0), -1, 0.0) + at(j, cx(-h, 0), -1, 0.0) + at(j, cx(0, h), -1, 0.0) +
                           at(j, cx(0, -h), -1, 0.0) - 4.0 * f0;
        rep.hessian(j, j) = 0.25 * lap / h2;
    }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            auto mixed = [&](bool j_imag, bool k_imag) {
                const cx dja = j_imag ? cx(0, h) : cx(h, 0);
                const cx dka = k_imag ? cx(0, h) : cx(h, 0);
                return (at(j, dja, k, dka) - at(j, dja, k, -dka) - at(j, -dja, k, dka) + at(j, -dja, k, -dka)) /
                       (4.0 * h2);
            };
            const double dxx = mixed(false, false);
            const double dyy = mixed(true, true);
            const double dxy = mixed(false, true);
            const double dyx = mixed(true, false);
            const cx v = 0.25 * cx(dxx + dyy, dxy - dyx);
            rep.hessian(j, k) = v;
            rep.hessian(k, j) = std::conj(v);
        }

    // Independent route for a few off-diagonal entries: polarize the
    // directional Laplacian Q(u) ~ u* H u over u = e_j + w e_k.
    auto direction_lap = [&](int j, cx w, int k) {
        // f at z + t (e_j + w e_k) for t in {h, -h, ih, -ih}
        auto ft = [&](cx t) { return at(j, t, k, t * w); };
        return 0.25 * (ft(cx(h, 0)) + ft(cx(-h, 0)) + ft(cx(0, h)) + ft(cx(0, -h)) - 4.0 * f0) / h2;
    };
    // Q(e_j + w e_k) = H_jj + H_kk + conj(w) H_jk + w conj(H_jk), so the
    // w = +/-1 pair isolates Re H_jk and the w = +/-i pair isolates Im H_jk.
    for (auto [j, k] : probe_pairs(d)) {
        const double re = 0.25 * (direction_lap(j, cx(1, 0), k) - direction_lap(j, cx(-1, 0), k));
        const double im = 0.25 * (direction_lap(j, cx(0, 1), k) - direction_lap(j, cx(0, -1), k));
        rep.asym_residual = std::max(rep.asym_residual, std::abs(cx(re, im) - rep.hessian(j, k)));
    }

    rep.max_abs_entry = rep.hessian.max_abs();
    rep.min_eig = min_eigenvalue_hermitian(rep.hessian);
    return rep;
}

std::vector<cx> scale_point(const std::vector<cx>& z, double factor) {
    std::vector<cx> out = z;
    for (auto& v : out) v *= factor;
    return out;
}

PshVerdict run_psh(const Field& f, const std::vector<std::vector<cx>>& points, double tol, double step, bool strict) {
    PshVerdict v;
    v.pass = true;
    double worst = 1e300; // normalized min eigenvalue
    for (const auto& pt : points) {
        const HessianReport rep = complex_hessian_richardson(f, pt, step);
        const double scale = std::max(1.0, rep.max_abs_entry);
        const double normalized = rep.min_eig / scale;
        ++v.samples;
        if (normalized < worst) {
            worst = normalized;
            v.worst_min_eig = rep.min_eig;
            v.worst_scale = scale;
            v.worst_point = pt;
        }
    }
    if (v.samples == 0) {
        v.pass = false;
        return v;
    }
    if (strict) {
        v.pass = worst > tol;
        v.flagged = false;
    } else {
        v.pass = worst >= -tol;
        v.flagged = v.pass && worst <= tol;
    }
    return v;
}

} // namespace

double star_clearance(const Field& f, const std::vector<cx>& z) {
    if (!f.inside(z)) throw Error(ErrorCode::outside_domain, "clearance requested outside the domain");
    double zmax = 0.0;
    for (const cx& v : z) zmax = std::max(zmax, std::abs(v));
    if (zmax == 0.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f.inside(scale_point(z, 1.0 / (1.0 - mid))))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

HessianReport complex_hessian_fd(const Field& f, const std::vector<cx>& z, double step) {
    if (static_cast<int>(z.size()) != f.dim)
        throw Error(ErrorCode::shape_mismatch, "point dimension does not match the field");
    if (!f.inside(z)) throw Error(ErrorCode::outside_domain, "Hessian requested outside the domain");
    return eval_hessian(f, z, settle_step(f, z, step));
}

HessianReport complex_hessian_richardson(const Field& f, const std::vector<cx>& z, double step) {
    if (static_cast<int>(z.size()) != f.dim)
        throw Error(ErrorCode::shape_mismatch, "point dimension does not match the field");
    if (!f.inside(z)) throw Error(ErrorCode::outside_domain, "Hessian requested outside the domain");
    const double h = settle_step(f, z, step);
    // The halved stencil is contained in the full one only for convex sets;
    // scan it separately so star-shaped-but-nonconvex fields stay honest.
    if (!stencil_inside(f, z, 0.5 * h))
        throw Error(ErrorCode::stencil_out_of_domain, "halved stencil leaves the domain");
    const HessianReport full = eval_hessian(f, z, h);
    const HessianReport half = eval_hessian(f, z, 0.5 * h);
    HessianReport rep;
    rep.step = h;
    rep.hessian = (cx(4.0 / 3.0) * half.hessian) - (cx(1.0 / 3.0) * full.hessian);
    rep.asym_residual = std::max(full.asym_residual, half.asym_residual);
    rep.max_abs_entry = rep.hessian.max_abs();
    rep.min_eig = min_eigenvalue_hermitian(rep.hessian);
    return rep;
}

double directional_laplacian_fd(const Field& f, const std::vector<cx>& z, const std::vector<cx>& u, double step) {
    if (static_cast<int>(z.size()) != f.dim || u.size() != z.size())
        throw Error(ErrorCode::shape_mismatch, "point/direction dimension does not match the field");
    if (!f.inside(z)) throw Error(ErrorCode::outside_domain, "Laplacian requested outside the domain");
    if (step < step_floor) throw Error(ErrorCode::step_underflow, "finite-difference step below 1e-8");
    const double f0 = f.eval(z);
    auto ft = [&](cx t) {
        std::vector<cx> p = z;
        for (size_t i = 0; i < p.size(); ++i) p[i] += t * u[i];
        if (!f.inside(p)) throw Error(ErrorCode::stencil_out_of_domain, "directional stencil leaves the domain");
        return f.eval(p);
    };
    const double h = step;
    return 0.25 * (ft(cx(h, 0)) + ft(cx(-h, 0)) + ft(cx(0, h)) + ft(cx(0, -h)) - 4.0 * f0) / (h * h);
}

PshVerdict psh_check(const Field& f, const std::vector<std::vector<cx>>& points, double tol, double step) {
    return run_psh(f, points, tol, step, false);
}

PshVerdict strict_psh_check(const Field& f, const std::vector<std::vector<cx>>& points, double tol, double step) {
    return run_psh(f, points, tol, step, true);
}

} // namespace bsdv
