#pragma once

#include <functional>
#include <vector>

#include "bsdv/linalg.hpp"

namespace bsdv {

/// A real-valued function of several complex variables together with the
/// open set it lives on.  `inside` must describe a set that is star-shaped
/// about the origin (true for every domain and pair/section construction in
/// this library); the step selector relies on that.
struct Field {
    int dim = 0;
    std::function<double(const std::vector<cx>&)> eval;
    std::function<bool(const std::vector<cx>&)> inside;
};

/// Complex Hessian (d^2 f / dz_j dconj(z_k)) measured by finite differences.
struct HessianReport {
    CMat hessian;           // dim x dim, Hermitian by construction
    double min_eig = 0.0;   // smallest eigenvalue
    double max_abs_entry = 0.0;
    double asym_residual = 0.0; // route disagreement on probe entries, see below
    double step = 0.0;      // step actually used after shrinking
};

/// Largest c in [0, 1] such that the scaled point z / (1 - c) is still
/// inside; z = 0 gives 1.  A star-shaped margin used to pick safe steps.
/// Throws Error(outside_domain) when z itself is not inside.
double star_clearance(const Field& f, const std::vector<cx>& z);

/**
 * Plain second-order finite differences: diagonal entries from the 4-point
 * complex-line Laplacian, off-diagonal entries from the four real mixed
 * stencils (1/4)[(D_xx + D_yy) + i (D_xy - D_yx)].
 *
 * `step` = 0 selects min(1e-3, 0.05 * star_clearance).  If any stencil
 * point leaves the set, the step is halved (at most 10 times) before
 * Error(stencil_out_of_domain); a step below 1e-8 at any stage raises
 * Error(step_underflow).
 *
 * The off-diagonal route is mirrored (H_kj = conj(H_jk)), which makes the
 * matrix structurally Hermitian; `asym_residual` therefore reports the
 * largest disagreement between that route and an independent one (the
 * directional-Laplacian polarization) on a fixed probe subset of entries.
 */
HessianReport complex_hessian_fd(const Field& f, const std::vector<cx>& z, double step = 0.0);

/// One Richardson extrapolation step, (4 H(h/2) - H(h)) / 3, killing the
/// leading O(h^2) truncation term; same step/shrink policy as above.
HessianReport complex_hessian_richardson(const Field& f, const std::vector<cx>& z, double step = 0.0);

/// Directional complex Laplacian along u: the 4-point complex-line stencil
/// for t -> f(z + t u), whose limit is sum_{j,k} H_jk u_j conj(u_k) with H
/// the complex Hessian at z.
double directional_laplacian_fd(const Field& f, const std::vector<cx>& z, const std::vector<cx>& u, double step);

/// Aggregate plurisubharmonicity verdict over a sample of points.
struct PshVerdict {
    bool pass = false;
    bool flagged = false;       // pass, but the worst point sits inside the
                                // tolerance band around zero
    double worst_min_eig = 0.0; // raw smallest eigenvalue at the worst point
    double worst_scale = 1.0;   // tolerance scale max(1, |H|_max) there
    std::vector<cx> worst_point;
    int samples = 0;
};

/**
 * Checks min_eig(H) >= -tol * scale at every point, with
 * scale = max(1, largest |entry|) per point; Hessians are Richardson
 * extrapolated.  The strict variant demands min_eig > +tol * scale instead
 * (positivity beyond the measurement noise).
 */
PshVerdict psh_check(const Field& f, const std::vector<std::vector<cx>>& points, double tol, double step = 0.0);
PshVerdict strict_psh_check(const Field& f, const std::vector<std::vector<cx>>& points, double tol, double step = 0.0);

} // namespace bsdv
