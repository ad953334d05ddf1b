#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsdv/calculus.hpp"
#include "bsdv/domains.hpp"
#include "bsdv/rng.hpp"

namespace bsdv {

/// Invariant quotient functions built from the generic norm
/// ---------------------------------------------------------
/// With S(z) = generic_norm(z), N(z,w) = generic_norm_polarized(z,w) and
/// e = norm_exponent(spec), the basic two-point quotient is
///
///     delta(z, w) = [ S(z) S(w) / |N(z, w)|^2 ]^e ,
///
/// which lies in (0, 1], equals 1 exactly when z = w, and is invariant
/// under every automorphism the library provides.  Everything else layers
/// on top: log_psi = -genus * log delta, hyperconvex_fn = -delta^(1/r),
/// psi_k sums log_psi around a cycle, and delta_bar conjugates the second
/// argument before taking the quotient.

/// delta(z, w); throws OutsideDomain when either point is not interior.
double delta(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w);

/// -genus * log delta(z, w) >= 0; genus must be positive (ConfigError).
double log_psi(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w,
               double genus = 1.0);

/// -delta(z, w)^(1/r) in [-1, 0); requires r >= 1 (ConfigError).
double hyperconvex_fn(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w,
                      double r);

/// Sum of log_psi over the closed cycle z_0 -> z_1 -> ... -> z_{k-1} -> z_0.
/// Requires at least two points (ConfigError).
double psi_k(const DomainSpec& spec, const std::vector<DomainPoint>& cycle,
             double genus = 1.0);

/// delta(z, conj(w)).  Equals 1 exactly when w = conj(z); on real points
/// it coincides with delta.
double delta_bar(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w);

/// Pair fields
/// -----------
/// Joint coordinates are the concatenation [z | w] of the two points'
/// flat coordinates, so each field has dim = 2 * ambient_dim and its
/// `inside` predicate demands both halves be interior (star-shaped, since
/// the domains are balanced and convex).
std::vector<cx> joint_coords(const DomainPoint& z, const DomainPoint& w);
std::pair<DomainPoint, DomainPoint> split_joint(const DomainSpec& spec,
                                                const std::vector<cx>& joint);

/// (z, w) -> log_psi(z, w).
Field pair_field_log_psi(const DomainSpec& spec, double genus = 1.0);
/// (z, w) -> -delta(z, w)^mu;  mu must be positive (ConfigError).
Field pair_field_neg_delta_pow(const DomainSpec& spec, double mu);
/// (z, w) -> -delta_bar(z, w)^mu;  mu must be positive (ConfigError).
Field pair_field_neg_delta_bar_pow(const DomainSpec& spec, double mu);

/// Sections of the trivial bundle over a base polydisc
/// ---------------------------------------------------
/// A section maps base coordinates xi in the unit polydisc of dimension
/// base_dim into the domain:
///   constant:               h(xi) = center
///   holomorphic_affine:     h(xi) = center + sum_j xi_j * dir_j
///   antiholomorphic_affine: h(xi) = center + sum_j conj(xi_j) * dir_j
/// Sections are only useful when their image stays inside the domain with
/// some clearance; random_section enforces that by sampling.
enum class SectionKind { constant, holomorphic_affine, antiholomorphic_affine };

const char* section_kind_name(SectionKind kind);
SectionKind parse_section_kind(const std::string& text); // ConfigError on junk

struct SectionSpec {
    SectionKind kind = SectionKind::constant;
    int base_dim = 1;
    DomainPoint center;                  // h(0)
    std::vector<std::vector<cx>> dirs;   // base_dim vectors of ambient length

    DomainPoint apply(const DomainSpec& spec, const std::vector<cx>& xi) const;
};

/// Draws a section whose image keeps star clearance >= `clearance`
/// (verified on a deterministic sample of base points, boundary-biased);
/// the direction vectors are shrunk until the sample check passes.
/// Throws SectionEscapedDomain when no usable scale is found.
SectionSpec random_section(const DomainSpec& spec, SectionKind kind, int base_dim,
                           Rng& rng, double clearance = 0.05);

/// Evaluates log_psi(h(xi), w); throws SectionEscapedDomain when h(xi)
/// leaves the domain and OutsideDomain when w does.
double bundle_section_fn(const DomainSpec& spec, const SectionSpec& section,
                         const std::vector<cx>& xi, const DomainPoint& w,
                         double genus = 1.0);

/// Joint field over [xi | w] (dim = base_dim + ambient_dim) evaluating
/// log_psi(h(xi), w).  `inside` requires xi in the open unit polydisc,
/// w interior, and h(xi) interior.
Field bundle_field(const DomainSpec& spec, const SectionSpec& section,
                   double genus = 1.0);

/// Samplers
/// --------
struct PairPoint {
    DomainPoint z;
    DomainPoint w;
};

/// Random interior point: a Gaussian direction pushed to the boundary by
/// ray search, then pulled back to a uniform fill factor in
/// [min_fill, max_fill].  Star clearance is >= 1 - max_fill by
/// construction.
DomainPoint sample_interior(const DomainSpec& spec, Rng& rng,
                            double min_fill = 0.05, double max_fill = 0.9);

/// Random interior pair.  For the octonion kinds (V, VI) samples are
/// biased: 70% of pairs sit on the standard polydisc slice (where ground
/// truth reduces to disc factors) and 30% are generic points of coordinate
/// norm <= 0.3.
PairPoint sample_pair(const DomainSpec& spec, Rng& rng, double max_fill = 0.9);
std::vector<PairPoint> sample_pairs(const DomainSpec& spec, int count, Rng& rng,
                                    double max_fill = 0.9);

/// Boundary-approach pair (0, t * u) with u a random boundary direction
/// and t in (0, 1) the fraction of the distance to the boundary.
PairPoint boundary_pair(const DomainSpec& spec, double t, Rng& rng);

/// Largest s >= 0 with s * direction still interior (ray search; the
/// domains are bounded and balanced so the supremum is finite and the
/// segment below it is entirely interior).
double boundary_scale(const DomainSpec& spec, const std::vector<cx>& direction);

/// Exponent scans
/// --------------
struct ExponentVerdict {
    double mu = 0.0;
    bool pass = false;          // psh within tolerance at every sample
    bool flagged = false;
    double worst_min_eig = 0.0; // raw, at the worst sample
    double worst_scale = 1.0;
    std::vector<cx> worst_point; // joint coordinates of the worst pair
};

struct ExponentScanResult {
    std::vector<ExponentVerdict> verdicts; // one per grid value, ascending mu
    double mu_threshold = 0.0;             // 1 / (2 * rank)
    bool pass = false; // every grid mu <= mu_threshold passed its psh check
};

/// Runs psh_check of -delta^mu over the given pairs for every mu in
/// `grid`.  The scan as a whole passes when every grid value at or below
/// the rank threshold 1/(2*rank) certifies psh; verdicts above the
/// threshold are reported but do not gate.
ExponentScanResult exponent_scan(const DomainSpec& spec, const std::vector<double>& grid,
                                 const std::vector<PairPoint>& pairs, double tol,
                                 double step = 0.0);

struct DfScanResult {
    double estimate = 0.0;      // largest grid prefix value that certifies
    ExponentScanResult scan;
};

/// Estimates the exponent threshold on the ball pair (kind I, p=1, q=n)
/// by scanning -delta^mu over boundary-approach pairs (0, t*u),
/// t in [0.9, 0.999], plus a few generic interior pairs.  The estimate is
/// the largest mu whose whole grid prefix passes.
DfScanResult df_scan(int ball_dim, const std::vector<double>& grid, Rng& rng,
                     double tol = 1e-6, int directions_per_level = 4);

/// Closed-form identity suites
/// ---------------------------
struct IdentityFamily {
    std::string name;
    double residual = 0.0;            // max over samples
    std::vector<cx> worst_point;      // sample realizing the max
};

struct IdentityReport {
    std::vector<IdentityFamily> families; // fixed order per kind
    double max_residual() const;
};

/// Verifies the closed-form Hessian identities available for kinds I and
/// IV; throws UnsupportedDomain otherwise.
///
/// Kind I (at diagonal points W0 = diag(w_1..w_p), radius 0.6, finite
/// differences of log det(I - W W*) with the given step):
///   i_diag       H[(ii),(ii)] = -1 / (1 - |w_i|^2)^2
///   i_diag_cross H[(ii),(kk)] = 0 for i != k
///   i_mixed      H[(ij),(ij)] = -1 / ((1-|w_i|^2)(1-|w_j|^2)), factor 1
///                when the column index has no diagonal entry
///   i_other      all remaining off-diagonal entries vanish
///   i_bound      min_eig(-H - I) >= 0 within tolerance
///
/// Kind IV (at polydisc points w = embed(zeta), analytic derivatives of
/// S(w) = 1 - 2 w conj(w)^t + |w w^t|^2, with a = |z1|^2 - |z2|^2,
/// b = 2 - |z1|^2 - |z2|^2):
///   iv_norm      S(embed zeta) = (1-|z1|^2)(1-|z2|^2)
///   iv_entry_diag  -S S_{w_j conj(w_j)} + S_{w_j} S_{conj(w_j)} = 2S + a^2
///   iv_entry_off   -S S_{w_1 conj(w_2)} + S_{w_1} S_{conj(w_2)} = i a b
///   iv_det       |det [[a^2, iab], [-iab, a^2]]| = 4 a^2 S, relative
///   iv_bound     min_eig(-dd~ log S - 2 I) >= 0 within tolerance
IdentityReport identity_suite(const DomainSpec& spec, int samples, Rng& rng,
                              double step = 1e-4);

} // namespace bsdv
