#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bsdv/domains.hpp"
#include "bsdv/linalg.hpp"
#include "bsdv/rng.hpp"

namespace bsdv {

/**
 * Block Moebius transformation of p x q matrices,
 *
 *     Z  ->  (A Z + B)(C Z + D)^{-1},
 *
 * with coefficient matrix g = [[A, B], [C, D]] in the pseudo-unitary group:
 * g* J g = J for J = diag(I_p, -I_q).  These exhaust the connected
 * biholomorphism group of the kind-I domain.
 */
struct MatrixMoebius {
    CMat a, b, c, d;

    static MatrixMoebius identity(int p, int q);

    /// Exponential of a random Lie-algebra element [[iH1, Q], [Q*, iH2]]
    /// with H1, H2 Hermitian; `scale` sets the entry size (and hence how far
    /// the map moves the origin).
    static MatrixMoebius random(int p, int q, Rng& rng, double scale = 0.6);

    /// Validates the pseudo-unitarity residue ||g* J g - J|| <= 1e-10
    /// relative to ||g||^2; throws Error(shape_mismatch) on block shape or
    /// Error(config_error) on residue violation.
    static MatrixMoebius from_blocks(CMat a, CMat b, CMat c, CMat d);

    CMat apply(const CMat& z) const;
    MatrixMoebius inverse() const; // J g* J, closed form
};

/// Group law: (g * h)(z) = g(h(z)).
MatrixMoebius compose(const MatrixMoebius& g, const MatrixMoebius& h);

/// One-variable disc automorphism zeta -> e^{i phase} (zeta - a)/(1 - conj(a) zeta).
struct DiscMoebius {
    cx a = 0.0;
    double phase = 0.0;

    cx apply(cx zeta) const;
};

/// Independent disc automorphisms acting on polydisc coordinates.
struct PolydiscMoebius {
    std::vector<DiscMoebius> factors;

    /// Validates |a| < 1 for every factor; throws Error(out_of_disc).
    static PolydiscMoebius from_factors(std::vector<DiscMoebius> factors);
    static PolydiscMoebius random(int rank, Rng& rng, double amax = 0.8);

    std::vector<cx> apply(const std::vector<cx>& zeta) const;
};

/// Haar-like random unitary / special-orthogonal matrices via exponentials
/// of random (anti-)Hermitian generators.
CMat random_unitary(int n, Rng& rng, double scale = 1.0);
CMat random_special_orthogonal(int n, Rng& rng, double scale = 1.0);

/// Z -> U Z U^t for the symmetry-class kinds II and III.  Preserves the
/// class and leaves the polarized norm exactly invariant.
DomainPoint apply_unitary_congruence(const DomainSpec& spec, const CMat& u, const DomainPoint& z);

/// Kind-IV isotropy z -> e^{i theta} z O with O real orthogonal (validated
/// to 1e-12, else Error(not_orthogonal)).  Exactly norm-invariant.
DomainPoint apply_iv_isotropy(const DomainSpec& spec, double theta, const CMat& o, const DomainPoint& z);

/// Coordinate phase rotation z -> e^{i theta} z; exactly norm-invariant for
/// every kind (the polarized norm pairs each holomorphic degree with its
/// conjugate).
DomainPoint apply_phase(const DomainSpec& spec, double theta, const DomainPoint& z);

/**
 * A sampled automorphism of a fixed domain, applicable to arbitrary interior
 * points: kind I draws from the full Moebius group, II/III from unitary
 * congruences, IV from the isotropy group, V/VI from phase rotations.
 * Every family leaves the two-point quotient S(z)S(w)/|N(z,w)|^2 invariant.
 */
struct DomainAutomorphism {
    std::string label;
    std::function<DomainPoint(const DomainPoint&)> apply;
};

DomainAutomorphism random_automorphism(const DomainSpec& spec, Rng& rng);

} // namespace bsdv
