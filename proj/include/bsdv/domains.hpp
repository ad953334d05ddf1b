#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsdv/linalg.hpp"
#include "bsdv/octonion.hpp"

namespace bsdv {

/// The six families of irreducible bounded symmetric domains in their
/// standard (Harish-Chandra) matrix realizations:
///   I   p x q complex matrices,            Z Z* < I
///   II  antisymmetric n x n matrices,      Z Z* < I
///   III symmetric n x n matrices,          Z Z* < I
///   IV  the Lie ball in C^n
///   V   pairs of complex octonions (dim 16)
///   VI  exceptional Jordan algebra elements (dim 27)
enum class DomainKind { I, II, III, IV, V, VI };

struct DomainSpec {
    DomainKind kind = DomainKind::I;
    int p = 1, q = 1; // type I block sizes
    int n = 1;        // matrix size (II/III) or vector dimension (IV)

    static DomainSpec type_i(int p, int q);
    static DomainSpec type_ii(int n);
    static DomainSpec type_iii(int n);
    static DomainSpec type_iv(int n);
    static DomainSpec type_v();
    static DomainSpec type_vi();

    /// Parse "I:p,q" | "II:n" | "III:n" | "IV:n" | "V" | "VI".
    static DomainSpec parse(const std::string& token);
    std::string token() const;

    /// Rank of the domain: length of a maximal embedded polydisc.
    int rank() const;

    /// Complex dimension of the ambient coordinate space (independent
    /// entries only for the symmetry classes II and III).
    int ambient_dim() const;

    bool operator==(const DomainSpec& o) const = default;
};

/// A point is a flat vector of `ambient_dim` complex coordinates.
/// Layouts: I row-major; II strict upper triangle, row-major; III upper
/// triangle including the diagonal, row-major; IV the plain vector;
/// V the 8 coefficients of z1 then those of z2; VI the three diagonal
/// scalars then the coefficients of a1, a2, a3.
struct DomainPoint {
    std::vector<cx> coords;

    static DomainPoint zero(const DomainSpec& spec);
    static DomainPoint from_coords(const DomainSpec& spec, std::vector<cx> coords);

    /// Build from a full matrix (kinds I/II/III); the symmetry class is
    /// validated to 1e-12 relative and Error(shape_mismatch) is thrown on
    /// violation.
    static DomainPoint from_matrix(const DomainSpec& spec, const CMat& z);

    static DomainPoint from_octonions(const DomainSpec& spec, const Octonion& z1, const Octonion& z2);
    static DomainPoint from_h3(const DomainSpec& spec, const H3Matrix& z);
};

/// Materialize the full matrix for kinds I/II/III.
CMat point_matrix(const DomainSpec& spec, const DomainPoint& z);

/// Materialize the octonion pair (kind V).
std::pair<Octonion, Octonion> point_octonions(const DomainSpec& spec, const DomainPoint& z);

/// Materialize the Jordan-algebra element (kind VI, and the embedded
/// corner block for kind V).
H3Matrix point_h3(const DomainSpec& spec, const DomainPoint& z);

/// Coordinate-wise complex conjugate; stays in the domain for every kind.
DomainPoint conj_point(const DomainSpec& spec, const DomainPoint& z);

/// Strict membership test from the defining inequalities.
bool contains(const DomainSpec& spec, const DomainPoint& z);

/// Generic norm S(z) = N(z, z): positive inside the domain, vanishing on
/// the boundary.  For kind II this is det(I - ZZ*), which is the square of
/// the Pfaffian-type irreducible norm; see `norm_exponent`.
double generic_norm(const DomainSpec& spec, const DomainPoint& z);

/// Sesquilinear polarization N(z, w): holomorphic in z, antiholomorphic in
/// w, with N(z, z) = generic_norm(z) and N(z, w) = conj(N(w, z)).
cx generic_norm_polarized(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w);

/// Power bringing the determinant-based norm back to the irreducible
/// generic norm: 1/2 for kind II (where det(I - ZZ*) is a perfect square),
/// 1 otherwise.  Quotient functions built on the norm apply it so that
/// rank-driven exponent thresholds are meaningful for kind II.
double norm_exponent(const DomainSpec& spec);

/// Embed polydisc coordinates (length = rank, each |zeta_i| < 1) into the
/// domain so that the norm factorizes: the image has
/// generic_norm = prod_i (1 - |zeta_i|^2)^(1/norm_exponent).
/// Throws Error(out_of_disc) when a coordinate leaves the unit disc.
DomainPoint polydisc_embed(const DomainSpec& spec, const std::vector<cx>& zeta);

} // namespace bsdv
