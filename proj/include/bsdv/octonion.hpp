#pragma once

#include <array>
#include <complex>

namespace bsdv {

using cx = std::complex<double>;

/**
 * Octonion with complex coefficients over the basis e0..e7 (e0 = 1).
 *
 * Multiplication is realized by Cayley-Dickson doubling of the complexified
 * quaternions: writing x = (a, b) with quaternions a = (x0,x1,x2,x3) and
 * b = (x4,x5,x6,x7),
 *
 *     (a, b) (c, d) = (a c - d~ b,  d a + b c~)
 *
 * where ~ is quaternion conjugation.  Any fixed alternative multiplication
 * table would do; this one is pinned by the unit tests (alternativity, norm
 * composition, and the Jordan-algebra adjoint identity below).
 */
struct Octonion {
    std::array<cx, 8> c{};

    Octonion() = default;
    explicit Octonion(cx scalar) { c[0] = scalar; }

    static Octonion unit(int i) {
        Octonion o;
        o.c[i] = 1.0;
        return o;
    }
    static Octonion zero() { return {}; }

    cx& operator[](int i) { return c[i]; }
    const cx& operator[](int i) const { return c[i]; }

    Octonion& operator+=(const Octonion& o);
    Octonion& operator-=(const Octonion& o);
    Octonion& operator*=(cx s);

    /// Sum of |c_i|^2 (Hermitian square of the coefficient vector).
    double norm2() const;
};

Octonion operator+(Octonion a, const Octonion& b);
Octonion operator-(Octonion a, const Octonion& b);
Octonion operator*(cx s, Octonion a);

/// Octonion product (Cayley-Dickson).
Octonion mul(const Octonion& a, const Octonion& b);

/// Cayley conjugation a~ : negates the seven imaginary coefficients.
Octonion cayley_conj(const Octonion& a);

/// Coefficient-wise complex conjugation.
Octonion complex_conj(const Octonion& a);

/// Complex-bilinear norm form q(a) = sum_i a_i^2, so that a a~ = q(a) e0.
cx quad_form(const Octonion& a);

/**
 * Hermitian scalar product (a|b) = a (conj b)~ + (conj b) a~, evaluated
 * through the multiplication table and reduced to its e0 coefficient.
 * Equals 2 sum_i a_i conj(b_i); in particular (e_i|e_i) = 2.
 * Throws Error(non_scalar_result) if the non-scalar residue exceeds
 * 1e-12 times the operand scale (which would indicate a broken table).
 */
cx scalar_product(const Octonion& a, const Octonion& b);

/**
 * Element of the exceptional Jordan algebra: a 3x3 octonion matrix
 *
 *     [ alpha1   a3      a2~ ]
 *     [ a3~      alpha2  a1  ]
 *     [ a2       a1~     alpha3 ]
 *
 * stored as the three complex diagonal scalars and the three octonions.
 */
struct H3Matrix {
    std::array<cx, 3> diag{};
    std::array<Octonion, 3> off{};

    static H3Matrix identity();

    H3Matrix& operator+=(const H3Matrix& o);
    H3Matrix& operator-=(const H3Matrix& o);
    H3Matrix& operator*=(cx s);

    /// Largest coefficient magnitude across all slots.
    double max_abs() const;
};

H3Matrix operator+(H3Matrix a, const H3Matrix& b);
H3Matrix operator-(H3Matrix a, const H3Matrix& b);
H3Matrix operator*(cx s, H3Matrix a);

/**
 * Freudenthal adjoint A#, the quadratic map with (A#)# = det(A) A:
 * diagonal (alpha2 alpha3 - a1 a1~, alpha3 alpha1 - a2 a2~,
 * alpha1 alpha2 - a3 a3~), off-slots (a3~ a2~ - alpha1 a1,
 * a1~ a3~ - alpha2 a2, a2~ a1~ - alpha3 a3).
 */
H3Matrix h3_adjoint(const H3Matrix& a);

/// Jordan determinant alpha1 alpha2 alpha3 - sum_i alpha_i q(a_i)
/// + 2 Re_oct(a1 (a2 a3)); always a complex scalar for this layout.
cx h3_det(const H3Matrix& a);

/// Hermitian pairing (A|B) = sum_i alpha_i conj(beta_i) + sum_i (a_i|b_i).
cx h3_scalar_product(const H3Matrix& a, const H3Matrix& b);

/// Embedding of a pair of octonions as a rank-one corner block:
/// diag = 0, off = (0, z1, z2); the 1-2 matrix space inside H3.
H3Matrix embed_m12(const Octonion& z1, const Octonion& z2);

} // namespace bsdv
