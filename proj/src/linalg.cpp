#include "bsdv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsdv/errors.hpp"

namespace bsdv {

CMat::CMat(int rows, int cols, std::initializer_list<cx> entries) : CMat(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw Error(ErrorCode::shape_mismatch, "initializer size does not match matrix shape");
    std::copy(entries.begin(), entries.end(), a_.begin());
}

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::transpose() const {
    CMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CMat CMat::conj() const {
    CMat m(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
    return m;
}

CMat CMat::adjoint() const {
    CMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

static void check_same_shape(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::shape_mismatch, "matrix shapes differ");
}

CMat& CMat::operator+=(const CMat& o) {
    check_same_shape(*this, o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    check_same_shape(*this, o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

CMat& CMat::operator*=(cx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

double CMat::frobenius_norm() const {
    double s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }
CMat operator*(cx s, CMat a) { return a *= s; }

CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::shape_mismatch, "matrix product shape mismatch");
    CMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cx aik = a(i, k);
            if (aik == cx(0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// In-place partial-pivot LU; returns the permutation sign, or 0 if a pivot
// collapsed to (numerical) zero.
static int lu_decompose(CMat& a, std::vector<int>& perm) {
    const int n = a.rows();
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        const cx inv_pivot = 1.0 / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cx f = a(i, k) * inv_pivot;
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return sign;
}

cx det(CMat a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::shape_mismatch, "determinant of non-square matrix");
    if (a.rows() == 0) return 1.0;
    std::vector<int> perm;
    const int sign = lu_decompose(a, perm);
    if (sign == 0) return 0.0;
    cx d = static_cast<double>(sign);
    for (int i = 0; i < a.rows(); ++i) d *= a(i, i);
    return d;
}

CMat solve(CMat a, CMat b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw Error(ErrorCode::shape_mismatch, "solve shape mismatch");
    const int n = a.rows();
    std::vector<int> perm;
    if (lu_decompose(a, perm) == 0)
        throw Error(ErrorCode::singular_denominator, "singular system in solve");
    CMat x(n, b.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < b.cols(); ++j) x(i, j) = b(perm[i], j);
    for (int i = 1; i < n; ++i)
        for (int k = 0; k < i; ++k) {
            const cx f = a(i, k);
            for (int j = 0; j < b.cols(); ++j) x(i, j) -= f * x(k, j);
        }
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) {
            const cx f = a(i, k);
            for (int j = 0; j < b.cols(); ++j) x(i, j) -= f * x(k, j);
        }
        const cx inv_pivot = 1.0 / a(i, i);
        for (int j = 0; j < b.cols(); ++j) x(i, j) *= inv_pivot;
    }
    return x;
}

CMat inverse(const CMat& a) { return solve(a, CMat::identity(a.rows())); }

double cond_estimate(const CMat& a) {
    try {
        return a.frobenius_norm() * inverse(a).frobenius_norm();
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

CMat expm(const CMat& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::shape_mismatch, "expm of non-square matrix");
    const int n = a.rows();
    // Scale until the norm is small, run the Taylor series to convergence,
    // then square back.  Fine for the ||A|| <= O(1) generators used here.
    int squarings = 0;
    double nrm = a.frobenius_norm();
    CMat b = a;
    while (nrm > 0.25) {
        b *= cx(0.5);
        nrm *= 0.5;
        ++squarings;
    }
    CMat result = CMat::identity(n);
    CMat term = CMat::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = term * b;
        term *= cx(1.0 / k);
        result += term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

static void require_hermitian(const CMat& h) {
    if (h.rows() != h.cols()) throw Error(ErrorCode::not_hermitian, "matrix is not square");
    const double scale = std::max(1.0, h.max_abs());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = i; j < h.cols(); ++j)
            if (std::abs(h(i, j) - std::conj(h(j, i))) > 1e-10 * scale)
                throw Error(ErrorCode::not_hermitian, "matrix exceeds Hermitian tolerance");
}

std::vector<double> hermitian_eigenvalues(const CMat& h) {
    require_hermitian(h);
    const int n = h.rows();
    CMat a = h;
    // force exact Hermitian symmetry before rotating
    for (int i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }

    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += std::norm(a(i, j));
        return std::sqrt(2.0 * s);
    };

    const double tol = 1e-14 * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 60 && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const cx apq = a(p, q);
                const double absb = std::abs(apq);
                if (absb < 1e-300) continue;
                // Phase-absorbed Jacobi rotation: with a(p,q) = |b| e^{i phi},
                // G = [[c, -s], [s e^{-i phi}, c e^{-i phi}]] where (c, s) is
                // the real Jacobi angle for [[app, |b|], [|b|, aqq]]; then
                // G^* A G annihilates the (p,q) entry.
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cx eiphi = apq / absb;
                const cx em = std::conj(eiphi);
                const double tau = (aqq - app) / (2.0 * absb);
                const double t = (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const cx akp = a(k, p);
                    const cx akq = a(k, q);
                    a(k, p) = c * akp + s * em * akq;
                    a(k, q) = -s * akp + c * em * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cx apk = a(p, k);
                    const cx aqk = a(q, k);
                    a(p, k) = c * apk + s * eiphi * aqk;
                    a(q, k) = -s * apk + c * eiphi * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double min_eigenvalue_hermitian(const CMat& h) {
    if (h.rows() == 0) throw Error(ErrorCode::shape_mismatch, "empty matrix");
    return hermitian_eigenvalues(h).front();
}

} // namespace bsdv
