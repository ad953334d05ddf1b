#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace bsdv {

using cx = std::complex<double>;

/// Dense complex matrix, row-major.  Sized for the small problems here
/// (every matrix in the library is at most 64x64); no view machinery.
class CMat {
  public:
    CMat() : rows_(0), cols_(0) {}
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    CMat(int rows, int cols, std::initializer_list<cx> entries);

    static CMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<cx>& data() const { return a_; }
    std::vector<cx>& data() { return a_; }

    CMat transpose() const;
    CMat conj() const;
    CMat adjoint() const;

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cx s);

    double frobenius_norm() const;
    double max_abs() const;

  private:
    int rows_, cols_;
    std::vector<cx> a_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(cx s, CMat a);

/// Determinant by partial-pivot LU.
cx det(CMat a);

/// Solve A X = B; throws Error(singular_denominator) on pivot collapse.
CMat solve(CMat a, CMat b);

CMat inverse(const CMat& a);

/// Frobenius-norm condition estimate ||A|| * ||A^-1||.
double cond_estimate(const CMat& a);

/// Matrix exponential by scaling-and-squaring on a Taylor series; intended
/// for the moderate-norm generators used to sample automorphisms.
CMat expm(const CMat& a);

/// All eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi with
/// complex rotations.  Input must be Hermitian within 1e-10 relative or
/// Error(not_hermitian) is thrown.  Dimensions up to 64 are supported.
std::vector<double> hermitian_eigenvalues(const CMat& h);

/// Smallest eigenvalue of a Hermitian matrix (same contract as above).
double min_eigenvalue_hermitian(const CMat& h);

} // namespace bsdv
