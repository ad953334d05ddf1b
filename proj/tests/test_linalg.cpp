#include <doctest.h>

#include <cmath>

#include "bsdv/errors.hpp"
#include "bsdv/linalg.hpp"
#include "bsdv/rng.hpp"

using namespace bsdv;

namespace {

CMat random_matrix(Rng& rng, int rows, int cols, double radius = 1.0) {
    CMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_in_disc(radius);
    return m;
}

CMat random_hermitian(Rng& rng, int n, double radius = 1.0) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = rng.uniform(-radius, radius);
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = rng.complex_in_disc(radius);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

} // namespace

TEST_CASE("determinant") {
    CHECK(det(CMat::identity(4)) == cx(1.0));

    CMat a(2, 2, {cx(1), cx(2), cx(3), cx(4)});
    CHECK(std::abs(det(a) - cx(-2.0)) < 1e-14);

    CMat s(2, 2, {cx(1), cx(2), cx(2), cx(4)}); // rank one
    CHECK(std::abs(det(s)) < 1e-14);

    // det of a triangular complex matrix is the diagonal product
    CMat t(3, 3, {cx(1, 1), cx(5), cx(7), cx(0), cx(2, -1), cx(9), cx(0), cx(0), cx(0, 3)});
    CHECK(std::abs(det(t) - cx(1, 1) * cx(2, -1) * cx(0, 3)) < 1e-12);
}

TEST_CASE("solve and inverse") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 6);
        CMat a = random_matrix(rng, n, n);
        for (int i = 0; i < n; ++i) a(i, i) += 3.0; // keep well conditioned
        const CMat x = random_matrix(rng, n, 2);
        const CMat b = a * x;
        const CMat xs = solve(a, b);
        CHECK((xs - x).max_abs() < 1e-11);
        const CMat ai = inverse(a);
        CHECK((a * ai - CMat::identity(n)).max_abs() < 1e-11);
    }

    CMat singular(2, 2, {cx(1), cx(1), cx(1), cx(1)});
    CHECK_THROWS_AS(solve(singular, CMat::identity(2)), Error);
}

TEST_CASE("matrix exponential") {
    CHECK((expm(CMat(3, 3)) - CMat::identity(3)).max_abs() < 1e-15);

    CMat d(2, 2, {cx(0.3, 0.1), cx(0), cx(0), cx(-1.2, 0.5)});
    const CMat ed = expm(d);
    CHECK(std::abs(ed(0, 0) - std::exp(cx(0.3, 0.1))) < 1e-14);
    CHECK(std::abs(ed(1, 1) - std::exp(cx(-1.2, 0.5))) < 1e-14);
    CHECK(std::abs(ed(0, 1)) < 1e-15);

    CMat nil(2, 2, {cx(0), cx(1), cx(0), cx(0)});
    const CMat en = expm(nil);
    CHECK(std::abs(en(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(en(0, 1) - 1.0) < 1e-15);

    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const CMat x = random_matrix(rng, 4, 4);
        CMat mx = x;
        mx *= cx(-1.0);
        CHECK((expm(x) * expm(mx) - CMat::identity(4)).max_abs() < 1e-12);
    }
}

TEST_CASE("hermitian eigenvalues") {
    CHECK(min_eigenvalue_hermitian(CMat::identity(5)) == doctest::Approx(1.0).epsilon(1e-14));

    CMat d(2, 2, {cx(3), cx(0), cx(0), cx(-2)});
    CHECK(min_eigenvalue_hermitian(d) == doctest::Approx(-2.0).epsilon(1e-14));

    CMat t(2, 2, {cx(2), cx(-1), cx(-1), cx(2)});
    const auto ev = hermitian_eigenvalues(t);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-13));

    // complex off-diagonal block: [[1, i],[-i, 1]] has eigenvalues {0, 2}
    CMat c(2, 2, {cx(1), cx(0, 1), cx(0, -1), cx(1)});
    const auto cev = hermitian_eigenvalues(c);
    CHECK(cev[0] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(cev[1] == doctest::Approx(2.0).epsilon(1e-13));

    CMat nh(2, 2, {cx(0), cx(1), cx(0), cx(0)});
    CHECK_THROWS_AS(hermitian_eigenvalues(nh), Error);

    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 15);
        const CMat h = random_hermitian(rng, n);
        const auto lam = hermitian_eigenvalues(h);

        double trace = 0, fro2 = 0;
        for (int i = 0; i < n; ++i) trace += h(i, i).real();
        fro2 = h.frobenius_norm() * h.frobenius_norm();
        double lsum = 0, l2sum = 0;
        for (double v : lam) {
            lsum += v;
            l2sum += v * v;
        }
        CHECK(std::abs(lsum - trace) < 1e-10 * std::max(1.0, std::abs(trace)));
        CHECK(std::abs(l2sum - fro2) < 1e-10 * std::max(1.0, fro2));

        // spectral shift
        CMat hs = h;
        for (int i = 0; i < n; ++i) hs(i, i) += 2.5;
        CHECK(min_eigenvalue_hermitian(hs) ==
              doctest::Approx(min_eigenvalue_hermitian(h) + 2.5).epsilon(1e-10));
    }
}

TEST_CASE("larger hermitian matrices stay accurate") {
    // structured 54x54 case with known spectrum: H = 2I - (P + P^T) for the
    // cyclic shift P has eigenvalues 2 - 2cos(2 pi k / n).
    const int n = 54;
    CMat h(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = 2.0;
        h(i, (i + 1) % n) -= 1.0;
        h((i + 1) % n, i) -= 1.0;
    }
    const auto lam = hermitian_eigenvalues(h);
    CHECK(std::abs(lam.front()) < 1e-11);
    CHECK(lam.back() == doctest::Approx(4.0).epsilon(1e-11));
}
