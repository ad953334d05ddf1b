#include "bsdv/moebius.hpp"

#include <cmath>
#include <utility>

#include "bsdv/errors.hpp"

namespace bsdv {

namespace {

CMat pseudo_metric(int p, int q) {
    CMat j = CMat::identity(p + q);
    for (int i = p; i < p + q; ++i) j(i, i) = -1.0;
    return j;
}

CMat stack_blocks(const CMat& a, const CMat& b, const CMat& c, const CMat& d) {
    const int p = a.rows();
    const int q = d.rows();
    CMat g(p + q, p + q);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) g(i, j) = a(i, j);
        for (int j = 0; j < q; ++j) g(i, p + j) = b(i, j);
    }
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < p; ++j) g(p + i, j) = c(i, j);
        for (int j = 0; j < q; ++j) g(p + i, p + j) = d(i, j);
    }
    return g;
}

CMat random_hermitian(int n, Rng& rng, double scale) {
    CMat h(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = scale * rng.normal();
        for (int j = i + 1; j < n; ++j) {
            h(i, j) = scale * rng.complex_normal();
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

} // namespace

MatrixMoebius MatrixMoebius::identity(int p, int q) {
    MatrixMoebius g;
    g.a = CMat::identity(p);
    g.b = CMat(p, q);
    g.c = CMat(q, p);
    g.d = CMat::identity(q);
    return g;
}

MatrixMoebius MatrixMoebius::random(int p, int q, Rng& rng, double scale) {
    CMat x(p + q, p + q);
    const CMat h1 = random_hermitian(p, rng, scale);
    const CMat h2 = random_hermitian(q, rng, scale);
    CMat qblock(p, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) qblock(i, j) = scale * rng.complex_normal();
    const cx iu(0.0, 1.0);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) x(i, j) = iu * h1(i, j);
        for (int j = 0; j < q; ++j) {
            x(i, p + j) = qblock(i, j);
            x(p + j, i) = std::conj(qblock(i, j));
        }
    }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) x(p + i, p + j) = iu * h2(i, j);

    const CMat g = expm(x);
    CMat a(p, p), b(p, q), c(q, p), d(q, q);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) a(i, j) = g(i, j);
        for (int j = 0; j < q; ++j) b(i, j) = g(i, p + j);
    }
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < p; ++j) c(i, j) = g(p + i, j);
        for (int j = 0; j < q; ++j) d(i, j) = g(p + i, p + j);
    }
    return from_blocks(std::move(a), std::move(b), std::move(c), std::move(d));
}

MatrixMoebius MatrixMoebius::from_blocks(CMat a, CMat b, CMat c, CMat d) {
    const int p = a.rows();
    const int q = d.rows();
    if (a.cols() != p || d.cols() != q || b.rows() != p || b.cols() != q || c.rows() != q || c.cols() != p)
        throw Error(ErrorCode::shape_mismatch, "Moebius blocks must be (p,p),(p,q),(q,p),(q,q)");
    const CMat g = stack_blocks(a, b, c, d);
    const CMat j = pseudo_metric(p, q);
    // The computed product g* J g carries rounding noise ~ eps ||g||^2, so
    // the acceptance threshold scales quadratically with the block size.
    const CMat residue = g.adjoint() * j * g - j;
    if (residue.max_abs() > 1e-10 * std::max(1.0, g.max_abs() * g.max_abs()))
        throw Error(ErrorCode::config_error, "coefficient matrix is not pseudo-unitary");
    MatrixMoebius out;
    out.a = std::move(a);
    out.b = std::move(b);
    out.c = std::move(c);
    out.d = std::move(d);
    return out;
}

CMat MatrixMoebius::apply(const CMat& z) const {
    if (z.rows() != a.rows() || z.cols() != d.cols())
        throw Error(ErrorCode::shape_mismatch, "operand shape does not match Moebius blocks");
    const CMat den = c * z + d;
    if (cond_estimate(den) > 1e12)
        throw Error(ErrorCode::singular_denominator, "Moebius denominator C Z + D is numerically singular");
    const CMat num = a * z + b;
    // X = num * den^{-1}  <=>  den^t X^t = num^t
    return solve(den.transpose(), num.transpose()).transpose();
}

MatrixMoebius MatrixMoebius::inverse() const {
    MatrixMoebius out;
    out.a = a.adjoint();
    out.b = cx(-1.0) * c.adjoint();
    out.c = cx(-1.0) * b.adjoint();
    out.d = d.adjoint();
    return out;
}

MatrixMoebius compose(const MatrixMoebius& g, const MatrixMoebius& h) {
    return MatrixMoebius::from_blocks(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
                                      g.c * h.b + g.d * h.d);
}

cx DiscMoebius::apply(cx zeta) const {
    const cx den = 1.0 - std::conj(a) * zeta;
    if (std::abs(den) < 1e-14)
        throw Error(ErrorCode::singular_denominator, "disc Moebius denominator vanished");
    return std::polar(1.0, phase) * (zeta - a) / den;
}

PolydiscMoebius PolydiscMoebius::from_factors(std::vector<DiscMoebius> factors) {
    for (const auto& f : factors)
        if (std::abs(f.a) >= 1.0) throw Error(ErrorCode::out_of_disc, "disc Moebius center with |a| >= 1");
    PolydiscMoebius m;
    m.factors = std::move(factors);
    return m;
}

PolydiscMoebius PolydiscMoebius::random(int rank, Rng& rng, double amax) {
    std::vector<DiscMoebius> f(static_cast<size_t>(rank));
    for (auto& fk : f) {
        fk.a = rng.complex_in_disc(amax);
        fk.phase = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    }
    return from_factors(std::move(f));
}

std::vector<cx> PolydiscMoebius::apply(const std::vector<cx>& zeta) const {
    if (zeta.size() != factors.size())
        throw Error(ErrorCode::shape_mismatch, "polydisc coordinate count does not match factor count");
    std::vector<cx> out(zeta.size());
    for (size_t k = 0; k < zeta.size(); ++k) out[k] = factors[k].apply(zeta[k]);
    return out;
}

CMat random_unitary(int n, Rng& rng, double scale) {
    return expm(cx(0.0, 1.0) * random_hermitian(n, rng, scale));
}

CMat random_special_orthogonal(int n, Rng& rng, double scale) {
    CMat x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            x(i, j) = scale * rng.normal();
            x(j, i) = -x(i, j);
        }
    return expm(x);
}

DomainPoint apply_unitary_congruence(const DomainSpec& spec, const CMat& u, const DomainPoint& z) {
    if (spec.kind != DomainKind::II && spec.kind != DomainKind::III)
        throw Error(ErrorCode::unsupported_domain, "unitary congruence acts on kinds II/III");
    const CMat residue = u * u.adjoint() - CMat::identity(u.rows());
    if (residue.max_abs() > 1e-10)
        throw Error(ErrorCode::not_orthogonal, "congruence matrix is not unitary");
    return DomainPoint::from_matrix(spec, u * point_matrix(spec, z) * u.transpose());
}

DomainPoint apply_iv_isotropy(const DomainSpec& spec, double theta, const CMat& o, const DomainPoint& z) {
    if (spec.kind != DomainKind::IV)
        throw Error(ErrorCode::unsupported_domain, "isotropy rotation acts on kind IV");
    if (o.rows() != spec.n || o.cols() != spec.n)
        throw Error(ErrorCode::shape_mismatch, "rotation size does not match the domain dimension");
    double imag_max = 0.0;
    for (const cx& v : o.data()) imag_max = std::max(imag_max, std::abs(std::imag(v)));
    const CMat residue = o * o.transpose() - CMat::identity(spec.n);
    if (imag_max > 1e-12 || residue.max_abs() > 1e-12)
        throw Error(ErrorCode::not_orthogonal, "rotation matrix is not real orthogonal");
    DomainPoint out = DomainPoint::zero(spec);
    const cx ph = std::polar(1.0, theta);
    for (int j = 0; j < spec.n; ++j) {
        cx acc = 0.0;
        for (int i = 0; i < spec.n; ++i) acc += z.coords[static_cast<size_t>(i)] * o(i, j);
        out.coords[static_cast<size_t>(j)] = ph * acc;
    }
    return out;
}

DomainPoint apply_phase(const DomainSpec& spec, double theta, const DomainPoint& z) {
    DomainPoint out = DomainPoint::zero(spec);
    const cx ph = std::polar(1.0, theta);
    for (size_t i = 0; i < z.coords.size(); ++i) out.coords[i] = ph * z.coords[i];
    return out;
}

DomainAutomorphism random_automorphism(const DomainSpec& spec, Rng& rng) {
    DomainAutomorphism out;
    switch (spec.kind) {
    case DomainKind::I: {
        const auto g = MatrixMoebius::random(spec.p, spec.q, rng);
        out.label = "matrix_moebius";
        out.apply = [spec, g](const DomainPoint& z) {
            return DomainPoint::from_matrix(spec, g.apply(point_matrix(spec, z)));
        };
        return out;
    }
    case DomainKind::II:
    case DomainKind::III: {
        const CMat u = random_unitary(spec.n, rng);
        out.label = "unitary_congruence";
        out.apply = [spec, u](const DomainPoint& z) { return apply_unitary_congruence(spec, u, z); };
        return out;
    }
    case DomainKind::IV: {
        const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        const CMat o = random_special_orthogonal(spec.n, rng);
        out.label = "iv_isotropy";
        out.apply = [spec, theta, o](const DomainPoint& z) { return apply_iv_isotropy(spec, theta, o, z); };
        return out;
    }
    case DomainKind::V:
    case DomainKind::VI: {
        const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        out.label = "phase_rotation";
        out.apply = [spec, theta](const DomainPoint& z) { return apply_phase(spec, theta, z); };
        return out;
    }
    }
    throw Error(ErrorCode::unsupported_domain, "unreachable domain kind");
}

} // namespace bsdv
