#include "bsdv/domains.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "bsdv/errors.hpp"

namespace bsdv {

namespace {

int min_int(int a, int b) { return a < b ? a : b; }

// Flat index of the strict-upper-triangle entry (i, j), i < j, in an
// antisymmetric n x n matrix, row-major over independent entries.
int upper_strict_index(int n, int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

// Flat index of the upper-triangle entry (i, j), i <= j, in a symmetric
// n x n matrix, row-major over independent entries.
int upper_incl_index(int n, int i, int j) {
    return i * (2 * n - i + 1) / 2 + (j - i);
}

void require(bool ok, ErrorCode code, const std::string& what) {
    if (!ok) throw Error(code, what);
}

[[noreturn]] void bad_token(const std::string& token) {
    throw Error(ErrorCode::config_error, "unrecognized domain token '" + token + "'");
}

// Hermitian matrix I - Z Z* whose positivity characterizes membership for
// the matrix kinds; for kind I it is p x p with Z of shape p x q.
CMat gram_complement(const CMat& z) {
    const CMat g = z * z.adjoint();
    CMat out = CMat::identity(g.rows());
    out -= g;
    return out;
}

cx sum_zw_conj(const std::vector<cx>& z, const std::vector<cx>& w) {
    cx s = 0.0;
    for (size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

cx sum_squares(const std::vector<cx>& z) {
    cx s = 0.0;
    for (const cx& v : z) s += v * v;
    return s;
}

Octonion octonion_from(const std::vector<cx>& coords, int offset) {
    Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = coords[offset + i];
    return o;
}

} // namespace

DomainSpec DomainSpec::type_i(int p, int q) {
    require(p >= 1 && q >= 1, ErrorCode::config_error, "kind I needs p, q >= 1");
    DomainSpec s;
    s.kind = DomainKind::I;
    s.p = p;
    s.q = q;
    s.n = 0;
    return s;
}

DomainSpec DomainSpec::type_ii(int n) {
    require(n >= 2, ErrorCode::config_error, "kind II needs n >= 2");
    DomainSpec s;
    s.kind = DomainKind::II;
    s.p = s.q = 0;
    s.n = n;
    return s;
}

DomainSpec DomainSpec::type_iii(int n) {
    require(n >= 1, ErrorCode::config_error, "kind III needs n >= 1");
    DomainSpec s;
    s.kind = DomainKind::III;
    s.p = s.q = 0;
    s.n = n;
    return s;
}

DomainSpec DomainSpec::type_iv(int n) {
    require(n >= 2, ErrorCode::config_error, "kind IV needs n >= 2");
    DomainSpec s;
    s.kind = DomainKind::IV;
    s.p = s.q = 0;
    s.n = n;
    return s;
}

DomainSpec DomainSpec::type_v() {
    DomainSpec s;
    s.kind = DomainKind::V;
    s.p = s.q = s.n = 0;
    return s;
}

DomainSpec DomainSpec::type_vi() {
    DomainSpec s;
    s.kind = DomainKind::VI;
    s.p = s.q = s.n = 0;
    return s;
}

DomainSpec DomainSpec::parse(const std::string& token) {
    auto parse_int = [&](const std::string& text) {
        if (text.empty() || text.size() > 4 || text.find_first_not_of("0123456789") != std::string::npos)
            bad_token(token);
        return std::stoi(text);
    };
    const auto colon = token.find(':');
    const std::string head = token.substr(0, colon);
    const std::string tail = colon == std::string::npos ? std::string() : token.substr(colon + 1);
    if (head == "I") {
        const auto comma = tail.find(',');
        if (comma == std::string::npos) bad_token(token);
        return type_i(parse_int(tail.substr(0, comma)), parse_int(tail.substr(comma + 1)));
    }
    if (head == "II") return type_ii(parse_int(tail));
    if (head == "III") return type_iii(parse_int(tail));
    if (head == "IV") return type_iv(parse_int(tail));
    if (head == "V" && tail.empty()) return type_v();
    if (head == "VI" && tail.empty()) return type_vi();
    bad_token(token);
}

std::string DomainSpec::token() const {
    char buf[32];
    switch (kind) {
    case DomainKind::I: std::snprintf(buf, sizeof buf, "I:%d,%d", p, q); return buf;
    case DomainKind::II: std::snprintf(buf, sizeof buf, "II:%d", n); return buf;
    case DomainKind::III: std::snprintf(buf, sizeof buf, "III:%d", n); return buf;
    case DomainKind::IV: std::snprintf(buf, sizeof buf, "IV:%d", n); return buf;
    case DomainKind::V: return "V";
    case DomainKind::VI: return "VI";
    }
    return "?";
}

int DomainSpec::rank() const {
    switch (kind) {
    case DomainKind::I: return min_int(p, q);
    case DomainKind::II: return n / 2;
    case DomainKind::III: return n;
    case DomainKind::IV: return 2;
    case DomainKind::V: return 2;
    case DomainKind::VI: return 3;
    }
    return 0;
}

int DomainSpec::ambient_dim() const {
    switch (kind) {
    case DomainKind::I: return p * q;
    case DomainKind::II: return n * (n - 1) / 2;
    case DomainKind::III: return n * (n + 1) / 2;
    case DomainKind::IV: return n;
    case DomainKind::V: return 16;
    case DomainKind::VI: return 27;
    }
    return 0;
}

DomainPoint DomainPoint::zero(const DomainSpec& spec) {
    DomainPoint z;
    z.coords.assign(static_cast<size_t>(spec.ambient_dim()), cx(0.0));
    return z;
}

DomainPoint DomainPoint::from_coords(const DomainSpec& spec, std::vector<cx> coords) {
    require(static_cast<int>(coords.size()) == spec.ambient_dim(), ErrorCode::shape_mismatch,
            "coordinate vector has wrong length for " + spec.token());
    DomainPoint z;
    z.coords = std::move(coords);
    return z;
}

DomainPoint DomainPoint::from_matrix(const DomainSpec& spec, const CMat& z) {
    DomainPoint out = zero(spec);
    switch (spec.kind) {
    case DomainKind::I:
        require(z.rows() == spec.p && z.cols() == spec.q, ErrorCode::shape_mismatch,
                "matrix shape does not match " + spec.token());
        for (int i = 0; i < spec.p; ++i)
            for (int j = 0; j < spec.q; ++j) out.coords[static_cast<size_t>(i * spec.q + j)] = z(i, j);
        return out;
    case DomainKind::II: {
        require(z.rows() == spec.n && z.cols() == spec.n, ErrorCode::shape_mismatch,
                "matrix shape does not match " + spec.token());
        const CMat defect = z + z.transpose();
        require(defect.max_abs() <= 1e-12 * std::max(1.0, z.max_abs()), ErrorCode::shape_mismatch,
                "matrix is not antisymmetric");
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j)
                out.coords[static_cast<size_t>(upper_strict_index(spec.n, i, j))] = z(i, j);
        return out;
    }
    case DomainKind::III: {
        require(z.rows() == spec.n && z.cols() == spec.n, ErrorCode::shape_mismatch,
                "matrix shape does not match " + spec.token());
        const CMat defect = z - z.transpose();
        require(defect.max_abs() <= 1e-12 * std::max(1.0, z.max_abs()), ErrorCode::shape_mismatch,
                "matrix is not symmetric");
        for (int i = 0; i < spec.n; ++i)
            for (int j = i; j < spec.n; ++j)
                out.coords[static_cast<size_t>(upper_incl_index(spec.n, i, j))] = z(i, j);
        return out;
    }
    default:
        throw Error(ErrorCode::shape_mismatch, "from_matrix needs a matrix kind (I/II/III)");
    }
}

DomainPoint DomainPoint::from_octonions(const DomainSpec& spec, const Octonion& z1, const Octonion& z2) {
    require(spec.kind == DomainKind::V, ErrorCode::shape_mismatch, "octonion pairs belong to kind V");
    DomainPoint out = zero(spec);
    for (int i = 0; i < 8; ++i) {
        out.coords[static_cast<size_t>(i)] = z1[i];
        out.coords[static_cast<size_t>(8 + i)] = z2[i];
    }
    return out;
}

DomainPoint DomainPoint::from_h3(const DomainSpec& spec, const H3Matrix& z) {
    require(spec.kind == DomainKind::VI, ErrorCode::shape_mismatch, "Jordan elements belong to kind VI");
    DomainPoint out = zero(spec);
    for (int i = 0; i < 3; ++i) out.coords[static_cast<size_t>(i)] = z.diag[static_cast<size_t>(i)];
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 8; ++k)
            out.coords[static_cast<size_t>(3 + 8 * i + k)] = z.off[static_cast<size_t>(i)][k];
    return out;
}

CMat point_matrix(const DomainSpec& spec, const DomainPoint& z) {
    switch (spec.kind) {
    case DomainKind::I: {
        CMat m(spec.p, spec.q);
        for (int i = 0; i < spec.p; ++i)
            for (int j = 0; j < spec.q; ++j) m(i, j) = z.coords[static_cast<size_t>(i * spec.q + j)];
        return m;
    }
    case DomainKind::II: {
        CMat m(spec.n, spec.n);
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j) {
                const cx v = z.coords[static_cast<size_t>(upper_strict_index(spec.n, i, j))];
                m(i, j) = v;
                m(j, i) = -v;
            }
        return m;
    }
    case DomainKind::III: {
        CMat m(spec.n, spec.n);
        for (int i = 0; i < spec.n; ++i)
            for (int j = i; j < spec.n; ++j) {
                const cx v = z.coords[static_cast<size_t>(upper_incl_index(spec.n, i, j))];
                m(i, j) = v;
                m(j, i) = v;
            }
        return m;
    }
    default:
        throw Error(ErrorCode::shape_mismatch, "point_matrix needs a matrix kind (I/II/III)");
    }
}

std::pair<Octonion, Octonion> point_octonions(const DomainSpec& spec, const DomainPoint& z) {
    require(spec.kind == DomainKind::V, ErrorCode::shape_mismatch, "point_octonions needs kind V");
    return {octonion_from(z.coords, 0), octonion_from(z.coords, 8)};
}

H3Matrix point_h3(const DomainSpec& spec, const DomainPoint& z) {
    if (spec.kind == DomainKind::V) {
        auto [z1, z2] = point_octonions(spec, z);
        return embed_m12(z1, z2);
    }
    require(spec.kind == DomainKind::VI, ErrorCode::shape_mismatch, "point_h3 needs kind V or VI");
    H3Matrix m;
    for (int i = 0; i < 3; ++i) m.diag[static_cast<size_t>(i)] = z.coords[static_cast<size_t>(i)];
    for (int i = 0; i < 3; ++i)
        m.off[static_cast<size_t>(i)] = octonion_from(z.coords, 3 + 8 * i);
    return m;
}

DomainPoint conj_point(const DomainSpec& spec, const DomainPoint& z) {
    DomainPoint out = DomainPoint::zero(spec);
    for (size_t i = 0; i < z.coords.size(); ++i) out.coords[i] = std::conj(z.coords[i]);
    return out;
}

bool contains(const DomainSpec& spec, const DomainPoint& z) {
    switch (spec.kind) {
    case DomainKind::I:
    case DomainKind::II:
    case DomainKind::III:
        return min_eigenvalue_hermitian(gram_complement(point_matrix(spec, z))) > 0.0;
    case DomainKind::IV: {
        const double zz = std::real(sum_zw_conj(z.coords, z.coords));
        const double sq = std::abs(sum_squares(z.coords));
        // 1 - 2 zz + sq^2 rearranged as (1-zz)^2 - (zz-sq)(zz+sq) to avoid
        // the cancellation that otherwise swamps the sign near the boundary.
        const double s = (1.0 - zz) * (1.0 - zz) - (zz - sq) * (zz + sq);
        return zz < 1.0 && s > 0.0;
    }
    case DomainKind::V: {
        const H3Matrix m = point_h3(spec, z);
        const double zz = std::real(h3_scalar_product(m, m));
        const H3Matrix adj = h3_adjoint(m);
        const double s = 1.0 - zz + std::real(h3_scalar_product(adj, adj));
        return s > 0.0 && 2.0 - zz > 0.0;
    }
    case DomainKind::VI: {
        const H3Matrix m = point_h3(spec, z);
        const double zz = std::real(h3_scalar_product(m, m));
        const H3Matrix adj = h3_adjoint(m);
        const double adj2 = std::real(h3_scalar_product(adj, adj));
        const double s = 1.0 - zz + adj2 - std::norm(h3_det(m));
        return s > 0.0 && 3.0 - 2.0 * zz + adj2 > 0.0 && 3.0 - zz > 0.0;
    }
    }
    return false;
}

double generic_norm(const DomainSpec& spec, const DomainPoint& z) {
    return std::real(generic_norm_polarized(spec, z, z));
}

cx generic_norm_polarized(const DomainSpec& spec, const DomainPoint& z, const DomainPoint& w) {
    switch (spec.kind) {
    case DomainKind::I:
    case DomainKind::II:
    case DomainKind::III: {
        const CMat zm = point_matrix(spec, z);
        const CMat wm = point_matrix(spec, w);
        CMat a = CMat::identity(zm.rows());
        a -= zm * wm.adjoint();
        return det(a);
    }
    case DomainKind::IV:
        return 1.0 - 2.0 * sum_zw_conj(z.coords, w.coords) + sum_squares(z.coords) * std::conj(sum_squares(w.coords));
    case DomainKind::V: {
        const H3Matrix zm = point_h3(spec, z);
        const H3Matrix wm = point_h3(spec, w);
        return 1.0 - h3_scalar_product(zm, wm) + h3_scalar_product(h3_adjoint(zm), h3_adjoint(wm));
    }
    case DomainKind::VI: {
        const H3Matrix zm = point_h3(spec, z);
        const H3Matrix wm = point_h3(spec, w);
        return 1.0 - h3_scalar_product(zm, wm) + h3_scalar_product(h3_adjoint(zm), h3_adjoint(wm)) -
               h3_det(zm) * std::conj(h3_det(wm));
    }
    }
    throw Error(ErrorCode::unsupported_domain, "unreachable domain kind");
}

double norm_exponent(const DomainSpec& spec) {
    return spec.kind == DomainKind::II ? 0.5 : 1.0;
}

DomainPoint polydisc_embed(const DomainSpec& spec, const std::vector<cx>& zeta) {
    require(static_cast<int>(zeta.size()) == spec.rank(), ErrorCode::shape_mismatch,
            "polydisc coordinates must have length rank = " + std::to_string(spec.rank()));
    for (const cx& v : zeta)
        require(std::abs(v) < 1.0, ErrorCode::out_of_disc, "polydisc coordinate with |zeta| >= 1");

    DomainPoint z = DomainPoint::zero(spec);
    switch (spec.kind) {
    case DomainKind::I:
        for (int k = 0; k < spec.rank(); ++k) z.coords[static_cast<size_t>(k * spec.q + k)] = zeta[static_cast<size_t>(k)];
        return z;
    case DomainKind::II:
        // 2x2 antisymmetric blocks [[0, zeta_k], [-zeta_k, 0]] down the diagonal.
        for (int k = 0; k < spec.rank(); ++k)
            z.coords[static_cast<size_t>(upper_strict_index(spec.n, 2 * k, 2 * k + 1))] = zeta[static_cast<size_t>(k)];
        return z;
    case DomainKind::III:
        for (int k = 0; k < spec.rank(); ++k)
            z.coords[static_cast<size_t>(upper_incl_index(spec.n, k, k))] = zeta[static_cast<size_t>(k)];
        return z;
    case DomainKind::IV: {
        // lambda^2 = i/4 turns the quadric pair (w1, w2) into disc factors:
        // with w1 = lambda (z1 + z2), w2 = i lambda (z1 - z2) the norm is
        // (1 - |z1|^2)(1 - |z2|^2).
        const cx lambda = cx(1.0, 1.0) / (2.0 * std::numbers::sqrt2);
        z.coords[0] = lambda * (zeta[0] + zeta[1]);
        z.coords[1] = cx(0.0, 1.0) * lambda * (zeta[0] - zeta[1]);
        return z;
    }
    case DomainKind::V: {
        // Same quadric pair placed in the first two coefficients of z1.
        const cx lambda = cx(1.0, 1.0) / (2.0 * std::numbers::sqrt2);
        z.coords[0] = lambda * (zeta[0] + zeta[1]);
        z.coords[1] = cx(0.0, 1.0) * lambda * (zeta[0] - zeta[1]);
        return z;
    }
    case DomainKind::VI:
        for (int k = 0; k < 3; ++k) z.coords[static_cast<size_t>(k)] = zeta[static_cast<size_t>(k)];
        return z;
    }
    throw Error(ErrorCode::unsupported_domain, "unreachable domain kind");
}

} // namespace bsdv
