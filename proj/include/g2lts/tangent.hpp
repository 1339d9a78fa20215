#pragma once

#include <stdexcept>

#include "numeric.hpp"
#include "qlinalg.hpp"

namespace g2lts {

// Tangent space model of G_2(V' + V): m = L(V', V), an H-right-linear map
// represented by its n x 2 matrix of quaternions, column k = image of e_k.

struct TangentVector {
    QMatrix m;  // n x 2

    TangentVector() = default;
    explicit TangentVector(std::size_t n) : m(n, 2) {}
    explicit TangentVector(QMatrix mat) : m(std::move(mat)) {
        if (m.cols != 2) throw std::invalid_argument("TangentVector: matrix must have 2 columns");
    }

    std::size_t n() const { return m.rows; }
    Quaternion& at(std::size_t r, std::size_t c) { return m.at(r, c); }
    const Quaternion& at(std::size_t r, std::size_t c) const { return m.at(r, c); }

    TangentVector operator+(const TangentVector& v) const { return TangentVector(m + v.m); }
    TangentVector operator-(const TangentVector& v) const { return TangentVector(m - v.m); }
    TangentVector operator-() const { return TangentVector(-m); }
    TangentVector operator*(double s) const { return TangentVector(m * s); }
    friend TangentVector operator*(double s, const TangentVector& v) { return v * s; }
};

/// e_k -> f_row basis map; the standard H_+ is elementary(n, 0, 0).
inline TangentVector elementary(std::size_t n, std::size_t row, std::size_t col,
                                const Quaternion& q = Quaternion::one()) {
    TangentVector v(n);
    v.at(row, col) = q;
    return v;
}

/// Right scalar action v.c (entry-wise, standard adapted basis).
inline TangentVector rmul(const TangentVector& v, const Quaternion& c) {
    return TangentVector(rmul(v.m, c));
}
/// Left scalar action c.v relative to the standard real form of V.
inline TangentVector lmul(const Quaternion& c, const TangentVector& v) {
    return TangentVector(lmul(c, v.m));
}

/// Invariant real inner product Re(<u(e1), v(e1)> + <u(e2), v(e2)>).
inline double metric(const TangentVector& u, const TangentVector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("metric: shape mismatch");
    double s = 0;
    for (std::size_t k = 0; k < u.m.a.size(); ++k) {
        const Quaternion& a = u.m.a[k];
        const Quaternion& b = v.m.a[k];
        s += a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
    }
    return s;
}

inline double tv_norm(const TangentVector& v) { return std::sqrt(metric(v, v)); }

/// Quaternionic inner product on m: <u(e1), v(e1)> + <u(e2), v(e2)>.
inline Quaternion qdot_m(const TangentVector& u, const TangentVector& v) {
    Quaternion s;
    for (std::size_t k = 0; k < u.m.a.size(); ++k) s += conj(u.m.a[k]) * v.m.a[k];
    return s;
}

/// Flat real coordinates (8n), column-major then component order (w,x,y,z).
inline Eigen::VectorXd tv_real(const TangentVector& v) {
    const std::size_t n = v.n();
    Eigen::VectorXd r(8 * n);
    std::size_t p = 0;
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t a = 0; a < n; ++a) {
            const Quaternion& q = v.at(a, c);
            r[p++] = q.w;
            r[p++] = q.x;
            r[p++] = q.y;
            r[p++] = q.z;
        }
    return r;
}

inline TangentVector tv_from_real(const Eigen::VectorXd& r) {
    const std::size_t n = r.size() / 8;
    TangentVector v(n);
    std::size_t p = 0;
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t a = 0; a < n; ++a) {
            v.at(a, c) = Quaternion(r[p], r[p + 1], r[p + 2], r[p + 3]);
            p += 4;
        }
    return v;
}

// ---------------------------------------------------------------------------
// Isotropy group and isotropy algebra
// ---------------------------------------------------------------------------

inline bool is_symplectic(const QMatrix& B, double tol = 1e-10) {
    const QMatrix G = matmul(adjoint(B), B);
    return (G - QMatrix::identity(B.cols)).frob_norm() <= tol * std::max(1.0, G.frob_norm());
}

/// Element (B1, B2) of Sp(V') x Sp(V); both blocks validated at construction.
struct IsotropyElement {
    QMatrix B1;  // 2 x 2
    QMatrix B2;  // n x n

    IsotropyElement(QMatrix b1, QMatrix b2) : B1(std::move(b1)), B2(std::move(b2)) {
        if (B1.rows != 2 || B1.cols != 2 || B2.rows != B2.cols)
            throw std::invalid_argument("IsotropyElement: bad shapes");
        if (!is_symplectic(B1) || !is_symplectic(B2))
            throw std::invalid_argument("IsotropyElement: blocks are not symplectic");
    }

    static IsotropyElement identity(std::size_t n) {
        return {QMatrix::identity(2), QMatrix::identity(n)};
    }
};

/// Isotropy action Bv = B2 o v o B1*.
inline TangentVector isotropy_act(const IsotropyElement& g, const TangentVector& v) {
    if (g.B2.rows != v.n()) throw std::invalid_argument("isotropy_act: shape mismatch");
    return TangentVector(matmul(g.B2, matmul(v.m, adjoint(g.B1))));
}

/// Element (X1, X2) of k = sp(V') + sp(V); both blocks skew-adjoint.
struct KElement {
    QMatrix X1;  // 2 x 2
    QMatrix X2;  // n x n

    double norm() const {
        return std::sqrt(X1.frob_norm() * X1.frob_norm() + X2.frob_norm() * X2.frob_norm());
    }
};

/// [u, v] = (v* u - u* v, v u* - u v*) in k.
inline KElement bracket_mm(const TangentVector& u, const TangentVector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("bracket_mm: shape mismatch");
    const QMatrix us = adjoint(u.m), vs = adjoint(v.m);
    return {matmul(vs, u.m) - matmul(us, v.m), matmul(v.m, us) - matmul(u.m, vs)};
}

/// [X, v] = X2 o v + v o X1*.
inline TangentVector bracket_km(const KElement& X, const TangentVector& v) {
    if (X.X2.rows != v.n()) throw std::invalid_argument("bracket_km: shape mismatch");
    return TangentVector(matmul(X.X2, v.m) + matmul(v.m, adjoint(X.X1)));
}

/// Curvature tensor R(u,v)w = (uv* - vu*)w + w(v*u - u*v), evaluated via the
/// small 2x2 products u(v*w) - v(u*w) + w(v*u - u*v).
inline TangentVector curvature(const TangentVector& u, const TangentVector& v,
                               const TangentVector& w) {
    if (u.n() != v.n() || u.n() != w.n()) throw std::invalid_argument("curvature: shape mismatch");
    const QMatrix us = adjoint(u.m), vs = adjoint(v.m);
    QMatrix r = matmul(u.m, matmul(vs, w.m));
    r = r - matmul(v.m, matmul(us, w.m));
    r = r + matmul(w.m, matmul(vs, u.m) - matmul(us, v.m));
    return TangentVector(std::move(r));
}

/// K(u,v) = <R(u,v)v, u> for R-orthonormal u, v.
inline double sectional_curvature(const TangentVector& u, const TangentVector& v,
                                  double ortho_tol = 1e-8) {
    if (std::abs(metric(u, u) - 1.0) > ortho_tol || std::abs(metric(v, v) - 1.0) > ortho_tol ||
        std::abs(metric(u, v)) > ortho_tol)
        throw std::invalid_argument("sectional_curvature: input not R-orthonormal");
    return metric(curvature(u, v, v), u);
}

}  // namespace g2lts
