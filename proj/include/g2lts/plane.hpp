#pragma once

#include <unsupported/Eigen/MatrixFunctions>

#include "tangent.hpp"

namespace g2lts {

/// A point of G_2(V' + V): a quaternionic 2-plane given by an H-orthonormal
/// basis in V' + V coordinates (length n + 2).
struct Plane {
    std::vector<QVector> basis;  // 2 vectors

    Plane() = default;
    explicit Plane(std::vector<QVector> b, double tol = 1e-10) : basis(std::move(b)) {
        if (basis.size() != 2) throw std::invalid_argument("Plane: needs 2 basis vectors");
        const Quaternion g01 = qdot(basis[0], basis[1]);
        if (std::abs(qnorm(basis[0]) - 1) > tol || std::abs(qnorm(basis[1]) - 1) > tol ||
            g01.norm() > tol)
            throw std::invalid_argument("Plane: basis not H-orthonormal");
    }

    std::size_t ambient_dim() const { return basis[0].size(); }

    /// The origin point V' = span{e_1, e_2}.
    static Plane origin(std::size_t n) {
        return Plane({unit_qvec(n + 2, 0), unit_qvec(n + 2, 1)});
    }
};

/// Quaternionic dimension of P cap Q, from the rank of the stacked 4-column
/// matrix: dim = 4 - rank (intersection formula for two 2-planes).
inline int plane_intersection_dim(const Plane& P, const Plane& Q, double tol = 1e-8) {
    QMatrix M(P.ambient_dim(), 4);
    M.set_col(0, P.basis[0]);
    M.set_col(1, P.basis[1]);
    M.set_col(2, Q.basis[0]);
    M.set_col(3, Q.basis[1]);
    return 4 - static_cast<int>(rank_H(M, tol));
}

/// gamma_v(t) = exp(tX) . V' with X = [[0, -v*], [v, 0]] in sp(V' + V),
/// computed by scaling-and-squaring on the 4(n+2) x 4(n+2) real
/// representation.
inline Plane geodesic_at(const TangentVector& v, double t) {
    const std::size_t n = v.n();
    if (tv_norm(v) == 0) throw std::domain_error("geodesic_at: zero initial velocity");
    QMatrix X(n + 2, n + 2);
    const QMatrix vs = adjoint(v.m);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < n; ++c) X.at(r, c + 2) = -vs.at(r, c);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < 2; ++c) X.at(r + 2, c) = v.m.at(r, c);
    const Eigen::MatrixXd E = (real_rep(X) * t).exp();
    std::vector<QVector> cols;
    for (int k = 0; k < 2; ++k) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(4 * (n + 2));
        e[4 * k] = 1.0;
        cols.push_back(from_real_coords(E * e));
    }
    // exp(tX) is symplectic; orthonormalize only to remove roundoff
    auto onb = gram_schmidt_H(cols, 1e-6);
    return Plane(std::move(onb));
}

}  // namespace g2lts
