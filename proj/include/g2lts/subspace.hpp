#pragma once

#include "tangent.hpp"

namespace g2lts {

/// An R-subspace of m given by an R-orthonormal basis of TangentVectors;
/// the representation of candidate Lie triple systems. The flat real
/// coordinate matrix is cached for projections.
struct RealSubspace {
    std::size_t n = 0;
    std::vector<TangentVector> basis;
    Eigen::MatrixXd B;  // 8n x d, columns = real coordinates of the basis

    RealSubspace() = default;

    int dim() const { return static_cast<int>(basis.size()); }

    /// Orthogonal projection onto the subspace.
    TangentVector project(const TangentVector& v) const {
        return tv_from_real(B * (B.transpose() * tv_real(v)));
    }

    /// Norm of v - P(v).
    double offspan_norm(const TangentVector& v) const {
        const Eigen::VectorXd r = tv_real(v);
        return (r - B * (B.transpose() * r)).norm();
    }

    Eigen::VectorXd coords(const TangentVector& v) const { return B.transpose() * tv_real(v); }

    TangentVector from_coords(const Eigen::VectorXd& c) const { return tv_from_real(B * c); }

    void rebuild_cache() {
        B.resize(8 * n, static_cast<int>(basis.size()));
        for (std::size_t k = 0; k < basis.size(); ++k) B.col(static_cast<int>(k)) = tv_real(basis[k]);
    }
};

/// Builds a subspace from a spanning set, orthonormalizing with respect to
/// the metric and dropping directions below tol (relative).
inline RealSubspace subspace_from_span(std::size_t n, const std::vector<TangentVector>& span,
                                       double tol = 1e-10) {
    RealSubspace S;
    S.n = n;
    double scale = 0;
    for (const auto& v : span) scale = std::max(scale, tv_norm(v));
    if (scale == 0) {
        S.rebuild_cache();
        return S;
    }
    for (const auto& v : span) {
        TangentVector r = v;
        for (const auto& b : S.basis) r = r - b * metric(b, r);
        const double nn = tv_norm(r);
        if (nn > tol * scale) S.basis.push_back(r * (1.0 / nn));
    }
    S.rebuild_cache();
    return S;
}

/// Gram-matrix distance from orthonormality (the subspace invariant).
inline double gram_residual(const RealSubspace& S) {
    const int d = S.dim();
    const Eigen::MatrixXd G = S.B.transpose() * S.B;
    return (G - Eigen::MatrixXd::Identity(d, d)).norm();
}

/// contains(S, T): every vector of T lies in span(S) within tol.
inline bool contains(const RealSubspace& S, const RealSubspace& T, double tol = 1e-8) {
    if (S.n != T.n) throw std::invalid_argument("contains: different n");
    for (const auto& b : T.basis)
        if (S.offspan_norm(b) > tol) return false;
    return true;
}

inline bool equal(const RealSubspace& S, const RealSubspace& T, double tol = 1e-8) {
    return S.dim() == T.dim() && contains(S, T, tol) && contains(T, S, tol);
}

inline TangentVector orthoproject(const TangentVector& v, const RealSubspace& S) {
    return S.project(v);
}

/// Orthogonal complement of `inner` inside `outer` (inner need not be a
/// subset; its projection is what gets removed).
inline RealSubspace orthocomplement_in(const RealSubspace& inner, const RealSubspace& outer,
                                       double tol = 1e-8) {
    std::vector<TangentVector> span;
    for (const auto& b : outer.basis) {
        TangentVector r = b;
        for (const auto& u : inner.basis) r = r - u * metric(u, r);
        span.push_back(r);
    }
    return subspace_from_span(outer.n, span, tol);
}

}  // namespace g2lts
