#pragma once

#include <array>

#include "frame.hpp"

namespace g2lts {

/// One root of Delta(m, a) with its root space given by an explicit
/// R-orthonormal basis (built from the root table of the curvature section,
/// not by numerical diagonalization).
struct RootDatum {
    RootLabel label;
    int multiplicity = 0;
    std::vector<TangentVector> basis;

    TangentVector project(const TangentVector& v) const {
        TangentVector r(v.n());
        for (const auto& b : basis) r = r + b * metric(b, v);
        return r;
    }
};

/// The six root spaces (four when n = 2, where lambda_1 and lambda_2 have
/// multiplicity zero and are omitted), in the order
/// lambda_1, lambda_2, lambda_3, lambda_4, 2 lambda_1, 2 lambda_2.
inline std::vector<RootDatum> root_data(const Frame& F, std::size_t n) {
    if (F.n() != n) throw std::invalid_argument("root_data: frame size mismatch");
    const QVector hp = h_plus_image(F), hm = h_minus_image(F);
    // H-orthonormal completion of {h_plus, h_minus} inside V
    std::vector<QVector> span = {hp, hm};
    for (std::size_t k = 0; k < n; ++k) span.push_back(unit_qvec(n, k));
    const auto onb = gram_schmidt_H(span, 1e-8);
    if (onb.size() != n) throw std::runtime_error("root_data: completion failed");
    const std::vector<QVector> g(onb.begin() + 2, onb.end());

    const std::array<Quaternion, 4> units = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                             Quaternion::k()};
    const std::array<Quaternion, 3> imag = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    const QVector zero = qvec_zero(n);

    std::vector<RootDatum> out;
    if (n > 2) {
        RootDatum l1{RootLabel::lambda1, static_cast<int>(4 * n - 8), {}};
        RootDatum l2{RootLabel::lambda2, static_cast<int>(4 * n - 8), {}};
        for (const auto& ga : g)
            for (const auto& q : units) {
                l1.basis.push_back(tv_from_frame_images(F, rmul(ga, q), zero));
                l2.basis.push_back(tv_from_frame_images(F, zero, rmul(ga, q)));
            }
        out.push_back(std::move(l1));
        out.push_back(std::move(l2));
    }
    RootDatum l3{RootLabel::lambda3, 4, {}};
    RootDatum l4{RootLabel::lambda4, 4, {}};
    for (const auto& q : units) {
        l3.basis.push_back(m_vector(F, q, -1));
        l4.basis.push_back(m_vector(F, q, +1));
    }
    out.push_back(std::move(l3));
    out.push_back(std::move(l4));
    RootDatum t1{RootLabel::two_lambda1, 3, {}};
    RootDatum t2{RootLabel::two_lambda2, 3, {}};
    for (const auto& d : imag) {
        t1.basis.push_back(tv_from_frame_images(F, rmul(hp, d), zero));
        t2.basis.push_back(tv_from_frame_images(F, zero, rmul(hm, d)));
    }
    out.push_back(std::move(t1));
    out.push_back(std::move(t2));
    return out;
}

/// Standard R-orthonormal basis of all of m (dimension 8n).
inline std::vector<TangentVector> std_m_basis(std::size_t n) {
    const std::array<Quaternion, 4> units = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                             Quaternion::k()};
    std::vector<TangentVector> out;
    out.reserve(8 * n);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t r = 0; r < n; ++r)
            for (const auto& q : units) out.push_back(elementary(n, r, c, q));
    return out;
}

/// Spectrum of the Jacobi operator X -> R(X, H) H restricted to the span of
/// the given R-orthonormal vectors; eigenvalues within merge_tol clustered.
inline std::vector<std::pair<double, int>> jacobi_spectrum(
    const TangentVector& H, const std::vector<TangentVector>& basis, double merge_tol = 1e-6) {
    if (tv_norm(H) == 0) throw std::domain_error("jacobi_spectrum: H = 0");
    const int d = static_cast<int>(basis.size());
    Eigen::MatrixXd M(d, d);
    for (int k = 0; k < d; ++k) {
        const TangentVector r = curvature(basis[k], H, H);
        for (int j = 0; j < d; ++j) M(j, k) = metric(r, basis[j]);
    }
    M = 0.5 * (M + M.transpose()).eval();
    return clustered_spectrum(M, merge_tol);
}

}  // namespace g2lts
