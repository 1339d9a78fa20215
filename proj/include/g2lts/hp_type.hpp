#pragma once

#include <array>
#include <optional>
#include <string>

#include "numeric.hpp"
#include "qlinalg.hpp"

namespace g2lts {

enum class HPKind { R, C, H, S3 };

/// Name of an HP-type: (K, l) for K in {R, C, H}, or (S^3).
/// Real dimension of a subspace of this type is width() * dim().
struct HPTypeName {
    HPKind kind = HPKind::R;
    int ell = 1;  // ignored for S3

    int dim() const { return kind == HPKind::S3 ? 1 : ell; }
    int width() const {
        switch (kind) {
            case HPKind::R: return 1;
            case HPKind::C: return 2;
            case HPKind::H: return 4;
            case HPKind::S3: return 3;
        }
        return 1;
    }
    int real_dim() const { return width() * dim(); }

    bool operator==(const HPTypeName& o) const {
        return kind == o.kind && (kind == HPKind::S3 || ell == o.ell);
    }
    bool operator!=(const HPTypeName& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
            case HPKind::R: return "R" + std::to_string(ell);
            case HPKind::C: return "C" + std::to_string(ell);
            case HPKind::H: return "H" + std::to_string(ell);
            case HPKind::S3: return "S3";
        }
        return "?";
    }
};

inline HPTypeName hp_R(int l) { return {HPKind::R, l}; }
inline HPTypeName hp_C(int l) { return {HPKind::C, l}; }
inline HPTypeName hp_H(int l) { return {HPKind::H, l}; }
inline HPTypeName hp_S3() { return {HPKind::S3, 1}; }

/// Detected HP-type, with the distinguished imaginary unit for totally
/// complex subspaces.
struct HPType {
    HPTypeName name;
    Quaternion distinguished_i{};  // meaningful only for kind C
};

namespace detail {

inline double real_dot(const QVector& a, const QVector& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += a[k].w * b[k].w + a[k].x * b[k].x + a[k].y * b[k].y + a[k].z * b[k].z;
    return s;
}

inline std::vector<QVector> real_orthonormalize(const std::vector<QVector>& U, double tol) {
    std::vector<QVector> basis;
    for (const auto& u : U) {
        QVector v = u;
        for (const auto& b : basis) {
            const double c = real_dot(b, v);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= b[k] * c;
        }
        const double n = qnorm(v);
        if (n <= tol) throw std::invalid_argument("hp_type_of: R-linearly dependent input");
        basis.push_back(rmul(v, 1.0 / n));
    }
    return basis;
}

inline double offspan_norm(const QVector& v, const std::vector<QVector>& onb) {
    QVector r = v;
    for (const auto& b : onb) {
        const double c = real_dot(b, r);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k] * c;
    }
    return qnorm(r);
}

}  // namespace detail

/// Classifies an R-subspace of a symplectic space per the four HP-types:
/// quaternionic, totally complex (with its distinguished i), totally real,
/// or (S^3). Returns nullopt if no type matches within tol.
///
/// The totally-complex search is deterministic: the candidate unit i is the
/// top eigenvector of the 3x3 alignment matrix of the in-span components of
/// right multiplication by i, j, k, verified afterwards.
inline std::optional<HPType> hp_type_of(const std::vector<QVector>& U_in, double tol = 1e-8) {
    if (U_in.empty()) return std::nullopt;
    const auto U = detail::real_orthonormalize(U_in, tol);
    const int d = static_cast<int>(U.size());
    const std::array<Quaternion, 3> units = {Quaternion::i(), Quaternion::j(), Quaternion::k()};

    // quaternionic: U c subset U for all c
    {
        double worst = 0;
        for (const auto& u : U)
            for (const auto& c : units)
                worst = std::max(worst, detail::offspan_norm(rmul(u, c), U));
        if (worst <= tol && d % 4 == 0) return HPType{hp_H(d / 4), {}};
    }

    // totally real: U c R-orthogonal to U for all imaginary c
    {
        double worst = 0;
        for (const auto& u : U)
            for (const auto& c : units)
                for (const auto& v : U)
                    worst = std::max(worst, std::abs(detail::real_dot(rmul(u, c), v)));
        if (worst <= tol) return HPType{hp_R(d), {}};
    }

    // totally complex with respect to some i
    if (d % 2 == 0) {
        Eigen::Matrix3d G = Eigen::Matrix3d::Zero();
        std::array<Eigen::MatrixXd, 3> T;
        for (int t = 0; t < 3; ++t) {
            T[t].resize(d, d);
            for (int b = 0; b < d; ++b) {
                const QVector ub = rmul(U[b], units[t]);
                for (int a = 0; a < d; ++a) T[t](a, b) = detail::real_dot(U[a], ub);
            }
        }
        for (int s = 0; s < 3; ++s)
            for (int t = 0; t < 3; ++t) G(s, t) = (T[s].transpose() * T[t]).trace();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(G);
        Eigen::Vector3d top = es.eigenvectors().col(2);
        for (int k = 0; k < 3; ++k) {  // deterministic sign
            if (std::abs(top[k]) > 1e-8) {
                if (top[k] < 0) top = -top;
                break;
            }
        }
        const Quaternion istar{0, top[0], top[1], top[2]};
        // orthonormal completion of istar inside Im(H)
        const Quaternion seed = std::abs(top[0]) < 0.9 ? Quaternion::i() : Quaternion::j();
        const double sc = seed.x * istar.x + seed.y * istar.y + seed.z * istar.z;
        Quaternion j1 = seed - istar * sc;
        j1 = j1 * (1.0 / j1.norm());
        const Quaternion j2 = istar * j1;
        double worst_in = 0, worst_perp = 0;
        for (const auto& u : U) {
            worst_in = std::max(worst_in, detail::offspan_norm(rmul(u, istar), U));
            for (const auto& v : U) {
                worst_perp = std::max(worst_perp, std::abs(detail::real_dot(rmul(u, j1), v)));
                worst_perp = std::max(worst_perp, std::abs(detail::real_dot(rmul(u, j2), v)));
            }
        }
        if (worst_in <= tol && worst_perp <= tol) return HPType{hp_C(d / 2), istar};
    }

    // (S^3): real-3-dimensional subspace of a quaternionic line
    if (d == 3) {
        QMatrix M(U[0].size(), 3);
        for (int c = 0; c < 3; ++c) M.set_col(c, U[c]);
        if (rank_H(M, tol) == 1) return HPType{hp_S3(), {}};
    }

    return std::nullopt;
}

}  // namespace g2lts
