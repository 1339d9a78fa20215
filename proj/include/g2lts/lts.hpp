#pragma once

#include "curvature_blocks.hpp"
#include "roots.hpp"
#include "subspace.hpp"

namespace g2lts {

/// The full tangent space m as a subspace (dimension 8n).
inline RealSubspace full_m(std::size_t n) {
    RealSubspace S;
    S.n = n;
    S.basis = std_m_basis(n);
    S.rebuild_cache();
    return S;
}

struct LtsCheck {
    bool ok = false;
    double max_residual = 0;
};

/// Closure check [[m', m'], m'] subset m' via R(u,v)w over all basis triples
/// (sufficient by trilinearity). Residuals are relative to |R(u,v)w| with a
/// small floor for numerically vanishing values.
inline LtsCheck is_lts(const RealSubspace& S, double tol = 1e-8) {
    const int d = S.dim();
    double worst = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)  // R(u,u)w = 0, R(v,u)w = -R(u,v)w
            for (int k = 0; k < d; ++k) {
                const TangentVector r = curvature(S.basis[i], S.basis[j], S.basis[k]);
                const double nr = tv_norm(r);
                const double off = S.offspan_norm(r);
                worst = std::max(worst, off / std::max(nr, 1e-6));
            }
    return {worst <= tol, worst};
}

namespace detail {

inline Eigen::VectorXd k_element_real(const KElement& X) {
    Eigen::VectorXd r(4 * (X.X1.a.size() + X.X2.a.size()));
    std::size_t p = 0;
    for (const auto& q : X.X1.a) {
        r[p++] = q.w; r[p++] = q.x; r[p++] = q.y; r[p++] = q.z;
    }
    for (const auto& q : X.X2.a) {
        r[p++] = q.w; r[p++] = q.x; r[p++] = q.y; r[p++] = q.z;
    }
    return r;
}

/// Deterministic "generic" unit vector of S with the given weight pattern.
inline TangentVector generic_vector(const RealSubspace& S, int variant = 0) {
    const int d = S.dim();
    TangentVector H(S.n);
    for (int k = 0; k < d; ++k) {
        const double w = variant == 0 ? static_cast<double>(k + 1) / d
                                      : 1.0 + static_cast<double>((7 * k + 3) % d);
        H = H + S.basis[k] * w;
    }
    return H * (1.0 / tv_norm(H));
}

/// Dimension of {v in S : [H, v] = 0}.
inline int bracket_kernel_dim(const RealSubspace& S, const TangentVector& H, double tol = 1e-8) {
    const int d = S.dim();
    const std::size_t n = S.n;
    Eigen::MatrixXd M(4 * (4 + n * n), d);
    for (int k = 0; k < d; ++k) M.col(k) = k_element_real(bracket_mm(H, S.basis[k]));
    return d - real_rank(M, tol);
}

}  // namespace detail

/// Rank of a Lie triple system: 2 iff some v orthogonal to a generic H in S
/// commutes with it, read off the kernel of v -> [H, v]. The kernel dimension
/// is computed for two deterministic generic vectors; a mismatch is reported
/// as an error rather than guessed.
inline int rank_of(const RealSubspace& S, bool check_lts = true) {
    if (S.dim() == 0) throw std::domain_error("rank_of: empty subspace");
    if (check_lts && !is_lts(S).ok) throw std::domain_error("rank_of: input is not an LTS");
    if (S.dim() == 1) return 1;
    const int k1 = detail::bracket_kernel_dim(S, detail::generic_vector(S, 0));
    const int k2 = detail::bracket_kernel_dim(S, detail::generic_vector(S, 1));
    const int r1 = k1 >= 2 ? 2 : 1, r2 = k2 >= 2 ? 2 : 1;
    if (r1 != r2) throw std::runtime_error("rank_of: bracket-kernel dimension unstable");
    return r1;
}

/// min/max of the characteristic angle over sampled unit vectors of S.
inline std::pair<double, double> char_angle_spectrum(const RealSubspace& S, int samples,
                                                     std::uint64_t seed) {
    if (S.dim() == 0) throw std::invalid_argument("char_angle_spectrum: empty subspace");
    Rng rng(seed);
    double lo = 10, hi = -10;
    auto visit = [&](const TangentVector& v) {
        const double p = char_angle(v);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    };
    for (const auto& b : S.basis) visit(b);
    for (int s = 0; s < samples; ++s) {
        TangentVector v(S.n);
        for (const auto& b : S.basis) v = v + b * rng.normal();
        if (tv_norm(v) < 1e-8) continue;
        visit(v * (1.0 / tv_norm(v)));
    }
    return {lo, hi};
}

/// Sampled estimate of the minimal sectional curvature: all basis pairs plus
/// random orthonormal pairs. A lower-confidence estimate by construction.
inline double min_sectional(const RealSubspace& S, int samples, std::uint64_t seed) {
    if (S.dim() < 2) throw std::invalid_argument("min_sectional: dim >= 2 required");
    Rng rng(seed);
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i < S.dim(); ++i)
        for (int j = i + 1; j < S.dim(); ++j)
            lo = std::min(lo, sectional_curvature(S.basis[i], S.basis[j]));
    for (int s = 0; s < samples; ++s) {
        TangentVector u(S.n), v(S.n);
        for (const auto& b : S.basis) {
            u = u + b * rng.normal();
            v = v + b * rng.normal();
        }
        if (tv_norm(u) < 1e-8) continue;
        u = u * (1.0 / tv_norm(u));
        v = v - u * metric(u, v);
        if (tv_norm(v) < 1e-8) continue;
        v = v * (1.0 / tv_norm(v));
        lo = std::min(lo, sectional_curvature(u, v));
    }
    return lo;
}

/// Quaternionic dimension of the common kernel of all elements of S in V',
/// the extrinsic invariant separating (P, phi=0, tau) from (G_2, (K, 1)).
inline int common_kernel_dim(const RealSubspace& S, double tol = 1e-8) {
    if (S.dim() == 0) return 2;
    QMatrix stack(S.n * S.basis.size(), 2);
    for (std::size_t k = 0; k < S.basis.size(); ++k)
        for (std::size_t r = 0; r < S.n; ++r)
            for (std::size_t c = 0; c < 2; ++c) stack.at(k * S.n + r, c) = S.basis[k].at(r, c);
    return 2 - static_cast<int>(rank_H(stack, tol));
}

// ---------------------------------------------------------------------------
// Restricted roots of a Lie triple system (general LTS theory section)
// ---------------------------------------------------------------------------

struct RestrictedRootDatum {
    double value = 0;        // alpha(H) for the chosen unit H in a'
    int multiplicity = 0;
    bool composite = false;  // more than one ambient root restricts to alpha
    int ambient_matches = 0;
    std::vector<RootLabel> matching;        // ambient roots with |lambda(H)| = value
    std::vector<TangentVector> space;       // R-orthonormal basis of m'_alpha
    double rootspace_residual = 0;          // Eq. root-space equality residual
    double riesz_residual = 0;              // elementary roots: dist(lambda#, a')
};

struct RestrictedRoots {
    int rank = 0;
    TangentVector H;            // chosen unit regular element of a'
    Frame frame;                // ambient Cartan adapted to a'
    std::vector<TangentVector> cartan;  // R-orthonormal basis of a'
    std::vector<RestrictedRootDatum> roots;
};

namespace detail {

/// Orthonormal basis of {v in S : [H, v] = 0}.
inline std::vector<TangentVector> bracket_kernel(const RealSubspace& S, const TangentVector& H,
                                                 double tol = 1e-8) {
    const int d = S.dim();
    Eigen::MatrixXd M(4 * (4 + S.n * S.n), d);
    for (int k = 0; k < d; ++k) M.col(k) = k_element_real(bracket_mm(H, S.basis[k]));
    const Eigen::MatrixXd N = real_nullspace(M, tol);
    std::vector<TangentVector> out;
    for (int c = 0; c < N.cols(); ++c) out.push_back(S.from_coords(N.col(c)));
    return out;
}

/// A regular element (phi away from 0 and pi/4) of the 2-dimensional flat
/// spanned by the orthonormal pair (A1, A2).
inline TangentVector regular_in_cartan(const TangentVector& A1, const TangentVector& A2) {
    TangentVector best = A1;
    double margin = -1;
    constexpr double kPi4 = 0.78539816339744830961;
    for (int s = 0; s < 128; ++s) {
        const double th = (s + 0.5) * (2.0 * M_PI / 128.0);
        TangentVector v = A1 * std::cos(th) + A2 * std::sin(th);
        const double p = char_angle(v);
        const double m = std::min(p, kPi4 - p);
        if (m > margin) {
            margin = m;
            best = v;
        }
    }
    return best;
}

}  // namespace detail

/// Restricted root data Delta(m', a') with multiplicities, elementary /
/// composite tags, and the residuals of the root-space inclusion relations.
inline RestrictedRoots restricted_roots(const RealSubspace& S, double tol = 1e-8) {
    RestrictedRoots out;
    out.rank = rank_of(S, /*check_lts=*/false);

    // Cartan a' of S and a regular unit element H of it
    if (out.rank == 2) {
        const TangentVector Hg = detail::generic_vector(S, 0);
        auto kern = detail::bracket_kernel(S, Hg, tol);
        if (kern.size() != 2) {
            kern = detail::bracket_kernel(S, detail::generic_vector(S, 1), tol);
            if (kern.size() != 2) throw std::runtime_error("restricted_roots: Cartan not found");
        }
        auto flat = subspace_from_span(S.n, kern);
        out.cartan = flat.basis;
        out.H = detail::regular_in_cartan(out.cartan[0], out.cartan[1]);
    } else {
        out.H = detail::generic_vector(S, 0);
        out.cartan = {out.H};
    }

    // ambient Cartan a with a' = a cap m', via the canonical representation
    out.frame = canonical_representation(out.H).frame;

    // spectrum of the Jacobi operator of H on S: eigenvalues alpha(H)^2
    const int d = S.dim();
    Eigen::MatrixXd M(d, d);
    for (int k = 0; k < d; ++k) {
        const TangentVector r = curvature(S.basis[k], out.H, out.H);
        for (int j = 0; j < d; ++j) M(j, k) = metric(r, S.basis[j]);
    }
    M = 0.5 * (M + M.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);

    const auto ambient = root_data(out.frame, S.n);
    const std::array<RootLabel, 6> all_labels = {RootLabel::lambda1,     RootLabel::lambda2,
                                                 RootLabel::lambda3,     RootLabel::lambda4,
                                                 RootLabel::two_lambda1, RootLabel::two_lambda2};

    int k = 0;
    while (k < d) {
        const double ev = es.eigenvalues()[k];
        int k2 = k;
        while (k2 < d && std::abs(es.eigenvalues()[k2] - ev) <= 1e-6) ++k2;
        if (ev > 1e-6) {
            RestrictedRootDatum rd;
            rd.value = std::sqrt(ev);
            rd.multiplicity = k2 - k;
            for (int j = k; j < k2; ++j) rd.space.push_back(S.from_coords(es.eigenvectors().col(j)));
            for (const auto& l : all_labels) {
                const bool present = S.n > 2 || (l != RootLabel::lambda1 && l != RootLabel::lambda2);
                if (!present) continue;
                if (std::abs(std::abs(root_value(l, out.frame, out.H)) - rd.value) <= 1e-6)
                    rd.matching.push_back(l);
            }
            rd.ambient_matches = static_cast<int>(rd.matching.size());
            rd.composite = rd.ambient_matches > 1;
            // Eq. (2.3): m'_alpha lies inside the sum of the matching m_lambda
            for (const auto& v : rd.space) {
                TangentVector p(S.n);
                for (const auto& ad : ambient)
                    for (const auto& l : rd.matching)
                        if (ad.label == l) p = p + ad.project(v);
                rd.rootspace_residual = std::max(rd.rootspace_residual, tv_norm(v - p));
            }
            // Prop (elementary roots): lambda# lies in a'
            if (!rd.composite && rd.ambient_matches == 1) {
                TangentVector sharp = root_sharp(rd.matching[0], out.frame);
                for (const auto& a : out.cartan) sharp = sharp - a * metric(a, sharp);
                rd.riesz_residual = tv_norm(sharp);
            }
            out.roots.push_back(std::move(rd));
        }
        k = k2;
    }
    return out;
}

}  // namespace g2lts
