#pragma once

#include <functional>

#include "descriptor.hpp"
#include "lts.hpp"

namespace g2lts {

namespace detail {

/// R-orthonormal basis of the HP-type tau subspace of L_+(A), realized on
/// the V-basis rows start, start+1, ... of the standard frame.
inline std::vector<TangentVector> hp_space_plus(const HPTypeName& tau, std::size_t start,
                                                std::size_t n) {
    std::vector<TangentVector> out;
    const std::array<Quaternion, 4> units = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                             Quaternion::k()};
    switch (tau.kind) {
        case HPKind::R:
            for (int a = 0; a < tau.ell; ++a) out.push_back(elementary(n, start + a, 0));
            break;
        case HPKind::C:
            for (int a = 0; a < tau.ell; ++a)
                for (int q = 0; q < 2; ++q) out.push_back(elementary(n, start + a, 0, units[q]));
            break;
        case HPKind::H:
            for (int a = 0; a < tau.ell; ++a)
                for (const auto& q : units) out.push_back(elementary(n, start + a, 0, q));
            break;
        case HPKind::S3:
            for (int q = 1; q < 4; ++q) out.push_back(elementary(n, start, 0, units[q]));
            break;
    }
    return out;
}

inline TangentVector std_J(const TangentVector& v) {
    // v o J for the standard frame: columns (col_2, -col_1)
    TangentVector r(v.n());
    r.m.set_col(0, v.m.col(1));
    QVector c0 = v.m.col(0);
    for (auto& q : c0) q = -q;
    r.m.set_col(1, c0);
    return r;
}

}  // namespace detail

/// The explicit orthonormal basis of each classified type, realized in the
/// standard frame. Standard data choices: Theta(1) is the H_+ column f_1,
/// Theta(i), Theta(j), Theta(k) take consecutive f_k columns from f_3 on,
/// w_0 is the next unused column, HP-type subspaces start at f_1, and the
/// canonical basis (i, j, k) is the global quaternion basis.
inline RealSubspace construct(const LtsDescriptor& d, int n) {
    if (auto why = describe_invalid(d, n)) throw std::invalid_argument(*why);
    const std::size_t un = static_cast<std::size_t>(n);
    const Frame F = standard_frame(un);
    const TangentVector Hp = F.H_plus, Hm = F.H_minus;
    const std::array<Quaternion, 4> units = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                             Quaternion::k()};
    const double r25 = std::sqrt(2.0 / 5.0), r35 = std::sqrt(3.0 / 5.0), r15 = 1.0 / std::sqrt(5.0);
    std::vector<TangentVector> basis;

    switch (d.family) {
        case Family::Geo:
            basis.push_back(Hp * std::cos(d.t) + Hm * std::sin(d.t));
            break;

        case Family::P0:
            basis = detail::hp_space_plus(d.tau, 0, un);
            break;

        case Family::S13: {
            basis.push_back((Hp * 3.0 + Hm) * (1.0 / std::sqrt(10.0)));
            basis.push_back(m_vector(F, Quaternion::one(), +1) * r35 +
                            rmul(Hm, Quaternion::i()) * r25);
            if (d.ell == 3)
                basis.push_back(m_vector(F, Quaternion::j(), +1) * r35 +
                                rmul(Hm, Quaternion::k()) * r25);
            break;
        }

        case Family::P12: {
            // Theta(1) = H_+ (f_1), Theta(i), Theta(j), Theta(k) = f_3, f_4, f_5
            auto theta = [&](int q) {
                return q == 0 ? Hp : elementary(un, static_cast<std::size_t>(q) + 1, 0);
            };
            if (d.tau.dim() == 1) {
                const int w = d.tau.width();
                for (int q = 0; q < w; ++q)
                    basis.push_back((rmul(Hm, units[q]) + theta(q) * 2.0) * r15);
            } else if (d.tau == hp_R(2)) {
                const TangentVector w0 = elementary(un, 2, 1);
                basis.push_back((Hp * 2.0 + Hm) * r15);
                basis.push_back(m_vector(F, Quaternion::one(), +1) * r25 + w0 * r35);
            } else if (d.tau == hp_C(2)) {
                const TangentVector Ti = elementary(un, 2, 0);
                const TangentVector JTi = detail::std_J(Ti);
                const TangentVector w0 = elementary(un, 3, 1);
                basis.push_back((Hp * 2.0 + Hm) * r15);
                basis.push_back((rmul(Hm, Quaternion::i()) + Ti * 2.0) * r15);
                basis.push_back(m_vector(F, Quaternion::one(), +1) * r25 -
                                rmul(JTi, Quaternion::i()) * r15 + w0 * r25);
                basis.push_back(m_vector(F, Quaternion::i(), +1) * r25 - JTi * r15 +
                                rmul(w0, Quaternion::i()) * r25);
            } else {  // (H, 2)
                std::array<TangentVector, 3> JT;
                for (int q = 1; q < 4; ++q)
                    JT[q - 1] = detail::std_J(elementary(un, static_cast<std::size_t>(q) + 1, 0));
                for (int q = 0; q < 4; ++q)
                    basis.push_back((rmul(Hm, units[q]) + theta(q) * 2.0) * r15);
                const double s = 1.0 / std::sqrt(2.0);
                for (int q = 0; q < 4; ++q) {
                    TangentVector corr(un);
                    for (int a = 1; a < 4; ++a)
                        corr = corr + rmul(JT[a - 1], conj(units[q]) * units[a]);
                    basis.push_back((m_vector(F, units[q], +1) - corr * s) * r25);
                }
            }
            break;
        }

        case Family::P44: {
            // W_1 on rows 0..l-1, W_2 on rows l..2l-1, Theta(f_a q) = f_{l+a} conj(q)
            const std::size_t l = static_cast<std::size_t>(d.tau.dim());
            const double s = 1.0 / std::sqrt(2.0);
            auto push = [&](std::size_t a, const Quaternion& q) {
                const TangentVector x = elementary(un, a, 0, q);
                const TangentVector tx = elementary(un, l + a, 0, conj(q));
                basis.push_back((x + detail::std_J(tx)) * s);
            };
            switch (d.tau.kind) {
                case HPKind::R:
                    for (std::size_t a = 0; a < l; ++a) push(a, units[0]);
                    break;
                case HPKind::C:
                    for (std::size_t a = 0; a < l; ++a)
                        for (int q = 0; q < 2; ++q) push(a, units[q]);
                    break;
                case HPKind::H:
                    for (std::size_t a = 0; a < l; ++a)
                        for (const auto& q : units) push(a, q);
                    break;
                case HPKind::S3:
                    for (int q = 1; q < 4; ++q) push(0, units[q]);
                    break;
            }
            break;
        }

        case Family::S5:
            basis.push_back((Hp - Hm) * (1.0 / std::sqrt(2.0)));
            for (const auto& q : units) basis.push_back(m_vector(F, q, +1));
            break;

        case Family::G2: {
            basis = detail::hp_space_plus(d.tau, 0, un);
            const std::size_t u1 = basis.size();
            for (std::size_t k = 0; k < u1; ++k) basis.push_back(detail::std_J(basis[k]));
            break;
        }

        case Family::PxP: {
            basis = detail::hp_space_plus(d.tau, 0, un);
            for (const auto& x :
                 detail::hp_space_plus(d.tau2, static_cast<std::size_t>(d.tau.dim()), un))
                basis.push_back(detail::std_J(x));
            break;
        }

        case Family::S1xS5:
            basis.push_back(Hp);
            basis.push_back(Hm);
            for (int q = 0; q < d.ell - 1; ++q) basis.push_back(m_vector(F, units[q], +1));
            break;

        case Family::Sp2: {
            // {Phi o X : X in sp(V')}, Phi(e_1) = f_1, Phi(e_2) = f_2
            const double s = 1.0 / std::sqrt(2.0);
            for (int q = 1; q < 4; ++q) basis.push_back(elementary(un, 0, 0, units[q]));
            for (int q = 1; q < 4; ++q) basis.push_back(elementary(un, 1, 1, units[q]));
            for (const auto& b : units)
                basis.push_back((elementary(un, 0, 1, b) - elementary(un, 1, 0, conj(b))) * s);
            break;
        }

        case Family::Q3: {
            // orthocomplement of span{v, v i}, v = M_{i,-1}, inside (G_2,(C,2))
            const RealSubspace hat = construct(LtsDescriptor::g2(hp_C(2)), n);
            const TangentVector v = m_vector(F, Quaternion::i(), -1);
            const RealSubspace cut =
                subspace_from_span(un, {v, rmul(v, Quaternion::i())});
            return orthocomplement_in(cut, hat);
        }
    }
    return subspace_from_span(un, basis);
}

/// Remark-style alternative description of the pi/4 projective types:
/// m' = {x + J(Xi(x)) : x in W} with W totally real (kind C) or totally
/// complex (kind H) of real dimension 2l resp. 4l, and Xi orthogonal
/// (resp. anti-linear orthogonal) with Xi^2 = -id. Classifies identically to
/// P44:(C,l) resp. P44:(H,l).
inline RealSubspace construct_pi4_alternative(HPKind kind, int ell, int n) {
    if (kind != HPKind::C && kind != HPKind::H)
        throw std::invalid_argument("construct_pi4_alternative: kind must be C or H");
    if (2 * ell > n) throw std::invalid_argument("construct_pi4_alternative: needs 2l <= n");
    const std::size_t un = static_cast<std::size_t>(n);
    // Xi pairs rows (2a, 2a+1): f_{2a} -> f_{2a+1} -> -f_{2a}; for kind H it
    // extends anti-linearly, Xi(x i) = -Xi(x) i.
    std::vector<TangentVector> basis;
    const double s = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < ell; ++a) {
        const std::size_t r0 = 2 * static_cast<std::size_t>(a), r1 = r0 + 1;
        auto add = [&](const Quaternion& q, const Quaternion& xq) {
            const TangentVector x = elementary(un, r0, 0, q);
            const TangentVector xi_even = elementary(un, r1, 0, xq);
            basis.push_back((x + detail::std_J(xi_even)) * s);
            const TangentVector y = elementary(un, r1, 0, q);
            const TangentVector xi_odd = elementary(un, r0, 0, -xq);
            basis.push_back((y + detail::std_J(xi_odd)) * s);
        };
        add(Quaternion::one(), Quaternion::one());
        if (kind == HPKind::H) add(Quaternion::i(), -Quaternion::i());
    }
    return subspace_from_span(un, basis);
}

/// Variant taking the action of Xi on the chosen W basis explicitly; the
/// precondition Xi^2 = -id is validated.
inline RealSubspace construct_pi4_alternative_with(
    HPKind kind, int ell, int n, const std::function<TangentVector(const TangentVector&)>& xi) {
    if (2 * ell > n) throw std::invalid_argument("construct_pi4_alternative: needs 2l <= n");
    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<TangentVector> w_basis;
    for (int a = 0; a < 2 * ell; ++a) {
        w_basis.push_back(elementary(un, static_cast<std::size_t>(a), 0));
        if (kind == HPKind::H)
            w_basis.push_back(elementary(un, static_cast<std::size_t>(a), 0, Quaternion::i()));
    }
    for (const auto& x : w_basis) {
        const TangentVector xx = xi(xi(x));
        if (tv_norm(xx + x) > 1e-8 || std::abs(tv_norm(xi(x)) - tv_norm(x)) > 1e-8)
            throw std::invalid_argument("construct_pi4_alternative: Xi is not orthogonal with Xi^2 = -id");
    }
    std::vector<TangentVector> basis;
    for (const auto& x : w_basis)
        basis.push_back((x + detail::std_J(xi(x))) * (1.0 / std::sqrt(2.0)));
    return subspace_from_span(un, basis);
}

/// Pseudorandom symplectic matrix: quaternionic Gram-Schmidt of a Gaussian
/// matrix (quaternionic QR, Q factor).
inline QMatrix random_symplectic(std::size_t n, Rng& rng) {
    for (;;) {
        const QMatrix G = rng.qmatrix(n, n);
        std::vector<QVector> cols;
        for (std::size_t c = 0; c < n; ++c) cols.push_back(G.col(c));
        const auto onb = gram_schmidt_H(cols, 1e-6);
        if (onb.size() != n) continue;
        QMatrix Q(n, n);
        for (std::size_t c = 0; c < n; ++c) Q.set_col(c, onb[c]);
        return Q;
    }
}

inline IsotropyElement random_isotropy(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return {random_symplectic(2, rng), random_symplectic(n, rng)};
}

/// Applies a seeded pseudorandom isotropy element to every basis vector;
/// preserves closure, dimension, rank, and every intrinsic invariant.
inline RealSubspace randomize(const RealSubspace& S, std::uint64_t seed) {
    const IsotropyElement g = random_isotropy(S.n, seed);
    RealSubspace out;
    out.n = S.n;
    for (const auto& b : S.basis) out.basis.push_back(isotropy_act(g, b));
    out.rebuild_cache();
    return out;
}

/// The Sp(2) copy adapted to the standard (S, arctan 1/3, l) basis: the
/// case-analysis normal form taken with canonical basis (k, i, j) and the
/// sign of H_- flipped, which makes the S13 standard vectors land inside it.
inline RealSubspace sp2_adapted_to_s13(int n) {
    const std::size_t un = static_cast<std::size_t>(n);
    const Frame F = standard_frame(un);
    std::vector<TangentVector> basis;
    for (const auto& q : {Quaternion::one(), Quaternion::i(), Quaternion::k()}) {
        basis.push_back(rmul(F.H_plus, q));
        basis.push_back(rmul(F.H_minus, q));
    }
    basis.push_back(m_vector(F, Quaternion::one(), +1));
    basis.push_back(m_vector(F, Quaternion::j(), +1));
    basis.push_back(m_vector(F, Quaternion::i(), -1));
    basis.push_back(m_vector(F, Quaternion::k(), -1));
    return subspace_from_span(un, basis);
}

/// Concrete witness (S_inner, S_outer) for the inclusion table row of d.
/// Standard positions already align for every row except S13 inside Sp2,
/// which uses the adapted Sp(2) copy above.
inline std::pair<RealSubspace, RealSubspace> containment_witness(const LtsDescriptor& d, int n) {
    const auto c = container_of(d, n);
    if (!c) throw std::invalid_argument("containment_witness: descriptor is maximal at this n");
    const RealSubspace inner = construct(d, n);
    const RealSubspace outer =
        d.family == Family::S13 ? sp2_adapted_to_s13(n) : construct(*c, n);
    if (!contains(outer, inner))
        throw std::runtime_error("containment_witness: standard positions failed to align for " +
                                 descriptor_str(d));
    return {inner, outer};
}

}  // namespace g2lts
