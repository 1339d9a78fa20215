#pragma once

#include "construct.hpp"

namespace g2lts {

namespace detail {

inline HPKind field_kind(int two_lambda_mult) {
    switch (two_lambda_mult) {
        case 0: return HPKind::R;
        case 1: return HPKind::C;
        case 3: return HPKind::H;
        default: throw std::runtime_error("classify: sub-field multiplicity must be 0, 1 or 3");
    }
}

/// HP-type of rank one from the 2 lambda_nu multiplicity of case analyses:
/// (R,1), (C,1), (S^3), (H,1) for 0, 1, 2, 3.
inline HPTypeName single_type(int two_lambda_mult) {
    switch (two_lambda_mult) {
        case 0: return hp_R(1);
        case 1: return hp_C(1);
        case 2: return hp_S3();
        case 3: return hp_H(1);
        default: throw std::runtime_error("classify: 2lambda multiplicity out of range");
    }
}

inline int mult_of(const std::vector<std::pair<double, int>>& spec, double value,
                   double tol = 1e-5) {
    for (const auto& [v, m] : spec)
        if (std::abs(v - value) <= tol) return m;
    return 0;
}

/// Root-space intersection dimensions n'_lambda for a rank-2 system.
struct AmbientMults {
    int l1 = 0, l2 = 0, l3 = 0, l4 = 0, t1 = 0, t2 = 0;
};

inline AmbientMults ambient_multiplicities(const RealSubspace& S, const Frame& F) {
    const auto data = root_data(F, S.n);
    AmbientMults m;
    for (const auto& rd : data) {
        Eigen::MatrixXd P(8 * S.n, S.dim());
        for (int k = 0; k < S.dim(); ++k) P.col(k) = tv_real(rd.project(S.basis[k]));
        const int r = real_rank(P, 1e-7);
        switch (rd.label) {
            case RootLabel::lambda1: m.l1 = r; break;
            case RootLabel::lambda2: m.l2 = r; break;
            case RootLabel::lambda3: m.l3 = r; break;
            case RootLabel::lambda4: m.l4 = r; break;
            case RootLabel::two_lambda1: m.t1 = r; break;
            case RootLabel::two_lambda2: m.t2 = r; break;
        }
    }
    return m;
}

}  // namespace detail

/// Classifies a Lie triple system back to its type. The input is assumed to
/// be a verified LTS (run is_lts first when in doubt); classification is by
/// isotropy invariants only, so it is stable under randomize().
inline LtsDescriptor classify(const RealSubspace& S) {
    if (S.dim() == 0) throw std::invalid_argument("classify: empty subspace");
    const int d = S.dim();
    if (d == 1) return canonical(LtsDescriptor::geo(char_angle(S.basis[0])));

    const int rank = rank_of(S, /*check_lts=*/false);

    if (rank == 1) {
        // all unit vectors share one characteristic angle
        const double phi = char_angle(detail::generic_vector(S, 0));
        const double tol = 1e-6;

        if (std::abs(phi) <= tol) {
            if (common_kernel_dim(S) >= 1) {
                // inside some L_+(A): read the HP-type of the common image
                const QVector ep =
                    canonical_representation(detail::generic_vector(S, 0)).frame.e_plus;
                std::vector<QVector> image;
                for (const auto& b : S.basis) image.push_back(apply_tv(b, ep));
                const auto onb = detail::real_orthonormalize(image, 1e-10);
                const auto hp = hp_type_of(onb);
                if (!hp) throw std::runtime_error("classify: phi = 0 image has no HP-type");
                return LtsDescriptor::p0(hp->name);
            }
            // no common kernel: a (G_2, (K,1)) system, K read off the dimension
            if (d == 2) return LtsDescriptor::g2(hp_R(1));
            if (d == 4) return LtsDescriptor::g2(hp_C(1));
            if (d == 8) return LtsDescriptor::g2(hp_H(1));
            throw std::runtime_error("classify: unexpected kernel-free phi = 0 system");
        }
        if (std::abs(phi - kArctanThird) <= tol) return LtsDescriptor::s13(d);
        if (std::abs(phi - kArctanHalf) <= tol) {
            const TangentVector H = detail::generic_vector(S, 0);
            const auto spec = jacobi_spectrum(H, S.basis);
            const int na = detail::mult_of(spec, 0.2);   // alpha(H)^2 = 1/5
            const int n2a = detail::mult_of(spec, 0.8);  // (2 alpha)(H)^2 = 4/5
            if (na == 0) return LtsDescriptor::p12(detail::single_type(n2a));
            const HPKind k = na == 1 ? HPKind::R : na == 2 ? HPKind::C : HPKind::H;
            return LtsDescriptor::p12({k, 2});
        }
        if (std::abs(phi - kPi / 4) <= tol) {
            const TangentVector H = detail::generic_vector(S, 0);
            const auto spec = jacobi_spectrum(H, S.basis);
            const int m2 = detail::mult_of(spec, 2.0);
            switch (m2) {
                case 0: return LtsDescriptor::p44(hp_R(d));
                case 1: return LtsDescriptor::p44(hp_C(d / 2));
                case 2: return LtsDescriptor::p44(hp_S3());
                case 3: return LtsDescriptor::p44(hp_H(d / 4));
                case 4: return LtsDescriptor::s5();
            }
            throw std::runtime_error("classify: unexpected pi/4 Jacobi spectrum");
        }
        throw std::runtime_error("classify: rank-1 angle matches no admissible value");
    }

    // rank 2: the Cartan of S is a Cartan of m; read off n'_lambda
    const RestrictedRoots rr = restricted_roots(S);
    const auto m = detail::ambient_multiplicities(S, rr.frame);
    if (2 + m.l1 + m.l2 + m.l3 + m.l4 + m.t1 + m.t2 != d)
        throw std::runtime_error("classify: root multiplicities do not resolve the dimension");

    if (m.l1 > 0 && m.l2 > 0 && m.l3 > 0) {  // all four lambda_i present
        const HPKind k = detail::field_kind(m.t1);
        const HPTypeName tau{k, 2 + m.l1 / HPTypeName{k, 1}.width()};
        return LtsDescriptor::g2(tau);
    }
    if (m.l1 > 0 && m.l2 > 0) {
        const HPKind k1 = detail::field_kind(m.t1), k2 = detail::field_kind(m.t2);
        return canonical(LtsDescriptor::pxp({k1, 1 + m.l1 / HPTypeName{k1, 1}.width()},
                                            {k2, 1 + m.l2 / HPTypeName{k2, 1}.width()}));
    }
    if (m.l1 > 0 || m.l2 > 0) {
        const int nl = m.l1 > 0 ? m.l1 : m.l2;
        const int tfield = m.l1 > 0 ? m.t1 : m.t2;
        const int tother = m.l1 > 0 ? m.t2 : m.t1;
        const HPKind k = detail::field_kind(tfield);
        return canonical(LtsDescriptor::pxp({k, 1 + nl / HPTypeName{k, 1}.width()},
                                            detail::single_type(tother)));
    }
    if (m.l3 > 0 && m.l4 > 0) {
        if (m.t1 != m.t2)
            throw std::runtime_error("classify: asymmetric 2lambda multiplicities in case (4)");
        switch (m.t1) {
            case 0: return LtsDescriptor::g2(hp_R(2));
            case 1: return m.l3 == 2 ? LtsDescriptor::g2(hp_C(2)) : LtsDescriptor::q3();
            case 2: return LtsDescriptor::sp2();
            case 3: return LtsDescriptor::g2(hp_H(2));
        }
        throw std::runtime_error("classify: bad case (4) multiplicity");
    }
    if (m.l3 > 0 || m.l4 > 0) return LtsDescriptor::s1xs5(1 + std::max(m.l3, m.l4));
    return canonical(
        LtsDescriptor::pxp(detail::single_type(m.t1), detail::single_type(m.t2)));
}

}  // namespace g2lts
