#pragma once

#include <cmath>

#include "tangent.hpp"

namespace g2lts {

// A frame anchors every root-space computation: a conjugation A in Sp(V')
// with A^2 = id, a complement J with J^2 = -id and JA = -AJ, an adapted basis
// (e_+, e_- = J e_+), and unit vectors H_+ in L_+(A), H_- in L_-(A) with
// H_+(e_+) perpendicular to H_-(e_-), so that a = span{H_+, H_-} is a Cartan
// subalgebra (Prop. on Cartan subalgebras of m).

struct Frame {
    QMatrix A;          // 2 x 2
    QMatrix J;          // 2 x 2
    QVector e_plus;     // length 2, V' coordinates
    QVector e_minus;    // = J(e_plus)
    TangentVector H_plus;
    TangentVector H_minus;
    bool canonical_completion = true;  // false when H_- was a free choice (phi in {0, pi/4})

    std::size_t n() const { return H_plus.n(); }
};

/// v(e) for e in V' (length-2 coordinates).
inline QVector apply_tv(const TangentVector& v, const QVector& e) {
    QVector r = rmul(v.m.col(0), e[0]);
    const QVector c1 = rmul(v.m.col(1), e[1]);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += c1[k];
    return r;
}

/// The map with prescribed images on the frame's adapted basis:
/// column_j = img_plus . conj(e_plus[j]) + img_minus . conj(e_minus[j]).
inline TangentVector tv_from_frame_images(const Frame& F, const QVector& img_plus,
                                          const QVector& img_minus) {
    TangentVector v(img_plus.size());
    for (std::size_t j = 0; j < 2; ++j) {
        QVector col = rmul(img_plus, conj(F.e_plus[j]));
        const QVector c2 = rmul(img_minus, conj(F.e_minus[j]));
        for (std::size_t k = 0; k < col.size(); ++k) col[k] += c2[k];
        v.m.set_col(j, col);
    }
    return v;
}

inline QVector h_plus_image(const Frame& F) { return apply_tv(F.H_plus, F.e_plus); }
inline QVector h_minus_image(const Frame& F) { return apply_tv(F.H_minus, F.e_minus); }

/// v o J for the frame's J: matrix product v J.
inline TangentVector apply_J(const Frame& F, const TangentVector& v) {
    return TangentVector(matmul(v.m, F.J));
}

/// A = diag(1,-1), J e_1 = e_2, e_+ = e_1, H_+ = (e_1 -> f_1), H_- = (e_2 -> f_2).
inline Frame standard_frame(std::size_t n) {
    if (n < 2) throw std::invalid_argument("standard_frame: n >= 2 required");
    Frame F;
    F.A = QMatrix::identity(2);
    F.A.at(1, 1) = Quaternion(-1.0);
    F.J = QMatrix(2, 2);
    F.J.at(1, 0) = Quaternion::one();
    F.J.at(0, 1) = Quaternion(-1.0);
    F.e_plus = unit_qvec(2, 0);
    F.e_minus = unit_qvec(2, 1);
    F.H_plus = elementary(n, 0, 0);
    F.H_minus = elementary(n, 1, 1);
    return F;
}

/// M_{c,eps} of Eq. (curv:Mdef): M(e_+) = (1/sqrt2) H_-(e_-) c,
/// M(e_-) = (1/sqrt2) eps H_+(e_+) conj(c).
inline TangentVector m_vector(const Frame& F, const Quaternion& c, int eps) {
    const double s = 1.0 / std::sqrt(2.0);
    return tv_from_frame_images(F, rmul(h_minus_image(F), c * s),
                                rmul(h_plus_image(F), conj(c) * (s * eps)));
}

/// Same map for explicit basis data (used for the basis-change identity).
inline TangentVector m_vector_basis(const QVector& e_plus, const QVector& e_minus,
                                    const QVector& h_plus, const QVector& h_minus,
                                    const Quaternion& c, int eps) {
    Frame F;
    F.e_plus = e_plus;
    F.e_minus = e_minus;
    const double s = 1.0 / std::sqrt(2.0);
    TangentVector v(h_plus.size());
    for (std::size_t j = 0; j < 2; ++j) {
        QVector col = rmul(rmul(h_minus, c * s), conj(e_plus[j]));
        const QVector c2 = rmul(rmul(h_plus, conj(c) * (s * eps)), conj(e_minus[j]));
        for (std::size_t k = 0; k < col.size(); ++k) col[k] += c2[k];
        v.m.set_col(j, col);
    }
    return v;
}

/// true iff span{u, v} is a Cartan subalgebra: R-orthonormal and [u, v] = 0.
inline bool is_cartan(const TangentVector& u, const TangentVector& v, double tol = 1e-8) {
    if (std::abs(metric(u, u) - 1) > 1e-8 || std::abs(metric(v, v) - 1) > 1e-8 ||
        std::abs(metric(u, v)) > 1e-8)
        throw std::invalid_argument("is_cartan: input not R-orthonormal");
    return bracket_mm(u, v).norm() <= tol;
}

namespace detail {

/// v*v as the Hermitian pair (a, b, c) with a = |v(e1)|^2, b = |v(e2)|^2,
/// c = <v(e1), v(e2)>, in the standard basis.
inline void vstarv(const TangentVector& v, double& a, double& b, Quaternion& c) {
    const QVector c0 = v.m.col(0), c1 = v.m.col(1);
    a = qnorm_sq(c0);
    b = qnorm_sq(c1);
    c = qdot(c0, c1);
}

}  // namespace detail

/// Characteristic angle phi(v) in [0, pi/4]: eigenvalues of v*v are
/// {|v|^2 cos^2 phi, |v|^2 sin^2 phi}.
inline double char_angle(const TangentVector& v) {
    double a, b;
    Quaternion c;
    detail::vstarv(v, a, b, c);
    const double nsq = a + b;
    if (nsq == 0) throw std::domain_error("char_angle: zero vector");
    const auto [t1, t2] = hermitian2_eigs(a, b, c);
    return std::atan2(std::sqrt(std::max(t2, 0.0)), std::sqrt(std::max(t1, 0.0)));
}

struct CanonicalRep {
    Frame frame;
    double norm = 0;
    double phi = 0;
};

/// Canonical representation v = |v| (cos phi H_+ + sin phi H_-) with
/// H_+- in L_+-(A) and H_+(e_+) perpendicular to H_-(e_-).
///
/// Singular vectors (phi in {0, pi/4}) use a deterministic completion:
/// eigenvector ties fall back to the standard basis vector with the largest
/// first coordinate, and a missing H_- is completed along the first f_k with
/// substantial component off the H-line. The frame's canonical_completion
/// flag records when such a choice was made.
inline CanonicalRep canonical_representation(const TangentVector& v, double tol = 1e-10) {
    const std::size_t n = v.n();
    double a, b;
    Quaternion c;
    detail::vstarv(v, a, b, c);
    const double nsq = a + b;
    if (nsq == 0) throw std::domain_error("canonical_representation: zero vector");
    const auto [t1, t2] = hermitian2_eigs(a, b, c);

    QVector ep(2), em(2);
    bool canonical = true;
    if (t1 - t2 <= tol * nsq) {
        // phi = pi/4: every direction is an eigenvector
        ep = unit_qvec(2, 0);
        em = unit_qvec(2, 1);
        canonical = false;
    } else if (c.norm() <= tol * nsq) {
        ep = unit_qvec(2, a >= b ? 0 : 1);
        em = unit_qvec(2, a >= b ? 1 : 0);
    } else {
        ep = {c, Quaternion(t1 - a)};
        ep = rmul(ep, 1.0 / qnorm(ep));
        // orthogonal complement is the t2-eigenspace
        const QVector seed = unit_qvec(2, ep[0].norm() >= ep[1].norm() ? 1 : 0);
        em = seed - rmul(ep, qdot(ep, seed));
        em = rmul(em, 1.0 / qnorm(em));
    }

    const double norm = std::sqrt(nsq);
    const QVector vp = apply_tv(v, ep);
    QVector vm = apply_tv(v, em);
    const double np = qnorm(vp), nm = qnorm(vm);
    double phi = std::atan2(nm, np);

    QVector hp = rmul(vp, 1.0 / np);
    QVector hm;
    if (nm > tol * norm) {
        hm = rmul(vm, 1.0 / nm);
    } else {
        phi = 0.0;
        canonical = false;
        double best = -1;
        for (std::size_t k = 0; k < n; ++k) {
            QVector cand = unit_qvec(n, k);
            cand = cand - rmul(hp, qdot(hp, cand));
            if (qnorm(cand) > best) {
                best = qnorm(cand);
                hm = rmul(cand, 1.0 / qnorm(cand));
            }
        }
    }

    Frame F;
    F.e_plus = ep;
    F.e_minus = em;
    F.canonical_completion = canonical;
    // A = P_+ - P_-, J = e_- e_+* - e_+ e_-*
    F.A = QMatrix(2, 2);
    F.J = QMatrix(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) {
            F.A.at(r, s) = ep[r] * conj(ep[s]) - em[r] * conj(em[s]);
            F.J.at(r, s) = em[r] * conj(ep[s]) - ep[r] * conj(em[s]);
        }
    F.H_plus = tv_from_frame_images(F, hp, qvec_zero(n));
    F.H_minus = tv_from_frame_images(F, qvec_zero(n), hm);
    return {F, norm, phi};
}

enum class RootLabel { lambda1, lambda2, lambda3, lambda4, two_lambda1, two_lambda2 };

/// Coefficient pair (p, q) of the root p a_+ + q a_- in the dual basis.
inline std::pair<int, int> root_coeffs(RootLabel l) {
    switch (l) {
        case RootLabel::lambda1: return {1, 0};
        case RootLabel::lambda2: return {0, 1};
        case RootLabel::lambda3: return {1, 1};
        case RootLabel::lambda4: return {1, -1};
        case RootLabel::two_lambda1: return {2, 0};
        case RootLabel::two_lambda2: return {0, 2};
    }
    return {0, 0};
}

inline std::string root_name(RootLabel l) {
    switch (l) {
        case RootLabel::lambda1: return "lambda1";
        case RootLabel::lambda2: return "lambda2";
        case RootLabel::lambda3: return "lambda3";
        case RootLabel::lambda4: return "lambda4";
        case RootLabel::two_lambda1: return "2lambda1";
        case RootLabel::two_lambda2: return "2lambda2";
    }
    return "?";
}

/// Riesz vector: the element of a with metric(., sharp) = lambda on a.
inline TangentVector root_sharp(RootLabel l, const Frame& F) {
    const auto [p, q] = root_coeffs(l);
    return F.H_plus * static_cast<double>(p) + F.H_minus * static_cast<double>(q);
}

/// lambda(Z) for Z = x H_+ + y H_- given by metric coordinates in the frame.
inline double root_value(RootLabel l, const Frame& F, const TangentVector& Z) {
    const auto [p, q] = root_coeffs(l);
    return p * metric(Z, F.H_plus) + q * metric(Z, F.H_minus);
}

}  // namespace g2lts
