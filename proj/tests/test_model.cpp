#include <catch2/catch_amalgamated.hpp>

#include "g2lts/curvature_blocks.hpp"
#include "g2lts/frame.hpp"
#include "g2lts/plane.hpp"

using namespace g2lts;

namespace {

const Quaternion qi = Quaternion::i();

TangentVector random_tv(std::size_t n, Rng& rng) {
    TangentVector v(n);
    for (auto& q : v.m.a) q = rng.quaternion();
    return v;
}

TangentVector random_unit(std::size_t n, Rng& rng) {
    TangentVector v = random_tv(n, rng);
    return v * (1.0 / tv_norm(v));
}

}  // namespace

TEST_CASE("metric") {
    const std::size_t n = 3;
    const Frame F = standard_frame(n);
    CHECK(metric(F.H_plus, F.H_plus) == Catch::Approx(1.0));
    CHECK(metric(F.H_plus, F.H_minus) == Catch::Approx(0.0).margin(1e-15));
    const TangentVector M = m_vector(F, Quaternion::one(), -1);
    CHECK(metric(M, M) == Catch::Approx(1.0));

    // basis independence: Re<u, v> via any symplectic basis of V'
    Rng rng(5);
    for (int s = 0; s < 20; ++s) {
        const TangentVector u = random_tv(n, rng), v = random_tv(n, rng);
        const IsotropyElement g(QMatrix::identity(2), QMatrix::identity(n));
        (void)g;
        // change of basis B1 on V' only re-expresses the sum
        QMatrix G = rng.qmatrix(2, 2);
        std::vector<QVector> cols = {G.col(0), G.col(1)};
        const auto onb = gram_schmidt_H(cols, 1e-6);
        if (onb.size() != 2) continue;
        QVector b1 = onb[0], b2 = onb[1];
        double s2 = re(qdot(apply_tv(u, b1), apply_tv(v, b1))) +
                    re(qdot(apply_tv(u, b2), apply_tv(v, b2)));
        CHECK(s2 == Catch::Approx(metric(u, v)).margin(1e-10));
    }
}

TEST_CASE("isotropy action") {
    const std::size_t n = 3;
    const Frame F = standard_frame(n);
    Rng rng(9);

    CHECK(tv_norm(isotropy_act(IsotropyElement::identity(n), F.H_plus) - F.H_plus) < 1e-14);

    // swap e1 <-> e2 sends H_+ to the map e2 -> f1, an element of L_-
    QMatrix swap(2, 2);
    swap.at(0, 1) = Quaternion::one();
    swap.at(1, 0) = Quaternion::one();
    const TangentVector g_Hp =
        isotropy_act(IsotropyElement(swap, QMatrix::identity(n)), F.H_plus);
    CHECK(tv_norm(g_Hp - elementary(n, 0, 1)) < 1e-14);

    // isometry property for random g
    for (int s = 0; s < 10; ++s) {
        QMatrix B1(2, 2), B2(n, n);
        {
            auto c1 = gram_schmidt_H({QVector{rng.quaternion(), rng.quaternion()},
                                      QVector{rng.quaternion(), rng.quaternion()}},
                                     1e-6);
            if (c1.size() != 2) continue;
            B1.set_col(0, c1[0]);
            B1.set_col(1, c1[1]);
            std::vector<QVector> cols;
            const QMatrix G = rng.qmatrix(n, n);
            for (std::size_t c = 0; c < n; ++c) cols.push_back(G.col(c));
            auto c2 = gram_schmidt_H(cols, 1e-6);
            if (c2.size() != n) continue;
            for (std::size_t c = 0; c < n; ++c) B2.set_col(c, c2[c]);
        }
        const IsotropyElement g(B1, B2);
        const TangentVector u = random_tv(n, rng), v = random_tv(n, rng);
        CHECK(metric(isotropy_act(g, u), isotropy_act(g, v)) ==
              Catch::Approx(metric(u, v)).margin(1e-10));
    }

    QMatrix bad = QMatrix::identity(2);
    bad.at(0, 0) = Quaternion(2.0);
    CHECK_THROWS_AS(IsotropyElement(bad, QMatrix::identity(n)), std::invalid_argument);
}

TEST_CASE("brackets") {
    const std::size_t n = 3;
    const Frame F = standard_frame(n);
    Rng rng(13);

    CHECK(bracket_mm(F.H_plus, F.H_minus).norm() < 1e-14);  // a is flat

    // [H_+, i H_+] = (-2i E11 on V', 2i E11 on V)
    const KElement X = bracket_mm(F.H_plus, lmul(qi, F.H_plus));
    QMatrix X1(2, 2), X2(n, n);
    X1.at(0, 0) = qi * -2.0;
    X2.at(0, 0) = qi * 2.0;
    CHECK((X.X1 - X1).frob_norm() < 1e-14);
    CHECK((X.X2 - X2).frob_norm() < 1e-14);

    const TangentVector v = random_tv(n, rng);
    CHECK(bracket_mm(v, v).norm() < 1e-12);

    // bracket_km: X = 0 and X = (0, i id)
    CHECK(tv_norm(bracket_km(KElement{QMatrix(2, 2), QMatrix(n, n)}, v)) < 1e-14);
    KElement Y{QMatrix(2, 2), QMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) Y.X2.at(k, k) = qi;
    CHECK(tv_norm(bracket_km(Y, F.H_plus) - lmul(qi, F.H_plus)) < 1e-14);

    // Jacobi identity on random triples
    for (int s = 0; s < 25; ++s) {
        const TangentVector a = random_tv(n, rng), b = random_tv(n, rng), c = random_tv(n, rng);
        const TangentVector J = bracket_km(bracket_mm(a, b), c) +
                                bracket_km(bracket_mm(b, c), a) +
                                bracket_km(bracket_mm(c, a), b);
        CHECK(tv_norm(J) < 1e-9);
    }
}

TEST_CASE("curvature") {
    const std::size_t n = 3;
    const Frame F = standard_frame(n);
    Rng rng(17);

    CHECK(tv_norm(curvature(F.H_plus, F.H_minus, F.H_plus)) < 1e-14);
    const TangentVector iHp = lmul(qi, F.H_plus);
    CHECK(tv_norm(curvature(F.H_plus, iHp, iHp) - F.H_plus * 4.0) < 1e-13);

    for (int s = 0; s < 25; ++s) {
        const TangentVector u = random_tv(n, rng), v = random_tv(n, rng), w = random_tv(n, rng),
                            z = random_tv(n, rng);
        // antisymmetry
        CHECK(tv_norm(curvature(u, v, w) + curvature(v, u, w)) < 1e-10);
        // R(u,v)w = -[[u,v],w]
        CHECK(tv_norm(curvature(u, v, w) + bracket_km(bracket_mm(u, v), w)) < 1e-10);
        // first Bianchi
        CHECK(tv_norm(curvature(u, v, w) + curvature(v, w, u) + curvature(w, u, v)) < 1e-9);
        // pair symmetry
        CHECK(metric(curvature(u, v, w), z) ==
              Catch::Approx(metric(curvature(w, z, u), v)).margin(1e-9));
    }

    // isotropy equivariance
    for (int s = 0; s < 10; ++s) {
        const IsotropyElement g = [&] {
            Rng r2(100 + s);
            std::vector<QVector> c1 = {QVector{r2.quaternion(), r2.quaternion()},
                                       QVector{r2.quaternion(), r2.quaternion()}};
            auto o1 = gram_schmidt_H(c1, 1e-6);
            std::vector<QVector> c2;
            const QMatrix G = r2.qmatrix(n, n);
            for (std::size_t c = 0; c < n; ++c) c2.push_back(G.col(c));
            auto o2 = gram_schmidt_H(c2, 1e-6);
            QMatrix B1(2, 2), B2(n, n);
            B1.set_col(0, o1[0]);
            B1.set_col(1, o1[1]);
            for (std::size_t c = 0; c < n; ++c) B2.set_col(c, o2[c]);
            return IsotropyElement(B1, B2);
        }();
        const TangentVector u = random_tv(n, rng), v = random_tv(n, rng), w = random_tv(n, rng);
        CHECK(tv_norm(isotropy_act(g, curvature(u, v, w)) -
                      curvature(isotropy_act(g, u), isotropy_act(g, v), isotropy_act(g, w))) <
              1e-9);
    }
}

TEST_CASE("curvature_blocks") {
    const std::size_t n = 4;
    const Frame F = standard_frame(n);
    Rng rng(19);

    // (u+, v-) example: u+ = H_+, v- = J(H_+), w = v- gives H_+
    const TangentVector JHp = apply_J(F, F.H_plus);
    CHECK(tv_norm(curvature_blocks(F.H_plus, JHp, JHp, F) - F.H_plus) < 1e-13);

    // zero w
    CHECK(tv_norm(curvature_blocks(F.H_plus, JHp, TangentVector(n), F)) < 1e-14);

    // agreement with curvature() on block-compatible triples (all sign cases)
    auto random_side = [&](bool plus) {
        TangentVector v(n);
        for (std::size_t r = 0; r < n; ++r) v.at(r, plus ? 0 : 1) = rng.quaternion();
        return v;
    };
    for (int s = 0; s < 1000; ++s) {
        const TangentVector u = random_side(s % 2 == 0), v = random_side((s / 2) % 2 == 0);
        const TangentVector w = random_tv(n, rng);
        CHECK(tv_norm(curvature_blocks(u, v, w, F) - curvature(u, v, w)) < 1e-10);
    }

    CHECK_THROWS_AS(curvature_blocks(F.H_plus + apply_J(F, F.H_minus) + random_side(false),
                                     F.H_plus, F.H_plus, F),
                    std::domain_error);
}

TEST_CASE("sectional curvature") {
    const std::size_t n = 3;
    const Frame F = standard_frame(n);
    CHECK(sectional_curvature(F.H_plus, lmul(qi, F.H_plus)) == Catch::Approx(4.0));
    CHECK(sectional_curvature(F.H_plus, F.H_minus) == Catch::Approx(0.0).margin(1e-14));
    // K(H_+, u) = 1 for unit u in L_+ with u(e1) H-orthogonal to H_+(e1)
    CHECK(sectional_curvature(F.H_plus, elementary(n, 2, 0)) == Catch::Approx(1.0));
    CHECK_THROWS_AS(sectional_curvature(F.H_plus, F.H_plus * 0.5), std::invalid_argument);
}

TEST_CASE("geodesics and planes") {
    const std::size_t n = 3;
    const Frame F = standard_frame(n);
    const Plane origin = Plane::origin(n);
    const double pi = 3.14159265358979323846;

    CHECK_THROWS_AS(geodesic_at(TangentVector(n), 1.0), std::domain_error);

    const TangentVector diag = (F.H_plus + F.H_minus) * (1.0 / std::sqrt(2.0));
    CHECK(plane_intersection_dim(geodesic_at(diag, 0.0), origin) == 2);
    CHECK(plane_intersection_dim(geodesic_at(diag, pi * std::sqrt(2.0)), origin) == 2);
    CHECK(plane_intersection_dim(geodesic_at(diag, 1.0), origin) == 0);

    // Lemma dichotomy at phi = pi/4: gamma(t) equals V' or meets it in 0
    Rng rng(23);
    for (int s = 0; s < 100; ++s) {
        const double t = rng.uniform() * 10.0;
        const int dim = plane_intersection_dim(geodesic_at(diag, t), origin);
        CHECK((dim == 0 || dim == 2));
    }

    // closed form of the pi/4 geodesic: cos(t/sqrt2) e_k + sqrt2 sin(t/sqrt2) v(e_k)
    for (double t : {0.3, 1.1, 2.9}) {
        const Plane g = geodesic_at(diag, t);
        const double c = std::cos(t / std::sqrt(2.0)), s = std::sin(t / std::sqrt(2.0));
        QVector expect1 = qvec_zero(n + 2), expect2 = qvec_zero(n + 2);
        expect1[0] = Quaternion(c);
        expect1[2] = Quaternion(s);  // sqrt2 sin(t/sqrt2) v(e_1), |v(e_1)| = 1/sqrt2
        expect2[1] = Quaternion(c);
        expect2[3] = Quaternion(s);
        // compare as planes
        QMatrix M(n + 2, 4);
        M.set_col(0, g.basis[0]);
        M.set_col(1, g.basis[1]);
        M.set_col(2, expect1);
        M.set_col(3, expect2);
        CHECK(rank_H(M) == 2);
    }

    // plane intersections
    const Plane fplane({unit_qvec(n + 2, 2), unit_qvec(n + 2, 3)});
    const Plane mixed({unit_qvec(n + 2, 0), unit_qvec(n + 2, 2)});
    CHECK(plane_intersection_dim(origin, origin) == 2);
    CHECK(plane_intersection_dim(origin, fplane) == 0);
    CHECK(plane_intersection_dim(origin, mixed) == 1);
}
