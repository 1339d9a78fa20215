#include <catch2/catch_amalgamated.hpp>

#include "g2lts/hp_type.hpp"
#include "g2lts/numeric.hpp"
#include "g2lts/qlinalg.hpp"

using namespace g2lts;

namespace {
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();
}  // namespace

TEST_CASE("quaternion arithmetic") {
    CHECK(approx_eq(qi * qj, qk));
    CHECK(approx_eq(qj * qk, qi));
    CHECK(approx_eq(qk * qi, qj));
    CHECK(approx_eq(conj(Quaternion(1, 1, 0, 0)), Quaternion(1, -1, 0, 0)));
    CHECK(approx_eq(im(Quaternion(2, 0, 3, 0)), Quaternion(0, 0, 3, 0)));
    CHECK(re(Quaternion(2, 0, 3, 0)) == 2.0);
    CHECK_THROWS_AS(inverse(Quaternion()), std::domain_error);

    Rng rng(7);
    for (int s = 0; s < 100; ++s) {
        const Quaternion a = rng.quaternion(), b = rng.quaternion();
        CHECK(approx_eq(conj(a * b), conj(b) * conj(a), 1e-12));
        if (a.norm() > 1e-6) CHECK(approx_eq(a * inverse(a), Quaternion::one(), 1e-12));
        // conj(q) q = |q|^2
        CHECK(std::abs((conj(a) * a).w - a.norm_sq()) < 1e-12);
        CHECK(im(conj(a) * a).norm() < 1e-12);
    }
}

TEST_CASE("qdot and homogeneity") {
    const QVector f1 = unit_qvec(3, 0), f2 = unit_qvec(3, 1);
    CHECK(approx_eq(qdot(f1, f1), Quaternion::one()));
    CHECK(approx_eq(qdot(rmul(f1, qi), f1), -qi));
    CHECK(approx_eq(qdot(f1, f2), Quaternion()));
    CHECK_THROWS_AS(qdot(f1, unit_qvec(4, 0)), std::invalid_argument);

    Rng rng(11);
    for (int s = 0; s < 100; ++s) {
        QVector v(3), w(3);
        for (auto& q : v) q = rng.quaternion();
        for (auto& q : w) q = rng.quaternion();
        const Quaternion c = rng.quaternion(), c2 = rng.quaternion();
        CHECK(dist(qdot(rmul(v, c), rmul(w, c2)), conj(c) * qdot(v, w) * c2) < 1e-12 * 100);
        CHECK(dist(qdot(rmul(v, c), w), conj(c) * qdot(v, w)) < 1e-12 * 100);
        CHECK(dist(qdot(v, rmul(w, c)), qdot(v, w) * c) < 1e-12 * 100);
    }
}

TEST_CASE("gram_schmidt_H") {
    const QVector f1 = unit_qvec(3, 0), f2 = unit_qvec(3, 1);
    CHECK(gram_schmidt_H({f1, rmul(f1, qi)}).size() == 1);
    {
        const auto b = gram_schmidt_H({f1, f2});
        REQUIRE(b.size() == 2);
        CHECK(qnorm(b[0] - f1) < 1e-12);
        CHECK(qnorm(b[1] - f2) < 1e-12);
    }
    {
        // span{f1+f2, f1-f2} = span{f1, f2}: oracle by projection residuals
        const auto b = gram_schmidt_H({f1 + f2, f1 - f2});
        REQUIRE(b.size() == 2);
        CHECK(dist(qdot(b[0], b[1]), Quaternion()) < 1e-12);
        for (const auto& v : {f1, f2}) {
            QVector r = v;
            for (const auto& u : b) r = r - rmul(u, qdot(u, r));
            CHECK(qnorm(r) < 1e-12);
        }
    }
    CHECK(gram_schmidt_H({}).empty());
    CHECK(gram_schmidt_H({qvec_zero(3)}).empty());
}

TEST_CASE("rank_H") {
    QMatrix Z(3, 2);
    CHECK(rank_H(Z) == 0);
    QMatrix A(3, 2);
    A.set_col(0, unit_qvec(3, 0));
    A.set_col(1, rmul(unit_qvec(3, 0), qj));
    CHECK(rank_H(A) == 1);
    QMatrix B(3, 2);
    B.set_col(0, unit_qvec(3, 0));
    B.set_col(1, unit_qvec(3, 1));
    CHECK(rank_H(B) == 2);
}

TEST_CASE("hermitian2_eigs") {
    {
        const auto [t1, t2] = hermitian2_eigs(1, 0, Quaternion());
        CHECK(t1 == Catch::Approx(1.0));
        CHECK(t2 == Catch::Approx(0.0).margin(1e-14));
    }
    {
        const auto [t1, t2] = hermitian2_eigs(0.5, 0.5, Quaternion());
        CHECK(t1 == Catch::Approx(0.5));
        CHECK(t2 == Catch::Approx(0.5));
    }
    {
        // derived example, cross-checked against the real-representation
        // eigensolver below
        const auto [t1, t2] = hermitian2_eigs(0.5, 0.5, qi * (-0.5));
        CHECK(t1 == Catch::Approx(1.0));
        CHECK(t2 == Catch::Approx(0.0).margin(1e-14));
    }
    Rng rng(3);
    for (int s = 0; s < 50; ++s) {
        const double a = rng.normal() * rng.normal() + 2, b = rng.normal() * rng.normal() + 1;
        const Quaternion c = rng.quaternion();
        const auto [t1, t2] = hermitian2_eigs(a, b, c);
        CHECK(t1 + t2 == Catch::Approx(a + b));
        CHECK(t1 * t2 == Catch::Approx(a * b - c.norm_sq()));

        // independent oracle: eigenvalues of the 8x8 real representation,
        // each quaternionic eigenvalue with multiplicity 4
        QMatrix M(2, 2);
        M.at(0, 0) = Quaternion(a);
        M.at(1, 1) = Quaternion(b);
        M.at(0, 1) = c;
        M.at(1, 0) = conj(c);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(real_rep(M));
        for (int k = 0; k < 4; ++k) {
            CHECK(es.eigenvalues()[k] == Catch::Approx(t2).margin(1e-10));
            CHECK(es.eigenvalues()[4 + k] == Catch::Approx(t1).margin(1e-10));
        }
    }
}

TEST_CASE("hp_type_of") {
    const std::size_t n = 3;
    const QVector f1 = unit_qvec(n, 0), f2 = unit_qvec(n, 1);

    auto t = hp_type_of({f1});
    REQUIRE(t.has_value());
    CHECK(t->name == hp_R(1));

    t = hp_type_of({f1, rmul(f1, qi)});
    REQUIRE(t.has_value());
    CHECK(t->name == hp_C(1));
    CHECK(dist(t->distinguished_i, qi) < 1e-9);

    t = hp_type_of({rmul(f1, qi), rmul(f1, qj), rmul(f1, qk)});
    REQUIRE(t.has_value());
    CHECK(t->name == hp_S3());

    t = hp_type_of({f1, rmul(f1, qi), rmul(f1, qj), rmul(f1, qk)});
    REQUIRE(t.has_value());
    CHECK(t->name == hp_H(1));

    t = hp_type_of({f1, f2});
    REQUIRE(t.has_value());
    CHECK(t->name == hp_R(2));

    // no HP-type
    QVector mixed = rmul(f1, qi);
    mixed = mixed + f2;
    mixed = rmul(mixed, 1.0 / qnorm(mixed));
    CHECK(!hp_type_of({f1, mixed}).has_value());

    CHECK_THROWS_AS(hp_type_of({f1, f1}), std::invalid_argument);
}

TEST_CASE("hp_type_of is invariant under global right unit multiplication") {
    Rng rng(21);
    const std::size_t n = 3;
    const QVector f1 = unit_qvec(n, 0), f2 = unit_qvec(n, 1);
    for (int s = 0; s < 20; ++s) {
        const Quaternion q = rng.unit_quaternion();
        auto push = [&](std::vector<QVector> U) {
            for (auto& v : U) v = rmul(v, q);
            return U;
        };
        // totally complex: kind preserved, distinguished i conjugates to conj(q) i q
        const auto t = hp_type_of(push({f1, rmul(f1, qi), f2, rmul(f2, qi)}));
        REQUIRE(t.has_value());
        CHECK(t->name == hp_C(2));
        const Quaternion expect = conj(q) * qi * q;
        CHECK(std::min(dist(t->distinguished_i, expect), dist(t->distinguished_i, -expect)) <
              1e-8);

        const auto tr = hp_type_of(push({f1, f2}));
        REQUIRE(tr.has_value());
        CHECK(tr->name == hp_R(2));

        const auto th = hp_type_of(push({f1, rmul(f1, qi), rmul(f1, qj), rmul(f1, qk)}));
        REQUIRE(th.has_value());
        CHECK(th->name == hp_H(1));

        const auto ts = hp_type_of(push({rmul(f1, qi), rmul(f1, qj), rmul(f1, qk)}));
        REQUIRE(ts.has_value());
        CHECK(ts->name == hp_S3());
    }
}
