#include <catch2/catch_amalgamated.hpp>

#include "g2lts/classify.hpp"

using namespace g2lts;

TEST_CASE("descriptor grammar round-trip") {
    for (const char* s : {"Geo:t=0.29999999999999999", "P:phi=0:H2", "S13:3", "P12:C2", "P44:S3",
                          "S5", "G2:C3", "PxP:H1,R2", "S1xS5:4", "Sp2", "Q3"}) {
        const LtsDescriptor d = parse_descriptor(s);
        CHECK(descriptor_str(d) == s);
        CHECK(descriptors_equal(parse_descriptor(descriptor_str(d)), d));
    }
    CHECK_THROWS_AS(parse_descriptor("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_descriptor("P12:X2"), std::invalid_argument);
}

TEST_CASE("descriptor validity bounds") {
    CHECK(valid_for(LtsDescriptor::p12(hp_C(2)), 4));
    CHECK(!valid_for(LtsDescriptor::p12(hp_C(2)), 3));
    CHECK(valid_for(LtsDescriptor::p12(hp_H(2)), 5));
    CHECK(!valid_for(LtsDescriptor::p12(hp_H(2)), 4));
    CHECK(!valid_for(LtsDescriptor::p12(hp_S3()), 3));
    CHECK(!valid_for(LtsDescriptor::g2(hp_S3()), 4));
    CHECK(!valid_for(LtsDescriptor::p44(hp_H(2)), 3));
    CHECK(valid_for(LtsDescriptor::p44(hp_H(2)), 4));
    CHECK(!valid_for(LtsDescriptor::pxp(hp_H(2), hp_C(2)), 3));
    CHECK(!valid_for(LtsDescriptor::s1xs5(6), 7));
    CHECK_THROWS_AS(construct(LtsDescriptor::p12(hp_H(2)), 4), std::invalid_argument);
}

TEST_CASE("dimension and rank table") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& d : all_descriptors(n)) {
            INFO("descriptor " << descriptor_str(d) << " at n = " << n);
            const auto S = construct(d, n);
            CHECK(S.dim() == descriptor_dim(d));
            CHECK(gram_residual(S) < 1e-10);
            const auto chk = is_lts(S);
            CHECK(chk.max_residual < 1e-9);
            CHECK(rank_of(S, false) == descriptor_rank(d));
        }
    }
    // spot values from the table
    CHECK(descriptor_dim(LtsDescriptor::sp2()) == 10);
    CHECK(descriptor_dim(LtsDescriptor::q3()) == 6);
    CHECK(descriptor_dim(LtsDescriptor::s1xs5(4)) == 5);
    CHECK(descriptor_dim(LtsDescriptor::p12(hp_H(2))) == 8);
    CHECK(descriptor_dim(LtsDescriptor::g2(hp_C(3))) == 12);
}

TEST_CASE("classifier round-trip on standard positions") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& d : all_descriptors(n)) {
            INFO("descriptor " << descriptor_str(d) << " at n = " << n);
            const auto got = classify(construct(d, n));
            CHECK(descriptors_equal(got, d));
        }
    }
}

TEST_CASE("classifier round-trip after randomize") {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& d : all_descriptors(n)) {
            INFO("descriptor " << descriptor_str(d) << " at n = " << n);
            const auto S = randomize(construct(d, n), 12345 + n);
            CHECK(descriptors_equal(classify(S), d));
        }
    }
}

TEST_CASE("identifications hold as subspaces") {
    const int n = 3;
    CHECK(equal(construct(LtsDescriptor::geo(0.0), n),
                construct(LtsDescriptor::p0(hp_R(1)), n)));
    CHECK(equal(construct(LtsDescriptor::geo(kArctanHalf), n),
                construct(LtsDescriptor::p12(hp_R(1)), n)));
    CHECK(equal(construct(LtsDescriptor::geo(kPi / 4), n),
                construct(LtsDescriptor::p44(hp_R(1)), n)));
}

TEST_CASE("PxP symmetry under the classifier") {
    const int n = 4;
    for (const auto& [t1, t2] : std::vector<std::pair<HPTypeName, HPTypeName>>{
             {hp_R(1), hp_C(2)}, {hp_H(1), hp_S3()}, {hp_C(1), hp_H(2)}}) {
        const auto a = classify(construct(LtsDescriptor::pxp(t1, t2), n));
        const auto b = classify(construct(LtsDescriptor::pxp(t2, t1), n));
        CHECK(descriptors_equal(a, b));
        CHECK(descriptors_equal(a, LtsDescriptor::pxp(t1, t2)));
    }
}

TEST_CASE("pi/4 types have constant angle and the Wolf property") {
    const int n = 4;
    for (const auto& d : {LtsDescriptor::p44(hp_H(1)), LtsDescriptor::p44(hp_C(2)),
                          LtsDescriptor::p44(hp_S3()), LtsDescriptor::s5()}) {
        const auto S = construct(d, n);
        const auto [lo, hi] = char_angle_spectrum(S, 100, 7);
        CHECK(lo == Catch::Approx(kPi / 4).margin(1e-8));
        CHECK(hi == Catch::Approx(kPi / 4).margin(1e-8));

        Rng rng(11);
        const Plane origin = Plane::origin(n);
        for (int s = 0; s < 10; ++s) {
            TangentVector v(static_cast<std::size_t>(n));
            for (const auto& b : S.basis) v = v + b * rng.normal();
            v = v * (1.0 / tv_norm(v));
            for (int ts = 1; ts <= 5; ++ts) {
                const int dim = plane_intersection_dim(geodesic_at(v, 0.9 * ts), origin);
                CHECK((dim == 0 || dim == 2));
            }
        }
    }
}

TEST_CASE("pi/4 alternative description") {
    // kind C, l = 1, n = 2: 2-dimensional, rank 1, phi = pi/4, classifies to P44:C1
    {
        const auto S = construct_pi4_alternative(HPKind::C, 1, 2);
        CHECK(S.dim() == 2);
        CHECK(is_lts(S).ok);
        CHECK(rank_of(S, false) == 1);
        const auto [lo, hi] = char_angle_spectrum(S, 50, 3);
        CHECK(lo == Catch::Approx(kPi / 4).margin(1e-8));
        CHECK(descriptors_equal(classify(S), LtsDescriptor::p44(hp_C(1))));
    }
    {
        const auto S = construct_pi4_alternative(HPKind::H, 1, 2);
        CHECK(S.dim() == 4);
        CHECK(is_lts(S).ok);
        CHECK(descriptors_equal(classify(S), LtsDescriptor::p44(hp_H(1))));
    }
    {
        const auto S = construct_pi4_alternative(HPKind::C, 2, 4);
        CHECK(descriptors_equal(classify(S), LtsDescriptor::p44(hp_C(2))));
        const auto T = construct_pi4_alternative(HPKind::H, 2, 4);
        CHECK(descriptors_equal(classify(T), LtsDescriptor::p44(hp_H(2))));
    }
    // Xi with Xi^2 != -id is rejected
    CHECK_THROWS_AS(
        construct_pi4_alternative_with(HPKind::C, 1, 2, [](const TangentVector& x) { return x; }),
        std::invalid_argument);
    CHECK_THROWS_AS(construct_pi4_alternative(HPKind::R, 1, 2), std::invalid_argument);
}

TEST_CASE("randomize") {
    const int n = 3;
    const auto S = construct(LtsDescriptor::s13(3), n);
    const auto R1 = randomize(S, 42), R2 = randomize(S, 42), R3 = randomize(S, 43);
    CHECK(equal(R1, R2));
    CHECK(!equal(R1, R3));
    CHECK(is_lts(R1).ok);
    CHECK(gram_residual(R1) < 1e-9);
    const auto [lo, hi] = char_angle_spectrum(R1, 100, 9);
    CHECK(lo == Catch::Approx(kArctanThird).margin(1e-8));
    CHECK(hi == Catch::Approx(kArctanThird).margin(1e-8));
}

TEST_CASE("container_of") {
    CHECK(descriptors_equal(*container_of(LtsDescriptor::s13(3), 4), LtsDescriptor::sp2()));
    CHECK(!container_of(LtsDescriptor::p12(hp_H(2)), 5).has_value());
    CHECK(descriptors_equal(*container_of(LtsDescriptor::p12(hp_H(2)), 6),
                            LtsDescriptor::g2(hp_H(5))));
    CHECK(descriptors_equal(*container_of(LtsDescriptor::g2(hp_R(4)), 4),
                            LtsDescriptor::g2(hp_C(4))));
    CHECK(!container_of(LtsDescriptor::p12(hp_S3()), 4).has_value());
    CHECK(descriptors_equal(*container_of(LtsDescriptor::p12(hp_S3()), 5),
                            LtsDescriptor::p12(hp_H(1))));
    CHECK(!container_of(LtsDescriptor::p0(hp_H(3)), 3).has_value());
    CHECK(!container_of(LtsDescriptor::sp2(), 2).has_value());
    CHECK(descriptors_equal(*container_of(LtsDescriptor::sp2(), 3), LtsDescriptor::g2(hp_H(2))));
    CHECK(!container_of(LtsDescriptor::s1xs5(5), 2).has_value());
    CHECK(descriptors_equal(*container_of(LtsDescriptor::geo(0.2), 2),
                            LtsDescriptor::pxp(hp_R(1), hp_R(1))));
    CHECK(descriptors_equal(*container_of(LtsDescriptor::q3(), 2), LtsDescriptor::g2(hp_C(2))));
}

TEST_CASE("containment witnesses") {
    // the three rows named in the operation examples
    for (const auto& [d, n] : std::vector<std::pair<LtsDescriptor, int>>{
             {LtsDescriptor::geo(0.37), 2},
             {LtsDescriptor::s5(), 2},
             {LtsDescriptor::q3(), 2},
             {LtsDescriptor::s13(3), 2},
             {LtsDescriptor::p12(hp_C(2)), 4},
         }) {
        INFO(descriptor_str(d));
        const auto [inner, outer] = containment_witness(d, n);
        CHECK(contains(outer, inner));
        CHECK(is_lts(outer).ok);
    }
    CHECK_THROWS_AS(containment_witness(LtsDescriptor::sp2(), 2), std::invalid_argument);
}

TEST_CASE("adapted Sp2 copy") {
    for (int n : {2, 3}) {
        const auto sp2 = sp2_adapted_to_s13(n);
        CHECK(sp2.dim() == 10);
        CHECK(is_lts(sp2).max_residual < 1e-9);
        CHECK(descriptors_equal(classify(sp2), LtsDescriptor::sp2()));
        CHECK(contains(sp2, construct(LtsDescriptor::s13(3), n)));
    }
}
