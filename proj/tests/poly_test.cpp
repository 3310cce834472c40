#include <gtest/gtest.h>

#include "support/testing.hpp"

using namespace polycomp;
using namespace polycomp::testing;

TEST(Degree, ZeroPolynomialIsNegInfinity) {
    const Q zero(RationalField{});
    EXPECT_TRUE(zero.degree().is_neg_infinity());
    EXPECT_LT(zero.degree(), Degree(0));
    EXPECT_THROW((void)zero.degree().value(), Error);
    EXPECT_TRUE((zero.degree() + Degree(3)).is_neg_infinity());
    EXPECT_EQ(qpoly({5}).degree(), 0U);
}

TEST(Poly, TrailingZerosAreStripped) {
    const Q p = qpoly({1, 2, 0, 0});
    EXPECT_EQ(p.coefficients().size(), 2U);
    EXPECT_TRUE(qpoly({0, 0}).is_zero());
}

TEST(Poly, RingExamples) {
    EXPECT_EQ(qpoly({1, 1}) * qpoly({-1, 1}), qpoly({-1, 0, 1}));
    EXPECT_EQ(pow(fpoly(2, {-1, 1}), 2), fpoly(2, {1, 0, 1}));
    EXPECT_EQ(pow(qpoly({0, 2}), 3), qpoly({0, 0, 0, 8}));
    EXPECT_EQ(pow(qpoly({0, 2}), 0), qpoly({1}));
}

TEST(Poly, MixedFieldsAreRejected) {
    try {
        (void)(fpoly(5, {1, 1}) + fpoly(7, {1, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
}

TEST(Compose, CubicIntoQuadraticExpansion) {
    // (4x^3 + 3x)^2 + 1 by schoolbook multiplication.
    auto sq = int_mul({0, 3, 0, 4}, {0, 3, 0, 4});
    sq[0] += 1;
    ASSERT_EQ(sq, (std::vector<std::int64_t>{1, 0, 9, 0, 24, 0, 16}));
    EXPECT_EQ(compose(qpoly({1, 0, 1}), qpoly({0, 3, 0, 4})), qpoly({1, 0, 9, 0, 24, 0, 16}));
}

TEST(Compose, IdentityAndConstantOuter) {
    const Q p = qpoly({3, -1, 4, 1});
    EXPECT_EQ(compose(qpoly({0, 1}), p), p);
    EXPECT_EQ(compose(qpoly({7}), p), qpoly({7}));
    EXPECT_EQ(compose(p, qpoly({0, 1})), p);
}

TEST(Compose, DegreeIsMultiplicative) {
    for (int i = 0; i < 300; ++i) {
        const Q f = random_rational_poly(5);
        const Q g = random_rational_poly(4);
        if (f.is_constant() || g.is_constant()) continue;
        ASSERT_EQ(compose(f, g).degree(), Degree(f.degree().value() * g.degree().value()));
    }
}

TEST(Compose, AgreesWithPointEvaluation) {
    const PrimeField f11(11);
    for (int i = 0; i < 200; ++i) {
        const Pp f = random_fp_poly(f11, 4), g = random_fp_poly(f11, 4);
        const Pp fg = compose(f, g);
        for (std::uint64_t t = 0; t < 11; ++t) ASSERT_EQ(fg(f11.element(t)), f(g(f11.element(t))));
    }
}

TEST(Derivative, Examples) {
    EXPECT_EQ(derivative(qpoly({0, 3, 0, 1})), qpoly({3, 0, 3}));
    EXPECT_TRUE(derivative(fpoly(3, {0, 0, 0, 1})).is_zero());
    EXPECT_TRUE(derivative(qpoly({5})).is_zero());
    EXPECT_TRUE(derivative(Q(RationalField{})).is_zero());
}

TEST(Derivative, LinearAndProductRule) {
    for (int i = 0; i < 500; ++i) {
        const Q p = random_rational_poly(6), q = random_rational_poly(6);
        const Rational s = random_rational();
        ASSERT_EQ(derivative(p + q), derivative(p) + derivative(q));
        ASSERT_EQ(derivative(s * p), s * derivative(p));
        ASSERT_EQ(derivative(p * q), derivative(p) * q + p * derivative(q));
    }
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})), qpoly({-1, 1}));
    EXPECT_EQ(gcd(qpoly({1, 0, 1}), qpoly({0, 2})), qpoly({1}));
    // x(x-1)^2 = x^3 - 2x^2 + x; derivative 3x^2 - 4x + 1 = (x-1)(3x-1).
    const Q p = qpoly({0, 1, -2, 1});
    ASSERT_EQ(derivative(p), qpoly({-1, 1}) * qpoly({-1, 3}));
    EXPECT_EQ(gcd(p, derivative(p)), qpoly({-1, 1}));
}

TEST(Gcd, BothZeroIsInvalid) {
    try {
        (void)gcd(Q(RationalField{}), Q(RationalField{}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
}

TEST(Gcd, DividesBothAndIsMonic) {
    for (int i = 0; i < 500; ++i) {
        const Q common = random_rational_poly(2);
        const Q a = random_rational_poly(3) * common;
        const Q b = random_rational_poly(3) * common;
        if (a.is_zero() && b.is_zero()) continue;
        const Q g = gcd(a, b);
        ASSERT_EQ(g.leading(), Rational(1));
        ASSERT_TRUE(divrem(a, g).remainder.is_zero());
        ASSERT_TRUE(divrem(b, g).remainder.is_zero());
        if (!common.is_zero() && !a.is_zero() && !b.is_zero()) {
            ASSERT_TRUE(divrem(g, common.monic()).remainder.is_zero());
        }
    }
}

TEST(DivRem, Examples) {
    auto [q1, r1] = divrem(qpoly({-1, 0, 1}), qpoly({-1, 1}));
    EXPECT_EQ(q1, qpoly({1, 1}));
    EXPECT_TRUE(r1.is_zero());

    auto [q2, r2] = divrem(qpoly({0, 0, 1}), qpoly({1, 1}));
    EXPECT_EQ(q2, qpoly({-1, 1}));
    EXPECT_EQ(r2, qpoly({1}));

    // Oracle: (x^2 + 1)(16x^4 + 8x^2 + 1) re-multiplied by hand.
    ASSERT_EQ(int_mul({1, 0, 1}, {1, 0, 8, 0, 16}), (std::vector<std::int64_t>{1, 0, 9, 0, 24, 0, 16}));
    auto [q3, r3] = divrem(qpoly({1, 0, 9, 0, 24, 0, 16}), qpoly({1, 0, 1}));
    EXPECT_EQ(q3, qpoly({1, 0, 8, 0, 16}));
    EXPECT_TRUE(r3.is_zero());
}

TEST(DivRem, ByZeroThrows) {
    try {
        (void)divrem(qpoly({1, 1}), Q(RationalField{}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

TEST(DivRem, RoundTripRandomized) {
    const PrimeField f13(13);
    for (int i = 0; i < 500; ++i) {
        const Q p = random_rational_poly(8), q = random_rational_poly(4);
        if (q.is_zero()) continue;
        auto [quot, rem] = divrem(p, q);
        ASSERT_EQ(q * quot + rem, p);
        ASSERT_LT(rem.degree(), q.degree());

        const Pp a = random_fp_poly(f13, 8), b = random_fp_poly(f13, 4);
        if (b.is_zero()) continue;
        auto [fq, fr] = divrem(a, b);
        ASSERT_EQ(b * fq + fr, a);
        ASSERT_LT(fr.degree(), b.degree());
    }
}

TEST(Separable, Examples) {
    EXPECT_TRUE(is_separable(qpoly({1, 0, 1})));
    EXPECT_FALSE(is_separable(qpoly({0, 1, -2, 1})));
    // x^2 - 1 = (x - 1)^2 over F_2.
    ASSERT_EQ(fpoly(2, {-1, 0, 1}), pow(fpoly(2, {-1, 1}), 2));
    EXPECT_FALSE(is_separable(fpoly(2, {-1, 0, 1})));
    EXPECT_FALSE(is_separable(fpoly(3, {0, 0, 0, 1})));
}

TEST(Separable, ConstantIsInvalid) {
    try {
        (void)is_separable(qpoly({4}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
}

TEST(NthRoot, Examples) {
    EXPECT_EQ(nth_root(qpoly({1, 2, 1}), 2), qpoly({1, 1}));
    EXPECT_FALSE(nth_root(qpoly({1, 0, 1}), 2).has_value());
    const Q h = qpoly({-1, 0, 4});
    const Q squared = h * h;
    ASSERT_EQ(squared, qpoly({1, 0, -8, 0, 16}));
    EXPECT_EQ(nth_root(squared, 2), h);
}

TEST(NthRoot, NormalizesLeadingCoefficient) {
    // Over Q the root with positive leading coefficient comes back.
    EXPECT_EQ(nth_root(pow(qpoly({3, -2}), 2), 2), qpoly({-3, 2}));
    // Over F_5, x^2 + 4 = (x+2)(x+3): root of (x^2+4)^2 with leading residue 1.
    EXPECT_EQ(nth_root(pow(fpoly(5, {4, 0, 4}), 2), 2), fpoly(5, {1, 0, 1}));
    EXPECT_EQ(nth_root(pow(qpoly({1, -1}), 3), 3), qpoly({1, -1}));
}

TEST(NthRoot, CharacteristicDividingMIsRefused) {
    try {
        (void)nth_root(fpoly(3, {1, 0, 1}), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedCharacteristic);
    }
}

TEST(NthRoot, RoundTripRandomized) {
    const PrimeField f7(7);
    for (int i = 0; i < 500; ++i) {
        const unsigned m = static_cast<unsigned>(uniform(2, 4));
        const Q s = random_rational_poly(3);
        const auto r = nth_root(pow(s, m), m);
        ASSERT_TRUE(r.has_value()) << s;
        ASSERT_EQ(pow(*r, m), pow(s, m));

        const Pp t = random_fp_poly(f7, 3);
        const auto rt = nth_root(pow(t, m), m);
        ASSERT_TRUE(rt.has_value()) << t;
        ASSERT_EQ(pow(*rt, m), pow(t, m));

        // A perturbed power is a root only if the returned value proves it.
        const Q perturbed = pow(s, m) + qpoly({1});
        if (auto r2 = nth_root(perturbed, m)) {
            ASSERT_EQ(pow(*r2, m), perturbed);
        }
    }
}
