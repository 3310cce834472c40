#include <gtest/gtest.h>

#include "support/testing.hpp"

using namespace polycomp;
using namespace polycomp::testing;

TEST(Rational, AddsExactly) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
}

TEST(Rational, StaysReduced) {
    const Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    const Rational zero(BigInt(0), BigInt(-7));
    EXPECT_EQ(zero.denominator(), 1);
    EXPECT_EQ(zero.to_string(), "0");
}

TEST(Rational, InverseOfZeroThrows) {
    try {
        (void)Rational(0).inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse("7").to_string(), "7");
    EXPECT_EQ(Rational(BigInt(-1), BigInt(4)).to_string(), "-1/4");
    EXPECT_THROW(Rational::parse("1/"), Error);
    EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(PrimeField, InverseOfTwoModFive) {
    const PrimeField f5(5);
    EXPECT_EQ(f5.element(2).inverse(), f5.element(3));
}

TEST(PrimeField, RejectsCompositeModulus) {
    EXPECT_THROW(PrimeField(9), Error);
    EXPECT_THROW(PrimeField(1), Error);
    EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, MixedModuliAreRejected) {
    const PrimeField f5(5), f7(7);
    try {
        (void)(f5.element(1) + f7.element(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
}

TEST(PrimeField, InverseOfZeroThrows) {
    EXPECT_THROW((void)PrimeField(7).zero().inverse(), Error);
}

TEST(QuadExt, SquareOfRadicalIsDiscriminant) {
    const QuadraticExtension<Rational> ext(Rational(-4));
    const auto r = ext.sqrt_d();
    const auto sq = r * r;
    EXPECT_EQ(sq.rational_part(), Rational(-4));
    EXPECT_TRUE(sq.radical_part().is_zero());
}

TEST(QuadExt, DifferentDiscriminantsAreNotMixed) {
    const QuadraticExtension<Rational> a(Rational(2)), b(Rational(3));
    try {
        (void)(a.one() + b.one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
}

TEST(QuadExt, ZeroDivisorInverseFails) {
    // D = 4 is a square, so (2 - sqrt(D)) has norm 0.
    const QuadraticExtension<Rational> ext(Rational(4));
    EXPECT_THROW((void)ext.element(Rational(2), Rational(-1)).inverse(), Error);
    EXPECT_EQ(ext.sqrt_d() * ext.sqrt_d().inverse(), ext.one());
}

TEST(SqrtInField, Rationals) {
    EXPECT_EQ(sqrt_in_field(Rational(9, 4)), Rational(3, 2));
    EXPECT_FALSE(sqrt_in_field(Rational(-4)).has_value());
    EXPECT_FALSE(sqrt_in_field(Rational(2)).has_value());
    EXPECT_EQ(sqrt_in_field(Rational(0)), Rational(0));
}

TEST(SqrtInField, FourModFiveIsTwo) {
    const auto scan = square_roots_by_scan(4, 5);
    ASSERT_EQ(scan, (std::vector<std::uint64_t>{2, 3}));
    const auto root = sqrt_in_field(PrimeField(5).element(4));
    ASSERT_TRUE(root.has_value());
    EXPECT_EQ(root->residue(), scan.front());
}

TEST(SqrtInField, AgreesWithScanForSmallPrimes) {
    for (std::uint64_t p : {3U, 5U, 7U, 11U, 13U, 17U, 41U, 97U, 113U}) {
        const PrimeField f(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            const auto scan = square_roots_by_scan(a, p);
            const auto root = sqrt_in_field(f.element(a));
            ASSERT_EQ(root.has_value(), !scan.empty()) << a << " mod " << p;
            if (root) {
                EXPECT_EQ(root->residue(), scan.front()) << a << " mod " << p;
            }
        }
    }
}

TEST(TryDescend, Examples) {
    const QuadraticExtension<Rational> neg4(Rational(-4));
    EXPECT_EQ(try_descend(neg4.embed(Rational(3))), Rational(3));
    EXPECT_FALSE(try_descend(neg4.sqrt_d()).has_value());

    const QuadraticExtension<Rational> nine(Rational(9));
    EXPECT_EQ(try_descend(nine.sqrt_d()), Rational(3));
}

TEST(NthRootInField, Rationals) {
    EXPECT_EQ(nth_root_in_field(Rational(BigInt(-8), BigInt(27)), 3), Rational(BigInt(-2), BigInt(3)));
    EXPECT_EQ(nth_root_in_field(Rational(16), 4), Rational(2));
    EXPECT_FALSE(nth_root_in_field(Rational(-16), 4).has_value());
    EXPECT_FALSE(nth_root_in_field(Rational(5), 2).has_value());
}

TEST(NthRootInField, PrimeFieldPicksSmallestResidue) {
    const PrimeField f7(7);
    for (unsigned m : {2U, 3U, 4U, 5U, 6U}) {
        for (std::uint64_t a = 1; a < 7; ++a) {
            std::optional<std::uint64_t> smallest;
            for (std::uint64_t r = 1; r < 7 && !smallest; ++r)
                if (detail::powmod(r, m, 7) == a) smallest = r;
            const auto got = nth_root_in_field(f7.element(a), m);
            ASSERT_EQ(got.has_value(), smallest.has_value()) << a << " m=" << m;
            if (got) {
                EXPECT_EQ(got->residue(), *smallest);
            }
        }
    }
}

namespace {

template <class Gen>
void check_field_axioms(Gen gen, int cases) {
    for (int i = 0; i < cases; ++i) {
        const auto a = gen(), b = gen(), c = gen();
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_TRUE((a - a).is_zero());
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), a.context().one());
        }
    }
}

} // namespace

TEST(FieldAxioms, RandomRationals) {
    check_field_axioms([] { return random_rational(); }, 500);
}

TEST(FieldAxioms, RandomPrimeFieldElements) {
    for (std::uint64_t p : {2U, 3U, 13U, 1'000'003U}) {
        const PrimeField f(p);
        check_field_axioms([&] { return random_fp(f); }, 500);
    }
}

TEST(FieldAxioms, RandomQuadraticExtension) {
    const QuadraticExtension<Rational> ext(Rational(-3));
    check_field_axioms([&] { return ext.element(random_rational(), random_rational()); }, 500);
    const QuadraticExtension<Fp> ext7(PrimeField(7).element(3)); // 3 is a non-residue mod 7
    check_field_axioms([&] { return ext7.element(random_fp(PrimeField(7)), random_fp(PrimeField(7))); }, 500);
}

TEST(QuadExt, ConjugationIsHomomorphismAndNormMultiplies) {
    const QuadraticExtension<Rational> ext(Rational(5, 3));
    for (int i = 0; i < 500; ++i) {
        const auto x = ext.element(random_rational(), random_rational());
        const auto y = ext.element(random_rational(), random_rational());
        ASSERT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
        ASSERT_EQ((x + y).conjugate(), x.conjugate() + y.conjugate());
        ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
    }
}

TEST(SqrtInField, RandomSquaresRoundTrip) {
    for (int i = 0; i < 500; ++i) {
        const Rational r = random_rational(1000);
        const auto s = sqrt_in_field(r * r);
        ASSERT_TRUE(s.has_value());
        ASSERT_EQ(*s * *s, r * r);
        ASSERT_GE(s->sign(), 0);
    }
}
