#include <gtest/gtest.h>

#include <set>

#include "support/testing.hpp"

using namespace polycomp;
using namespace polycomp::testing;

TEST(PellCheck, Examples) {
    EXPECT_TRUE(pell_check(qpoly({0, 1}), qpoly({1})));
    EXPECT_TRUE(pell_check(qpoly({0, -3, 0, 4}), qpoly({-1, 0, 4})));
    EXPECT_FALSE(pell_check(qpoly({0, 1}), qpoly({0, 1})));
}

TEST(PellCheck, CharacteristicTwoIsRejected) {
    try {
        (void)pell_check(fpoly(2, {0, 1}), fpoly(2, {1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedCharacteristic);
    }
}

TEST(PellSolution, Examples) {
    const RationalField q;
    const auto s0 = pell_solution<Rational>(0, Sign::plus, Sign::plus, q);
    EXPECT_EQ(s0.P, qpoly({1}));
    EXPECT_TRUE(s0.Q.is_zero());

    const auto s1 = pell_solution<Rational>(1, Sign::plus, Sign::plus, q);
    EXPECT_EQ(s1.P, qpoly({0, 1}));
    EXPECT_EQ(s1.Q, qpoly({1}));

    const auto s3 = pell_solution<Rational>(3, Sign::minus, Sign::plus, q);
    EXPECT_EQ(s3.P, qpoly({0, 3, 0, -4}));
    EXPECT_EQ(s3.Q, qpoly({-1, 0, 4}));
    EXPECT_TRUE(pell_check(s3.P, s3.Q));
    ASSERT_TRUE(s3.classification.has_value());
    EXPECT_EQ(*s3.classification, (PellClass{Sign::minus, Sign::plus, 3}));
}

TEST(PellSolution, SoundUpTo50) {
    for (Sign sp : {Sign::plus, Sign::minus})
        for (Sign sq : {Sign::plus, Sign::minus}) {
            for (std::size_t n : {0U, 1U, 2U, 7U, 25U, 50U}) {
                const auto s = pell_solution<Rational>(n, sp, sq, RationalField{});
                ASSERT_TRUE(pell_check(s.P, s.Q));
            }
            for (std::uint64_t p : {3U, 5U, 7U}) {
                const auto s = pell_solution<Fp>(50, sp, sq, PrimeField(p));
                ASSERT_TRUE(pell_check(s.P, s.Q));
            }
        }
}

TEST(PellClassify, Examples) {
    EXPECT_EQ(pell_classify(qpoly({0, 1}), qpoly({1})), (PellClass{Sign::plus, Sign::plus, 1}));
    EXPECT_EQ(pell_classify(qpoly({0, -3, 0, 4}), qpoly({1, 0, -4})), (PellClass{Sign::plus, Sign::minus, 3}));
    EXPECT_FALSE(pell_classify(qpoly({1, 1}), qpoly({1})).has_value());
}

TEST(PellClassify, InvertsGenerator) {
    for (std::size_t n = 0; n <= 20; ++n)
        for (Sign sp : {Sign::plus, Sign::minus})
            for (Sign sq : {Sign::plus, Sign::minus}) {
                const auto s = pell_solution<Rational>(n, sp, sq, RationalField{});
                const auto c = pell_classify(s.P, s.Q);
                ASSERT_TRUE(c.has_value());
                EXPECT_EQ(c->n, n);
                EXPECT_EQ(c->sign_p, sp);
                EXPECT_EQ(c->sign_q, n == 0 ? Sign::plus : sq);
            }
}

namespace {

using Key = std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>;

std::vector<std::uint64_t> residues(const Pp& p) {
    std::vector<std::uint64_t> r;
    for (const auto& c : p.coefficients()) r.push_back(c.residue());
    return r;
}

std::set<Key> family(std::uint64_t p, std::size_t max_degree) {
    std::set<Key> out;
    for (std::size_t n = 0; n <= max_degree; ++n)
        for (Sign sp : {Sign::plus, Sign::minus})
            for (Sign sq : {Sign::plus, Sign::minus}) {
                const auto s = pell_solution<Fp>(n, sp, sq, PrimeField(p));
                out.insert({residues(s.P), residues(s.Q)});
            }
    return out;
}

std::set<Key> enumerated(std::uint64_t p, std::size_t max_degree) {
    std::set<Key> out;
    for (const auto& s : pell_enumerate_bruteforce(p, max_degree)) {
        EXPECT_TRUE(s.classification.has_value());
        out.insert({residues(s.P), residues(s.Q)});
    }
    return out;
}

} // namespace

TEST(PellEnumerate, DegreeOneOverF3) {
    const auto all = pell_enumerate_bruteforce(3, 1);
    ASSERT_EQ(all.size(), 6U);
    // (+-1, 0) and (+-x, +-1), in canonical order.
    EXPECT_EQ(all[0].P, fpoly(3, {1}));
    EXPECT_TRUE(all[0].Q.is_zero());
    EXPECT_EQ(all[1].P, fpoly(3, {-1}));
    EXPECT_EQ(all[2].P, fpoly(3, {0, 1}));
    EXPECT_EQ(all[2].Q, fpoly(3, {1}));
    EXPECT_EQ(all[5].P, fpoly(3, {0, -1}));
    EXPECT_EQ(all[5].Q, fpoly(3, {-1}));
    EXPECT_EQ(enumerated(3, 1), family(3, 1));
}

TEST(PellEnumerate, MatchesFamilyOverF3UpToDegree4) {
    const auto e = enumerated(3, 4);
    EXPECT_EQ(e.size(), 2U + 4U * 4U);
    EXPECT_EQ(e, family(3, 4));
}

TEST(PellEnumerate, MatchesFamilyOverF5UpToDegree2) {
    EXPECT_EQ(enumerated(5, 2), family(5, 2));
}

TEST(PellEnumerate, OrderIsCanonical) {
    const auto all = pell_enumerate_bruteforce(5, 2);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(*all[i - 1].classification < *all[i].classification);
}

TEST(PellEnumerate, RejectsLargeOrEvenInputs) {
    try {
        (void)pell_enumerate_bruteforce(3, 12, 1'000'000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SearchTooLarge);
    }
    EXPECT_THROW((void)pell_enumerate_bruteforce(2, 1), Error);
    EXPECT_THROW((void)pell_enumerate_bruteforce(9, 1), Error);
}
