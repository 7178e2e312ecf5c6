#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyperstab;

namespace {

Series mono(int T, int t, int l, long long c = 1) { return Series::monomial(T, t, l, Int(c)); }

Series random_series(int T, std::mt19937_64& rng, bool unit)
{
    std::uniform_int_distribution<int> coef(-1000, 1000), lexp(-4, 6), nterms(0, 3);
    Series s(T);
    for (int t = 0; t <= T; ++t)
        for (int k = nterms(rng); k > 0; --k) s[t].add_term(lexp(rng), Int(coef(rng)));
    if (unit) s[0] = TatePolynomial<Int>(Int(1));
    return s;
}

} // namespace

TEST(Multiply, Examples)
{
    const int T = 6;
    EXPECT_EQ(multiply(Series::one(T) + mono(T, 1, 1), Series::one(T) - mono(T, 1, 1)), Series::one(T) - mono(T, 2, 2));
    EXPECT_EQ(multiply(Series::one(T) + mono(T, 2, 1), Series::one(T)), Series::one(T) + mono(T, 2, 1));
    EXPECT_EQ(multiply(Series::one(T) + mono(T, 1, 1), Series::one(T) + mono(T, 3, 2)),
              Series::one(T) + mono(T, 1, 1) + mono(T, 3, 2) + mono(T, 4, 3));
}

TEST(Multiply, TruncationMismatchIsError)
{
    EXPECT_THROW(multiply(Series::one(3), Series::one(4)), UsageError);
    Series a = Series::one(3);
    EXPECT_THROW(a += Series::one(4), UsageError);
}

TEST(Multiply, DropsDegreesBeyondTruncation)
{
    const auto p = multiply(mono(5, 3, 0), mono(5, 3, 0));
    EXPECT_TRUE(p.is_zero());
}

TEST(Multiply, AssociativeAndCommutative)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int T = 5 + trial % 16;
        const auto a = random_series(T, rng, false), b = random_series(T, rng, false), c = random_series(T, rng, false);
        EXPECT_EQ(multiply(a, b), multiply(b, a));
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
}

TEST(InvertUnit, GeometricSeries)
{
    EXPECT_EQ(invert_unit(Series::one(3) + mono(3, 1, 1)),
              Series::one(3) - mono(3, 1, 1) + mono(3, 2, 2) - mono(3, 3, 3));
    EXPECT_EQ(invert_unit(Series::one(6) + mono(6, 3, 2)), Series::one(6) - mono(6, 3, 2) + mono(6, 6, 4));
}

TEST(InvertUnit, StableDenominatorLowTerms)
{
    const auto inv = invert_unit(stable_denominator(4));
    EXPECT_EQ(inv[1], TatePolynomial<Int>::monomial(1, -1));
    EXPECT_EQ(inv[2], TatePolynomial<Int>::monomial(2));
    EXPECT_EQ(inv[3], TatePolynomial<Int>::monomial(3, -1) + TatePolynomial<Int>::monomial(2, -1));
    EXPECT_EQ(inv[4], TatePolynomial<Int>::monomial(4) + TatePolynomial<Int>::monomial(3));

    // Same result in the other order of factors.
    const auto a = invert_unit(Series::one(4) + mono(4, 1, 1));
    const auto b = invert_unit(Series::one(4) + mono(4, 3, 2));
    EXPECT_EQ(multiply(b, a), inv);
    EXPECT_EQ(multiply(a, b), inv);
}

TEST(InvertUnit, RandomUnitsRoundTrip)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_series(1 + trial % 20, rng, true);
        EXPECT_EQ(multiply(a, invert_unit(a)), Series::one(a.truncation()));
    }
}

TEST(InvertUnit, NonUnitIsError)
{
    EXPECT_THROW(invert_unit(mono(3, 0, 0, 2)), UsageError);
    EXPECT_THROW(invert_unit(mono(3, 0, 1)), UsageError);
}

TEST(EvaluateT, Examples)
{
    EXPECT_EQ(evaluate_t(Series::one(3) + mono(3, 1, 1), -1),
              TatePolynomial<Int>(Int(1)) - TatePolynomial<Int>::monomial(1));
    EXPECT_EQ(evaluate_t(Series::one(7), 5), TatePolynomial<Int>(Int(1)));
    const auto p = evaluate_t(stable_series(10), -1);
    EXPECT_EQ(p, TatePolynomial<Int>(Int(1)) + TatePolynomial<Int>::monomial(6) - TatePolynomial<Int>::monomial(7));
}

TEST(EvaluateT, RingHomomorphismBelowHalfTruncation)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int T = 12;
        auto a = random_series(T, rng, false).truncated(T / 2);
        auto b = random_series(T, rng, false).truncated(T / 2);
        Series A(T), B(T);
        for (int i = 0; i <= T / 2; ++i) {
            A[i] = a[i];
            B[i] = b[i];
        }
        for (long long t0 : {-1LL, 2LL}) {
            EXPECT_EQ(evaluate_t(A + B, t0), evaluate_t(A, t0) + evaluate_t(B, t0));
            EXPECT_EQ(evaluate_t(multiply(A, B), t0), evaluate_t(A, t0) * evaluate_t(B, t0));
        }
    }
}

TEST(Series, NegativeTruncationOrDegreeIsError)
{
    EXPECT_THROW(Series(-1), UsageError);
    EXPECT_THROW(Series::monomial(3, -1, 0), UsageError);
    EXPECT_THROW(Series::one(3).truncated(4), UsageError);
}

TEST(TatePolynomial, CancellationRemovesTerms)
{
    auto p = TatePolynomial<Int>::monomial(3, 5);
    p.add_term(3, Int(-5));
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(TatePolynomial<Int>::monomial(-2, 3).str(), "3*L^-2");
}
