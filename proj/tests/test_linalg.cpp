#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hyperstab;

namespace {
constexpr std::uint64_t kSeed = 1234;
}

TEST(SectionSpace, DimensionMatchesBasis)
{
    for (int n = 0; n <= 3; ++n)
        for (int d = 2 * n; d <= 2 * n + 6; ++d) {
            const SectionSpace S(d, n);
            EXPECT_EQ(static_cast<int>(S.basis.size()), S.dimension());
            EXPECT_EQ(S.dimension(), 3 * d - 3 * n + 3);
        }
    EXPECT_THROW(SectionSpace(3, 2), UsageError);
    EXPECT_THROW(SectionSpace(3, -1), UsageError);
}

TEST(KernelDimension, ZeroMatrix)
{
    const SectionSpace S(5, 1);
    const Matrix zero(4, Row(S.basis.size(), 0));
    EXPECT_EQ(kernel_dimension(zero, S.basis.size()), 15);
    EXPECT_EQ(kernel_dimension({}, 15), 15);
    EXPECT_THROW(kernel_dimension({Row(3, 0)}, 4), UsageError);
}

TEST(KernelDimension, BareissAgreesWithPrimeField)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> v(-3, 3), sz(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = sz(rng), c = sz(rng);
        Matrix m(static_cast<std::size_t>(r), Row(static_cast<std::size_t>(c)));
        for (auto& row : m)
            for (auto& x : row) x = v(rng);
        if (trial % 3 == 0 && r > 1) m[r - 1] = m[0];  // force a dependency now and then
        EXPECT_EQ(rank_rational(m), rank_mod_p(m, 1'000'003));
    }
}

TEST(SingularityRows, OffExceptionalAreThePartials)
{
    // At [1,0,0] each partial picks out exactly one monomial.
    const SectionSpace S(2, 0);
    const auto rows = singularity_rows(PointOnSurface::off(1, 0, 0), S);
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t k = 0; k < S.basis.size(); ++k) {
        const auto [a, b, c] = S.basis[k];
        EXPECT_EQ(rows[0][k], (b == 0 && c == 0) ? a : 0);
        EXPECT_EQ(rows[1][k], (b == 1 && c == 0) ? 1 : 0);
        EXPECT_EQ(rows[2][k], (b == 0 && c == 1) ? 1 : 0);
    }
}

TEST(SingularityRows, OnExceptionalReadsAlphaPartialsAndBeta)
{
    const SectionSpace S(4, 1);
    const auto rows = singularity_rows(PointOnSurface::on(1, 0), S);
    for (std::size_t k = 0; k < S.basis.size(); ++k) {
        const auto [a, b, c] = S.basis[k];
        EXPECT_EQ(rows[0][k], (c == 2 && b == 0) ? a : 0);
        EXPECT_EQ(rows[1][k], (c == 2 && b == 1) ? 1 : 0);
        EXPECT_EQ(rows[2][k], (c == 1 && b == 0) ? 1 : 0);
    }
    EXPECT_THROW(singularity_rows(PointOnSurface::on(0, 0), S), UsageError);
}

TEST(SingularityRows, PairOnRulingLineHasRankFive)
{
    const SectionSpace S(7, 1);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const auto pts = sample_configuration({0, 0, 1}, rng);
        ASSERT_EQ(pts.size(), 2u);
        EXPECT_EQ(rank_rational(configuration_rows(pts, S)), 5);
    }
}

TEST(VerifyBundleRank, OnePointCostsThree)
{
    for (const ConfigurationType t : {ConfigurationType{1, 0, 0}, ConfigurationType{0, 1, 0}}) {
        const auto rep = verify_bundle_rank(t, 6, 1, 50, kSeed);
        EXPECT_TRUE(rep.passed());
        EXPECT_EQ(rep.expected_kernel, SectionSpace(6, 1).dimension() - 3);
        EXPECT_EQ(rep.kernels, std::vector<int>(50, rep.expected_kernel));
    }
}

TEST(VerifyBundleRank, Examples)
{
    auto check = [](ConfigurationType t, int d, int n, int drop) {
        const auto rep = verify_bundle_rank(t, d, n, 100, kSeed);
        EXPECT_TRUE(rep.passed()) << t.str() << " d=" << d << " n=" << n;
        EXPECT_EQ(rep.expected_kernel, SectionSpace(d, n).dimension() - drop);
    };
    check({2, 0, 0}, 7, 1, 6);
    check({0, 0, 2}, 9, 0, 10);
    check({1, 0, 1}, 8, 2, 8);
    check({1, 1, 1}, 9, 0, 11);
}

TEST(VerifyBundleRank, SmallAndThreePointTypesAtTwoDegrees)
{
    auto types = small_types();
    for (const auto& t : types_with_points(3)) types.push_back(t);
    for (const auto& t : types)
        for (int n : {0, 1}) {
            const int d = minimal_bound_degree(t, n);
            for (int dd : {d, d + 1})
                EXPECT_TRUE(verify_bundle_rank(t, dd, n, 20, kSeed).passed()) << t.str() << " d=" << dd << " n=" << n;
        }
}

TEST(VerifyBundleRank, BelowBoundIsUsageError)
{
    EXPECT_THROW(verify_bundle_rank({2, 0, 0}, 4, 1, 1, kSeed), UsageError);
    try {
        verify_bundle_rank({2, 0, 0}, 4, 1, 1, kSeed);
    } catch (const UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("smallest admissible d is 5"), std::string::npos) << e.what();
    }
}

TEST(VerifyBundleRank, WitnessBelowBound)
{
    const auto drop = find_rank_drop({2, 0, 0}, 4, 1, 100, kSeed);
    ASSERT_TRUE(drop.has_value());
    EXPECT_GT(drop->kernel, SectionSpace(4, 1).dimension() - 6);
}

TEST(VerifyBundleRank, ThreePairsOnTheBoundaryForNTwo)
{
    // (0,0,3) with n = 2 and d = 6 meets the bound, yet the product of the
    // three ruling lines, squared, is a section singular at all six points:
    // the kernel is 1 instead of v - 15 = 0.
    const ConfigurationType t{0, 0, 3};
    ASSERT_TRUE(satisfies_codim_bound(t, 6, 2));
    const auto rep = verify_bundle_rank(t, 6, 2, 10, kSeed);
    EXPECT_EQ(rep.expected_kernel, 0);
    EXPECT_EQ(rep.kernels, std::vector<int>(10, 1));
    EXPECT_TRUE(verify_bundle_rank(t, 7, 2, 10, kSeed).passed());
}

TEST(VerifyBundleRank, RationalAndPrimeFieldAgree)
{
    for (int n : {0, 1, 3}) {
        const ConfigurationType t{1, 1, 1};
        const int d = minimal_bound_degree(t, n);
        const auto a = verify_bundle_rank(t, d, n, 10, kSeed, FieldKind::Rational);
        const auto b = verify_bundle_rank(t, d, n, 10, kSeed, FieldKind::Prime);
        EXPECT_EQ(a.kernels, b.kernels);
        EXPECT_GT(b.prime, 2 * d);
        if (n >= 3) {
            EXPECT_EQ(b.prime % n, 1);
        }
    }
}

TEST(VerifyBundleRank, DeterministicPerSeed)
{
    auto r1 = trial_rng(5, 3), r2 = trial_rng(5, 3);
    const auto a = sample_configuration({1, 1, 1}, r1);
    const auto b = sample_configuration({1, 1, 1}, r2);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].x, b[i].x);
        EXPECT_EQ(a[i].y, b[i].y);
        EXPECT_EQ(a[i].z, b[i].z);
    }
}

TEST(MinimalBound, Values)
{
    EXPECT_EQ(minimal_bound_degree({2, 0, 0}, 1), 5);
    EXPECT_EQ(minimal_bound_degree({0, 0, 3}, 2), 6);
    EXPECT_EQ(minimal_bound_degree({1, 0, 0}, 0), 1);
}
