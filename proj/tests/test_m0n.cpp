#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace hyperstab;

namespace {

QPolynomial poly(std::vector<long long> c)
{
    std::vector<Int> v(c.begin(), c.end());
    return QPolynomial(v);
}

} // namespace

TEST(ClosedPointCount, Examples)
{
    EXPECT_EQ(closed_point_count(1)(Rational(3)), 4);
    EXPECT_EQ(closed_point_count(2), Polynomial<Rational>(std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)}));
    EXPECT_EQ(closed_point_count(3), Polynomial<Rational>(std::vector<Rational>{0, Rational(-1, 3), 0, Rational(1, 3)}));
    EXPECT_THROW(closed_point_count(0), UsageError);
}

TEST(ClosedPointCount, MatchesIrreducibleCounts)
{
    // Closed points of degree d >= 2 on P^1 are monic irreducibles of degree d.
    for (int q : {3, 5})
        for (int d = 2; d <= 3; ++d)
            EXPECT_EQ(closed_point_count(d)(Rational(q)), Rational(static_cast<long long>(oracle::irreducibles(d, q).size())))
                << "q=" << q << " d=" << d;
}

TEST(TwistedCount, Examples)
{
    EXPECT_EQ(twisted_count_config_p1(3, {1, 1, 1}), poly({1, 1}) * poly({0, 1}) * poly({-1, 1}));
    EXPECT_EQ(twisted_count_config_p1(2, {2}), poly({0, -1, 1}));
    const QPolynomial a2 = poly({0, -1, 1});  // 2 a_2
    EXPECT_EQ(twisted_count_config_p1(4, {2, 2}), a2 * (a2 - poly({2})));
    EXPECT_THROW(twisted_count_config_p1(4, {2, 1}), UsageError);
}

TEST(BruteTwistedCount, Examples)
{
    EXPECT_EQ(brute_twisted_count(3, {1, 1, 1}, 5), 120);
    EXPECT_EQ(brute_twisted_count(4, {2, 2}, 3), 24);
    EXPECT_EQ(brute_twisted_count(2, {1, 1}, 3), 12);
}

TEST(BruteTwistedCount, AgreesWithClosedForm)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions(n))
            for (int q : {3, 5, 7})
                EXPECT_EQ(brute_twisted_count(n, mu, q), twisted_count_config_p1(n, mu)(Int(q)))
                    << "n=" << n << " mu=" << to_string(mu) << " q=" << q;
    for (const auto& mu : partitions(6))
        if (lcm_of(mu) <= 6) {
            EXPECT_EQ(brute_twisted_count(6, mu, 3), twisted_count_config_p1(6, mu)(Int(3))) << to_string(mu);
        }
}

TEST(BruteTwistedCount, ResourceGuard)
{
    EXPECT_THROW(brute_twisted_count(5, {5}, 11, 1000), DomainError);
}

TEST(EquivariantPoincare, SmallCases)
{
    const auto& e3 = equivariant_poincare_m0n(3);
    ASSERT_EQ(e3.layers.size(), 1u);
    EXPECT_EQ(e3.layer(0), trivial_character(3));

    const auto& e4 = equivariant_poincare_m0n(4);
    ASSERT_EQ(e4.layers.size(), 2u);
    EXPECT_EQ(e4.layer(1), irreducible({2, 2}));
    EXPECT_EQ(e4.layer(1).at({1, 1, 1, 1}), 2);
    EXPECT_EQ(e4.layer(1).at({2, 2}), 2);

    const auto& e5 = equivariant_poincare_m0n(5);
    EXPECT_EQ(e5.layer(0).at({1, 1, 1, 1, 1}), 1);
    EXPECT_EQ(e5.layer(1).at({1, 1, 1, 1, 1}), 5);
    EXPECT_EQ(e5.layer(2).at({1, 1, 1, 1, 1}), 6);

    EXPECT_THROW(equivariant_poincare_m0n(2), UsageError);
}

TEST(EquivariantPoincare, PglDividesEveryTwistedCount)
{
    const QPolynomial pgl = poly({0, -1, 0, 1});
    for (int n = 3; n <= 10; ++n)
        for (const auto& mu : partitions(n)) {
            const auto [quo, rem] = divmod(twisted_count_config_p1(n, mu), pgl);
            EXPECT_TRUE(rem.is_zero()) << to_string(mu);
            EXPECT_LE(quo.degree(), n - 3);
        }
}

TEST(EquivariantPoincare, IdentityLayersAreProductFormula)
{
    for (int n = 3; n <= 10; ++n) {
        QPolynomial want(Int(1));
        for (int j = 2; j <= n - 2; ++j) want = want * poly({1, j});
        const auto& ep = equivariant_poincare_m0n(n);
        std::vector<Int> dims;
        for (const auto& layer : ep.layers) dims.push_back(layer.at(Partition(static_cast<std::size_t>(n), 1)));
        EXPECT_EQ(QPolynomial(dims), want) << "n=" << n;
    }
}

TEST(EquivariantPoincare, LayersAreHonestCharacters)
{
    for (int n = 3; n <= 10; ++n) {
        const auto& ep = equivariant_poincare_m0n(n);
        EXPECT_EQ(static_cast<int>(ep.layers.size()), n - 2);
        for (const auto& layer : ep.layers) {
            EXPECT_EQ(layer.values.size(), partitions(n).size());
            for (const auto& [lam, m] : schur_expand(layer)) EXPECT_GE(m, 0) << "n=" << n << " " << to_string(lam);
        }
    }
}

TEST(Cache, JsonRoundTrip)
{
    const auto& ep = equivariant_poincare_m0n(6);
    const auto j = to_json(ep);
    EXPECT_EQ(j.at("n"), 6);
    EXPECT_TRUE(j.at("layers")[0].at("values")[0].at("trace").is_string());
    EXPECT_EQ(equivariant_poincare_from_json(j), ep);
}

TEST(Cache, SaveAndLoad)
{
    const auto dir = std::filesystem::temp_directory_path() / "hyperstab_m0n_cache_test";
    std::filesystem::remove_all(dir);
    EXPECT_FALSE(load_m0n_cache(dir, 7).has_value());
    const auto& ep = equivariant_poincare_m0n(7);
    save_m0n_cache(dir, ep);
    const auto back = load_m0n_cache(dir, 7);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, ep);
    for (const auto& f : std::filesystem::directory_iterator(dir))
        EXPECT_EQ(f.path().filename().string().find(".tmp"), std::string::npos);
    // A corrupt file is ignored rather than trusted.
    std::ofstream(m0n_cache_file(dir, 8)) << "{\"n\": 8, \"layers\": [";
    EXPECT_FALSE(load_m0n_cache(dir, 8).has_value());
    std::filesystem::remove_all(dir);
}

TEST(Moebius, SmallValues)
{
    const std::vector<int> want = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(moebius(n), want[n - 1]) << n;
}
