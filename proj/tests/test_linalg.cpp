#include <hgo/linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hgo;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int span) {
    Matrix m(r, std::vector<Rational>(c));
    for (auto& row : m)
        for (auto& v : row) v = frac(static_cast<long>(rng() % (2 * span + 1)) - span, static_cast<long>(rng() % 4) + 1);
    return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3/2"), frac(3, 2));
    EXPECT_EQ(parse_rational("-4/6"), frac(-2, 3));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(to_string(frac(6, 4)), "3/2");
    EXPECT_EQ(to_string(Rational(5)), "5");
    EXPECT_THROW(parse_rational("1.5"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("/3"), ParseError);
}

TEST(Linalg, SolveRecoversPlantedSolution) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 3 + rng() % 5, c = 2 + rng() % 5;
        Matrix a = random_matrix(rng, r, c, 4);
        std::vector<Rational> x0(c), b(r);
        for (auto& v : x0) v = frac(static_cast<long>(rng() % 11) - 5, 3);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b[i] += a[i][j] * x0[j];
        auto res = solve(a, b, c);
        ASSERT_TRUE(res.consistent);
        for (std::size_t i = 0; i < r; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < c; ++j) s += a[i][j] * res.x[j];
            EXPECT_EQ(s, b[i]);
        }
    }
}

TEST(Linalg, InconsistentSystemsCarryLeftCertificates) {
    Matrix a = {{1, 2}, {2, 4}, {0, 0}};
    std::vector<Rational> b = {1, 3, 0};
    auto res = solve(a, b, 2);
    EXPECT_FALSE(res.consistent);
    EXPECT_EQ(res.rank_a, 1u);
    EXPECT_EQ(res.rank_ab, 2u);
    auto y = left_certificate(a, b, 2);
    ASSERT_TRUE(y);
    for (std::size_t j = 0; j < 2; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += (*y)[i] * a[i][j];
        EXPECT_EQ(s, 0);
    }
    Rational yb = 0;
    for (std::size_t i = 0; i < 3; ++i) yb += (*y)[i] * b[i];
    EXPECT_EQ(yb, 1);
}

// Property: rank + nullity = number of columns, and every nullspace vector is annihilated.
TEST(Linalg, RankNullity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix a = random_matrix(rng, r, c, 2);
        if (trial % 3 == 0 && r > 1) a[r - 1] = a[0];
        auto ns = nullspace(a, c);
        EXPECT_EQ(rank(a) + ns.size(), c);
        for (const auto& v : ns)
            for (const auto& row : a) {
                Rational s = 0;
                for (std::size_t j = 0; j < c; ++j) s += row[j] * v[j];
                EXPECT_EQ(s, 0);
            }
    }
}

TEST(Linalg, LeadingMinorsAndDefiniteness) {
    Matrix m = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
    auto minors = leading_principal_minors(m);
    ASSERT_EQ(minors.size(), 3u);
    EXPECT_EQ(minors[0], 2);
    EXPECT_EQ(minors[1], 3);
    EXPECT_EQ(minors[2], 4);
    EXPECT_TRUE(positive_definite(m));
    EXPECT_FALSE(positive_definite(Matrix{{1, 2}, {2, 1}}));
    EXPECT_FALSE(positive_definite(Matrix{{0, 0}, {0, 1}}));
}

TEST(Linalg, InverseRoundTrip) {
    Matrix m = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    auto inv = inverse(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(multiply(m, *inv), identity(3));
    EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST(Linalg, IncrementalSpan) {
    Echelon e(4);
    EXPECT_TRUE(e.insert({{0, frac(1, 2)}, {3, Rational(1)}}));
    EXPECT_TRUE(e.insert({{1, Rational(1)}}));
    EXPECT_FALSE(e.insert({{0, Rational(1)}, {1, Rational(-3)}, {3, Rational(2)}}));
    EXPECT_TRUE(e.contains({{1, frac(5, 7)}}));
    EXPECT_FALSE(e.contains({{2, Rational(1)}}));
    EXPECT_EQ(e.rank(), 2u);
}
