#include <hgo/chevalley.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgo;
using hgo::testing::random_element;

namespace {

AlgebraElement gen(const LieAlgebra&, std::size_t i) { return AlgebraElement::basis(i); }

AlgebraElement jacobi(const LieAlgebra& g, const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
    return g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
}

}  // namespace

TEST(StructureConstants, MagnitudesAreStringLengths) {
    for (const auto& t : hgo::testing::small_types()) {
        RootSystem rs(t);
        StructureConstants n(rs);
        for (std::size_t i = 0; i < rs.num_roots(); ++i)
            for (std::size_t j = 0; j < rs.num_roots(); ++j) {
                const Root& a = rs.root(i);
                const Root& b = rs.root(j);
                if (!rs.is_root(a + b)) {
                    EXPECT_EQ(n(i, j), 0);
                    continue;
                }
                int p = rs.root_string(a, b).first;
                EXPECT_EQ(std::abs(n(i, j)), p + 1) << t.name();
                EXPECT_EQ(n(i, j), -n(j, i));
                EXPECT_EQ(n(rs.negate(i), rs.negate(j)), -n(i, j));
            }
    }
}

TEST(StructureConstants, ExtraspecialPairsArePositive) {
    RootSystem rs({'G', 2});
    StructureConstants n(rs);
    EXPECT_EQ(n.get({1, 0}, {0, 1}), 1);
    EXPECT_EQ(n.get({1, 0}, {1, 1}), 2);
    EXPECT_EQ(n.get({1, 0}, {2, 1}), 3);
    EXPECT_EQ(n.get({1, 0}, {3, 1}) , 0);
    EXPECT_EQ(n.get({0, 1}, {3, 1}), 1);
}

TEST(CompactForm, SU2Brackets) {
    LieAlgebra g({'A', 1});
    ASSERT_EQ(g.dim(), 3u);
    auto h = gen(g, 0), a = gen(g, 1), b = gen(g, 2);
    EXPECT_EQ(g.bracket(a, b), 2 * h);
    EXPECT_EQ(g.bracket(h, a), 2 * b);
    EXPECT_EQ(g.bracket(h, b), Rational(-2) * a);
    EXPECT_EQ(g.killing_form(h, h), 8);
    EXPECT_EQ(g.killing_form(a, a), 8);
    EXPECT_EQ(g.killing_form(a, b), 0);
}

TEST(CompactForm, JacobiOnAllBasisTriples) {
    for (const auto& t : std::vector<RootSystemType>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'C', 3}}) {
        LieAlgebra g(t);
        std::size_t d = g.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                for (std::size_t k = j + 1; k < d; ++k)
                    ASSERT_TRUE(jacobi(g, gen(g, i), gen(g, j), gen(g, k)).is_zero())
                        << t.name() << " " << g.generator_name(i) << g.generator_name(j) << g.generator_name(k);
    }
}

TEST(CompactForm, BracketIsBilinearAndAntisymmetric) {
    LieAlgebra g({'B', 3});
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        auto x = random_element(g, rng), y = random_element(g, rng), z = random_element(g, rng);
        EXPECT_EQ(g.bracket(x, y), -g.bracket(y, x));
        EXPECT_EQ(g.bracket(x + y, z), g.bracket(x, z) + g.bracket(y, z));
        EXPECT_TRUE(jacobi(g, x, y, z).is_zero());
    }
}

// Property: B([x,y],z) + B(y,[x,z]) = 0 on generator triples.
TEST(CompactForm, KillingInvariance) {
    for (const auto& t : std::vector<RootSystemType>{{'A', 2}, {'G', 2}, {'B', 3}}) {
        LieAlgebra g(t);
        std::size_t d = g.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    auto x = gen(g, i), y = gen(g, j), z = gen(g, k);
                    ASSERT_EQ(g.killing_form(g.bracket(x, y), z) + g.killing_form(y, g.bracket(x, z)), 0);
                }
    }
}

TEST(CompactForm, KillingGramStructure) {
    for (const auto& t : hgo::testing::small_types()) {
        LieAlgebra g(t);
        const RootSystem& rs = g.roots();
        const Matrix& gram = g.gram();
        std::size_t l = g.rank();
        // Cartan block from the root sum, and the cross-check against the dual form.
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) {
                long s = 0;
                for (std::size_t r = 0; r < rs.num_roots(); ++r)
                    s += static_cast<long>(rs.pair_coroot(rs.root(r), static_cast<int>(i))) *
                         rs.pair_coroot(rs.root(r), static_cast<int>(j));
                EXPECT_EQ(gram[i][j], s);
                Root ai(l, 0), aj(l, 0);
                ai[i] = 1;
                aj[j] = 1;
                EXPECT_EQ(gram[i][j], 4 * rs.pair_B(ai, aj) / (rs.pair_B(ai, ai) * rs.pair_B(aj, aj)));
            }
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j) {
                if (i == j) {
                    EXPECT_GT(gram[i][j], 0);
                } else if (i >= l || j >= l) {
                    EXPECT_EQ(gram[i][j], 0);
                }
            }
        // A and B of the same root have equal length.
        for (std::size_t k = 0; k < rs.num_positive(); ++k)
            EXPECT_EQ(gram[g.a_index(k)][g.a_index(k)], gram[g.b_index(k)][g.b_index(k)]);
    }
}

TEST(CompactForm, ProjectionMatchesGramSolve) {
    LieAlgebra g({'A', 2});
    std::mt19937_64 rng(5);
    auto x = random_element(g, rng);
    std::vector<AlgebraElement> basis = {gen(g, g.a_index(0)), gen(g, g.b_index(2)), g.coroot_element({1, 1})};
    auto p = g.project(x, basis);
    for (const auto& b : basis) EXPECT_EQ(g.killing_form(x - p, b), 0);
    std::vector<AlgebraElement> skew = {gen(g, 0), gen(g, 1)};
    EXPECT_THROW(g.project(x, skew), NonOrthogonalBasis);
}

TEST(CompactForm, RejectsForeignElements) {
    LieAlgebra a1({'A', 1});
    LieAlgebra a2({'A', 2});
    auto big = AlgebraElement::basis(a2.dim() - 1);
    EXPECT_THROW(a1.bracket(big, AlgebraElement::basis(0)), AlgebraMismatch);
    EXPECT_THROW(a1.killing_form(big, big), AlgebraMismatch);
}
