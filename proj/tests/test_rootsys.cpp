#include <hgo/rootsys.hpp>

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hgo;

namespace {

// Independent enumeration: orbit of the simple roots under simple reflections.
std::set<Root> reflection_closure(const RootSystem& rs) {
    int l = rs.rank();
    std::set<Root> seen;
    std::vector<Root> stack;
    for (int i = 0; i < l; ++i) {
        Root r(l, 0);
        r[i] = 1;
        stack.push_back(r);
    }
    while (!stack.empty()) {
        Root b = stack.back();
        stack.pop_back();
        if (!seen.insert(b).second) continue;
        for (int i = 0; i < l; ++i) {
            Root s = b;
            s[i] -= rs.pair_coroot(b, i);
            if (!seen.count(s)) stack.push_back(s);
        }
    }
    return seen;
}

int dual_coxeter(const RootSystemType& t) {
    switch (t.family) {
        case 'A': return t.rank + 1;
        case 'B': return 2 * t.rank - 1;
        case 'C': return t.rank + 1;
        case 'D': return 2 * t.rank - 2;
        case 'E': return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
        case 'F': return 9;
        case 'G': return 4;
    }
    return 0;
}

std::vector<RootSystemType> all_types() {
    auto v = hgo::testing::small_types();
    v.push_back({'F', 4});
    v.push_back({'E', 6});
    v.push_back({'E', 7});
    v.push_back({'E', 8});
    v.push_back({'D', 5});
    v.push_back({'C', 5});
    return v;
}

}  // namespace

TEST(RootSystem, CountsMatchTypeFormulas) {
    for (const auto& t : all_types()) {
        RootSystem rs(t);
        EXPECT_EQ(rs.num_roots(), expected_root_count(t)) << t.name();
    }
}

TEST(RootSystem, EnumerationAgreesWithReflectionClosure) {
    for (const auto& t : all_types()) {
        RootSystem rs(t);
        auto closure = reflection_closure(rs);
        EXPECT_EQ(closure.size(), rs.num_roots()) << t.name();
        for (const auto& r : closure) EXPECT_TRUE(rs.is_root(r)) << t.name() << to_string(r);
    }
}

TEST(RootSystem, CanonicalOrder) {
    RootSystem rs({'B', 3});
    const auto& pos = rs.positive_roots();
    for (int i = 0; i < 3; ++i) {
        Root e(3, 0);
        e[i] = 1;
        EXPECT_EQ(pos[i], e);
    }
    for (std::size_t i = 1; i < pos.size(); ++i) EXPECT_TRUE(canonical_less(pos[i - 1], pos[i]));
    for (std::size_t i = 0; i < rs.num_positive(); ++i) EXPECT_EQ(rs.root(rs.negate(i)), -rs.root(i));
}

TEST(RootSystem, RejectsInadmissibleTypes) {
    EXPECT_THROW(RootSystem({'B', 1}), InvalidType);
    EXPECT_THROW(RootSystem({'C', 2}), InvalidType);
    EXPECT_THROW(RootSystem({'D', 3}), InvalidType);
    EXPECT_THROW(RootSystem({'E', 9}), InvalidType);
    EXPECT_THROW(RootSystem({'F', 3}), InvalidType);
    EXPECT_THROW(RootSystem({'X', 2}), InvalidType);
    EXPECT_THROW(parse_type("A0"), InvalidType);
    EXPECT_EQ(parse_type("F4").family, 'F');
}

TEST(RootSystem, CartanAndGramAreConsistent) {
    for (const auto& t : all_types()) {
        RootSystem rs(t);
        int l = rs.rank();
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                EXPECT_EQ(rs.gram()[i][j] * 2 / rs.gram()[j][j], rs.cartan()[i][j]);
            }
        Rational longest = 0;
        for (int i = 0; i < l; ++i) longest = std::max(longest, rs.gram()[i][i]);
        EXPECT_EQ(longest, 2) << t.name();
    }
}

TEST(RootSystem, G2StringExample) {
    RootSystem rs({'G', 2});
    Root shrt = {1, 0}, lng = {0, 1};
    EXPECT_LT(rs.inner(shrt, shrt), rs.inner(lng, lng));
    EXPECT_EQ(rs.root_string(shrt, lng), std::make_pair(0, 3));
    EXPECT_EQ(rs.root_string(lng, shrt), std::make_pair(0, 1));
    EXPECT_THROW(rs.root_string(shrt, shrt), std::invalid_argument);
    EXPECT_THROW(rs.root_string(shrt, {2, 0}), NotARoot);
}

// Property: p - q = <beta, alpha^vee> and strings have length at most 4.
TEST(RootSystem, StringsMatchCartanIntegers) {
    for (const auto& t : all_types()) {
        RootSystem rs(t);
        if (rs.num_roots() > 130) continue;
        for (std::size_t i = 0; i < rs.num_roots(); ++i)
            for (std::size_t j = 0; j < rs.num_roots(); ++j) {
                const Root& a = rs.root(i);
                const Root& b = rs.root(j);
                if (a == b || a == -b) continue;
                auto [p, q] = rs.root_string(a, b);
                Rational c = 2 * rs.inner(b, a) / rs.inner(a, a);
                EXPECT_EQ(Rational(p - q), c);
                EXPECT_LE(p + q, 3);
            }
    }
}

TEST(RootSystem, KillingDualMatchesDualCoxeterNumber) {
    RootSystem a1({'A', 1});
    EXPECT_EQ(a1.killing_scale(), frac(1, 4));
    EXPECT_EQ(a1.pair_B(Root{1}, Root{1}), frac(1, 2));
    for (const auto& t : all_types()) {
        RootSystem rs(t);
        Root lng(rs.rank(), 0);
        for (int i = 0; i < rs.rank(); ++i)
            if (rs.gram()[i][i] == 2) lng[i] = 1, i = rs.rank();
        EXPECT_EQ(rs.pair_B(lng, lng), frac(1, dual_coxeter(t))) << t.name();
        for (std::size_t i = 0; i < rs.num_roots(); ++i) EXPECT_GT(rs.pair_B(rs.root(i), rs.root(i)), 0);
    }
}

TEST(RootSystem, FundamentalWeightsAndCoweights) {
    RootSystem a1({'A', 1});
    EXPECT_EQ(a1.fundamental_coweight(0)[0], frac(1, 2));
    for (const auto& t : all_types()) {
        RootSystem rs(t);
        int l = rs.rank();
        for (int j = 0; j < l; ++j) {
            auto w = rs.fundamental_weight(j);
            auto h = rs.fundamental_coweight(j);
            for (int i = 0; i < l; ++i) {
                Root ai(l, 0);
                ai[i] = 1;
                std::vector<Rational> aiq(l, Rational(0));
                aiq[i] = 1;
                Rational ratio = 2 * rs.pair_B_weights(w, aiq) / rs.pair_B(ai, ai);
                EXPECT_EQ(ratio, i == j ? 1 : 0);
                EXPECT_EQ(rs.evaluate(ai, h), i == j ? 1 : 0);
            }
        }
    }
    EXPECT_THROW(a1.fundamental_coweight(1), std::out_of_range);
}

TEST(RootSystem, CorootsAreIntegral) {
    for (const auto& t : all_types()) {
        RootSystem rs(t);
        for (std::size_t i = 0; i < rs.num_positive(); ++i) {
            auto c = rs.coroot(rs.root(i));
            for (const auto& v : c) EXPECT_EQ(v.get_den(), 1);
            EXPECT_EQ(rs.evaluate(rs.root(i), c), 2);
        }
    }
}
