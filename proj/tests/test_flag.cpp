#include <hgo/flag.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace hgo;

namespace {

Root highest_root(const RootSystem& rs) {
    Root best = rs.root(0);
    for (std::size_t i = 0; i < rs.num_positive(); ++i)
        if (height(rs.root(i)) > height(best)) best = rs.root(i);
    return best;
}

}  // namespace

TEST(FlagManifold, FullFlagA2) {
    auto f = FlagManifold::build({{'A', 2}, {1, 2}});
    EXPECT_EQ(f->num_summands(), 3u);
    EXPECT_TRUE(f->rk_positive().empty());
    EXPECT_EQ(f->troots(), (std::vector<TRoot>{{1, 0}, {0, 1}, {1, 1}}));
    TRootGraph g = f->troot_graph();
    EXPECT_EQ(g.nodes.size(), 6u);
    EXPECT_TRUE(g.connected());
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(f->summand_dim(i), 2u);
        ExtremeRoots e = f->extreme_roots(i);
        EXPECT_EQ(e.lowest, e.highest);
    }
}

TEST(FlagManifold, ProjectivePlane) {
    auto f = FlagManifold::build({{'A', 2}, {1}});
    EXPECT_EQ(f->num_summands(), 1u);
    EXPECT_EQ(f->summand_dim(0), 4u);
    TRootGraph g = f->troot_graph();
    EXPECT_EQ(g.nodes.size(), 2u);
    EXPECT_EQ(g.edges.size(), 1u);
    ExtremeRoots e = f->extreme_roots(0);
    EXPECT_EQ(f->roots().root(e.lowest), (Root{1, 0}));
    EXPECT_EQ(f->roots().root(e.highest), (Root{1, 1}));
}

// With one painted node the t-roots are 1..m, m the coefficient in the highest root.
TEST(FlagManifold, SinglePaintedNodeMatchesHighestRoot) {
    for (const auto& d : catalog()) {
        if (d.painted.size() != 1) continue;
        auto f = FlagManifold::build(d);
        int m = highest_root(f->roots())[d.painted[0] - 1];
        ASSERT_EQ(f->num_summands(), static_cast<std::size_t>(m)) << d.name();
        for (int k = 1; k <= m; ++k) EXPECT_EQ(f->troots()[k - 1], TRoot{k}) << d.name();
    }
}

TEST(FlagManifold, FibersPartitionComplementaryRoots) {
    for (const auto& d : catalog()) {
        auto f = FlagManifold::build(d);
        const RootSystem& rs = f->roots();
        std::set<std::size_t> seen;
        std::size_t total = 0;
        for (std::size_t i = 0; i < f->num_summands(); ++i)
            for (std::size_t r : f->fiber(i)) {
                ++total;
                seen.insert(r);
                EXPECT_EQ(f->kappa(rs.root(r)), f->troots()[i]);
                EXPECT_EQ(f->summand_of(r), static_cast<int>(i));
            }
        EXPECT_EQ(total, seen.size()) << d.name();
        EXPECT_EQ(total, f->rm_positive().size()) << d.name();
        EXPECT_EQ(total + f->rk_positive().size(), rs.num_positive()) << d.name();
        EXPECT_TRUE(f->ordering_violations().empty()) << d.name();
    }
}

TEST(FlagManifold, KappaIsAdditive) {
    for (const auto& d : catalog()) {
        auto f = FlagManifold::build(d);
        const RootSystem& rs = f->roots();
        for (std::size_t a = 0; a < rs.num_roots(); ++a)
            for (std::size_t b = 0; b < rs.num_roots(); ++b) {
                Root s = rs.root(a) + rs.root(b);
                if (!rs.is_root(s)) continue;
                TRoot ka = f->kappa(rs.root(a)), kb = f->kappa(rs.root(b)), ks = f->kappa(s);
                for (std::size_t k = 0; k < ks.size(); ++k) ASSERT_EQ(ks[k], ka[k] + kb[k]);
            }
    }
}

TEST(FlagManifold, TRootsConnectedWhenAtLeastThreeSummands) {
    for (const auto& d : catalog()) {
        auto f = FlagManifold::build(d);
        if (f->num_summands() < 3) continue;
        EXPECT_TRUE(f->troot_graph().connected()) << d.name();
    }
}

TEST(FlagManifold, DoublesAreNotAdjacent) {
    auto f = FlagManifold::build({{'G', 2}, {1}});
    ASSERT_EQ(f->num_summands(), 3u);
    EXPECT_FALSE(f->adjacent({1}, {2}));
    EXPECT_FALSE(f->adjacent({-1}, {2}));
    EXPECT_TRUE(f->adjacent({1}, {-1}));
    EXPECT_TRUE(f->adjacent({1}, {3}));
    EXPECT_THROW(f->adjacent({1}, {4}), NotATRoot);
}

TEST(FlagManifold, ExtremesOfTwoDimensionalSummandsCoincide) {
    for (const auto& d : catalog()) {
        auto f = FlagManifold::build(d);
        for (std::size_t i = 0; i < f->num_summands(); ++i) {
            ExtremeRoots e = f->extreme_roots(i);
            EXPECT_TRUE(e.unique()) << d.name();
            EXPECT_EQ(e.lowest == e.highest, f->summand_dim(i) == 2) << d.name() << " m" << i + 1;
        }
    }
}

TEST(FlagManifold, RejectsBadPaintings) {
    EXPECT_THROW(FlagManifold::build({{'A', 2}, {}}), InvalidPainting);
    EXPECT_THROW(FlagManifold::build({{'A', 2}, {3}}), InvalidPainting);
    EXPECT_THROW(FlagManifold::build({{'A', 3}, {2, 1}}), InvalidPainting);
    EXPECT_THROW(FlagManifold::build({{'A', 3}, {1, 1}}), InvalidPainting);
    EXPECT_THROW(FlagManifold::build({{'Q', 3}, {1}}), InvalidType);
}

TEST(FlagManifold, CatalogSize) {
    EXPECT_EQ(catalog().size(), 106u);
    EXPECT_EQ(catalog().front().name(), "A1{1}");
}
