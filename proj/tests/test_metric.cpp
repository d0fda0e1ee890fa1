#include <hgo/metric.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace hgo;
using hgo::testing::random_in_span;

namespace {

std::shared_ptr<const MSpace> space(RootSystemType t, std::vector<int> p) { return MSpace::build({t, std::move(p)}); }

}  // namespace

TEST(Metric, StandardValidatesOnCatalog) {
    for (const auto& d : catalog()) {
        auto m = MSpace::build(d);
        MetricOperator op(m, MetricSpec::standard(*m));
        std::mt19937_64 rng(3);
        AlgebraElement x = random_in_span(m->n_basis(), rng);
        EXPECT_EQ(op.apply(x), x) << d.name();
    }
}

TEST(Metric, SplitMetricIsSelfAdjointAndEquivariant) {
    auto m = space({'A', 3}, {2});
    ASSERT_TRUE(m->truly_reducible(0));
    MetricSpec spec{{{Rational(1)}}, {SummandParams::split(1, 2, frac(1, 3))}};
    MetricOperator op(m, spec);
    const LieAlgebra& g = m->algebra();
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        AlgebraElement x = random_in_span(m->n_basis(), rng), y = random_in_span(m->n_basis(), rng);
        EXPECT_EQ(op.inner(x, y), op.inner(y, x));
        AlgebraElement k = random_in_span(m->k1_basis(), rng);
        EXPECT_EQ(op.apply(g.bracket(k, x)), g.bracket(k, op.apply(x)));
    }
    EXPECT_FALSE(spec.is_standard_up_to_scale());
}

// On n1 + n2 the operator is [[mu1, c b], [c b, mu2]] in an orthonormal pair, where
// ad(h)^2 = -b^2; positivity is mu1 > 0 and mu1 mu2 > c^2 b^2.
TEST(Metric, SplitPositivityMatchesTwoByTwoCriterion) {
    auto m = space({'A', 3}, {2});
    const SummandSplit& sp = *m->report(0).split;
    const LieAlgebra& g = m->algebra();
    AlgebraElement x = sp.n1.front();
    AlgebraElement hh = g.bracket(sp.h, g.bracket(sp.h, x));
    Rational b2 = -hh.coeff(x.terms().front().first) / x.terms().front().second;
    ASSERT_EQ(hh, -b2 * x);
    for (const Rational& mu1 : {Rational(1), Rational(2), frac(1, 2)})
        for (const Rational& mu2 : {Rational(1), Rational(3)})
            for (const Rational& c : {Rational(0), frac(1, 4), frac(1, 2), Rational(1), Rational(2)}) {
                bool expected = mu1 > 0 && mu1 * mu2 > c * c * b2;
                MetricSpec spec{{{Rational(1)}}, {SummandParams::split(mu1, mu2, c)}};
                bool accepted = true;
                try {
                    MetricOperator op(m, spec);
                } catch (const NotPositiveDefinite&) {
                    accepted = false;
                }
                EXPECT_EQ(accepted, expected) << to_string(mu1) << " " << to_string(mu2) << " " << to_string(c);
            }
}

TEST(Metric, SBlockIsAnOperatorInTheOrthogonalBasis) {
    auto m = space({'A', 2}, {1, 2});
    const LieAlgebra& g = m->algebra();
    Rational n0 = g.killing_form(m->s_orthogonal()[0], m->s_orthogonal()[0]);
    Rational n1 = g.killing_form(m->s_orthogonal()[1], m->s_orthogonal()[1]);
    MetricSpec spec = MetricSpec::standard(*m);
    spec.s_block = {{Rational(1), frac(1, 4)}, {frac(1, 4) * n0 / n1, Rational(1)}};
    MetricOperator op(m, spec);
    EXPECT_EQ(op.apply(m->s_orthogonal()[1]), m->s_orthogonal()[1] + frac(1, 4) * m->s_orthogonal()[0]);
    spec.s_block = {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    EXPECT_THROW(MetricOperator(m, spec), NotSelfAdjoint);
}

TEST(Metric, RejectsInvalidSpecs) {
    auto m = space({'A', 2}, {1, 2});
    MetricSpec bad = MetricSpec::standard(*m);
    bad.s_block = {{Rational(1)}};
    EXPECT_THROW(MetricOperator(m, bad), ShapeMismatch);
    bad = MetricSpec::standard(*m);
    bad.summands.pop_back();
    EXPECT_THROW(MetricOperator(m, bad), ShapeMismatch);
    bad = MetricSpec::standard(*m);
    bad.summands[1] = SummandParams::scalar(-1);
    EXPECT_THROW(MetricOperator(m, bad), NotPositiveDefinite);
    bad = MetricSpec::standard(*m);
    bad.s_block[1][1] = 0;
    EXPECT_THROW(MetricOperator(m, bad), NotPositiveDefinite);

    auto cp2 = space({'A', 2}, {1});
    MetricSpec split{{{Rational(1)}}, {SummandParams::split(1, 2, 0)}};
    EXPECT_THROW(MetricOperator(cp2, split), ShapeMismatch);
}

TEST(Metric, StandardScale) {
    auto m = space({'B', 2}, {1, 2});
    EXPECT_EQ(MetricSpec::scaled_standard(*m, frac(3, 2)).standard_scale(), std::optional<Rational>(frac(3, 2)));
    MetricSpec s = MetricSpec::standard(*m);
    s.summands[2] = SummandParams::scalar(2);
    EXPECT_FALSE(s.is_standard_up_to_scale());
    s = MetricSpec::standard(*m);
    s.summands[0] = SummandParams::split(1, 1, 0);
    EXPECT_TRUE(s.is_standard_up_to_scale());
    s.summands[0] = SummandParams::split(1, 1, frac(1, 8));
    EXPECT_FALSE(s.is_standard_up_to_scale());
}

TEST(Metric, ApplyRejectsVectorsOutsideN) {
    auto m = space({'A', 3}, {2});
    MetricOperator op(m, MetricSpec::standard(*m));
    EXPECT_THROW(op.apply(m->k1_basis().front()), OutOfSubspace);
}
