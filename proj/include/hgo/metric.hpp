#pragma once

#include "mspace.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgo {

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotPositiveDefinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSelfAdjoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotEquivariant : std::invalid_argument {
    NotEquivariant(const std::string& what, AlgebraElement k_, AlgebraElement x_)
        : std::invalid_argument(what), k(std::move(k_)), x(std::move(x_)) {}
    AlgebraElement k, x;
};

struct SummandParams {
    enum class Kind { Scalar, Split };
    Kind kind = Kind::Scalar;
    Rational lambda = 1;         // scalar summands
    Rational mu1 = 1, mu2 = 1;   // split summands, eigenvalues on n1 and n2
    Rational coupling = 0;       // split summands, weight of ad(h) between n1 and n2

    static SummandParams scalar(const Rational& l) {
        SummandParams p;
        p.lambda = l;
        return p;
    }
    static SummandParams split(const Rational& a, const Rational& b, const Rational& c) {
        SummandParams p;
        p.kind = Kind::Split;
        p.mu1 = a;
        p.mu2 = b;
        p.coupling = c;
        return p;
    }
    bool is_scalar_multiple(const Rational& l) const {
        if (kind == Kind::Scalar) return lambda == l;
        return mu1 == l && mu2 == l && coupling == 0;
    }
};

/**
 * Block description of an Ad(K1)-invariant metric on n = s + m.
 * s_block is the matrix of the metric operator on s in the B-orthogonal
 * basis MSpace::s_orthogonal(); it must be B-self-adjoint there.
 */
struct MetricSpec {
    Matrix s_block;
    std::vector<SummandParams> summands;

    static MetricSpec standard(const MSpace& m) { return scaled_standard(m, 1); }
    static MetricSpec scaled_standard(const MSpace& m, const Rational& l) {
        MetricSpec spec;
        spec.s_block = identity(m.dim_s());
        for (auto& row : spec.s_block)
            for (auto& v : row) v *= l;
        spec.summands.assign(m.num_summands(), SummandParams::scalar(l));
        return spec;
    }

    // Multiple of the standard metric, if it is one.
    std::optional<Rational> standard_scale() const {
        if (summands.empty() && s_block.empty()) return std::nullopt;
        Rational l = !s_block.empty() ? s_block[0][0]
                     : summands[0].kind == SummandParams::Kind::Scalar ? summands[0].lambda
                                                                         : summands[0].mu1;
        for (std::size_t i = 0; i < s_block.size(); ++i)
            for (std::size_t j = 0; j < s_block.size(); ++j)
                if (s_block[i][j] != (i == j ? l : Rational(0))) return std::nullopt;
        for (const auto& p : summands)
            if (!p.is_scalar_multiple(l)) return std::nullopt;
        return l;
    }
    bool is_standard_up_to_scale() const { return standard_scale().has_value(); }
};

/**
 * The operator Lambda with <x, y> = B(Lambda x, y). Scalar summands act
 * by lambda; on a split summand m_i = n1 + n2,
 *   Lambda(x1 + x2) = mu1 x1 + mu2 x2 + c ([h, x1] - [h, x2]),
 * which is B-self-adjoint because ad(h) is B-skew and maps n1 onto n2.
 */
class MetricOperator {
public:
    MetricOperator(std::shared_ptr<const MSpace> m, MetricSpec spec) : m_(std::move(m)), spec_(std::move(spec)) {
        const MSpace& ms = *m_;
        std::size_t ds = ms.dim_s();
        if (spec_.s_block.size() != ds) throw ShapeMismatch("s_block must be " + std::to_string(ds) + "x" + std::to_string(ds));
        for (const auto& row : spec_.s_block)
            if (row.size() != ds) throw ShapeMismatch("s_block rows must have length " + std::to_string(ds));
        if (spec_.summands.size() != ms.num_summands())
            throw ShapeMismatch("expected parameters for " + std::to_string(ms.num_summands()) + " summands");
        const LieAlgebra& g = ms.algebra();
        for (std::size_t i = 0; i < ds; ++i) s_norm_.push_back(g.killing_form(ms.s_orthogonal()[i], ms.s_orthogonal()[i]));
        for (std::size_t i = 0; i < ds; ++i)
            for (std::size_t j = 0; j < ds; ++j)
                if (s_norm_[i] * spec_.s_block[i][j] != s_norm_[j] * spec_.s_block[j][i])
                    throw NotSelfAdjoint("s_block is not self-adjoint for the Killing form");
        splits_.resize(ms.num_summands());
        for (std::size_t i = 0; i < ms.num_summands(); ++i) {
            if (spec_.summands[i].kind != SummandParams::Kind::Split) continue;
            const SummandReport& r = ms.report(i);
            if (!r.reducible || !r.split)
                throw ShapeMismatch("summand " + std::to_string(i + 1) + " is irreducible; split parameters do not apply");
            SplitData sd;
            sd.split = *r.split;
            std::size_t h = sd.split.n1.size();
            Matrix gram(h, std::vector<Rational>(h));
            for (std::size_t a = 0; a < h; ++a)
                for (std::size_t b = 0; b < h; ++b) gram[a][b] = g.killing_form(sd.split.n1[a], sd.split.n1[b]);
            sd.n1_gram_inverse = *inverse(gram);
            splits_[i] = std::move(sd);
        }
        Matrix gm = gram();
        for (std::size_t i = 0; i < gm.size(); ++i)
            for (std::size_t j = i + 1; j < gm.size(); ++j)
                if (gm[i][j] != gm[j][i]) throw NotSelfAdjoint("metric operator is not self-adjoint");
        if (!positive_definite(gm)) throw NotPositiveDefinite("metric is not positive definite");
        check_equivariant();
    }

    const MSpace& mspace() const { return *m_; }
    std::shared_ptr<const MSpace> mspace_ptr() const { return m_; }
    const MetricSpec& spec() const { return spec_; }

    AlgebraElement apply(const AlgebraElement& x) const {
        const MSpace& ms = *m_;
        if (!ms.in_n(x)) throw OutOfSubspace("vector is not in n");
        return apply_unchecked(x);
    }

    Rational inner(const AlgebraElement& x, const AlgebraElement& y) const {
        return m_->algebra().killing_form(apply(x), y);
    }

    // Gram matrix of the metric on MSpace::n_basis().
    Matrix gram() const {
        const auto& basis = m_->n_basis();
        std::vector<AlgebraElement> images;
        for (const auto& b : basis) images.push_back(apply_unchecked(b));
        Matrix gm(basis.size(), std::vector<Rational>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) gm[i][j] = m_->algebra().killing_form(images[i], basis[j]);
        return gm;
    }

private:
    struct SplitData {
        SummandSplit split;
        Matrix n1_gram_inverse;
    };

    AlgebraElement apply_unchecked(const AlgebraElement& x) const {
        const MSpace& ms = *m_;
        const LieAlgebra& g = ms.algebra();
        AlgebraElement out;
        // s part
        std::size_t ds = ms.dim_s();
        std::vector<Rational> c(ds);
        for (std::size_t j = 0; j < ds; ++j) c[j] = g.killing_form(x, ms.s_orthogonal()[j]) / s_norm_[j];
        for (std::size_t i = 0; i < ds; ++i) {
            Rational v = 0;
            for (std::size_t j = 0; j < ds; ++j) v += spec_.s_block[i][j] * c[j];
            if (v != 0) out += v * ms.s_orthogonal()[i];
        }
        for (std::size_t i = 0; i < ms.num_summands(); ++i) {
            AlgebraElement xi = ms.project_summand(x, i);
            if (xi.is_zero()) continue;
            const SummandParams& p = spec_.summands[i];
            if (p.kind == SummandParams::Kind::Scalar) {
                out += p.lambda * xi;
                continue;
            }
            const SplitData& sd = *splits_[i];
            AlgebraElement x1 = project_n1(sd, xi);
            AlgebraElement x2 = xi - x1;
            out += p.mu1 * x1;
            out += p.mu2 * x2;
            if (p.coupling != 0) out += p.coupling * (g.bracket(sd.split.h, x1) - g.bracket(sd.split.h, x2));
        }
        return out;
    }

    AlgebraElement project_n1(const SplitData& sd, const AlgebraElement& x) const {
        const LieAlgebra& g = m_->algebra();
        std::size_t h = sd.split.n1.size();
        std::vector<Rational> b(h);
        for (std::size_t a = 0; a < h; ++a) b[a] = g.killing_form(x, sd.split.n1[a]);
        AlgebraElement r;
        for (std::size_t a = 0; a < h; ++a) {
            Rational coef = 0;
            for (std::size_t k = 0; k < h; ++k) coef += sd.n1_gram_inverse[a][k] * b[k];
            if (coef != 0) r += coef * sd.split.n1[a];
        }
        return r;
    }

    void check_equivariant() const {
        const MSpace& ms = *m_;
        const LieAlgebra& g = ms.algebra();
        for (const auto& k : ms.k1_lie_generators())
            for (const auto& x : ms.n_basis()) {
                AlgebraElement lhs = apply_unchecked(g.bracket(k, x));
                AlgebraElement rhs = g.bracket(k, apply_unchecked(x));
                if (!(lhs == rhs)) throw NotEquivariant("metric operator does not commute with ad(k1)", k, x);
            }
    }

    std::shared_ptr<const MSpace> m_;
    MetricSpec spec_;
    std::vector<Rational> s_norm_;
    std::vector<std::optional<SplitData>> splits_;
};

} // namespace hgo
