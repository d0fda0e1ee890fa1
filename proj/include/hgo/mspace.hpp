#pragma once

#include "flag.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgo {

struct NotReducible : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SplitFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfSubspace : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Splitting of a reducible summand into two equivalent K1-submodules.
struct SummandSplit {
    std::size_t summand = 0;
    std::vector<AlgebraElement> n1, n2;
    AlgebraElement seed1, seed2;
    AlgebraElement h;  // iH of the fundamental coweight relating n1 and n2
    int coweight = 0;  // painted simple root index (0-based) of h
};

struct OracleResult {
    bool irreducible = true;
    std::size_t smallest_orbit = 0;        // smallest span generated from a single basis vector
    std::optional<std::size_t> commutant;  // dimension of symmetric K1-equivariant endomorphisms
};

struct SummandReport {
    std::size_t index = 0;
    std::size_t dim = 0;
    ExtremeRoots extremes;
    bool criterion = false;  // lowest/highest root test
    OracleResult oracle;
    bool reducible = false;  // decided by the oracle
    std::optional<SummandSplit> split;
    std::vector<std::string> findings;
};

/**
 * M-space G/K1 attached to a painted diagram: n = s + m with
 * s spanned by iH of the painted fundamental coweights and
 * m = m_1 + ... + m_s the isotropy summands of the flag manifold.
 */
class MSpace {
public:
    explicit MSpace(std::shared_ptr<const FlagManifold> f) : f_(std::move(f)) {
        const LieAlgebra& g = f_->algebra();
        const RootSystem& rs = g.roots();
        for (int j : f_->painted0()) s_basis_.push_back(g.cartan(rs.fundamental_coweight(j)));
        for (int i : f_->simple_k()) {
            Root phi(rs.rank(), 0);
            phi[i] = 1;
            a1_basis_.push_back(g.coroot_element(phi));
            k1_lie_generators_.push_back(g.A(phi));
            k1_lie_generators_.push_back(g.B(phi));
        }
        k1_basis_ = a1_basis_;
        for (std::size_t r : f_->rk_positive()) {
            k1_basis_.push_back(AlgebraElement::basis(g.a_index(r)));
            k1_basis_.push_back(AlgebraElement::basis(g.b_index(r)));
        }
        for (const auto& s : s_basis_) {
            AlgebraElement e = s;
            for (const auto& prev : s_orth_) e -= (g.killing_form(s, prev) / g.killing_form(prev, prev)) * prev;
            s_orth_.push_back(e);
            s_norm_.push_back(g.killing_form(e, e));
        }
        is_m_generator_.assign(g.dim(), false);
        for (std::size_t r : f_->rm_positive()) {
            is_m_generator_[g.a_index(r)] = true;
            is_m_generator_[g.b_index(r)] = true;
        }
        n_basis_ = s_basis_;
        for (std::size_t i = 0; i < f_->num_summands(); ++i)
            for (auto& e : f_->summand_basis(i)) n_basis_.push_back(e);
        reports_.resize(f_->num_summands());
    }

    static std::shared_ptr<MSpace> build(const PaintedDiagram& d) {
        return std::make_shared<MSpace>(FlagManifold::build(d));
    }

    const FlagManifold& flag() const { return *f_; }
    const LieAlgebra& algebra() const { return f_->algebra(); }
    std::size_t num_summands() const { return f_->num_summands(); }

    const std::vector<AlgebraElement>& s_basis() const { return s_basis_; }
    const std::vector<AlgebraElement>& s_orthogonal() const { return s_orth_; }
    const std::vector<AlgebraElement>& a1_basis() const { return a1_basis_; }
    const std::vector<AlgebraElement>& k1_basis() const { return k1_basis_; }
    const std::vector<AlgebraElement>& k1_lie_generators() const { return k1_lie_generators_; }
    const std::vector<AlgebraElement>& n_basis() const { return n_basis_; }
    std::size_t dim_s() const { return s_basis_.size(); }
    std::size_t dim_k1() const { return k1_basis_.size(); }
    std::size_t dim_n() const { return n_basis_.size(); }
    std::size_t dim_m() const { return n_basis_.size() - s_basis_.size(); }
    bool is_m_generator(std::size_t gidx) const { return is_m_generator_.at(gidx); }

    // B-orthogonal projection of a Cartan element onto s.
    AlgebraElement project_s(const AlgebraElement& x) const {
        AlgebraElement h = cartan_only(x);
        AlgebraElement r;
        for (std::size_t i = 0; i < s_orth_.size(); ++i) {
            Rational c = algebra().killing_form(h, s_orth_[i]);
            if (c != 0) r += (c / s_norm_[i]) * s_orth_[i];
        }
        return r;
    }

    AlgebraElement project_m(const AlgebraElement& x) const {
        std::vector<AlgebraElement::Term> t;
        for (const auto& [gidx, c] : x.terms())
            if (gidx < is_m_generator_.size() && is_m_generator_[gidx]) t.emplace_back(gidx, c);
        return AlgebraElement::from_terms(std::move(t));
    }

    AlgebraElement project_summand(const AlgebraElement& x, std::size_t i) const {
        std::vector<AlgebraElement::Term> t;
        const LieAlgebra& g = algebra();
        for (const auto& [gidx, c] : x.terms()) {
            if (gidx < g.rank()) continue;
            std::size_t r = g.generator(gidx).index;
            if (f_->summand_of(r) == static_cast<int>(i)) t.emplace_back(gidx, c);
        }
        return AlgebraElement::from_terms(std::move(t));
    }

    AlgebraElement project_n(const AlgebraElement& x) const { return project_s(x) + project_m(x); }
    AlgebraElement project_k1(const AlgebraElement& x) const {
        AlgebraElement r = cartan_only(x) - project_s(x);
        std::vector<AlgebraElement::Term> t;
        const LieAlgebra& g = algebra();
        for (const auto& [gidx, c] : x.terms())
            if (gidx >= g.rank() && !is_m_generator_[gidx]) t.emplace_back(gidx, c);
        return r + AlgebraElement::from_terms(std::move(t));
    }
    bool in_n(const AlgebraElement& x) const { return project_n(x) == x; }
    bool in_k1(const AlgebraElement& x) const { return project_k1(x) == x; }

    // Coordinates of a Cartan element of s in s_basis.
    std::vector<Rational> s_coordinates(const AlgebraElement& x) const {
        const RootSystem& rs = algebra().roots();
        std::vector<Rational> h = algebra().cartan_part(x), c;
        for (int j : f_->painted0()) {
            Root aj(rs.rank(), 0);
            aj[j] = 1;
            c.push_back(rs.evaluate(aj, h));
        }
        return c;
    }

    // Lowest/highest root criterion for reducibility of m_i.
    bool is_reducible(std::size_t i) const {
        ExtremeRoots e = f_->extreme_roots(i);
        return opposite_on_a1(e.lowest, e.highest);
    }

    // alpha|a1 = -beta|a1; the s-parts agree automatically inside a fiber.
    bool opposite_on_a1(std::size_t a, std::size_t b) const {
        const RootSystem& rs = algebra().roots();
        for (int k : f_->simple_k())
            if (rs.pair_coroot(rs.root(a), k) != -rs.pair_coroot(rs.root(b), k)) return false;
        return true;
    }

    // Roots of the fiber without a partner opposite on a1.
    std::vector<std::size_t> unpaired_roots(std::size_t i) const {
        std::vector<std::size_t> out;
        for (std::size_t a : f_->fiber(i)) {
            bool found = false;
            for (std::size_t b : f_->fiber(i))
                if (opposite_on_a1(a, b)) found = true;
            if (!found) out.push_back(a);
        }
        return out;
    }

    // Span of U(k1) applied to seed, returned as a list of independent vectors.
    std::vector<AlgebraElement> orbit_span(const AlgebraElement& seed) const {
        const LieAlgebra& g = algebra();
        std::vector<AlgebraElement> basis;
        if (seed.is_zero()) return basis;
        Echelon span(g.dim());
        span.insert(seed.terms());
        basis.push_back(seed);
        for (std::size_t next = 0; next < basis.size(); ++next) {
            for (const auto& k : k1_lie_generators_) {
                AlgebraElement w = g.bracket(k, basis[next]);
                if (w.is_zero()) continue;
                if (span.insert(w.terms())) basis.push_back(std::move(w));
            }
        }
        return basis;
    }

    // Matrix of ad(k) restricted to the span of the given generators,
    // column a holding the image of generator a.
    Matrix action_matrix(const AlgebraElement& k, const std::vector<std::size_t>& gens) const {
        const LieAlgebra& g = algebra();
        std::size_t d = gens.size();
        Matrix m(d, std::vector<Rational>(d));
        for (std::size_t a = 0; a < d; ++a) {
            AlgebraElement img = g.bracket(k, AlgebraElement::basis(gens[a]));
            for (const auto& [gidx, c] : img.terms()) {
                auto it = std::find(gens.begin(), gens.end(), gidx);
                if (it == gens.end()) throw OutOfSubspace("generator span is not k1-invariant");
                m[static_cast<std::size_t>(it - gens.begin())][a] = c;
            }
        }
        return m;
    }

    /**
     * Basis of K1-equivariant linear maps from span(from) to span(to), given
     * as matrices T with T[c][a] the coefficient of to[c] in T(from[a]).
     * With symmetric=true (from == to) only B-self-adjoint maps are kept.
     */
    std::vector<Matrix> equivariant_maps(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                                         bool symmetric) const {
        const LieAlgebra& g = algebra();
        std::size_t p = from.size(), q = to.size();
        // Unknown numbering: plain maps use c*p + a; symmetric maps use the upper triangle.
        std::vector<std::vector<std::pair<std::size_t, Rational>>> var(q * p);
        std::size_t nvars = 0;
        if (!symmetric) {
            for (std::size_t c = 0; c < q; ++c)
                for (std::size_t a = 0; a < p; ++a) var[c * p + a] = {{nvars++, Rational(1)}};
        } else {
            if (from != to) throw std::invalid_argument("symmetric maps need from == to");
            std::vector<Rational> w(p);
            for (std::size_t a = 0; a < p; ++a) w[a] = g.gram()[from[a]][from[a]];
            std::vector<std::size_t> id(p * p);
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = a; b < p; ++b) id[a * p + b] = nvars++;
            // B(T e_a, e_c) = B(e_a, T e_c) reads T[c][a] w_c = T[a][c] w_a.
            for (std::size_t c = 0; c < p; ++c)
                for (std::size_t a = 0; a < p; ++a) {
                    if (c <= a) var[c * p + a] = {{id[c * p + a], Rational(1)}};
                    else var[c * p + a] = {{id[a * p + c], w[a] / w[c]}};
                }
        }
        Echelon sys(nvars);
        for (const auto& k : k1_lie_generators_) {
            Matrix mf = action_matrix(k, from), mt = action_matrix(k, to);
            // (T mf - mt T)[c][a] = 0
            for (std::size_t c = 0; c < q; ++c)
                for (std::size_t a = 0; a < p; ++a) {
                    std::vector<AlgebraElement::Term> row;
                    for (std::size_t b = 0; b < p; ++b)
                        if (mf[b][a] != 0)
                            for (const auto& [v, coef] : var[c * p + b]) row.emplace_back(v, coef * mf[b][a]);
                    for (std::size_t b = 0; b < q; ++b)
                        if (mt[c][b] != 0)
                            for (const auto& [v, coef] : var[b * p + a]) row.emplace_back(v, -coef * mt[c][b]);
                    AlgebraElement r = AlgebraElement::from_terms(std::move(row));
                    if (!r.is_zero()) sys.insert(r.terms());
                }
        }
        std::vector<Matrix> out;
        for (const auto& sol : sys.nullspace()) {
            Matrix t(q, std::vector<Rational>(p));
            for (std::size_t c = 0; c < q; ++c)
                for (std::size_t a = 0; a < p; ++a)
                    for (const auto& [v, coef] : var[c * p + a]) t[c][a] += coef * sol[v];
            out.push_back(std::move(t));
        }
        return out;
    }

    /**
     * Decides irreducibility of m_i under K1. A single basis vector whose
     * orbit span is proper certifies reducibility; otherwise the summand is
     * irreducible exactly when its self-adjoint equivariant endomorphisms
     * are the scalars.
     */
    OracleResult orbit_irreducibility_oracle(std::size_t i) const {
        OracleResult r;
        std::size_t d = f_->summand_dim(i);
        r.smallest_orbit = d;
        for (const auto& b : f_->summand_basis(i)) r.smallest_orbit = std::min(r.smallest_orbit, orbit_span(b).size());
        if (r.smallest_orbit < d) {
            r.irreducible = false;
            return r;
        }
        auto gens = f_->summand_generators(i);
        r.commutant = equivariant_maps(gens, gens, true).size();
        r.irreducible = *r.commutant == 1;
        return r;
    }

    // Splits a summand satisfying the lowest/highest criterion into two
    // equivalent submodules generated from the extreme root vectors.
    SummandSplit split_summand(std::size_t i) const {
        if (!is_reducible(i)) throw NotReducible("summand " + std::to_string(i + 1) + " fails the reducibility criterion");
        const LieAlgebra& g = algebra();
        const RootSystem& rs = g.roots();
        ExtremeRoots e = f_->extreme_roots(i);
        SummandSplit sp;
        sp.summand = i;
        const Root& alpha = rs.root(e.lowest);
        const Root& beta = rs.root(e.highest);
        if (e.lowest == e.highest) {
            sp.seed1 = g.A(alpha);
            sp.seed2 = g.B(alpha);
            sp.n1 = {sp.seed1};
            sp.n2 = {sp.seed2};
        } else {
            sp.seed1 = g.A(alpha) + g.A(-beta);
            sp.seed2 = g.A(alpha) - g.A(-beta);
            sp.n1 = orbit_span(sp.seed1);
            sp.n2 = orbit_span(sp.seed2);
        }
        const TRoot& xi = f_->troots()[i];
        for (std::size_t k = 0; k < xi.size(); ++k)
            if (xi[k] != 0) {
                sp.coweight = f_->painted0()[k];
                sp.h = s_basis_[k];
                break;
            }
        if (auto why = split_defect(sp)) throw SplitFailed("summand " + std::to_string(i + 1) + ": " + *why);
        return sp;
    }

    // Checks the invariants of a split; returns a description of the first failure.
    std::optional<std::string> split_defect(const SummandSplit& sp) const {
        const LieAlgebra& g = algebra();
        std::size_t d = f_->summand_dim(sp.summand);
        if (sp.n1.size() * 2 != d || sp.n2.size() * 2 != d)
            return "submodule dimensions " + std::to_string(sp.n1.size()) + "+" + std::to_string(sp.n2.size()) +
                   " are not halves of " + std::to_string(d);
        Echelon all(g.dim());
        for (const auto& v : sp.n1) all.insert(v.terms());
        for (const auto& v : sp.n2) all.insert(v.terms());
        if (all.rank() != d) return "submodules intersect";
        for (const auto& v : sp.n1)
            if (project_summand(v, sp.summand) != v) return "n1 leaves the summand";
        for (const auto& v : sp.n2)
            if (project_summand(v, sp.summand) != v) return "n2 leaves the summand";
        for (const auto& a : sp.n1)
            for (const auto& b : sp.n2)
                if (g.killing_form(a, b) != 0) return "submodules are not orthogonal";
        Echelon n2(g.dim());
        for (const auto& v : sp.n2) n2.insert(v.terms());
        for (const auto& v : sp.n1)
            if (!n2.contains(g.bracket(sp.h, v).terms())) return "[h, n1] is not n2";
        for (const auto& span : {sp.n1, sp.n2}) {
            Echelon e(g.dim());
            for (const auto& v : span) e.insert(v.terms());
            for (const auto& k : k1_lie_generators_)
                for (const auto& v : span)
                    if (!e.contains(g.bracket(k, v).terms())) return "submodule is not k1-invariant";
        }
        return std::nullopt;
    }

    const SummandReport& report(std::size_t i) const {
        if (i >= reports_.size()) throw std::out_of_range("summand index out of range");
        if (!reports_[i]) reports_[i] = make_report(i);
        return *reports_[i];
    }

    // Oracle-decided reducibility, which is what the metric families use.
    bool truly_reducible(std::size_t i) const { return report(i).reducible; }

private:
    AlgebraElement cartan_only(const AlgebraElement& x) const {
        std::vector<AlgebraElement::Term> t;
        for (const auto& [gidx, c] : x.terms()) {
            if (gidx >= algebra().rank()) break;
            t.emplace_back(gidx, c);
        }
        return AlgebraElement::from_terms(std::move(t));
    }

    SummandReport make_report(std::size_t i) const {
        SummandReport r;
        r.index = i;
        r.dim = f_->summand_dim(i);
        r.extremes = f_->extreme_roots(i);
        r.criterion = is_reducible(i);
        r.oracle = orbit_irreducibility_oracle(i);
        r.reducible = !r.oracle.irreducible;
        if (!r.extremes.unique()) r.findings.push_back("lowest or highest root is not unique");
        if (r.criterion) {
            if (!unpaired_roots(i).empty()) r.findings.push_back("some root has no partner opposite on a1");
            try {
                r.split = split_summand(i);
            } catch (const SplitFailed& ex) {
                r.findings.push_back(std::string("split failed: ") + ex.what());
            }
        }
        if (r.criterion != r.reducible)
            r.findings.push_back(r.reducible ? "reducible although the lowest/highest criterion fails"
                                             : "irreducible although the lowest/highest criterion holds");
        if (r.reducible && !r.split) r.findings.push_back("reducible summand without a split");
        return r;
    }

    std::shared_ptr<const FlagManifold> f_;
    std::vector<AlgebraElement> s_basis_, s_orth_, a1_basis_, k1_basis_, k1_lie_generators_, n_basis_;
    std::vector<Rational> s_norm_;
    std::vector<bool> is_m_generator_;
    mutable std::vector<std::optional<SummandReport>> reports_;
};

} // namespace hgo
