#pragma once

#include "metric.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgo {

struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotEigenvectors : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EqualEigenvalues : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadChain : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Status { Geodesic, NotGeodesic, Feasible, Infeasible, Refuted, PassedSamples, NotApplicable };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Geodesic: return "GEODESIC";
        case Status::NotGeodesic: return "NOT_GEODESIC";
        case Status::Feasible: return "FEASIBLE";
        case Status::Infeasible: return "INFEASIBLE";
        case Status::Refuted: return "REFUTED";
        case Status::PassedSamples: return "PASSED_SAMPLES";
        case Status::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

inline constexpr const char* kSamplingNote = "sampling evidence only";

struct Verdict {
    Status status = Status::NotApplicable;
    std::optional<AlgebraElement> witness;         // solution k (or h) of a feasible system
    std::optional<AlgebraElement> certificate;     // functional y with y(columns) = 0, y(rhs) = 1
    std::optional<AlgebraElement> counterexample;  // probe vector x of a refutation
    std::size_t probes_run = 0;
    std::string note;
};

// Coordinate pairing of a functional (stored as an element) with a vector.
inline Rational pairing(const AlgebraElement& y, const AlgebraElement& v) {
    Rational s = 0;
    std::size_t i = 0, j = 0;
    const auto& a = y.terms();
    const auto& b = v.terms();
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else s += a[i++].second * b[j++].second;
    }
    return s;
}

struct SpanSolution {
    bool feasible = false;
    std::vector<Rational> coeffs;   // rhs = sum coeffs[j] * columns[j] when feasible
    AlgebraElement certificate;     // otherwise
};

/**
 * Decides whether rhs lies in the span of the columns by exact elimination.
 * When it does not, the returned functional vanishes on every column and
 * takes the value 1 on rhs.
 */
inline SpanSolution solve_in_span(const std::vector<AlgebraElement>& columns, const AlgebraElement& rhs) {
    std::vector<std::size_t> rows;
    for (const auto& c : columns)
        for (const auto& t : c.terms()) rows.push_back(t.first);
    for (const auto& t : rhs.terms()) rows.push_back(t.first);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    auto row_of = [&](std::size_t g) {
        return static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), g) - rows.begin());
    };
    std::size_t n = columns.size();
    std::vector<SparseVec> eq(rows.size());
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [g, c] : columns[j].terms()) eq[row_of(g)].emplace_back(j, c);
    for (const auto& [g, c] : rhs.terms()) eq[row_of(g)].emplace_back(n, c);
    Echelon e(n + 1);
    for (const auto& r : eq)
        if (!r.empty()) e.insert(r);
    SpanSolution out;
    if (auto x = e.solve(n)) {
        out.feasible = true;
        out.coeffs = std::move(*x);
        return out;
    }
    // Transposed system: y . column_j = 0 for all j, y . rhs = 1.
    std::size_t m = rows.size();
    Echelon t(m + 1);
    for (std::size_t j = 0; j < n; ++j) {
        SparseVec r;
        for (const auto& [g, c] : columns[j].terms()) r.emplace_back(row_of(g), c);
        if (!r.empty()) t.insert(r);
    }
    SparseVec last;
    for (const auto& [g, c] : rhs.terms()) last.emplace_back(row_of(g), c);
    last.emplace_back(m, Rational(1));
    t.insert(last);
    auto y = t.solve(m);
    if (!y) throw std::logic_error("inconsistent system without a certificate");
    std::vector<AlgebraElement::Term> terms;
    for (std::size_t i = 0; i < m; ++i)
        if ((*y)[i] != 0) terms.emplace_back(rows[i], (*y)[i]);
    out.certificate = AlgebraElement::from_terms(std::move(terms));
    return out;
}

inline AlgebraElement combine(const std::vector<AlgebraElement>& basis, const std::vector<Rational>& c) {
    AlgebraElement r;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (c[j] != 0) r += c[j] * basis[j];
    return r;
}

inline void require_in_n(const MSpace& m, const AlgebraElement& x) {
    if (x.is_zero()) throw ZeroVector("vector is zero");
    if (!m.in_n(x)) throw OutOfSubspace("vector is not in n");
}

// <[X, Y]_n, X_n> = 0 for every Y in n.
inline Verdict is_geodesic_vector(const MetricOperator& op, const AlgebraElement& x) {
    const MSpace& m = op.mspace();
    const LieAlgebra& g = m.algebra();
    g.check(x);
    if (x.is_zero()) throw ZeroVector("vector is zero");
    AlgebraElement xn = m.project_n(x);
    Verdict v;
    v.status = Status::Geodesic;
    if (xn.is_zero()) return v;
    for (const auto& y : m.n_basis()) {
        AlgebraElement b = m.project_n(g.bracket(x, y));
        if (op.inner(b, xn) != 0) {
            v.status = Status::NotGeodesic;
            v.counterexample = y;
            return v;
        }
    }
    return v;
}

// Columns [k_j, Lambda x]_n and right-hand side -[x, Lambda x]_n of the g.o. system at x.
struct GoSystem {
    std::vector<AlgebraElement> columns;
    AlgebraElement rhs;
};

inline GoSystem go_system(const MetricOperator& op, const AlgebraElement& x) {
    const MSpace& m = op.mspace();
    const LieAlgebra& g = m.algebra();
    AlgebraElement lx = op.apply(x);
    GoSystem s;
    s.rhs = -m.project_n(g.bracket(x, lx));
    for (const auto& k : m.k1_basis()) s.columns.push_back(m.project_n(g.bracket(k, lx)));
    return s;
}

// Finds k in k1 with [k + x, Lambda x]_n = 0, so that k + x is a geodesic vector.
inline Verdict go_feasibility(const MetricOperator& op, const AlgebraElement& x) {
    const MSpace& m = op.mspace();
    require_in_n(m, x);
    Verdict v;
    const LieAlgebra& g = m.algebra();
    AlgebraElement lx = op.apply(x);
    AlgebraElement rhs = -m.project_n(g.bracket(x, lx));
    if (rhs.is_zero()) {
        v.status = Status::Feasible;
        v.witness = AlgebraElement{};
        return v;
    }
    std::vector<AlgebraElement> cols;
    for (const auto& k : m.k1_basis()) cols.push_back(m.project_n(g.bracket(k, lx)));
    SpanSolution sol = solve_in_span(cols, rhs);
    if (sol.feasible) {
        v.status = Status::Feasible;
        v.witness = combine(m.k1_basis(), sol.coeffs);
    } else {
        v.status = Status::Infeasible;
        v.certificate = sol.certificate;
    }
    return v;
}

inline bool replay_witness(const MetricOperator& op, const AlgebraElement& x, const AlgebraElement& k) {
    const MSpace& m = op.mspace();
    if (!m.in_k1(k)) return false;
    return m.project_n(m.algebra().bracket(k + x, op.apply(x))).is_zero();
}

inline bool replay_certificate(const MetricOperator& op, const AlgebraElement& x, const AlgebraElement& y) {
    GoSystem s = go_system(op, x);
    for (const auto& c : s.columns)
        if (pairing(y, c) != 0) return false;
    return pairing(y, s.rhs) != 0;
}

// Deterministic probe vectors in n built from the module structure.
inline std::vector<AlgebraElement> structured_probes(const MSpace& m) {
    const LieAlgebra& g = m.algebra();
    const RootSystem& rs = g.roots();
    const FlagManifold& f = m.flag();
    std::vector<AlgebraElement> out;
    auto push = [&](const AlgebraElement& x) {
        if (x.is_zero()) return;
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    };
    // Blocks: 0 for s, i + 1 for m_i.
    std::vector<std::vector<AlgebraElement>> blocks;
    blocks.push_back(m.s_basis());
    for (std::size_t i = 0; i < m.num_summands(); ++i) blocks.push_back(f.summand_basis(i));
    for (const auto& b : blocks)
        for (const auto& x : b) push(x);
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            for (const auto& x : blocks[a])
                for (const auto& y : blocks[b]) push(x + y);
    // Pairs of roots opposite on a1 inside a fiber, and their sums.
    for (std::size_t i = 0; i < m.num_summands(); ++i) {
        std::vector<AlgebraElement> seeds;
        for (std::size_t a : f.fiber(i))
            for (std::size_t b : f.fiber(i)) {
                if (!m.opposite_on_a1(a, b)) continue;
                const Root& ra = rs.root(a);
                const Root& rb = rs.root(b);
                seeds.push_back(g.A(ra) + g.A(-rb));
                seeds.push_back(g.A(ra) - g.A(-rb));
                seeds.push_back(g.B(ra) - g.B(-rb));
                seeds.push_back(g.B(ra) + g.B(-rb));
            }
        for (const auto& x : seeds) push(x);
        for (std::size_t a = 0; a < seeds.size(); ++a)
            for (std::size_t b = a + 1; b < seeds.size(); ++b) push(seeds[a] + seeds[b]);
        for (const auto& x : seeds)
            for (const auto& s : m.s_basis()) push(x + s);
    }
    return out;
}

// Components numerator in [-9, 9], denominator in [1, 9], drawn from mt19937_64.
inline std::vector<AlgebraElement> random_probes(const MSpace& m, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<AlgebraElement> out;
    while (out.size() < count) {
        AlgebraElement x;
        for (const auto& b : m.n_basis()) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = static_cast<long>(rng() % 9) + 1;
            if (num != 0) x += frac(num, den) * b;
        }
        if (!x.is_zero()) out.push_back(std::move(x));
    }
    return out;
}

struct ProbeConfig {
    std::size_t random = 200;
    std::uint64_t seed = 42;
    bool structured = true;
};

inline std::vector<AlgebraElement> probes(const MSpace& m, const ProbeConfig& cfg) {
    std::vector<AlgebraElement> out;
    if (cfg.structured) out = structured_probes(m);
    auto r = random_probes(m, cfg.random, cfg.seed);
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

// REFUTED on the first probe whose g.o. system is inconsistent.
inline Verdict check_go_metric(const MetricOperator& op, const std::vector<AlgebraElement>& probe_set) {
    Verdict v;
    for (const auto& x : probe_set) {
        ++v.probes_run;
        Verdict f = go_feasibility(op, x);
        if (f.status == Status::Infeasible) {
            v.status = Status::Refuted;
            v.counterexample = x;
            v.certificate = f.certificate;
            return v;
        }
    }
    v.status = Status::PassedSamples;
    v.note = kSamplingNote;
    return v;
}

inline Verdict check_go_metric(const MetricOperator& op, const ProbeConfig& cfg = {}) {
    return check_go_metric(op, probes(op.mspace(), cfg));
}

struct P2Conditions {
    bool projected_bracket = false;  // [a + x, Lambda x]_n = 0
    bool metric_identity = false;    // <[a, x], y> = <x, [x, y]_n> for all y in n
    bool orthogonality = false;      // <[a + x, y]_n, x> = 0 for all y in n
    bool agree() const { return projected_bracket == metric_identity && metric_identity == orthogonality; }
};

inline P2Conditions prop_p2_crosscheck(const MetricOperator& op, const AlgebraElement& a, const AlgebraElement& x) {
    const MSpace& m = op.mspace();
    const LieAlgebra& g = m.algebra();
    if (!m.in_k1(a)) throw OutOfSubspace("a is not in k1");
    require_in_n(m, x);
    P2Conditions c;
    AlgebraElement lx = op.apply(x);
    c.projected_bracket = m.project_n(g.bracket(a + x, lx)).is_zero();
    AlgebraElement lax = op.apply(g.bracket(a, x));
    c.metric_identity = true;
    c.orthogonality = true;
    for (const auto& y : m.n_basis()) {
        if (c.metric_identity && g.killing_form(lax, y) != g.killing_form(lx, m.project_n(g.bracket(x, y))))
            c.metric_identity = false;
        if (c.orthogonality && g.killing_form(op.apply(m.project_n(g.bracket(a + x, y))), x) != 0)
            c.orthogonality = false;
        if (!c.metric_identity && !c.orthogonality) break;
    }
    return c;
}

inline std::optional<Rational> eigenvalue(const MetricOperator& op, const AlgebraElement& x) {
    AlgebraElement lx = op.apply(x);
    const auto& [g, c] = x.terms().front();
    Rational l = lx.coeff(g) / c;
    if (!(lx == l * x)) return std::nullopt;
    return l;
}

// For eigenvectors X, Y of Lambda with distinct eigenvalues, looks for h in k1 with
// (lambda - mu) [X, Y]_n = lambda [h, X]_n + mu [h, Y]_n.
inline Verdict prop_p3_necessary(const MetricOperator& op, const AlgebraElement& x, const AlgebraElement& y) {
    const MSpace& m = op.mspace();
    const LieAlgebra& g = m.algebra();
    require_in_n(m, x);
    require_in_n(m, y);
    auto l = eigenvalue(op, x), mu = eigenvalue(op, y);
    if (!l || !mu) throw NotEigenvectors("X and Y must be eigenvectors of the metric operator");
    if (*l == *mu) throw EqualEigenvalues("eigenvalues of X and Y coincide");
    std::vector<AlgebraElement> cols;
    for (const auto& k : m.k1_basis())
        cols.push_back(*l * m.project_n(g.bracket(k, x)) + *mu * m.project_n(g.bracket(k, y)));
    AlgebraElement rhs = (*l - *mu) * m.project_n(g.bracket(x, y));
    Verdict v;
    if (rhs.is_zero()) {
        v.status = Status::Feasible;
        v.witness = AlgebraElement{};
        return v;
    }
    SpanSolution sol = solve_in_span(cols, rhs);
    if (sol.feasible) {
        v.status = Status::Feasible;
        v.witness = combine(m.k1_basis(), sol.coeffs);
    } else {
        v.status = Status::Infeasible;
        v.certificate = sol.certificate;
    }
    return v;
}

/**
 * Two-stage solve along a chain k1 < h < g with M_F, M_C invariant under k1:
 * find X in k1 with [X, v_F] = 0 and [X + v_F, v_C] = 0.
 */
struct Chain {
    std::vector<AlgebraElement> k1, m_f, m_c;
};

inline Chain default_chain(const MSpace& m) {
    Chain c;
    c.k1 = m.k1_basis();
    c.m_f = m.s_basis();
    for (std::size_t i = 0; i < m.num_summands(); ++i)
        for (const auto& e : m.flag().summand_basis(i)) c.m_c.push_back(e);
    return c;
}

class ChainSolver {
public:
    ChainSolver(const MSpace& m, Chain chain) : m_(m), chain_(std::move(chain)), ef_(m.algebra().dim()), ec_(m.algebra().dim()) {
        const LieAlgebra& g = m.algebra();
        for (const auto& v : chain_.m_f) ef_.insert(v.terms());
        for (const auto& v : chain_.m_c) ec_.insert(v.terms());
        for (const auto& k : chain_.k1) {
            if (!m.in_k1(k)) throw BadChain("chain subalgebra is not in k1");
            for (const auto& v : chain_.m_f)
                if (!ef_.contains(g.bracket(k, v).terms())) throw BadChain("M_F is not k1-invariant");
            for (const auto& v : chain_.m_c)
                if (!ec_.contains(g.bracket(k, v).terms())) throw BadChain("M_C is not k1-invariant");
        }
    }

    Verdict solve(const AlgebraElement& vf, const AlgebraElement& vc) const {
        const LieAlgebra& g = m_.algebra();
        if (!ef_.contains(vf.terms())) throw BadChain("v_F is not in M_F");
        if (!ec_.contains(vc.terms())) throw BadChain("v_C is not in M_C");
        // Stage 1: centralizer of v_F in k1.
        std::vector<AlgebraElement> centralizer;
        if (vf.is_zero()) {
            centralizer = chain_.k1;
        } else {
            std::vector<AlgebraElement> images;
            for (const auto& k : chain_.k1) images.push_back(g.bracket(k, vf));
            std::vector<std::size_t> rows;
            for (const auto& im : images)
                for (const auto& t : im.terms()) rows.push_back(t.first);
            std::sort(rows.begin(), rows.end());
            rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
            std::vector<SparseVec> eq(rows.size());
            for (std::size_t j = 0; j < images.size(); ++j)
                for (const auto& [gi, c] : images[j].terms())
                    eq[static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), gi) - rows.begin())]
                        .emplace_back(j, c);
            Echelon e(chain_.k1.size());
            for (const auto& r : eq)
                if (!r.empty()) e.insert(r);
            for (const auto& ns : e.nullspace()) centralizer.push_back(combine(chain_.k1, ns));
        }
        // Stage 2: [X, v_C] = -[v_F, v_C] with X in the centralizer.
        AlgebraElement rhs = -g.bracket(vf, vc);
        Verdict v;
        if (rhs.is_zero()) {
            v.status = Status::Feasible;
            v.witness = AlgebraElement{};
            return v;
        }
        std::vector<AlgebraElement> cols;
        for (const auto& c : centralizer) cols.push_back(g.bracket(c, vc));
        SpanSolution sol = solve_in_span(cols, rhs);
        if (sol.feasible) {
            v.status = Status::Feasible;
            v.witness = combine(centralizer, sol.coeffs);
        } else {
            v.status = Status::Infeasible;
            v.certificate = sol.certificate;
        }
        return v;
    }

private:
    const MSpace& m_;
    Chain chain_;
    Echelon ef_, ec_;
};

inline Verdict prop_p5_check(const MSpace& m, const Chain& chain, const AlgebraElement& vf, const AlgebraElement& vc) {
    return ChainSolver(m, chain).solve(vf, vc);
}

} // namespace hgo
