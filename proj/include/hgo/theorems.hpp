#pragma once

#include "geocheck.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hgo {

enum class Theorem { T1, CC1, T2_1, T2_2, T2_3, T3_2, C2 };

inline std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::T1: return "T1";
        case Theorem::CC1: return "CC1";
        case Theorem::T2_1: return "T2_1";
        case Theorem::T2_2: return "T2_2";
        case Theorem::T2_3: return "T2_3";
        case Theorem::T3_2: return "T3_2";
        case Theorem::C2: return "C2";
    }
    return "?";
}

inline std::optional<Theorem> parse_theorem(const std::string& s) {
    for (Theorem t : {Theorem::T1, Theorem::CC1, Theorem::T2_1, Theorem::T2_2, Theorem::T2_3, Theorem::T3_2, Theorem::C2})
        if (to_string(t) == s) return t;
    return std::nullopt;
}

inline const std::vector<Theorem>& all_theorems() {
    static const std::vector<Theorem> v = {Theorem::T1,   Theorem::CC1,  Theorem::T2_1, Theorem::T2_2,
                                           Theorem::T2_3, Theorem::T3_2, Theorem::C2};
    return v;
}

// Which reducibility decision the hypotheses use.
enum class Classification { Oracle, Criterion };

enum class Expectation { MustRefute, MustPass, Report, CrossCheck };

inline std::string to_string(Expectation e) {
    switch (e) {
        case Expectation::MustRefute: return "MUST_REFUTE";
        case Expectation::MustPass: return "MUST_PASS";
        case Expectation::Report: return "REPORT";
        case Expectation::CrossCheck: return "CROSS_CHECK";
    }
    return "?";
}

struct GridEntry {
    MetricSpec metric;
    Expectation expectation = Expectation::Report;
    Verdict verdict;
    std::size_t disagreements = 0;  // per-probe mismatches for CROSS_CHECK entries
    bool certificate_replayed = false;
    bool consistent = false;
    std::string skipped;  // non-empty when the grid point is not a valid metric
};

struct TheoremReport {
    Theorem theorem = Theorem::T1;
    std::string space;
    bool applicable = false;
    std::string reason;
    std::vector<GridEntry> entries;
    bool consistent = true;
};

namespace detail {

inline const std::vector<Rational>& grid_values() {
    static const std::vector<Rational> v = {Rational(1), Rational(2), Rational(3), frac(1, 2)};
    return v;
}

inline bool reducible(const MSpace& m, std::size_t i, Classification c) {
    return c == Classification::Oracle ? m.truly_reducible(i) : m.is_reducible(i);
}

inline Matrix scaled_identity(std::size_t d, const Rational& l) {
    Matrix s = identity(d);
    for (auto& row : s)
        for (auto& v : row) v *= l;
    return s;
}

inline Rational s_norm(const MSpace& m, std::size_t i) {
    return m.algebra().killing_form(m.s_orthogonal()[i], m.s_orthogonal()[i]);
}

// Id, a non-scalar diagonal block and a self-adjoint block with off-diagonal entries.
inline std::vector<Matrix> s_block_variants(const MSpace& m) {
    std::size_t d = m.dim_s();
    std::vector<Matrix> out;
    out.push_back(identity(d));
    Matrix diag = identity(d);
    for (std::size_t i = 0; i < d; ++i) diag[i][i] = d == 1 ? Rational(2) : Rational(static_cast<long>(i + 1));
    out.push_back(diag);
    if (d >= 2) {
        Rational n0 = s_norm(m, 0), n1 = s_norm(m, 1);
        for (Rational t = frac(1, 2); t > frac(1, 64); t /= 2) {
            if (!(t * t < n1 / n0)) continue;
            Matrix off = identity(d);
            off[0][1] = t;
            off[1][0] = t * n0 / n1;
            out.push_back(off);
            break;
        }
    }
    return out;
}

inline Rational split_coefficient(const MSpace& m, std::size_t i) {
    const TRoot& xi = m.flag().troots()[i];
    for (int c : xi)
        if (c != 0) return Rational(c);
    return Rational(1);
}

// Split-parameter variants on a reducible summand with base eigenvalue l.
inline std::vector<SummandParams> split_variants(const MSpace& m, std::size_t i, const Rational& l) {
    Rational b = split_coefficient(m, i);
    Rational half = l / 2;
    return {SummandParams::split(l, 2 * l, 0), SummandParams::split(2 * l, l, 0),
            SummandParams::split(l, l, half / b), SummandParams::split(l, 2 * l, -half / b)};
}

inline std::vector<std::vector<Rational>> lambda_vectors(std::size_t s) {
    const auto& v = grid_values();
    std::vector<std::vector<Rational>> out;
    std::size_t full = 1;
    for (std::size_t i = 0; i < s && full <= 256; ++i) full *= v.size();
    if (full <= 256) {
        for (std::size_t code = 0; code < full; ++code) {
            std::vector<Rational> l(s);
            std::size_t c = code;
            for (std::size_t i = 0; i < s; ++i, c /= v.size()) l[i] = v[c % v.size()];
            out.push_back(l);
        }
        return out;
    }
    for (const auto& x : v) out.push_back(std::vector<Rational>(s, x));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 1; k < v.size(); ++k) {
            std::vector<Rational> l(s, Rational(1));
            l[i] = v[k];
            out.push_back(l);
        }
    std::vector<Rational> alt(s);
    for (std::size_t i = 0; i < s; ++i) alt[i] = i % 2 ? Rational(2) : Rational(1);
    out.push_back(alt);
    return out;
}

inline bool all_equal(const std::vector<Rational>& l) {
    for (const auto& x : l)
        if (x != l.front()) return false;
    return true;
}

inline std::optional<MetricOperator> try_metric(const std::shared_ptr<const MSpace>& m, const MetricSpec& spec,
                                                std::string& why) {
    try {
        return MetricOperator(m, spec);
    } catch (const std::invalid_argument& e) {
        why = e.what();
        return std::nullopt;
    }
}

// Runs the g.o. check and evaluates the entry against its expectation.
inline void judge(GridEntry& e, const MetricOperator& op, const std::vector<AlgebraElement>& pr) {
    e.verdict = check_go_metric(op, pr);
    if (e.verdict.status == Status::Refuted)
        e.certificate_replayed = replay_certificate(op, *e.verdict.counterexample, *e.verdict.certificate);
    switch (e.expectation) {
        case Expectation::MustRefute:
            e.consistent = e.verdict.status == Status::Refuted && e.certificate_replayed;
            break;
        case Expectation::MustPass:
            e.consistent = e.verdict.status == Status::PassedSamples;
            break;
        case Expectation::Report:
        case Expectation::CrossCheck:
            e.consistent = e.verdict.status != Status::Refuted || e.certificate_replayed;
            break;
    }
}

// Per-probe comparison of go_feasibility with an independent reduced system.
inline void cross_check(GridEntry& e, const MetricOperator& op, const std::vector<AlgebraElement>& pr,
                        const std::function<bool(const AlgebraElement&)>& reduced_feasible) {
    e.verdict = Verdict{};
    e.verdict.status = Status::PassedSamples;
    e.verdict.note = kSamplingNote;
    for (const auto& x : pr) {
        ++e.verdict.probes_run;
        Verdict f = go_feasibility(op, x);
        bool direct = f.status == Status::Feasible;
        if (direct != reduced_feasible(x)) ++e.disagreements;
        if (!direct && e.verdict.status != Status::Refuted) {
            e.verdict.status = Status::Refuted;
            e.verdict.note.clear();
            e.verdict.counterexample = x;
            e.verdict.certificate = f.certificate;
            e.certificate_replayed = replay_certificate(op, x, *f.certificate);
        }
    }
    e.consistent = e.disagreements == 0 && (e.verdict.status != Status::Refuted || e.certificate_replayed);
}

// Linear system sum_j a_j col_j(k_j) = rhs over the k1 basis, by components.
inline bool k1_system_feasible(const MSpace& m, const std::function<AlgebraElement(const AlgebraElement&)>& lin,
                               const AlgebraElement& rhs) {
    if (rhs.is_zero()) return true;
    std::vector<AlgebraElement> cols;
    for (const auto& k : m.k1_basis()) cols.push_back(lin(k));
    return solve_in_span(cols, rhs).feasible;
}

}  // namespace detail

/**
 * Evaluates one theorem on one M-space over a grid of invariant metrics.
 * Necessary conditions become MUST_REFUTE entries, sufficiency claims MUST_PASS
 * entries, and reductions to smaller linear systems CROSS_CHECK entries that
 * compare both systems probe by probe.
 */
inline TheoremReport verify_theorem(const std::shared_ptr<const MSpace>& mp, Theorem th, const ProbeConfig& cfg = {},
                                    Classification cls = Classification::Oracle) {
    using namespace detail;
    const MSpace& m = *mp;
    const LieAlgebra& g = m.algebra();
    TheoremReport rep;
    rep.theorem = th;
    rep.space = m.flag().diagram().name();
    std::size_t s = m.num_summands();
    std::size_t nred = 0;
    for (std::size_t i = 0; i < s; ++i) nred += reducible(m, i, cls) ? 1 : 0;

    auto not_applicable = [&](const std::string& why) {
        rep.applicable = false;
        rep.reason = why;
        return rep;
    };
    switch (th) {
        case Theorem::T1:
            if (s < 3) return not_applicable("needs at least three isotropy summands");
            break;
        case Theorem::CC1:
            if (s < 3) return not_applicable("needs at least three isotropy summands");
            if (m.dim_s() != 1) return not_applicable("needs a one-dimensional s");
            if (nred == 0) return not_applicable("needs a reducible summand");
            break;
        case Theorem::T2_1:
            if (s != 2 || nred != 0) return not_applicable("needs two irreducible summands");
            break;
        case Theorem::T2_2:
            if (s != 2 || nred != 1) return not_applicable("needs two summands, exactly one reducible");
            break;
        case Theorem::T2_3:
            if (s != 2 || nred != 2) return not_applicable("needs two reducible summands");
            break;
        case Theorem::T3_2:
            if (s != 1 || nred != 1) return not_applicable("needs one reducible summand");
            break;
        case Theorem::C2:
            if (s != 2) return not_applicable("needs two summands");
            if (m.dim_s() != 1) return not_applicable("needs a one-dimensional s");
            if (m.flag().summand_dim(1) != 2) return not_applicable("needs dim m_2 = 2");
            break;
    }
    if (s == 2 && (th == Theorem::T2_1 || th == Theorem::T2_2 || th == Theorem::T2_3 || th == Theorem::C2)) {
        TRoot twice = m.flag().troots()[0];
        for (auto& c : twice) c *= 2;
        if (m.flag().troots()[1] != twice) return not_applicable("[m_1, m_1] is not contained in k + m_2");
    }
    if (cls == Classification::Criterion)
        for (std::size_t i = 0; i < s; ++i)
            if (reducible(m, i, cls) && !m.truly_reducible(i)) rep.reason = "hypotheses use the lowest/highest criterion";
    rep.applicable = true;
    std::vector<AlgebraElement> pr = probes(m, cfg);

    auto add = [&](MetricSpec spec, Expectation ex,
                   const std::function<bool(const MetricOperator&, const AlgebraElement&)>* reduced = nullptr) {
        GridEntry e;
        e.metric = std::move(spec);
        e.expectation = ex;
        std::string why;
        auto op = try_metric(mp, e.metric, why);
        if (!op) {
            e.skipped = why;
            e.consistent = true;
            rep.entries.push_back(std::move(e));
            return;
        }
        if (reduced) {
            const auto& f = *reduced;
            const MetricOperator& o = *op;
            cross_check(e, o, pr, [&](const AlgebraElement& x) { return f(o, x); });
        } else {
            judge(e, *op, pr);
        }
        rep.consistent = rep.consistent && e.consistent;
        rep.entries.push_back(std::move(e));
    };

    auto scalar_summands = [&](const std::vector<Rational>& l) {
        std::vector<SummandParams> p;
        for (const auto& x : l) p.push_back(SummandParams::scalar(x));
        return p;
    };
    auto expect_standard = [](const MetricSpec& spec) {
        return spec.is_standard_up_to_scale() ? Expectation::MustPass : Expectation::MustRefute;
    };

    switch (th) {
        case Theorem::T1: {
            // Probe x = v + w with v in s, w in m. Equal lambda on m reduces the g.o.
            // system to [k + v_F, w] = 0 with v_F = (lambda - S) v / lambda.
            ChainSolver chain(m, default_chain(m));
            std::function<bool(const MetricOperator&, const AlgebraElement&)> reduced =
                [&](const MetricOperator& op, const AlgebraElement& x) {
                    const Rational l = op.spec().summands.front().lambda;
                    AlgebraElement v = m.project_s(x), w = x - v;
                    AlgebraElement vf = Rational(1 / l) * (l * v - op.apply(v));
                    return chain.solve(vf, w).status == Status::Feasible;
                };
            for (const auto& l : lambda_vectors(s)) {
                bool eq = all_equal(l);
                std::vector<Matrix> blocks = s_block_variants(m);
                if (eq) blocks.insert(blocks.begin(), scaled_identity(m.dim_s(), l.front()));
                for (std::size_t b = 0; b < blocks.size(); ++b) {
                    if (eq && b > 0 && blocks[b] == blocks[0]) continue;
                    MetricSpec spec{blocks[b], scalar_summands(l)};
                    if (!eq) add(spec, Expectation::MustRefute);
                    else if (spec.is_standard_up_to_scale()) add(spec, Expectation::MustPass);
                    else add(spec, Expectation::CrossCheck, &reduced);
                }
            }
            break;
        }
        case Theorem::CC1:
        case Theorem::T2_3:
        case Theorem::T3_2: {
            std::vector<std::vector<Rational>> ls;
            if (s <= 2) {
                ls = lambda_vectors(s);
            } else {
                for (const auto& x : grid_values()) ls.push_back(std::vector<Rational>(s, x));
                for (std::size_t i = 0; i < s; ++i) {
                    std::vector<Rational> l(s, Rational(1));
                    l[i] = 2;
                    ls.push_back(l);
                }
            }
            for (const Rational& mu : {Rational(1), Rational(2)}) {
                for (const auto& l : ls) {
                    MetricSpec spec{scaled_identity(m.dim_s(), mu), scalar_summands(l)};
                    add(spec, expect_standard(spec));
                }
                for (std::size_t i = 0; i < s; ++i) {
                    if (!m.truly_reducible(i)) continue;
                    for (const auto& sv : split_variants(m, i, mu)) {
                        MetricSpec spec{scaled_identity(m.dim_s(), mu), scalar_summands(std::vector<Rational>(s, mu))};
                        spec.summands[i] = sv;
                        add(spec, expect_standard(spec));
                    }
                }
            }
            break;
        }
        case Theorem::T2_1: {
            // Components of [k + x, Lambda x]_n on m_1 and m_2 for x = V + X1 + X2:
            //   [mu1 k + (mu1 - mu) V + (mu1 - mu2) X2, X1] = 0,
            //   [mu2 k + (mu2 - mu) V, X2]_{m2} = 0.
            std::function<bool(const MetricOperator&, const AlgebraElement&)> reduced =
                [&](const MetricOperator& op, const AlgebraElement& x) {
                    const Rational mu = op.spec().s_block[0][0];
                    const Rational mu1 = op.spec().summands[0].lambda, mu2 = op.spec().summands[1].lambda;
                    AlgebraElement v = m.project_s(x), x1 = m.project_summand(x, 0), x2 = m.project_summand(x, 1);
                    auto part1 = [&](const AlgebraElement& y) { return m.project_summand(y, 0); };
                    auto part2 = [&](const AlgebraElement& y) { return m.project_summand(y, 1); };
                    auto lin = [&](const AlgebraElement& k) {
                        return mu1 * part1(g.bracket(k, x1)) + mu2 * part2(g.bracket(k, x2));
                    };
                    AlgebraElement rhs = -(part1(g.bracket((mu1 - mu) * v + (mu1 - mu2) * x2, x1)) +
                                           part2(g.bracket((mu2 - mu) * v, x2)));
                    return k1_system_feasible(m, lin, rhs);
                };
            for (const auto& mu : grid_values())
                for (const auto& l : lambda_vectors(2)) {
                    MetricSpec spec{scaled_identity(m.dim_s(), mu), scalar_summands(l)};
                    add(spec, Expectation::CrossCheck, &reduced);
                }
            break;
        }
        case Theorem::T2_2: {
            std::size_t j = reducible(m, 0, cls) ? 0 : 1, i = 1 - j;
            for (const Rational& mu : {Rational(1), Rational(2)})
                for (const auto& li : grid_values()) {
                    std::vector<SummandParams> opts = {SummandParams::scalar(mu), SummandParams::scalar(2 * mu)};
                    if (m.truly_reducible(j))
                        for (const auto& sv : split_variants(m, j, mu)) opts.push_back(sv);
                    for (const auto& pj : opts) {
                        MetricSpec spec{scaled_identity(m.dim_s(), mu), std::vector<SummandParams>(2)};
                        spec.summands[i] = SummandParams::scalar(li);
                        spec.summands[j] = pj;
                        add(spec, pj.is_scalar_multiple(mu) ? Expectation::Report : Expectation::MustRefute);
                    }
                }
            break;
        }
        case Theorem::C2: {
            // Metric mu on s + m_2 and mu1 on m_1: feasible iff some k' in k1 has
            // [k' + V + X2, X1] = 0.
            std::function<bool(const MetricOperator&, const AlgebraElement&)> reduced =
                [&](const MetricOperator&, const AlgebraElement& x) {
                    AlgebraElement v = m.project_s(x), x1 = m.project_summand(x, 0), x2 = m.project_summand(x, 1);
                    auto lin = [&](const AlgebraElement& k) { return g.bracket(k, x1); };
                    return k1_system_feasible(m, lin, -g.bracket(v + x2, x1));
                };
            for (const auto& mu : grid_values())
                for (const auto& mu1 : grid_values()) {
                    if (mu == mu1) continue;
                    MetricSpec spec{scaled_identity(1, mu), scalar_summands({mu1, mu})};
                    add(spec, Expectation::CrossCheck, &reduced);
                }
            break;
        }
    }
    return rep;
}

}  // namespace hgo
