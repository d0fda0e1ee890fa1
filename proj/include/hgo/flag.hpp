#pragma once

#include "chevalley.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgo {

struct InvalidPainting : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotATRoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Painted simple roots are numbered 1..rank as in the Dynkin diagram.
struct PaintedDiagram {
    RootSystemType algebra;
    std::vector<int> painted;

    std::string name() const {
        std::string s = algebra.name() + "{";
        for (std::size_t i = 0; i < painted.size(); ++i) s += (i ? "," : "") + std::to_string(painted[i]);
        return s + "}";
    }
};

inline void validate(const PaintedDiagram& d) {
    validate(d.algebra);
    if (d.painted.empty()) throw InvalidPainting("painted set is empty");
    for (std::size_t i = 0; i < d.painted.size(); ++i) {
        if (d.painted[i] < 1 || d.painted[i] > d.algebra.rank)
            throw InvalidPainting("painted index " + std::to_string(d.painted[i]) + " out of range for " +
                                  d.algebra.name());
        if (i > 0 && d.painted[i] <= d.painted[i - 1])
            throw InvalidPainting("painted indices must be strictly increasing");
    }
}

// Coefficients of a root on the painted simple roots, in painted order.
using TRoot = std::vector<int>;

inline std::string to_string_troot(const TRoot& t) { return to_string(Root(t)); }

struct TRootGraph {
    std::vector<TRoot> nodes;  // xi_1..xi_s followed by -xi_1..-xi_s
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> component;
    std::size_t num_components = 0;

    bool connected() const { return num_components == 1; }
};

struct ExtremeRoots {
    std::size_t lowest;   // positive root index
    std::size_t highest;
    std::vector<std::size_t> lowest_candidates;
    std::vector<std::size_t> highest_candidates;

    bool unique() const { return lowest_candidates.size() == 1 && highest_candidates.size() == 1; }
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/**
 * Generalized flag manifold G/K of a painted Dynkin diagram: R_K is spanned
 * by the unpainted simple roots, and the complementary positive roots are
 * grouped by their restriction to the center of k.
 */
class FlagManifold {
public:
    FlagManifold(std::shared_ptr<const LieAlgebra> g, PaintedDiagram d) : g_(std::move(g)), d_(std::move(d)) {
        validate(d_);
        if (!(g_->roots().type() == d_.algebra)) throw InvalidPainting("diagram and algebra types differ");
        const RootSystem& rs = g_->roots();
        int l = rs.rank();
        painted_mask_.assign(l, false);
        for (int p : d_.painted) {
            painted0_.push_back(p - 1);
            painted_mask_[p - 1] = true;
        }
        for (int i = 0; i < l; ++i)
            if (!painted_mask_[i]) simple_k_.push_back(i);
        summand_of_.assign(rs.num_positive(), -1);
        for (std::size_t i = 0; i < rs.num_positive(); ++i) {
            TRoot t = kappa(rs.root(i));
            bool zero = std::all_of(t.begin(), t.end(), [](int c) { return c == 0; });
            if (zero) {
                rk_plus_.push_back(i);
                continue;
            }
            rm_plus_.push_back(i);
            auto it = std::find(troots_.begin(), troots_.end(), t);
            if (it == troots_.end()) troots_.push_back(t);
        }
        std::sort(troots_.begin(), troots_.end(), canonical_less);
        fibers_.assign(troots_.size(), {});
        for (std::size_t i : rm_plus_) {
            TRoot t = kappa(rs.root(i));
            std::size_t s = static_cast<std::size_t>(std::find(troots_.begin(), troots_.end(), t) - troots_.begin());
            fibers_[s].push_back(i);
            summand_of_[i] = static_cast<int>(s);
        }
    }

    static std::shared_ptr<FlagManifold> build(const PaintedDiagram& d) {
        validate(d);
        return std::make_shared<FlagManifold>(std::make_shared<const LieAlgebra>(d.algebra), d);
    }

    const LieAlgebra& algebra() const { return *g_; }
    std::shared_ptr<const LieAlgebra> algebra_ptr() const { return g_; }
    const RootSystem& roots() const { return g_->roots(); }
    const PaintedDiagram& diagram() const { return d_; }
    const std::vector<int>& painted0() const { return painted0_; }
    bool is_painted(int j0) const { return painted_mask_.at(j0); }
    const std::vector<int>& simple_k() const { return simple_k_; }

    TRoot kappa(const Root& r) const {
        TRoot t;
        for (int p : painted0_) t.push_back(r[p]);
        return t;
    }

    const std::vector<std::size_t>& rk_positive() const { return rk_plus_; }
    const std::vector<std::size_t>& rm_positive() const { return rm_plus_; }
    bool in_rk(const Root& r) const {
        TRoot t = kappa(r);
        return std::all_of(t.begin(), t.end(), [](int c) { return c == 0; });
    }

    std::size_t num_summands() const { return troots_.size(); }
    const std::vector<TRoot>& troots() const { return troots_; }
    const std::vector<std::size_t>& fiber(std::size_t i) const {
        if (i >= fibers_.size()) throw std::out_of_range("summand index out of range");
        return fibers_[i];
    }
    int summand_of(std::size_t pos_root) const { return summand_of_.at(pos_root); }
    std::size_t summand_dim(std::size_t i) const { return 2 * fiber(i).size(); }

    // Generator indices A_alpha, B_alpha for alpha in the fiber, in fiber order.
    std::vector<std::size_t> summand_generators(std::size_t i) const {
        std::vector<std::size_t> out;
        for (std::size_t r : fiber(i)) {
            out.push_back(g_->a_index(r));
            out.push_back(g_->b_index(r));
        }
        return out;
    }
    std::vector<AlgebraElement> summand_basis(std::size_t i) const {
        std::vector<AlgebraElement> out;
        for (std::size_t gidx : summand_generators(i)) out.push_back(AlgebraElement::basis(gidx));
        return out;
    }

    // Positive and negative t-roots.
    bool is_troot(const TRoot& t) const {
        TRoot neg(t);
        for (auto& c : neg) c = -c;
        return std::find(troots_.begin(), troots_.end(), t) != troots_.end() ||
               std::find(troots_.begin(), troots_.end(), neg) != troots_.end();
    }

    bool adjacent(const TRoot& xi, const TRoot& eta) const {
        if (!is_troot(xi)) throw NotATRoot(to_string_troot(xi) + " is not a t-root");
        if (!is_troot(eta)) throw NotATRoot(to_string_troot(eta) + " is not a t-root");
        if (xi == eta) return false;
        if (auto ratio = proportionality(xi, eta)) return *ratio != 2 && *ratio != -2 && *ratio != frac(1, 2) &&
                                                          *ratio != frac(-1, 2);
        TRoot sum(xi), diff(xi);
        for (std::size_t k = 0; k < xi.size(); ++k) {
            sum[k] += eta[k];
            diff[k] -= eta[k];
        }
        return is_troot(sum) || is_troot(diff);
    }

    TRootGraph troot_graph() const {
        TRootGraph g;
        for (const auto& t : troots_) g.nodes.push_back(t);
        for (const auto& t : troots_) {
            TRoot n(t);
            for (auto& c : n) c = -c;
            g.nodes.push_back(n);
        }
        DisjointSets ds(g.nodes.size());
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
                if (adjacent(g.nodes[i], g.nodes[j])) {
                    g.edges.emplace_back(i, j);
                    ds.unite(i, j);
                }
        std::vector<std::size_t> label(g.nodes.size(), SIZE_MAX);
        g.component.resize(g.nodes.size());
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            std::size_t r = ds.find(i);
            if (label[r] == SIZE_MAX) label[r] = g.num_components++;
            g.component[i] = label[r];
        }
        return g;
    }

    ExtremeRoots extreme_roots(std::size_t i) const {
        const RootSystem& rs = g_->roots();
        ExtremeRoots e{};
        for (std::size_t a : fiber(i)) {
            const Root& alpha = rs.root(a);
            bool low = true, high = true;
            for (std::size_t k : rk_plus_) {
                if (rs.is_root(alpha - rs.root(k))) low = false;
                if (rs.is_root(alpha + rs.root(k))) high = false;
            }
            if (low) e.lowest_candidates.push_back(a);
            if (high) e.highest_candidates.push_back(a);
        }
        if (e.lowest_candidates.empty() || e.highest_candidates.empty())
            throw std::logic_error("summand without extreme roots");
        e.lowest = e.lowest_candidates.front();
        e.highest = e.highest_candidates.front();
        return e;
    }

    // Checks that R_M+ is closed as an invariant ordering requires.
    std::vector<std::string> ordering_violations() const {
        const RootSystem& rs = g_->roots();
        std::vector<std::string> v;
        if (rk_plus_.size() + rm_plus_.size() != rs.num_positive()) v.push_back("R_K+ and R_M+ do not partition R+");
        for (std::size_t a : rm_plus_) {
            for (std::size_t b : rm_plus_) {
                Root s = rs.root(a) + rs.root(b);
                if (rs.is_root(s) && !in_rk(s) && !is_positive(s))
                    v.push_back("sum of complementary roots leaves R_M+: " + to_string(s));
            }
            for (std::size_t k : rk_plus_) {
                Root s = rs.root(a) + rs.root(k);
                if (rs.is_root(s) && (in_rk(s) || !is_positive(s)))
                    v.push_back("R_M+ + R_K+ leaves R_M+: " + to_string(s));
            }
        }
        return v;
    }

private:
    static std::optional<Rational> proportionality(const TRoot& a, const TRoot& b) {
        std::optional<Rational> r;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] == 0 && b[k] == 0) continue;
            if (a[k] == 0 || b[k] == 0) return std::nullopt;
            Rational c = frac(b[k], a[k]);
            if (r && *r != c) return std::nullopt;
            r = c;
        }
        return r;
    }

    std::shared_ptr<const LieAlgebra> g_;
    PaintedDiagram d_;
    std::vector<int> painted0_;
    std::vector<bool> painted_mask_;
    std::vector<int> simple_k_;
    std::vector<std::size_t> rk_plus_, rm_plus_;
    std::vector<TRoot> troots_;
    std::vector<std::vector<std::size_t>> fibers_;
    std::vector<int> summand_of_;
};

// Every nonempty painting of the small classical types, G2 and F4.
inline std::vector<PaintedDiagram> catalog() {
    std::vector<RootSystemType> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
                                         {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}};
    std::vector<PaintedDiagram> out;
    for (const auto& t : types)
        for (unsigned mask = 1; mask < (1u << t.rank); ++mask) {
            PaintedDiagram d{t, {}};
            for (int i = 0; i < t.rank; ++i)
                if (mask & (1u << i)) d.painted.push_back(i + 1);
            out.push_back(d);
        }
    return out;
}

} // namespace hgo
