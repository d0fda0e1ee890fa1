#pragma once

#include "linalg.hpp"
#include "rootsys.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgo {

struct AlgebraMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonOrthogonalBasis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * Integer structure constants N(alpha, beta) of a Chevalley basis,
 * [E_alpha, E_beta] = N(alpha, beta) E_{alpha+beta}, for all pairs of roots.
 * Signs are fixed by taking every extraspecial pair positive and
 * N(-alpha, -beta) = -N(alpha, beta).
 */
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs) : rs_(rs), n_(rs.num_roots()) {
        table_.assign(n_ * n_, 0);
        std::size_t np = rs.num_positive();
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> special(np);
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = a + 1; b < np; ++b)
                if (auto s = rs.index_of(rs.root(a) + rs.root(b))) special[*s].emplace_back(a, b);
        // Positive roots are sorted by height, so every sum handled below only
        // needs constants for roots of smaller height.
        for (std::size_t xi = 0; xi < np; ++xi) {
            auto& pairs = special[xi];
            if (pairs.empty()) continue;
            std::sort(pairs.begin(), pairs.end());
            auto [z, e] = pairs.front();
            const Root& zeta = rs.root(z);
            const Root& eta = rs.root(e);
            int p = rs.root_string(zeta, eta).first;
            set_positive(z, e, p + 1);
            Rational xi2 = rs.inner(rs.root(xi), rs.root(xi));
            for (std::size_t k = 1; k < pairs.size(); ++k) {
                auto [a, b] = pairs[k];
                const Root& alpha = rs.root(a);
                const Root& beta = rs.root(b);
                Rational bracket = 0;
                Root bz = beta - zeta, az = alpha - zeta;
                if (rs.is_root(bz))
                    bracket += Rational(value(beta, -zeta) * value(alpha, -eta)) / rs.inner(bz, bz);
                if (rs.is_root(az))
                    bracket += Rational(value(-zeta, alpha) * value(beta, -eta)) / rs.inner(az, az);
                Rational v = -xi2 / Rational(-(p + 1)) * bracket;
                if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
                set_positive(a, b, static_cast<int>(v.get_num().get_si()));
            }
        }
        // Fill in the remaining sign patterns.
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i >= np || j >= np) table_[i * n_ + j] = derive(i, j);
    }

    int operator()(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
    int get(const Root& a, const Root& b) const {
        auto ia = rs_.index_of(a), ib = rs_.index_of(b);
        if (!ia || !ib) throw NotARoot("structure constant of a non-root");
        return (*this)(*ia, *ib);
    }
    const RootSystem& roots() const { return rs_; }

private:
    int value(const Root& a, const Root& b) const {
        std::size_t i = rs_.require(a), j = rs_.require(b);
        if (i < rs_.num_positive() && j < rs_.num_positive()) return table_[i * n_ + j];
        return derive(i, j);
    }

    void set_positive(std::size_t a, std::size_t b, int v) {
        table_[a * n_ + b] = v;
        table_[b * n_ + a] = -v;
    }

    // From alpha + beta + gamma = 0:
    // N(alpha,beta)/(gamma,gamma) = N(beta,gamma)/(alpha,alpha) = N(gamma,alpha)/(beta,beta).
    int derive(std::size_t i, std::size_t j) const {
        std::size_t np = rs_.num_positive();
        const Root& a = rs_.root(i);
        const Root& b = rs_.root(j);
        auto sum = rs_.index_of(a + b);
        if (!sum) return 0;
        if (i >= np && j >= np) return -table_[rs_.negate(i) * n_ + rs_.negate(j)];
        if (i >= np) return -derive(j, i);
        std::size_t g = rs_.negate(*sum);
        const Root& c = rs_.root(g);
        Rational v;
        if (g < np) {
            v = rs_.inner(c, c) / rs_.inner(b, b) * table_[g * n_ + i];
        } else {
            int nbg = -table_[rs_.negate(j) * n_ + rs_.negate(g)];
            v = rs_.inner(c, c) / rs_.inner(a, a) * nbg;
        }
        if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
        return static_cast<int>(v.get_num().get_si());
    }

    const RootSystem& rs_;
    std::size_t n_;
    std::vector<int> table_;
};

enum class GenKind { IH, A, B };

struct Generator {
    GenKind kind;
    std::size_t index;  // simple coroot index for IH, positive root index for A and B
};

/**
 * Sparse element of the compact real form, coefficients over the generator
 * basis {iH_j} u {A_alpha, B_alpha : alpha > 0}.
 */
class AlgebraElement {
public:
    using Term = std::pair<std::size_t, Rational>;

    AlgebraElement() = default;
    static AlgebraElement basis(std::size_t g, const Rational& c = 1) {
        AlgebraElement e;
        if (c != 0) e.terms_.emplace_back(g, c);
        return e;
    }
    static AlgebraElement from_terms(std::vector<Term> t) {
        std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        AlgebraElement e;
        for (auto& [g, c] : t) {
            if (!e.terms_.empty() && e.terms_.back().first == g) e.terms_.back().second += c;
            else e.terms_.emplace_back(g, c);
        }
        e.prune();
        return e;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(std::size_t g) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                                   [](const Term& t, std::size_t v) { return t.first < v; });
        return (it != terms_.end() && it->first == g) ? it->second : Rational(0);
    }
    std::size_t max_index() const { return terms_.empty() ? 0 : terms_.back().first; }

    AlgebraElement& operator+=(const AlgebraElement& o) { return combine(o, 1); }
    AlgebraElement& operator-=(const AlgebraElement& o) { return combine(o, -1); }
    AlgebraElement& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        for (auto& t : terms_) t.second *= c;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

private:
    AlgebraElement& combine(const AlgebraElement& o, int s) {
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
                out.push_back(std::move(terms_[i++]));
            } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
                out.emplace_back(o.terms_[j].first, s > 0 ? o.terms_[j].second : Rational(-o.terms_[j].second));
                ++j;
            } else {
                Rational v = terms_[i].second;
                if (s > 0) v += o.terms_[j].second;
                else v -= o.terms_[j].second;
                if (v != 0) out.emplace_back(terms_[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
        return *this;
    }
    void prune() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 0; }),
                     terms_.end());
    }

    std::vector<Term> terms_;
};

/**
 * Compact real form of a complex simple Lie algebra in the basis
 * iH_j = i alpha_j^vee, A_alpha = E_alpha - E_{-alpha}, B_alpha = i(E_alpha + E_{-alpha}).
 * Generator g < rank is iH_g; positive root k gives A at rank + 2k and B at rank + 2k + 1.
 */
class LieAlgebra {
public:
    explicit LieAlgebra(RootSystemType t)
        : rs_(std::make_unique<RootSystem>(t)), sc_(std::make_unique<StructureConstants>(*rs_)) {
        l_ = static_cast<std::size_t>(rs_->rank());
        dim_ = l_ + 2 * rs_->num_positive();
        build_table();
    }

    const RootSystem& roots() const { return *rs_; }
    const StructureConstants& structure_constants() const { return *sc_; }
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return l_; }

    std::size_t ih(std::size_t j) const { return j; }
    std::size_t a_index(std::size_t pos_root) const { return l_ + 2 * pos_root; }
    std::size_t b_index(std::size_t pos_root) const { return l_ + 2 * pos_root + 1; }
    Generator generator(std::size_t g) const {
        if (g < l_) return {GenKind::IH, g};
        std::size_t k = (g - l_) / 2;
        return {(g - l_) % 2 == 0 ? GenKind::A : GenKind::B, k};
    }
    std::string generator_name(std::size_t g) const {
        Generator gen = generator(g);
        if (gen.kind == GenKind::IH) return "iH" + std::to_string(gen.index + 1);
        return std::string(gen.kind == GenKind::A ? "A" : "B") + to_string(rs_->root(gen.index));
    }

    // A_gamma, with A_{-gamma} = -A_gamma.
    AlgebraElement A(const Root& gamma) const {
        std::size_t i = rs_->require(gamma);
        if (i < rs_->num_positive()) return AlgebraElement::basis(a_index(i));
        return AlgebraElement::basis(a_index(rs_->negate(i)), -1);
    }
    // B_gamma, with B_{-gamma} = B_gamma.
    AlgebraElement B(const Root& gamma) const {
        std::size_t i = rs_->require(gamma);
        if (i >= rs_->num_positive()) i = rs_->negate(i);
        return AlgebraElement::basis(b_index(i));
    }
    // i times the Cartan element with the given simple-coroot coordinates.
    AlgebraElement cartan(const std::vector<Rational>& h) const {
        std::vector<AlgebraElement::Term> t;
        for (std::size_t j = 0; j < h.size(); ++j)
            if (h[j] != 0) t.emplace_back(j, h[j]);
        return AlgebraElement::from_terms(std::move(t));
    }
    AlgebraElement coroot_element(const Root& alpha) const { return cartan(rs_->coroot(alpha)); }

    std::vector<Rational> cartan_part(const AlgebraElement& x) const {
        std::vector<Rational> h(l_);
        for (const auto& [g, c] : x.terms()) {
            if (g >= l_) break;
            h[g] = c;
        }
        return h;
    }

    void check(const AlgebraElement& x) const {
        if (!x.is_zero() && x.max_index() >= dim_)
            throw AlgebraMismatch("element has a generator index outside " + rs_->type().name());
    }

    const std::vector<std::pair<std::size_t, int>>& bracket_generators(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const {
        check(x);
        check(y);
        std::vector<Rational> acc(dim_);
        std::vector<char> touched(dim_, 0);
        Rational prod;
        for (const auto& [i, a] : x.terms())
            for (const auto& [j, b] : y.terms()) {
                const auto& entry = table_[i * dim_ + j];
                if (entry.empty()) continue;
                prod = a * b;
                for (const auto& [k, n] : entry) {
                    if (n == 1) acc[k] += prod;
                    else if (n == -1) acc[k] -= prod;
                    else acc[k] += prod * n;
                    touched[k] = 1;
                }
            }
        std::vector<AlgebraElement::Term> t;
        for (std::size_t k = 0; k < dim_; ++k)
            if (touched[k] && acc[k] != 0) t.emplace_back(k, std::move(acc[k]));
        return AlgebraElement::from_terms(std::move(t));
    }

    // Negative of the Killing form; positive definite on the compact form.
    Rational killing_form(const AlgebraElement& x, const AlgebraElement& y) const {
        check(x);
        check(y);
        const Matrix& g = gram();
        Rational s = 0;
        std::size_t i = 0, j = 0;
        const auto& xt = x.terms();
        const auto& yt = y.terms();
        // Off-diagonal entries only occur inside the Cartan block.
        for (const auto& [a, c] : xt) {
            if (a >= l_) break;
            for (const auto& [b, d] : yt) {
                if (b >= l_) break;
                s += c * d * g[a][b];
            }
        }
        while (i < xt.size() && j < yt.size()) {
            if (xt[i].first < yt[j].first) ++i;
            else if (yt[j].first < xt[i].first) ++j;
            else {
                if (xt[i].first >= l_) s += xt[i].second * yt[j].second * g[xt[i].first][xt[i].first];
                ++i;
                ++j;
            }
        }
        return s;
    }

    // Gram matrix of -Killing on the generators, computed as -trace(ad x ad y).
    const Matrix& gram() const {
        std::call_once(gram_once_, [this] { gram_ = trace_gram(); });
        return gram_;
    }

    Matrix trace_gram() const {
        Matrix g(dim_, std::vector<Rational>(dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j) {
                long tr = 0;
                for (std::size_t k = 0; k < dim_; ++k)
                    for (const auto& [m, c] : table_[j * dim_ + k])
                        for (const auto& [k2, c2] : table_[i * dim_ + m])
                            if (k2 == k) tr += static_cast<long>(c) * c2;
                g[i][j] = g[j][i] = Rational(-tr);
            }
        return g;
    }

    // B-orthogonal projection onto the span of a B-orthogonal basis.
    AlgebraElement project(const AlgebraElement& x, const std::vector<AlgebraElement>& basis) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                if (killing_form(basis[i], basis[j]) != 0)
                    throw NonOrthogonalBasis("projection basis is not orthogonal for the Killing form");
        AlgebraElement r;
        for (const auto& b : basis) {
            Rational nb = killing_form(b, b);
            if (nb == 0) throw NonOrthogonalBasis("zero vector in projection basis");
            Rational c = killing_form(x, b) / nb;
            if (c != 0) r += c * b;
        }
        return r;
    }

private:
    void add(std::vector<std::pair<std::size_t, int>>& out, const AlgebraElement& e, int c) const {
        if (c == 0) return;
        for (const auto& [g, v] : e.terms()) {
            int iv = static_cast<int>(v.get_num().get_si()) * c;
            auto it = std::find_if(out.begin(), out.end(), [g = g](const auto& p) { return p.first == g; });
            if (it == out.end()) out.emplace_back(g, iv);
            else it->second += iv;
        }
    }

    // Bracket of two generators, with [A_a, B_a] = 2 iH_{a^vee} needing
    // the coroot expansion scaled by two.
    std::vector<std::pair<std::size_t, int>> compute(std::size_t i, std::size_t j) const {
        std::vector<std::pair<std::size_t, int>> out;
        Generator x = generator(i), y = generator(j);
        const RootSystem& rs = *rs_;
        const StructureConstants& N = *sc_;
        if (x.kind == GenKind::IH && y.kind == GenKind::IH) return out;
        if (x.kind == GenKind::IH) {
            const Root& beta = rs.root(y.index);
            int v = rs.pair_coroot(beta, static_cast<int>(x.index));
            if (y.kind == GenKind::A) add(out, AlgebraElement::basis(b_index(y.index)), v);
            else add(out, AlgebraElement::basis(a_index(y.index)), -v);
        } else if (y.kind == GenKind::IH) {
            out = compute(j, i);
            for (auto& p : out) p.second = -p.second;
            return finish(out);
        } else if (x.index == y.index) {
            if (x.kind == y.kind) return out;
            const Root& a = rs.root(x.index);
            std::vector<Rational> c = rs.coroot(a);
            int s = x.kind == GenKind::A ? 2 : -2;
            for (std::size_t k = 0; k < l_; ++k) {
                Rational v = c[k] * s;
                if (v.get_den() != 1) throw std::logic_error("non-integral coroot");
                if (v != 0) out.emplace_back(k, static_cast<int>(v.get_num().get_si()));
            }
        } else {
            const Root& a = rs.root(x.index);
            const Root& b = rs.root(y.index);
            Root sum = a + b, diff = a - b;
            bool has_sum = rs.is_root(sum), has_diff = rs.is_root(diff);
            if (x.kind == GenKind::A && y.kind == GenKind::A) {
                if (has_sum) add(out, A(sum), N.get(a, b));
                if (has_diff) add(out, A(diff), N.get(-a, b));
            } else if (x.kind == GenKind::B && y.kind == GenKind::B) {
                if (has_sum) add(out, A(sum), -N.get(a, b));
                if (has_diff) add(out, A(diff), -N.get(a, -b));
            } else if (x.kind == GenKind::A) {
                if (has_sum) add(out, B(sum), N.get(a, b));
                if (has_diff) add(out, B(diff), N.get(a, -b));
            } else {
                out = compute(j, i);
                for (auto& p : out) p.second = -p.second;
            }
        }
        return finish(out);
    }

    static std::vector<std::pair<std::size_t, int>> finish(std::vector<std::pair<std::size_t, int>> v) {
        v.erase(std::remove_if(v.begin(), v.end(), [](const auto& p) { return p.second == 0; }), v.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    void build_table() {
        table_.assign(dim_ * dim_, {});
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) table_[i * dim_ + j] = compute(i, j);
    }

    std::unique_ptr<RootSystem> rs_;
    std::unique_ptr<StructureConstants> sc_;
    std::size_t l_ = 0, dim_ = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> table_;
    mutable std::once_flag gram_once_;
    mutable Matrix gram_;
};

} // namespace hgo
