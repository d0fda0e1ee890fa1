#pragma once

#include "linalg.hpp"
#include "rational.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgo {

struct InvalidType : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotARoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RootSystemType {
    char family = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

inline void validate(const RootSystemType& t) {
    bool ok = false;
    switch (t.family) {
        case 'A': ok = t.rank >= 1; break;
        case 'B': ok = t.rank >= 2; break;
        case 'C': ok = t.rank >= 3; break;
        case 'D': ok = t.rank >= 4; break;
        case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
        case 'F': ok = t.rank == 4; break;
        case 'G': ok = t.rank == 2; break;
        default: break;
    }
    if (!ok) throw InvalidType("unsupported root system type " + t.name());
}

inline RootSystemType parse_type(const std::string& s) {
    if (s.size() < 2) throw InvalidType("bad type name '" + s + "'");
    RootSystemType t;
    t.family = s[0];
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw InvalidType("bad type name '" + s + "'");
    t.rank = std::stoi(s.substr(1));
    validate(t);
    return t;
}

// Coefficients in the basis of simple roots.
using Root = std::vector<int>;

inline Root operator-(const Root& a) {
    Root r(a);
    for (auto& c : r) c = -c;
    return r;
}
inline Root operator+(const Root& a, const Root& b) {
    Root r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
inline Root operator-(const Root& a, const Root& b) { return a + (-b); }

inline int height(const Root& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
}

inline bool is_positive(const Root& r) {
    for (int c : r)
        if (c != 0) return c > 0;
    return false;
}

inline std::string to_string(const Root& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

// Height first; inside a height, larger leading coefficients come first so
// that the simple roots appear as alpha_1, ..., alpha_l.
inline bool canonical_less(const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
}

/**
 * Root system of a simple type in Bourbaki numbering.
 * Positive roots are indexed 0..N-1 in canonical order and their negatives
 * N..2N-1 in the same order.
 */
class RootSystem {
public:
    explicit RootSystem(RootSystemType t) : type_(t) {
        validate(t);
        build_cartan();
        build_roots();
        build_killing_scale();
    }

    const RootSystemType& type() const { return type_; }
    int rank() const { return type_.rank; }
    std::size_t num_positive() const { return positive_.size(); }
    std::size_t num_roots() const { return 2 * positive_.size(); }

    // cartan()[i][j] = <alpha_i, alpha_j^vee>
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    // Symmetric form normalised so that long roots have squared length 2.
    const Matrix& gram() const { return gram_; }
    const Rational& length2(int i) const { return gram_[i][i]; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& root(std::size_t idx) const {
        std::size_t n = positive_.size();
        return idx < n ? positive_[idx] : negative_[idx - n];
    }
    std::size_t negate(std::size_t idx) const {
        std::size_t n = positive_.size();
        return idx < n ? idx + n : idx - n;
    }
    std::optional<std::size_t> index_of(const Root& r) const {
        auto it = index_.find(r);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool is_root(const Root& r) const { return index_.count(r) > 0; }
    std::size_t require(const Root& r) const {
        auto i = index_of(r);
        if (!i) throw NotARoot(to_string(r) + " is not a root of " + type_.name());
        return *i;
    }

    Rational inner(const Root& a, const Root& b) const {
        Rational s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < rank(); ++j)
                if (b[j] != 0) s += a[i] * b[j] * gram_[i][j];
        }
        return s;
    }

    // <beta, alpha_j^vee>
    int pair_coroot(const Root& beta, int j) const {
        int s = 0;
        for (int k = 0; k < rank(); ++k) s += beta[k] * cartan_[k][j];
        return s;
    }

    // Expansion of alpha^vee in simple coroots.
    std::vector<Rational> coroot(const Root& alpha) const {
        Rational a2 = inner(alpha, alpha);
        std::vector<Rational> c(rank());
        for (int i = 0; i < rank(); ++i) c[i] = Rational(alpha[i]) * gram_[i][i] / a2;
        return c;
    }

    // Value of the root on a Cartan element given in simple-coroot coordinates.
    Rational evaluate(const Root& beta, const std::vector<Rational>& h) const {
        Rational s = 0;
        for (int j = 0; j < rank(); ++j) {
            if (h[j] == 0) continue;
            int p = pair_coroot(beta, j);
            if (p != 0) s += p * h[j];
        }
        return s;
    }

    // (p, q): beta - p alpha, ..., beta + q alpha is the alpha-string through beta.
    std::pair<int, int> root_string(const Root& alpha, const Root& beta) const {
        require(alpha);
        require(beta);
        if (alpha == beta || alpha == -beta)
            throw std::invalid_argument("root_string: beta must differ from +-alpha");
        int p = 0, q = 0;
        Root r = beta - alpha;
        while (is_root(r)) {
            ++p;
            r = r - alpha;
        }
        r = beta + alpha;
        while (is_root(r)) {
            ++q;
            r = r + alpha;
        }
        return {p, q};
    }

    // Multiplier c with B(h_alpha, h_beta) = c (alpha, beta) for the form
    // dual to the Killing form on the real span of the roots.
    const Rational& killing_scale() const { return killing_scale_; }
    Rational pair_B(const Root& a, const Root& b) const { return killing_scale_ * inner(a, b); }

    // omega_j^vee in simple-coroot coordinates: alpha_i(omega_j^vee) = delta_ij.
    std::vector<Rational> fundamental_coweight(int j) const {
        check_index(j);
        return column(cartan_inverse_, j);
    }

    // Fundamental weight in simple-root coordinates: <Lambda_j, alpha_i^vee> = delta_ij.
    std::vector<Rational> fundamental_weight(int j) const {
        check_index(j);
        std::vector<Rational> c(rank());
        for (int k = 0; k < rank(); ++k) c[k] = cartan_inverse_[j][k];
        return c;
    }

    // Dual-form inner product on rational combinations of simple roots.
    Rational pair_B_weights(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        Rational s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) s += a[i] * b[j] * gram_[i][j];
        return killing_scale_ * s;
    }

private:
    void check_index(int j) const {
        if (j < 0 || j >= rank()) throw std::out_of_range("simple root index out of range");
    }

    static std::vector<Rational> column(const Matrix& m, int j) {
        std::vector<Rational> c(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
        return c;
    }

    void build_cartan() {
        int l = type_.rank;
        cartan_.assign(l, std::vector<int>(l, 0));
        std::vector<Rational> len(l, Rational(2));
        auto link = [&](int i, int j) {
            cartan_[i][j] = -1;
            cartan_[j][i] = -1;
        };
        for (int i = 0; i < l; ++i) cartan_[i][i] = 2;
        switch (type_.family) {
            case 'A':
                for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
                break;
            case 'B':
                for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
                cartan_[l - 2][l - 1] = -2;
                len[l - 1] = 1;
                break;
            case 'C':
                for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
                cartan_[l - 1][l - 2] = -2;
                for (int i = 0; i + 1 < l; ++i) len[i] = 1;
                break;
            case 'D':
                for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
                link(l - 3, l - 1);
                break;
            case 'E':
                link(0, 2);
                link(1, 3);
                for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
                break;
            case 'F':
                link(0, 1);
                link(1, 2);
                link(2, 3);
                cartan_[1][2] = -2;
                len[2] = len[3] = 1;
                break;
            case 'G':
                link(0, 1);
                cartan_[1][0] = -3;
                len[0] = Rational(2, 3);
                break;
        }
        gram_.assign(l, std::vector<Rational>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) gram_[i][j] = cartan_[i][j] * len[j] / 2;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                if (gram_[i][j] != gram_[j][i]) throw std::logic_error("asymmetric gram for " + type_.name());
        Matrix a(l, std::vector<Rational>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) a[i][j] = cartan_[i][j];
        auto inv = inverse(a);
        if (!inv) throw std::logic_error("singular Cartan matrix");
        cartan_inverse_ = *inv;
    }

    // Grows positive roots height by height: beta + alpha_i is a root
    // exactly when q > 0, where q = p - <beta, alpha_i^vee>.
    void build_roots() {
        int l = type_.rank;
        std::vector<Root> layer;
        for (int i = 0; i < l; ++i) {
            Root r(l, 0);
            r[i] = 1;
            layer.push_back(r);
        }
        std::map<Root, bool> seen;
        for (auto& r : layer) seen[r] = true;
        std::vector<Root> all = layer;
        while (!layer.empty()) {
            std::vector<Root> next;
            for (const auto& beta : layer) {
                for (int i = 0; i < l; ++i) {
                    Root ai(l, 0);
                    ai[i] = 1;
                    if (beta == ai) continue;
                    int p = 0;
                    Root down = beta - ai;
                    while (is_positive(down) && seen.count(down)) {
                        ++p;
                        down = down - ai;
                    }
                    int q = p - pair_coroot(beta, i);
                    if (q > 0) {
                        Root up = beta + ai;
                        if (!seen.count(up)) {
                            seen[up] = true;
                            next.push_back(up);
                            all.push_back(up);
                        }
                    }
                }
            }
            layer = std::move(next);
        }
        std::sort(all.begin(), all.end(), canonical_less);
        positive_ = all;
        negative_.clear();
        for (const auto& r : positive_) negative_.push_back(-r);
        index_.clear();
        for (std::size_t i = 0; i < positive_.size(); ++i) {
            index_[positive_[i]] = i;
            index_[negative_[i]] = i + positive_.size();
        }
    }

    // B(h_1^vee, h_1^vee) = sum over roots of <alpha, alpha_1^vee>^2; the dual
    // form then satisfies pair_B(alpha_1, alpha_1) = 4 / B(h_1^vee, h_1^vee).
    void build_killing_scale() {
        Rational k11 = 0;
        for (std::size_t i = 0; i < num_roots(); ++i) {
            int v = pair_coroot(root(i), 0);
            k11 += v * v;
        }
        killing_scale_ = Rational(4) / (gram_[0][0] * k11);
    }

    RootSystemType type_;
    std::vector<std::vector<int>> cartan_;
    Matrix gram_;
    Matrix cartan_inverse_;
    std::vector<Root> positive_, negative_;
    std::map<Root, std::size_t> index_;
    Rational killing_scale_;
};

// Number of roots predicted by the type.
inline std::size_t expected_root_count(const RootSystemType& t) {
    std::size_t l = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case 'A': return l * (l + 1);
        case 'B':
        case 'C': return 2 * l * l;
        case 'D': return 2 * l * (l - 1);
        case 'E': return l == 6 ? 72 : l == 7 ? 126 : 240;
        case 'F': return 48;
        case 'G': return 12;
    }
    return 0;
}

} // namespace hgo
