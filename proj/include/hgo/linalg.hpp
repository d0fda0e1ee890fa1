#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hgo {

using Matrix = std::vector<std::vector<Rational>>;
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column, no zeros

/**
 * Incremental row echelon form over the integers. Rational input rows are
 * scaled to primitive integer rows and eliminated with integer combinations
 * (no division beyond content removal), so every rank and consistency
 * decision is exact.
 */
class Echelon {
public:
    using IntRow = std::vector<std::pair<std::size_t, Integer>>;

    explicit Echelon(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    bool has_pivot(std::size_t col) const { return pivot_row_.at(col) >= 0; }

    // True when the row enlarged the row space.
    bool insert(const SparseVec& row) {
        IntRow r = reduce(to_int(row));
        if (r.empty()) return false;
        pivot_row_[r.front().first] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    bool insert_int(IntRow row) {
        normalize(row);
        IntRow r = reduce(std::move(row));
        if (r.empty()) return false;
        pivot_row_[r.front().first] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    bool contains(const SparseVec& row) const { return reduce(to_int(row)).empty(); }

    // Columns [0, nunknowns) are unknowns and column nunknowns holds the
    // right-hand side. Free unknowns are set to zero.
    std::optional<std::vector<Rational>> solve(std::size_t nunknowns) const {
        if (nunknowns < ncols_ && has_pivot(nunknowns)) return std::nullopt;
        std::vector<Rational> x(nunknowns);
        for (std::size_t p = nunknowns; p-- > 0;) {
            long ri = pivot_row_[p];
            if (ri < 0) continue;
            const IntRow& row = rows_[static_cast<std::size_t>(ri)];
            Rational acc = 0;
            for (std::size_t k = 1; k < row.size(); ++k) {
                std::size_t c = row[k].first;
                if (c < nunknowns) acc -= Rational(row[k].second) * x[c];
                else if (c == nunknowns) acc += Rational(row[k].second);
            }
            x[p] = acc / Rational(row[0].second);
        }
        return x;
    }

    std::vector<std::vector<Rational>> nullspace() const {
        std::vector<std::vector<Rational>> basis;
        for (std::size_t f = 0; f < ncols_; ++f) {
            if (has_pivot(f)) continue;
            std::vector<Rational> x(ncols_);
            x[f] = 1;
            for (std::size_t p = ncols_; p-- > 0;) {
                long ri = pivot_row_[p];
                if (ri < 0) continue;
                const IntRow& row = rows_[static_cast<std::size_t>(ri)];
                Rational acc = 0;
                for (std::size_t k = 1; k < row.size(); ++k) acc -= Rational(row[k].second) * x[row[k].first];
                x[p] = acc / Rational(row[0].second);
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

    static IntRow to_int(const SparseVec& row) {
        Integer l = 1;
        for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        IntRow r;
        r.reserve(row.size());
        for (const auto& [c, v] : row) {
            if (v == 0) continue;
            Integer n = v.get_num() * (l / v.get_den());
            r.emplace_back(c, std::move(n));
        }
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        normalize(r);
        return r;
    }

private:
    static void normalize(IntRow& r) {
        if (r.empty()) return;
        Integer g = 0;
        for (const auto& e : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
            if (g == 1) break;
        }
        if (r.front().second < 0) g = -g;
        if (g != 1)
            for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }

    IntRow reduce(IntRow r) const {
        std::size_t idx = 0;
        IntRow out;
        while (idx < r.size()) {
            std::size_t c = r[idx].first;
            long ri = pivot_row_[c];
            if (ri < 0) {
                ++idx;
                continue;
            }
            const IntRow& p = rows_[static_cast<std::size_t>(ri)];
            Integer a = p.front().second, b = r[idx].second, g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            a /= g;
            b /= g;
            // r <- a*r - b*p; p has no entries before column c.
            out.clear();
            out.reserve(r.size() + p.size());
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < p.size()) {
                if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                    out.emplace_back(r[i].first, a * r[i].second);
                    ++i;
                } else if (i == r.size() || p[j].first < r[i].first) {
                    out.emplace_back(p[j].first, -b * p[j].second);
                    ++j;
                } else {
                    Integer v = a * r[i].second - b * p[j].second;
                    if (v != 0) out.emplace_back(r[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            std::swap(r, out);
        }
        normalize(r);
        return r;
    }

    std::size_t ncols_;
    std::vector<long> pivot_row_;
    std::vector<IntRow> rows_;
};

inline SparseVec to_sparse(const std::vector<Rational>& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.emplace_back(i, v[i]);
    return s;
}

inline std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    Echelon e(m.front().size());
    for (const auto& row : m) e.insert(to_sparse(row));
    return e.rank();
}

struct SolveResult {
    bool consistent = false;
    std::vector<Rational> x;  // particular solution when consistent
    std::size_t rank_a = 0;
    std::size_t rank_ab = 0;
};

// Solves A x = b exactly. Consistency is decided by rank(A) == rank([A|b]).
inline SolveResult solve(const Matrix& a, const std::vector<Rational>& b, std::size_t ncols) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
    Echelon e(ncols + 1);
    for (std::size_t r = 0; r < a.size(); ++r) {
        SparseVec row = to_sparse(a[r]);
        if (b[r] != 0) row.emplace_back(ncols, b[r]);
        e.insert(row);
    }
    SolveResult res;
    res.rank_ab = e.rank();
    res.rank_a = e.has_pivot(ncols) ? res.rank_ab - 1 : res.rank_ab;
    auto x = e.solve(ncols);
    res.consistent = x.has_value();
    if (x) res.x = std::move(*x);
    return res;
}

inline std::vector<std::vector<Rational>> nullspace(const Matrix& a, std::size_t ncols) {
    Echelon e(ncols);
    for (const auto& row : a) e.insert(to_sparse(row));
    return e.nullspace();
}

inline Matrix transpose(const Matrix& a, std::size_t ncols) {
    Matrix t(ncols, std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) t[j][i] = a[i][j];
    return t;
}

// For an inconsistent system A x = b, returns y with y^T A = 0 and y^T b = 1.
inline std::optional<std::vector<Rational>> left_certificate(const Matrix& a, const std::vector<Rational>& b,
                                                             std::size_t ncols) {
    Matrix at = transpose(a, ncols);
    std::vector<Rational> rhs(ncols, Rational(0));
    at.push_back(b);
    rhs.push_back(1);
    auto r = solve(at, rhs, a.size());
    if (!r.consistent) return std::nullopt;
    return r.x;
}

// Leading principal minors by fraction-free (Bareiss) elimination without
// pivoting. Stops after the first zero minor; later entries are omitted.
inline std::vector<Rational> leading_principal_minors(Matrix m) {
    std::size_t n = m.size();
    std::vector<Rational> minors;
    Rational prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m[k][k]);
        if (m[k][k] == 0) break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return minors;
}

inline bool positive_definite(const Matrix& m) {
    auto minors = leading_principal_minors(m);
    if (minors.size() != m.size()) return false;
    return std::all_of(minors.begin(), minors.end(), [](const Rational& d) { return d > 0; });
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    std::size_t n = m.size();
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> e(n, Rational(0));
        e[c] = 1;
        auto r = solve(m, e, n);
        if (!r.consistent || r.rank_a < n) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) inv[i][c] = r.x[i];
    }
    return inv;
}

inline Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b.front().size();
    Matrix c(n, std::vector<Rational>(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

} // namespace hgo
