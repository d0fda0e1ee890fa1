#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hgo {

using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p", "-p" or "p/q" with q != 0. No decimals, no whitespace.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    Integer p(n, 10), q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// mpq_class(p, q) does not reduce; use this for literal fractions.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_str();
}

inline int sign(const Rational& r) { return sgn(r); }

inline Integer lcm_of_denominators(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

} // namespace hgo
