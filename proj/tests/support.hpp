#pragma once

#include <hgo/chevalley.hpp>

#include <random>
#include <vector>

namespace hgo::testing {

inline std::vector<RootSystemType> small_types() {
    return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
            {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}};
}

inline Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 9) + 1;
    return frac(num, den);
}

inline AlgebraElement random_element(const LieAlgebra& g, std::mt19937_64& rng) {
    std::vector<AlgebraElement::Term> t;
    for (std::size_t i = 0; i < g.dim(); ++i) t.emplace_back(i, random_rational(rng));
    return AlgebraElement::from_terms(std::move(t));
}

inline AlgebraElement random_in_span(const std::vector<AlgebraElement>& basis, std::mt19937_64& rng) {
    AlgebraElement x;
    for (const auto& b : basis) x += random_rational(rng) * b;
    return x;
}

}  // namespace hgo::testing
