#ifndef ELLCMM_TESTS_RANDOM_ELEMENTS_HPP
#define ELLCMM_TESTS_RANDOM_ELEMENTS_HPP

#include <random>

#include "ellcmm/ratfunc.hpp"
#include "ellcmm/tower.hpp"

namespace ellcmm::testing {

// Random polynomial in all tower generators: degree <= 2 in each, small
// integer coefficients.
template <class K>
K random_polynomial(std::mt19937_64& rng) {
    if constexpr (tower_depth_v<K> == 0) {
        std::uniform_int_distribution<long> coef(-5, 5);
        return Rational(coef(rng));
    } else {
        using B = typename K::base_type;
        std::uniform_int_distribution<int> deg(0, 2);
        std::vector<B> c;
        for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(random_polynomial<B>(rng));
        return K(Poly<B>(std::move(c)));
    }
}

// Random tower element: a quotient of two random polynomials, which reaches
// every element shape of the field.
template <class K>
K random_element(std::mt19937_64& rng, bool allow_zero = true) {
    for (;;) {
        K n = random_polynomial<K>(rng), d = random_polynomial<K>(rng);
        if (d.is_zero()) continue;
        if (n.is_zero() && !allow_zero) continue;
        return n / d;
    }
}

}  // namespace ellcmm::testing

#endif
