#include <random>

#include "doctest.h"
#include "ellcmm/shiraishi.hpp"

using namespace ellcmm;

namespace {

TowerSpec spec_of(std::vector<std::string> symbols, int beta = 0) {
    TowerSpec s;
    s.symbols = std::move(symbols);
    s.beta = beta;
    return s;
}

// uncorrected c1 minus the corrected one
template <class K>
K c1_gap(int j, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t, &s = *tw.s;
    return (q - s * t) * (1 - t) * tw.q_pow(j - 1) * t * (1 - q * q) /
           ((1 - s) * (1 - tw.q_pow(j + 1) * t) * (1 - tw.q_pow(j - 1) * t) * (1 - q));
}

}  // namespace

TEST_CASE("order zero is the Macdonald polynomial") {
    auto generic = make_tower<F3>(spec_of({"Q", "T", "S"}));
    for (int j = 0; j <= 3; ++j) {
        auto ps = shiraishi_series(j, 0, generic);
        CHECK(ps.coeffs[0] == macdonald_A1(j, generic));
        CHECK(ps.s_mode == SMode::symbolic);
    }
    auto fixed = make_tower<F2>(spec_of({"Q", "S"}, 1));
    for (int j = 0; j <= 5; ++j) CHECK(shiraishi_series(j, 0, fixed).coeffs[0] == macdonald_A1(j, fixed));
}

TEST_CASE("first order of P_0 against its explicit expansion") {
    auto tw = make_tower<F3>(spec_of({"Q", "T", "S"}));
    const F3 &q = tw.q, &t = tw.t, &s = *tw.s;
    auto ps = shiraishi_series(0, 1, tw);
    const F3 side = q * (1 - t) * (1 - s * t * t) / (t * (1 - q * s * t) * (1 - q));
    const F3 mid = (1 - t) * (q - s * t * t) / (t * (1 - s * t) * (1 - q)) +
                   (1 - s * t * t) * (1 - q * s) * (1 - t) * (q - s * t) /
                       (t * (1 - q * s * t) * (1 - s * t) * (1 - q) * (1 - s));
    LaurentPoly2<F3> want = LaurentPoly2<F3>::monomial(1, -1, side) + LaurentPoly2<F3>::monomial(-1, 1, side) +
                            LaurentPoly2<F3>::monomial(0, 0, mid);
    CHECK(ps.coeffs[1] == want);
    CHECK(ps.coeffs[1].is_symmetric());
}

TEST_CASE("first order in the Macdonald basis, symbolic") {
    auto tw = make_tower<F3>(spec_of({"Q", "T", "S"}));
    for (int j = 0; j <= 2; ++j) {
        auto ps = shiraishi_series(j, 1, tw);
        CHECK(ps.coeffs[1] == macdonald_combination(j, prop5_coeffs(j, tw), tw));
        if (j >= 1) {
            // the uncorrected c1 misses a term; only c1 differs
            auto uncorrected = prop5_coeffs_uncorrected(j, tw);
            auto c = prop5_coeffs(j, tw);
            CHECK(uncorrected.c0 == c.c0);
            CHECK(uncorrected.c2 == c.c2);
            CHECK(uncorrected.c1 - c.c1 == c1_gap(j, tw));
            CHECK_FALSE(ps.coeffs[1] == macdonald_combination(j, uncorrected, tw));
        }
    }
}

TEST_CASE("first order in the Macdonald basis, evaluated") {
    std::mt19937_64 rng(20261018);
    for (int point = 0; point < 3; ++point) {
        TowerSpec spec = spec_of({"S"});
        spec.bound = {{"Q", random_point(rng)}, {"T", random_point(rng)}};
        auto tw = make_tower<F1>(spec);
        for (int j = 0; j <= 4; ++j) {
            auto ps = shiraishi_series(j, 1, tw);
            CHECK(ps.coeffs[0] == macdonald_A1(j, tw));
            CHECK(ps.coeffs[1] == macdonald_combination(j, prop5_coeffs(j, tw), tw));
        }
    }
}

TEST_CASE("s substitution") {
    auto tw = make_tower<F3>(spec_of({"Q", "T", "S"}));
    const F3 &q = tw.q, &t = tw.t;
    auto ps = shiraishi_series(0, 1, tw);
    auto at0 = substitute_s(ps, F2(0), tw);
    CHECK(at0.s_mode == SMode::substituted);
    // s = 0 in the explicit expansion
    const F3 side = q * (1 - t) / (t * (1 - q));
    const F3 mid = (1 - t) * q / (t * (1 - q)) + (1 - t) * q / (t * (1 - q));
    CHECK(at0.coeffs[1] == LaurentPoly2<F3>::monomial(1, -1, side) + LaurentPoly2<F3>::monomial(-1, 1, side) +
                               LaurentPoly2<F3>::monomial(0, 0, mid));
    CHECK(at0.coeffs[0] == ps.coeffs[0]);
    CHECK_THROWS_AS(substitute_s(ps, F2(1), tw), EvaluationPole);

    auto no_s = make_tower<F2>(spec_of({"Q", "T"}));
    CHECK_THROWS_AS(substitute_s(shiraishi_series(0, 0, no_s), F1(0), no_s), Error);
}

TEST_CASE("scaling the elliptic parameter") {
    auto tw = make_tower<F2>(spec_of({"Q", "S"}, 1));
    auto ps = shiraishi_series(1, 2, tw);
    CHECK(scale_elliptic_param(ps, F2(1)).coeffs == ps.coeffs);
    const F2 a = tw.q, b = *tw.s;
    auto twice = scale_elliptic_param(scale_elliptic_param(ps, a), b);
    CHECK(twice.coeffs == scale_elliptic_param(ps, a * b).coeffs);
    CHECK(twice.coeffs[2] == ps.coeffs[2] * (a * a * b * b));
}

TEST_CASE("re-expansion at s = p/s") {
    auto generic = make_tower<F3>(spec_of({"Q", "T", "S"}));
    auto no_s = make_tower<F2>(spec_of({"Q", "T"}));
    for (int j = 0; j <= 2; ++j) {
        // u_k is c_k at s = 0
        auto c = prop5_coeffs(j, generic);
        auto u = lemma8_coeffs(j, no_s);
        CHECK(substitute_outer(even_power_project(c.c0), F2(0)) == u.c0);
        CHECK(substitute_outer(even_power_project(c.c1), F2(0)) == u.c1);
        if (j >= 2) CHECK(substitute_outer(even_power_project(c.c2), F2(0)) == u.c2);
    }

    std::mt19937_64 rng(7);
    for (int point = 0; point < 2; ++point) {
        TowerSpec spec = spec_of({"S"});
        spec.bound = {{"Q", random_point(rng)}, {"T", random_point(rng)}};
        auto tw = make_tower<F1>(spec);
        for (int j = 0; j <= 3; ++j) {
            auto ps = shiraishi_series(j, 3, tw);
            auto r1 = reexpand_p_over_s(ps, 1, 1, tw);
            auto r2 = reexpand_p_over_s(ps, 1, 2, tw);
            CHECK(r1.coeffs == r2.coeffs);
            CHECK(r1.coeffs[0] == macdonald_A1(j, tw));
            CHECK(r1.coeffs[1] == macdonald_combination(j, lemma8_coeffs(j, tw), tw));
            // no s survives
            for (const auto& [e, v] : r1.coeffs[1].terms()) CHECK((v.num().degree() == 0 && v.den().degree() == 0));
            if (j >= 1) CHECK_FALSE(r1.coeffs[1] == macdonald_combination(j, lemma8_coeffs_uncorrected(j, tw), tw));
            CHECK_THROWS_AS(reexpand_p_over_s(ps, 1, 3, tw), Error);
        }
    }

    // at t = q^beta the closed form has poles for small j; compare where it is defined
    for (int beta = 1; beta <= 2; ++beta) {
        auto tw = make_tower<F2>(spec_of({"Q", "S"}, beta));
        for (int j = 0; j <= 3; ++j) {
            auto r = reexpand_p_over_s(shiraishi_series(j, 2, tw), 1, 1, tw);
            CHECK(r.coeffs[0] == macdonald_A1(j, tw));
            if (j + beta >= 3) CHECK(r.coeffs[1] == macdonald_combination(j, lemma8_coeffs(j, tw), tw));
        }
    }
}

TEST_CASE("evaluation at a point") {
    auto tw = make_tower<F2>(spec_of({"Q", "S"}, 2));
    const F2 th = tw.need_t_half();
    for (int j = 0; j <= 4; ++j) {
        auto v = evaluate_series_at(shiraishi_series(j, 1, tw), th, th.inverse());
        CHECK(v[0] == principal_special(j, tw));
        CHECK(v.order() == 1);
    }
}

TEST_CASE("x1 <-> x2 symmetry") {
    auto tw = make_tower<F2>(spec_of({"Q", "S"}, 1));
    for (int j = 0; j <= 4; ++j) {
        auto ps = shiraishi_series(j, 2, tw);
        for (int d = 0; d <= 2; ++d) {
            // asserted through order 1, only reported beyond
            if (d <= 1)
                CHECK(ps.coeffs[d].is_symmetric());
            else
                WARN(ps.coeffs[d].is_symmetric());
            CHECK(ps.coeffs[d].homogeneous_degree() == (ps.coeffs[d].is_zero() ? 0 : j));
        }
    }
}
