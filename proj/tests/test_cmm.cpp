#include <random>

#include "doctest.h"
#include "ellcmm/cmm.hpp"

using namespace ellcmm;

namespace {

TowerSpec spec_of(std::vector<std::string> symbols, int beta = 0) {
    TowerSpec s;
    s.symbols = std::move(symbols);
    s.beta = beta;
    return s;
}

}  // namespace

TEST_CASE("gaussian moment") {
    auto tw = make_tower<F1>(spec_of({"Q"}, 1));
    using L = LaurentPoly2<F1>;
    CHECK(gaussian_moment(L::monomial(0, 0, F1(1)), tw) == F1(1));
    CHECK(gaussian_moment(L::monomial(1, -1, F1(1)), tw) == tw.q);
    CHECK(gaussian_moment(L::monomial(2, 1, F1(1)), tw) == tw.Q_pow(5));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(-3, 3), c(-5, 5);
    for (int trial = 0; trial < 5; ++trial) {
        L f, g;
        for (int k = 0; k < 4; ++k) {
            f.add(e(rng), e(rng), F1(c(rng)));
            g.add(e(rng), e(rng), F1(c(rng)));
        }
        CHECK(gaussian_moment(f + g * F1(3), tw) == gaussian_moment(f, tw) + gaussian_moment(g, tw) * F1(3));
        CHECK(gaussian_moment(f.swapped(), tw) == gaussian_moment(f, tw));
    }
}

TEST_CASE("classical CMM") {
    for (int beta = 1; beta <= 3; ++beta) {
        auto tw = make_tower<F1>(spec_of({"Q"}, beta));
        auto rep = classical_cmm_check(3, 3, tw);
        CHECK(rep.passed());
        CHECK(rep.cells.size() == 48);
        auto bad = classical_cmm_check(2, 2, tw, {false, 1});
        CHECK_FALSE(bad.passed());
        CHECK(bad.cells[0].pass);  // (0,0) is the reference
    }
    CHECK_THROWS_AS(classical_cmm_check(1, 1, make_tower<F2>(spec_of({"Q", "T"}))), Error);
}

TEST_CASE("elliptic CMM at first order") {
    for (int beta = 1; beta <= 2; ++beta) {
        auto tw = make_tower<F2>(spec_of({"Q", "S"}, beta));
        auto rep = elliptic_cmm_verify(2, 2, 1, tw);
        CHECK(rep.passed());
        CHECK(rep.backend == "symbolic");
        // Z(s, p) = Z_0 (1 + eta p)
        auto ratios = elliptic_cmm_ratios(1, 1, 1, tw);
        CHECK(ratios.at({1, 1})[1] / ratios.at({1, 1})[0] == first_order_eta(tw));
    }
    // at beta = 1 the Shiraishi ratio on the right is 1, so the control needs beta = 2
    auto tw = make_tower<F2>(spec_of({"Q", "S"}, 2));
    auto bad = elliptic_cmm_verify(1, 1, 1, tw, {1, false});
    CHECK_FALSE(bad.passed());
    bool zero_one_fails = false;
    for (const auto& c : bad.cells)
        if (c.i == 0 && c.j == 1) zero_one_fails = !c.pass;
    CHECK(zero_one_fails);
}

TEST_CASE("elliptic CMM at second order, evaluated") {
    std::mt19937_64 rng(11);
    for (int point = 0; point < 2; ++point) {
        TowerSpec spec = spec_of({"S"}, 1);
        spec.bound = {{"Q", random_point(rng)}};
        auto rep = elliptic_cmm_verify(2, 2, 2, make_tower<F1>(spec));
        CHECK(rep.passed());
        CHECK(rep.backend == "evaluated");
    }
}

TEST_CASE("first-order chain") {
    CHECK(chain_pieri_step(4).passed());
    CHECK(chain_alpha3_step().passed());
    CHECK(chain_z_identity_step(3).passed());
    CHECK(chain_operator_step(3).passed());
    CHECK(chain_alpha_step(3, 3).passed());
    CHECK(chain_final_identity_step(3, 3, 0).passed());
    CHECK_FALSE(chain_final_identity_step(1, 1, 1).passed());
    CHECK(chain_eta_step(1, {1, 2}).passed());
    CHECK(chain_integrand_step(1, 1, {1}).passed());
}

TEST_CASE("alpha_5, alpha_6 sign correction") {
    auto tw = make_tower<F4>(spec_of({"Q", "T", "A", "B"}));
    const F4 a = generator<F4>(tw.spec.level_of("A")), b = generator<F4>(tw.spec.level_of("B"));
    const F4 alpha3 = alpha3_closed(a, b, tw);
    CHECK(alpha3 == alpha6_closed(tw.t * a, tw) - alpha5_closed(b, tw));
    CHECK(alpha3 == alpha5_uncorrected(b, tw) - alpha6_uncorrected(tw.t * a, tw));
}
