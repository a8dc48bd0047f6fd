#ifndef ELLCMM_SHIRAISHI_HPP
#define ELLCMM_SHIRAISHI_HPP

#include <map>
#include <string>
#include <utility>

#include "ellcmm/errors.hpp"
#include "ellcmm/laurent.hpp"
#include "ellcmm/macdonald.hpp"
#include "ellcmm/nekrasov.hpp"
#include "ellcmm/pseries.hpp"
#include "ellcmm/tower.hpp"

namespace ellcmm {

enum class SMode { symbolic, bound, substituted };

// P_j(x1, x2 | p, s) truncated at p^order; coefficients are Laurent
// polynomials whose scalars live in a tower whose outermost symbol is S.
template <class K>
struct ShiraishiSeries {
    int j = 0;
    int order = 0;
    PSeries<LaurentPoly2<K>> coeffs;
    SMode s_mode = SMode::symbolic;
};

namespace detail {

template <class K>
void require_outer_S(const Tower<K>& tw) {
    if constexpr (tower_depth_v<K> == 0) {
        throw Error("tower " + tw.spec.fingerprint() + " has no symbolic S");
    } else {
        if (tw.spec.symbols.empty() || tw.spec.symbols.back() != "S")
            throw Error("tower " + tw.spec.fingerprint() + " must carry S as its outermost symbol");
    }
}

}  // namespace detail

// Sum over enumerate_pairs(j, n) of the pair contributions, grouped by p-degree.
template <class K>
ShiraishiSeries<K> shiraishi_series(int j, int n, const Tower<K>& tw) {
    if (j < 0 || n < 0) throw Error("shiraishi_series needs j >= 0 and order >= 0");
    const bool check_s = tower_depth_v<K> > 0 && !tw.spec.symbols.empty() && tw.spec.symbols.back() == "S";
    std::vector<std::map<int, K>> buckets(static_cast<std::size_t>(n) + 1);  // degree -> e2 -> coeff
    for (const auto& [lambda, mu] : enumerate_pairs(j, n)) {
        PairContribution<K> pc = pair_contribution(lambda, mu, j, tw);
        if (pc.coefficient.is_zero()) continue;
        buckets[static_cast<std::size_t>(pc.p_degree)][pc.exponent2] += pc.coefficient;
    }
    ShiraishiSeries<K> out;
    out.j = j;
    out.order = n;
    out.s_mode = check_s ? SMode::symbolic : SMode::bound;
    out.coeffs = PSeries<LaurentPoly2<K>>(n);
    for (int d = 0; d <= n; ++d)
        for (const auto& [e2, c] : buckets[static_cast<std::size_t>(d)]) {
            if constexpr (tower_depth_v<K> > 0) {
                if (check_s && !c.is_zero()) (void)even_power_project(c);
            }
            out.coeffs[d].add(j - e2, e2, c);
        }
    return out;
}

// Every coefficient with s replaced by `value` (which must not involve S).
template <class B>
ShiraishiSeries<RatFunc<B>> substitute_s(const ShiraishiSeries<RatFunc<B>>& series, const B& value,
                                         const Tower<RatFunc<B>>& tw) {
    using K = RatFunc<B>;
    detail::require_outer_S(tw);
    ShiraishiSeries<K> out = series;
    out.s_mode = SMode::substituted;
    for (int d = 0; d <= series.order; ++d) {
        LaurentPoly2<K> c;
        for (const auto& [e, v] : series.coeffs[d].terms()) {
            try {
                c.add(e.first, e.second, K(substitute_outer(even_power_project(v), value)));
            } catch (const EvaluationPole&) {
                throw EvaluationPole("s substitution hits a pole in j=" + std::to_string(series.j) + ", p^" +
                                     std::to_string(d) + ", X1^" + std::to_string(e.first) + " X2^" +
                                     std::to_string(e.second) + ", denominator " +
                                     even_power_project(v).den().to_string("s"));
            }
        }
        out.coeffs[d] = std::move(c);
    }
    return out;
}

// p -> lambda p.
template <class K>
ShiraishiSeries<K> scale_elliptic_param(const ShiraishiSeries<K>& series, const K& lambda) {
    ShiraishiSeries<K> out = series;
    K f(1);
    for (int d = 0; d <= series.order; ++d) {
        out.coeffs[d] = series.coeffs[d] * f;
        f *= lambda;
    }
    return out;
}

namespace detail {

// Sum over degrees d <= top of p^d r_d(p/s), re-expanded in p up to p^n.
template <class B>
PSeries<LaurentPoly2<RatFunc<B>>> reexpand_upto(const ShiraishiSeries<RatFunc<B>>& series, int n, int top,
                                                const Tower<RatFunc<B>>& tw) {
    using K = RatFunc<B>;
    PSeries<LaurentPoly2<K>> out(n);
    const K s_inv = tw.s->inverse();
    for (int d = 0; d <= std::min(top, n); ++d)
        for (const auto& [e, v] : series.coeffs[d].terms()) {
            RatFunc<B> r = even_power_project(v);  // as a function of s
            std::vector<B> taylor;
            try {
                taylor = taylor_expand(r, n - d);
            } catch (const PoleAtOrigin&) {
                throw PoleAtOrigin("coefficient of p^" + std::to_string(d) + " X1^" + std::to_string(e.first) +
                                   " X2^" + std::to_string(e.second) + " in P_" + std::to_string(series.j) +
                                   " is singular at s = 0");
            }
            K f(1);
            for (int k = 0; k + d <= n; ++k) {
                out[d + k].add(e.first, e.second, K(taylor[static_cast<std::size_t>(k)]) * f);
                f *= s_inv;
            }
        }
    return out;
}

}  // namespace detail

// P_j(x | p, p/s) from P_j(x | p, s): each r_d(s) p^d becomes r_d(p/s) p^d,
// re-expanded in p. Uses the input up to p^{n+H}; compares against the
// result with one order less of input and throws InstableTruncation if the
// two disagree at orders <= n.
template <class B>
ShiraishiSeries<RatFunc<B>> reexpand_p_over_s(const ShiraishiSeries<RatFunc<B>>& series, int n, int headroom,
                                              const Tower<RatFunc<B>>& tw) {
    detail::require_outer_S(tw);
    if (headroom < 1) throw Error("headroom must be at least 1");
    if (series.order < n + headroom)
        throw Error("reexpand_p_over_s needs the series to order " + std::to_string(n + headroom));
    auto full = detail::reexpand_upto(series, n, n + headroom, tw);
    auto shorter = detail::reexpand_upto(series, n, n + headroom - 1, tw);
    if (!(full == shorter))
        throw InstableTruncation("re-expansion of P_" + std::to_string(series.j) + " changes with headroom " +
                                 std::to_string(headroom));
    ShiraishiSeries<RatFunc<B>> out;
    out.j = series.j;
    out.order = n;
    out.coeffs = std::move(full);
    out.s_mode = SMode::substituted;
    return out;
}

template <class K>
PSeries<K> evaluate_series_at(const ShiraishiSeries<K>& series, const K& v1, const K& v2) {
    return series.coeffs.map([&](const LaurentPoly2<K>& c) { return evaluate(c, v1, v2); });
}

// Order-p coefficients of P_j in the Macdonald basis:
// c0 (X1X2)^{-1} P_{j+2} + c1 P_j + c2 X1X2 P_{j-2}.
template <class K>
struct ExpansionCoeffs {
    K c0, c1, c2;
};

namespace detail {

// The uncorrected bracket of c_1, in terms of qj = q^j.
template <class K>
K bracket(const K& qj, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    return K(2) * qj * qj * t - qj / q * (K(1) - q) * (K(1) - q) - qj * (q + K(1)) * (t + t.inverse()) +
           K(2) * t.inverse();
}

template <class K>
K c1_denominator(const K& qj, const Tower<K>& tw) {
    return (K(1) - qj * tw.q * tw.t) * (K(1) - qj / tw.q * tw.t) * (K(1) - tw.q);
}

}  // namespace detail

// c_k with q^j = qj and s = s given as field elements (s may be 0).
// The bracket of c_1 carries the extra -q^{j-1} t (1 - q^2) that the series
// itself produces; see prop5_coeffs_uncorrected for the uncorrected form.
template <class K>
ExpansionCoeffs<K> prop5_coeffs_at(const K& qj, const K& s, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    const K qj1 = qj / q, qj2 = qj1 / q;  // q^{j-1}, q^{j-2}
    ExpansionCoeffs<K> c;
    c.c0 = q * (1 - t) * (1 - qj * s * t * t) / (t * (1 - q) * (1 - qj * q * s * t));
    const K br = detail::bracket(qj, tw) - qj1 * t * (1 - q * q);
    c.c1 = (q - s * t) * (1 - t) * br / ((1 - s) * detail::c1_denominator(qj, tw));
    c.c2 = (1 - t) * (1 - qj2 * t * t) * (1 - qj) * (1 - qj1) * (s - qj) * (1 - qj1 * t * t) /
           ((1 - q) * (1 - qj1 * t) * (1 - qj1 * t) * (1 - qj2 * t) * (s - qj1 * t) * (1 - qj * t));
    return c;
}

template <class K>
ExpansionCoeffs<K> prop5_coeffs(int j, const Tower<K>& tw) {
    return prop5_coeffs_at(tw.q_pow(j), *tw.s, tw);
}

template <class K>
ExpansionCoeffs<K> prop5_coeffs_uncorrected(int j, const Tower<K>& tw) {
    ExpansionCoeffs<K> c = prop5_coeffs(j, tw);
    const K qj = tw.q_pow(j), &q = tw.q, &t = tw.t, &s = *tw.s;
    c.c1 = (q - s * t) * (1 - t) * detail::bracket(qj, tw) / ((1 - s) * detail::c1_denominator(qj, tw));
    return c;
}

// u_k: the order-p coefficients after s -> p/s; u_k = c_k at s = 0.
template <class K>
ExpansionCoeffs<K> lemma8_coeffs_at(const K& qj, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    const K qj1 = qj / q, qj2 = qj1 / q;
    ExpansionCoeffs<K> u;
    u.c0 = q * (1 - t) / (t * (1 - q));
    u.c1 = q * (1 - t) * (detail::bracket(qj, tw) - qj1 * t * (1 - q * q)) / detail::c1_denominator(qj, tw);
    u.c2 = q * (1 - t) * (1 - qj) * (1 - qj1) * (1 - qj2 * t * t) * (1 - qj1 * t * t) /
           (t * (1 - q) * (1 - qj * t) * (1 - qj1 * t) * (1 - qj1 * t) * (1 - qj2 * t));
    return u;
}

template <class K>
ExpansionCoeffs<K> lemma8_coeffs(int j, const Tower<K>& tw) {
    return lemma8_coeffs_at(tw.q_pow(j), tw);
}

template <class K>
ExpansionCoeffs<K> lemma8_coeffs_uncorrected(int j, const Tower<K>& tw) {
    ExpansionCoeffs<K> u = lemma8_coeffs(j, tw);
    const K qj = tw.q_pow(j), &q = tw.q, &t = tw.t;
    u.c1 = q * (1 - t) * detail::bracket(qj, tw) / (t * detail::c1_denominator(qj, tw));
    return u;
}

// c0 (X1X2)^{-1} P_{j+2} + c1 P_j + c2 X1X2 P_{j-2}, the last term only for j >= 2.
template <class K>
LaurentPoly2<K> macdonald_combination(int j, const ExpansionCoeffs<K>& c, const Tower<K>& tw) {
    LaurentPoly2<K> out = macdonald_A1(j + 2, tw).shifted(-1, -1) * c.c0 + macdonald_A1(j, tw) * c.c1;
    if (j >= 2) out += macdonald_A1(j - 2, tw).shifted(1, 1) * c.c2;
    return out;
}

}  // namespace ellcmm

#endif  // ELLCMM_SHIRAISHI_HPP
