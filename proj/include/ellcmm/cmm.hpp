#ifndef ELLCMM_CMM_HPP
#define ELLCMM_CMM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellcmm/cache.hpp"
#include "ellcmm/canonical.hpp"
#include "ellcmm/elliptic.hpp"
#include "ellcmm/macdonald.hpp"
#include "ellcmm/report.hpp"
#include "ellcmm/shiraishi.hpp"
#include "ellcmm/tower.hpp"

namespace ellcmm {

// X1^k1 X2^k2 -> q^{(k1^2 + k2^2)/2}, extended linearly.
template <class K>
K gaussian_moment(const LaurentPoly2<K>& f, const Tower<K>& tw) {
    K out(0);
    for (const auto& [e, c] : f.terms())
        out += c * tw.Q_pow(static_cast<long>(e.first) * e.first + static_cast<long>(e.second) * e.second);
    return out;
}

// q^{(i(i+beta) + ij + j(j+beta))/2}.
template <class K>
K cmm_prefactor(int i, int j, const Tower<K>& tw) {
    const long b = tw.beta();
    return tw.Q_pow(i * (i + b) + static_cast<long>(i) * j + j * (j + b));
}

// t^{1/2} q^{i/2}.
template <class K>
K special_point(int i, const Tower<K>& tw) {
    return tw.need_t_half() * tw.Q_pow(i);
}

// S_{i,j} = P_i(t^{1/2}, t^{-1/2}) P_j(z_i, 1/z_i).
template <class K>
K special_pair(int i, int j, const Tower<K>& tw) {
    const K z = special_point(i, tw);
    return principal_special(i, tw) * evaluate(macdonald_A1(j, tw), z, z.inverse());
}

namespace detail {

template <class K>
std::optional<std::string> mismatch(const K& got, const K& want, const TowerSpec& spec, const std::string& what) {
    if (got == want) return std::nullopt;
    return what + ": got " + to_canonical(got, spec) + ", expected " + to_canonical(want, spec);
}

template <class K>
std::optional<std::string> series_mismatch(const PSeries<K>& got, const PSeries<K>& want, const TowerSpec& spec,
                                           const std::string& what) {
    for (int d = 0; d <= std::min(got.order(), want.order()); ++d)
        if (auto w = mismatch(got[d], want[d], spec, what + " at p^" + std::to_string(d))) return w;
    return std::nullopt;
}

template <class K>
LaurentPoly2<K> vandermonde2(const Tower<K>& tw) {
    return fold_ratio(trig_vandermonde(tw));
}

}  // namespace detail

struct ClassicalOptions {
    bool shifts = true;        // also the e^{+-(x1+x2)} insertions
    long cross_offset = 0;  // added to the ij coefficient of the prefactor exponent; nonzero is a negative control
};

// Constancy of moment(P_i P_j V) / (q^{...} S_{i,j}) over 0 <= i <= i_max, 0 <= j <= j_max.
template <class K>
VerificationReport classical_cmm_check(int i_max, int j_max, const Tower<K>& tw, ClassicalOptions opt = {}) {
    VerificationReport rep;
    rep.identity = "cmm";
    rep.tower = tw.spec.fingerprint();
    const LaurentPoly2<K> v = detail::vandermonde2(tw);
    auto ratio = [&](int i, int j, int shift) {
        LaurentPoly2<K> f = macdonald_A1(i, tw) * macdonald_A1(j, tw) * v;
        K rhs = cmm_prefactor(i, j, tw) * tw.Q_pow(opt.cross_offset * i * j) * special_pair(i, j, tw);
        if (shift != 0) {
            f = f.shifted(shift, shift);
            rhs *= tw.q_pow(shift * (i + j) + 1);
        }
        return gaussian_moment(f, tw) / rhs;
    };
    const K base = ratio(0, 0, 0);
    std::vector<int> shifts{0};
    if (opt.shifts) shifts = {0, 1, -1};
    for (int shift : shifts)
        for (int i = 0; i <= i_max; ++i)
            for (int j = 0; j <= j_max; ++j) {
                CellResult cell = make_cell(i, j, tw.beta(), 0);
                if (shift != 0) cell.label = shift > 0 ? "shift+" : "shift-";
                rep.cells.push_back(timed_cell(cell, [&] {
                    return detail::mismatch(ratio(i, j, shift), base, tw.spec, "ratio");
                }));
            }
    return rep;
}

struct EllipticOptions {
    int headroom = 1;
    bool with_shiraishi_ratio = true;  // false drops the RHS P_j(..|p/s,s)/P_j(..|p/s,0); negative control
    const SeriesCache* cache = nullptr;
};

// Cell ratios LHS / RHS-without-Z of the elliptic identity, keyed by (i, j).
// The tower must fix beta and carry S as its outermost symbol.
template <class B>
std::map<std::pair<int, int>, PSeries<RatFunc<B>>> elliptic_cmm_ratios(int i_max, int j_max, int n,
                                                                       const Tower<RatFunc<B>>& tw,
                                                                       EllipticOptions opt = {},
                                                                       std::map<std::pair<int, int>, double>* millis = nullptr) {
    using K = RatFunc<B>;
    detail::require_outer_S(tw);
    const K s_inv = tw.s->inverse();
    const PSeries<LaurentPoly2<K>> vand =
        elliptic_vandermonde(n, tw).map([](const SymLaurent1<K>& f) { return fold_ratio(f); });

    auto series_of = [&](int j, int order) {
        return opt.cache ? opt.cache->get(j, order, tw) : shiraishi_series(j, order, tw);
    };
    std::map<int, ShiraishiSeries<K>> plain, transformed;
    auto plain_of = [&](int j) -> const ShiraishiSeries<K>& {
        auto it = plain.find(j);
        if (it == plain.end()) it = plain.emplace(j, series_of(j, n)).first;
        return it->second;
    };
    auto transformed_of = [&](int i) -> const ShiraishiSeries<K>& {
        auto it = transformed.find(i);
        if (it == transformed.end())
            it = transformed
                     .emplace(i, reexpand_p_over_s(series_of(i, n + opt.headroom), n, opt.headroom, tw))
                     .first;
        return it->second;
    };

    std::map<std::pair<int, int>, PSeries<K>> out;
    for (int i = 0; i <= i_max; ++i)
        for (int j = 0; j <= j_max; ++j) {
            auto start = std::chrono::steady_clock::now();
            const PSeries<LaurentPoly2<K>> integrand = transformed_of(i).coeffs * plain_of(j).coeffs * vand;
            const PSeries<K> lhs = integrand.map([&](const LaurentPoly2<K>& f) { return gaussian_moment(f, tw); });

            const K z = special_point(i, tw), zi = z.inverse();
            const K trig = cmm_prefactor(i, j, tw) * special_pair(i, j, tw);
            PSeries<K> rhs(n);
            rhs[0] = K(1);
            if (opt.with_shiraishi_ratio) {
                const ShiraishiSeries<K>& pj = plain_of(j);
                const PSeries<K> num = evaluate_series_at(scale_elliptic_param(pj, s_inv), z, zi);
                const PSeries<K> den =
                    evaluate_series_at(scale_elliptic_param(substitute_s(pj, B(0), tw), s_inv), z, zi);
                rhs = num / den;
            }
            rhs = rhs * trig;
            if (rhs[0].is_zero()) throw DivisionByZero("right-hand side vanishes at p^0");
            out.emplace(std::make_pair(i, j), lhs / rhs);
            if (millis)
                (*millis)[{i, j}] =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    return out;
}

// All cell ratios must equal the (0,0) one; that common series is Z(s, p).
template <class B>
VerificationReport elliptic_cmm_verify(int i_max, int j_max, int n, const Tower<RatFunc<B>>& tw,
                                       EllipticOptions opt = {}) {
    VerificationReport rep;
    rep.identity = "elliptic-cmm";
    rep.tower = tw.spec.fingerprint();
    rep.backend = tw.spec.bound.empty() ? "symbolic" : "evaluated";
    if (!tw.spec.bound.empty()) rep.points.push_back(tw.spec.bound);
    std::map<std::pair<int, int>, double> millis;
    const auto ratios = elliptic_cmm_ratios(i_max, j_max, n, tw, opt, &millis);
    const auto& base = ratios.at({0, 0});
    for (const auto& [key, r] : ratios) {
        CellResult cell = make_cell(key.first, key.second, tw.beta(), n);
        cell.witness = detail::series_mismatch(r, base, tw.spec, "cell ratio");
        cell.pass = !cell.witness;
        cell.millis = millis[key];
        rep.cells.push_back(std::move(cell));
    }
    return rep;
}

// Coefficients of the order-p identity, for q^i = qi and q^j = qj given as
// field elements; z^2 = t q^i. `alpha` are the closed forms, `alpha_def`
// the defining combinations (alpha_def[5], alpha_def[6] are unused).
template <class K>
struct FirstOrderCoeffs {
    ExpansionCoeffs<K> u, v, c, w;  // w = c - c|_{s=0}
    K eta;
    K alpha[7];
    K alpha_def[5];
};

template <class K>
ExpansionCoeffs<K> pieri_v_coeffs(const K& qi, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    const K qi1 = qi / q, qi2 = qi1 / q;
    ExpansionCoeffs<K> v;
    v.c0 = -(1 - t) * (t + q) / (t * (1 - q));
    v.c1 = -qi1 * (1 - t) * (1 - t) * (1 + q) * (t * t - q * q) / (t * (1 - q) * (1 - t * qi1) * (1 - t * qi * q));
    v.c2 = -(1 - t) * (t + q) * (1 - qi) * (1 - qi1) * (1 + t * qi2) * (1 - t * t * qi1) * (1 - t * t * qi2) /
           (t * (1 - q) * (1 - t * t * qi2 * qi2) * (1 - t * qi) * (1 - t * qi1) * (1 - t * qi1));
    return v;
}

// Closed forms in terms of z^2 = t q^i and q^j.
template <class K>
K alpha1_closed(const K& qi, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    return -q * qi * (1 - t * t * qi) * (1 - t) * (1 - t * t * qi * q) / ((1 - q) * (1 - t * qi) * (1 - t * qi * q));
}
template <class K>
K alpha2_closed(const K& qi, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    return -(1 - t) * q * (1 - qi) * (1 - qi / q) / (qi * (1 - t * qi / q) * (1 - q) * (1 - t * qi));
}
template <class K>
K alpha3_closed(const K& qi, const K& qj, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    return (1 - t) * (1 - t) * (qi - qj) * (1 - t * t * qi * qj) * (1 + q) * (q - t) /
           (q * (1 - qi * q * t) * (1 - q) * (1 - t * qi / q) * (1 - t * qj * q) * (1 - qj / q * t));
}
template <class K>
K alpha4_closed(const K& qj, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    const K qj1 = qj / q, qj2 = qj1 / q;
    return q / qj * (1 - qj) * (1 - qj1) * (1 - t) * (1 - t * t * qj1) * (1 - t * t * qj2) /
           (t * (1 - q) * (1 - t * qj) * (1 - t * qj1) * (1 - t * qj1) * (1 - t * qj2));
}
template <class K>
K alpha5_uncorrected(const K& qj, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    const K q2 = q * q, t2 = t * t;
    const K num = 2 * qj * qj * q * t2 - q2 * qj * t - q * qj * t2 - q2 * qj + 2 * q * qj * t - qj * t2 - q * qj -
                  qj * t + 2 * q;
    return (1 - t) * num / (q * (1 - t * qj / q) * (1 - t * qj * q) * (1 - q));
}
// z2 = z^2.
template <class K>
K alpha6_uncorrected(const K& z2, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    const K num = -2 * q * t * z2 * z2 + q * q * t * z2 + q * t * t * z2 + q * q * z2 - 2 * q * t * z2 + t * t * z2 +
                  q * z2 + t * z2 - 2 * q * t;
    return -(1 - t) * num / (t * (1 - q) * (q - z2) * (1 - q * z2));
}

// The uncorrected alpha_5, alpha_6 carry the wrong overall sign: O_C^2 P_j
// reads off the negatives, and only then alpha_3 = alpha_6 - alpha_5.
template <class K>
K alpha5_closed(const K& qj, const Tower<K>& tw) {
    return -alpha5_uncorrected(qj, tw);
}
template <class K>
K alpha6_closed(const K& z2, const Tower<K>& tw) {
    return -alpha6_uncorrected(z2, tw);
}

template <class K>
K first_order_eta(const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    return 2 * (1 - t) * (q + t) / ((1 - q) * t);
}

// Needs S in the tower (s symbolic or bound).
template <class K>
FirstOrderCoeffs<K> theorem9_coeffs(const K& qi, const K& qj, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t, &s = *tw.s;
    FirstOrderCoeffs<K> r;
    r.u = lemma8_coeffs_at(qi, tw);
    r.v = pieri_v_coeffs(qi, tw);
    r.c = prop5_coeffs_at(qj, s, tw);
    const ExpansionCoeffs<K> c0 = prop5_coeffs_at(qj, K(0), tw);
    r.w = {r.c.c0 - c0.c0, r.c.c1 - c0.c1, r.c.c2 - c0.c2};
    r.eta = first_order_eta(tw);

    r.alpha[0] = qj * q * t * (1 - t) / (1 - q);
    r.alpha[1] = alpha1_closed(qi, tw);
    r.alpha[2] = alpha2_closed(qi, tw);
    r.alpha[3] = alpha3_closed(qi, qj, tw);
    r.alpha[4] = alpha4_closed(qj, tw);
    r.alpha[5] = alpha5_closed(qj, tw);
    r.alpha[6] = alpha6_closed(t * qi, tw);

    const K up = (1 - t * t * qi) * (1 - t * t * qi * q) / (t * (1 - t * qi) * (1 - t * qi * q));
    const K qi1 = qi / q, qi2 = qi1 / q;
    const K down = t * (1 - t * qi1) * (1 - t * qi2) / ((1 - t * t * qi1) * (1 - t * t * qi2));
    const K s_inv = s.inverse();
    r.alpha_def[0] = r.c.c0 * t * qj * q - r.w.c0 * s_inv;
    r.alpha_def[1] = (r.u.c0 + r.v.c0) * t * qi * q * up;
    r.alpha_def[2] = (r.u.c2 + r.v.c2) * q / (qi * t) * down;
    r.alpha_def[3] = r.u.c1 + r.v.c1 + r.c.c1 - r.w.c1 * s_inv - r.eta;
    r.alpha_def[4] = r.c.c2 * q / (qj * t) - r.w.c2 * s_inv;
    return r;
}

struct ChainOptions {
    int i_max = 4, j_max = 4;
    std::vector<int> betas{1, 2};
    int eta_offset = 0;  // nonzero is a negative control for the per-cell identity
};

// The order-p proof chain, step by step. Each step builds its own towers.
VerificationReport verify_theorem9(const ChainOptions& opt);

// Individual steps, exposed for tests.
VerificationReport chain_integrand_step(int i_max, int j_max, const std::vector<int>& betas);
VerificationReport chain_pieri_step(int i_max);
VerificationReport chain_final_identity_step(int i_max, int j_max, int eta_offset);
VerificationReport chain_alpha_step(int i_max, int j_max);
VerificationReport chain_z_identity_step(int j_max);
VerificationReport chain_operator_step(int j_max);
VerificationReport chain_alpha3_step();
VerificationReport chain_eta_step(int ij_max, const std::vector<int>& betas);

}  // namespace ellcmm

#endif  // ELLCMM_CMM_HPP
