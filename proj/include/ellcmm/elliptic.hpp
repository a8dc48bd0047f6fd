#ifndef ELLCMM_ELLIPTIC_HPP
#define ELLCMM_ELLIPTIC_HPP

#include <optional>
#include <string>

#include "ellcmm/canonical.hpp"
#include "ellcmm/errors.hpp"
#include "ellcmm/laurent.hpp"
#include "ellcmm/macdonald.hpp"
#include "ellcmm/pseries.hpp"
#include "ellcmm/report.hpp"
#include "ellcmm/shiraishi.hpp"
#include "ellcmm/tower.hpp"

namespace ellcmm {

// p-series of Laurent polynomials in r = x1/x2.
template <class K>
using ThetaSeries = PSeries<SymLaurent1<K>>;

namespace detail {

// 1 / a for a series whose constant term is exactly 1.
template <class K>
ThetaSeries<K> inverse_unit(const ThetaSeries<K>& a) {
    const int n = a.order();
    ThetaSeries<K> out(n);
    out[0] = SymLaurent1<K>::monomial(0, K(1));
    for (int k = 1; k <= n; ++k) {
        SymLaurent1<K> acc;
        for (int i = 1; i <= k; ++i) acc += a[i] * out[k - i];
        out[k] = SymLaurent1<K>() - acc;
    }
    return out;
}

// 1 - coeff p^m r^e as a series of order n.
template <class K>
ThetaSeries<K> linear_factor(const K& coeff, int m, int e, int n) {
    ThetaSeries<K> f(n);
    f[0] = SymLaurent1<K>::monomial(0, K(1));
    if (m <= n) f[m].add(e, -coeff);
    return f;
}

// prod_{m=1}^{n} (1 - p^m c r^e)(1 - p^m r^{-e} / c): theta without its p^0 factor.
template <class K>
ThetaSeries<K> theta_tail(const K& c, int e, int n) {
    ThetaSeries<K> out = linear_factor(K(0), 0, 0, n);
    const K ci = c.inverse();
    for (int m = 1; m <= n; ++m) out = out * linear_factor(c, m, e, n) * linear_factor(ci, m, -e, n);
    return out;
}

}  // namespace detail

// theta_p(c r^e) = prod_m (1 - p^m c r^e)(1 - p^{m+1} r^{-e} / c), mod p^{n+1}.
template <class K>
ThetaSeries<K> theta_series(const K& c, int e, int n) {
    if (n < 0) throw Error("theta_series needs order >= 0");
    return detail::linear_factor(c, 0, e, n) * detail::theta_tail(c, e, n);
}

// prod_{m<beta} (1 - q^m r)(1 - q^m / r).
template <class K>
SymLaurent1<K> trig_vandermonde(const Tower<K>& tw) {
    if (tw.beta() <= 0) throw Error("the Vandermonde product needs t = q^beta");
    SymLaurent1<K> out = SymLaurent1<K>::monomial(0, K(1));
    for (int m = 0; m < tw.beta(); ++m) {
        const K qm = tw.q_pow(m);
        out = out * (SymLaurent1<K>::monomial(0, K(1)) - SymLaurent1<K>::monomial(1, qm)) *
              (SymLaurent1<K>::monomial(0, K(1)) - SymLaurent1<K>::monomial(-1, qm));
    }
    return out;
}

// prod_{m<beta} theta_p(q^m r) theta_p(q^m / r).
template <class K>
ThetaSeries<K> elliptic_vandermonde(int n, const Tower<K>& tw) {
    if (tw.beta() <= 0) throw Error("the elliptic Vandermonde product needs t = q^beta");
    ThetaSeries<K> out = detail::linear_factor(K(0), 0, 0, n);
    for (int m = 0; m < tw.beta(); ++m) {
        const K qm = tw.q_pow(m);
        out = out * theta_series(qm, 1, n) * theta_series(qm, -1, n);
    }
    return out;
}

// -(1-t)(t+q)/(t(1-q)) (r + 1/r): the p^1 coefficient of the Vandermonde ratio.
template <class K>
SymLaurent1<K> vandermonde_ratio_first_order(const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    const K c = -(1 - t) * (t + q) / (t * (1 - q));
    return SymLaurent1<K>::monomial(1, c) + SymLaurent1<K>::monomial(-1, c);
}

// r^k -> X1^k X2^{-k}.
template <class K>
LaurentPoly2<K> fold_ratio(const SymLaurent1<K>& f) {
    LaurentPoly2<K> out;
    for (const auto& [e, c] : f.terms()) out.add(e, -e, c);
    return out;
}

template <class K>
SymLaurent1<K> mirror(const SymLaurent1<K>& f) {
    SymLaurent1<K> out;
    for (const auto& [e, c] : f.terms()) out.add(-e, c);
    return out;
}

// theta_p(c r) / theta_p(r) as num(r, p) / den(r), den = 1 - r.
template <class K>
struct RatioSeries {
    ThetaSeries<K> num;
    SymLaurent1<K> den;
};

template <class K>
RatioSeries<K> theta_ratio(const K& c, int n) {
    RatioSeries<K> out;
    out.num = detail::linear_factor(c, 0, 1, n) * detail::theta_tail(c, 1, n) *
              detail::inverse_unit(detail::theta_tail(K(1), 1, n));
    out.den = SymLaurent1<K>::monomial(0, K(1)) - SymLaurent1<K>::monomial(1, K(1));
    return out;
}

// The elliptic Hamiltonian applied to f, kept over the common denominator:
// numerator = (X2 - X1) H f.
template <class K>
struct HamiltonianImage {
    PSeries<LaurentPoly2<K>> numerator;

    // H f itself; throws NonExactDivision if it is not a Laurent polynomial.
    PSeries<LaurentPoly2<K>> quotient() const {
        return numerator.map([](const LaurentPoly2<K>& g) { return detail::divide_by_x2_minus_x1(g); });
    }
};

template <class K>
HamiltonianImage<K> ell_hamiltonian_apply(const PSeries<LaurentPoly2<K>>& f, int n, const Tower<K>& tw) {
    if (f.order() < n) throw Error("ell_hamiltonian_apply needs the input to order " + std::to_string(n));
    const RatioSeries<K> a = theta_ratio(tw.t, n);
    // (X2 - X1) A(r) = X2 num(r); (X2 - X1) A(1/r) = -X1 num(1/r)
    auto qp = [&](int e) { return tw.q_pow(e); };
    auto one = [](int) { return K(1); };
    const LaurentPoly2<K> x1 = LaurentPoly2<K>::monomial(1, 0, K(1)), x2 = LaurentPoly2<K>::monomial(0, 1, K(1));
    HamiltonianImage<K> out{PSeries<LaurentPoly2<K>>(n)};
    for (int d = 0; d <= n; ++d)
        for (int k = 0; k <= d; ++k) {
            const LaurentPoly2<K>& fk = f[d - k];
            if (fk.is_zero()) continue;
            out.numerator[d] += x2 * fold_ratio(a.num[k]) * fk.rescaled(qp, one);
            out.numerator[d] -= x1 * fold_ratio(mirror(a.num[k])) * fk.rescaled(one, qp);
        }
    return out;
}

// Eigenvalue series E(p) read off at the reference monomial (e1, e2) of
// (X2 - X1) candidate; nullopt if the monomial is absent at p^0.
template <class K>
std::optional<PSeries<K>> eigenvalue_at(const HamiltonianImage<K>& g, const PSeries<LaurentPoly2<K>>& h, int n,
                                        std::pair<int, int> ref) {
    const K h0 = h[0].coeff(ref.first, ref.second);
    if (h0.is_zero()) return std::nullopt;
    PSeries<K> e(n);
    for (int d = 0; d <= n; ++d) {
        K acc = g.numerator[d].coeff(ref.first, ref.second);
        for (int k = 0; k < d; ++k) acc -= e[k] * h[d - k].coeff(ref.first, ref.second);
        e[d] = acc / h0;
    }
    return e;
}

// Candidate P_j(x | p) of the stationary problem to order p, j in {0, 1}.
template <class K>
PSeries<LaurentPoly2<K>> stationary_candidate(int j, const Tower<K>& tw) {
    const K &q = tw.q, &t = tw.t;
    PSeries<LaurentPoly2<K>> out(1);
    if (j == 0) {
        const K c = q * (1 - t) * (1 - t * t) / (t * (1 - q * t) * (1 - q));
        out[0] = LaurentPoly2<K>::monomial(0, 0, K(1));
        out[1] = LaurentPoly2<K>::monomial(1, -1, c) + LaurentPoly2<K>::monomial(-1, 1, c);
    } else if (j == 1) {
        const K c = q * (1 - t) * (1 - q * t * t) / (t * (1 - q * q * t) * (1 - q));
        out[0] = LaurentPoly2<K>::monomial(1, 0, K(1)) + LaurentPoly2<K>::monomial(0, 1, K(1));
        out[1] = LaurentPoly2<K>::monomial(2, -1, c) + LaurentPoly2<K>::monomial(-1, 2, c);
    } else {
        throw Error("stationary candidates are known only for j = 0, 1");
    }
    return out;
}

// H candidate = E(p) candidate mod p^{n+1}, checked over the cleared
// denominator. E is read off at two reference monomials which must agree.
template <class K>
VerificationReport stationary_eigencheck(const PSeries<LaurentPoly2<K>>& candidate, int n, const Tower<K>& tw,
                                         int j = -1) {
    VerificationReport rep;
    rep.identity = "eigen";
    rep.tower = tw.spec.fingerprint();
    CellResult cell;
    cell.j = j;
    cell.beta = tw.beta();
    cell.order = n;
    rep.cells.push_back(timed_cell(cell, [&]() -> std::optional<std::string> {
        const HamiltonianImage<K> g = ell_hamiltonian_apply(candidate, n, tw);
        const LaurentPoly2<K> x21 = LaurentPoly2<K>::monomial(0, 1, K(1)) - LaurentPoly2<K>::monomial(1, 0, K(1));
        PSeries<LaurentPoly2<K>> h = candidate.truncated(n).map([&](const LaurentPoly2<K>& c) { return x21 * c; });
        if (h[0].is_zero()) return "candidate vanishes at p^0";
        const auto hi = h[0].terms().rbegin()->first, lo = h[0].terms().begin()->first;
        auto e1 = eigenvalue_at(g, h, n, hi);
        auto e2 = eigenvalue_at(g, h, n, lo);
        if (!(*e1 == *e2)) return std::string("eigenvalue depends on the reference monomial");
        for (int d = 0; d <= n; ++d) {
            LaurentPoly2<K> r = g.numerator[d];
            for (int k = 0; k <= d; ++k) r -= h[d - k] * (*e1)[k];
            if (!r.is_zero()) {
                const auto& [e, c] = *r.terms().begin();
                return "residual at p^" + std::to_string(d) + ", X1^" + std::to_string(e.first) + " X2^" +
                       std::to_string(e.second) + ": " + to_canonical(c, tw.spec);
            }
        }
        return std::nullopt;
    }));
    return rep;
}

// [P_j(x|p,s) P(pt|p)] - [P(x|p) P_j(pt|p,s)] mod p^2 must vanish at s = 1,
// where P(.|p) is the stationary function and pt = (t^{1/2}, t^{-1/2}).
template <class B>
VerificationReport s_to_one_limit_check(int j, const Tower<RatFunc<B>>& tw, int stationary_j = -1) {
    using K = RatFunc<B>;
    detail::require_outer_S(tw);
    if (stationary_j < 0) stationary_j = j;
    VerificationReport rep;
    rep.identity = "s-limit";
    rep.tower = tw.spec.fingerprint();
    CellResult cell;
    cell.j = j;
    cell.beta = tw.beta();
    cell.order = 1;
    rep.cells.push_back(timed_cell(cell, [&]() -> std::optional<std::string> {
        const K th = tw.need_t_half(), thi = th.inverse();
        const ShiraishiSeries<K> ps = shiraishi_series(j, 1, tw);
        const PSeries<LaurentPoly2<K>> st = stationary_candidate(stationary_j, tw);
        const PSeries<K> ps_pt = evaluate_series_at(ps, th, thi);
        const PSeries<K> st_pt = st.map([&](const LaurentPoly2<K>& c) { return evaluate(c, th, thi); });
        for (int d = 0; d <= 1; ++d) {
            LaurentPoly2<K> diff;
            for (int k = 0; k <= d; ++k) diff += ps.coeffs[k] * st_pt[d - k] - st[k] * ps_pt[d - k];
            for (const auto& [e, v] : diff.terms()) {
                const RatFunc<B> r = even_power_project(v);
                if (r.den()(B(1)).is_zero())
                    throw EvaluationPole("coefficient of p^" + std::to_string(d) + " X1^" + std::to_string(e.first) +
                                         " X2^" + std::to_string(e.second) + " keeps a pole at s = 1");
                if (!r.num()(B(1)).is_zero())
                    return "nonzero at s = 1: p^" + std::to_string(d) + " X1^" + std::to_string(e.first) + " X2^" +
                           std::to_string(e.second) + " -> " + to_canonical(v, tw.spec);
            }
        }
        return std::nullopt;
    }));
    return rep;
}

// The elliptic Vandermonde at order p equals the trigonometric
// one times 1 + p * vandermonde_ratio_first_order.
template <class K>
std::optional<std::string> vandermonde_ratio_mismatch(const Tower<K>& tw) {
    const ThetaSeries<K> v = elliptic_vandermonde(1, tw);
    const SymLaurent1<K> v0 = trig_vandermonde(tw);
    if (!(v[0] == v0)) return std::string("p^0 term differs from the trigonometric product");
    if (!(v[1] == v0 * vandermonde_ratio_first_order(tw))) return std::string("p^1 term differs");
    return std::nullopt;
}

}  // namespace ellcmm

#endif  // ELLCMM_ELLIPTIC_HPP
