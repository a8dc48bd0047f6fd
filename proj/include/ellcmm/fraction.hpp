#ifndef ELLCMM_FRACTION_HPP
#define ELLCMM_FRACTION_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ellcmm/errors.hpp"
#include "ellcmm/mpoly.hpp"
#include "ellcmm/poly.hpp"
#include "ellcmm/ratfunc.hpp"
#include "ellcmm/rational.hpp"

namespace ellcmm {

// The generator of tower level `level` (0 = innermost) embedded into K.
template <class K>
K generator(int level) {
    if constexpr (tower_depth_v<K> == 0) {
        throw Error("tower has no generator at level " + std::to_string(level));
    } else {
        using B = typename K::base_type;
        if (level == tower_depth_v<K> - 1) return K::variable();
        if (level < 0 || level >= tower_depth_v<K>) throw Error("generator level out of range");
        return K(generator<B>(level));
    }
}

// Exact value of `a` with the tower generators replaced by `values`
// (innermost first). Throws EvaluationPole when a denominator vanishes.
template <class K>
Rational eval_tower(const K& a, std::span<const Rational> values) {
    if constexpr (tower_depth_v<K> == 0) {
        return a;
    } else {
        if (values.size() != static_cast<std::size_t>(tower_depth_v<K>))
            throw Error("eval_tower: wrong number of values");
        auto inner = values.first(values.size() - 1);
        const Rational& x = values.back();
        auto ev = [&](const auto& p) {
            Rational acc;
            const auto& c = p.coeffs();
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + eval_tower(*it, inner);
            return acc;
        };
        Rational d = ev(a.den());
        if (d.is_zero()) throw EvaluationPole("denominator vanishes at the evaluation point");
        return ev(a.num()) / d;
    }
}

template <class K>
MFraction to_fraction(const K& a);

// Clears the coefficient denominators of p in K[x]: returns (P, L) with
// p = P / L, P over Z in (x, K's generators), L free of x. Outer variable first.
template <class K>
std::pair<MPoly, MPoly> clear_denominators(const Poly<K>& p) {
    constexpr int n = tower_depth_v<K> + 1;
    std::vector<MFraction> parts;
    MPoly l = MPoly::constant(n - 1, 1);
    for (const auto& c : p.coeffs()) {
        parts.push_back(to_fraction(c));
        const MPoly& d = parts.back().den;
        if (!d.is_one()) l = (l * d).div_exact(gcd(l, d));
    }
    MPoly out(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].num.is_zero()) continue;
        MPoly scaled = parts[i].num * l.div_exact(parts[i].den);
        out += scaled.prepend_var(static_cast<int>(i));
    }
    return {out, l.prepend_var(0)};
}

// Reduced integral numerator and denominator of a tower element.
template <class K>
MFraction to_fraction(const K& a) {
    if constexpr (tower_depth_v<K> == 0) {
        return {MPoly::constant(0, a.numerator()), MPoly::constant(0, a.denominator())};
    } else {
        auto [nn, nl] = clear_denominators(a.num());
        auto [dd, dl] = clear_denominators(a.den());
        return reduce_fraction(nn * dl, dd * nl);
    }
}

// Evaluates p with variable v (outer first) replaced by gens[v].
template <class K>
K eval_mpoly(const MPoly& p, const std::vector<K>& gens_outer_first) {
    using ellcmm::pow;
    K out;
    for (const auto& [e, c] : p.terms()) {
        K term = K(Rational(c));
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) term *= pow(gens_outer_first[v], e[v]);
        out += term;
    }
    return out;
}

template <class K>
std::vector<K> generators_outer_first() {
    std::vector<K> gens;
    for (int v = tower_depth_v<K> - 1; v >= 0; --v) gens.push_back(generator<K>(v));
    return gens;
}

namespace detail {

template <class K>
std::vector<Rational> probe_point(int attempt) {
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    constexpr int np = sizeof(primes) / sizeof(primes[0]);
    std::vector<Rational> v;
    for (int i = 0; i < tower_depth_v<K>; ++i) {
        int k = 3 * attempt + 2 * i;
        v.emplace_back(mpz_class(primes[k % np]), mpz_class(primes[(k + 7) % np]));
    }
    return v;
}

template <class K>
Poly<Rational> specialize(const Poly<K>& p, std::span<const Rational> at) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(eval_tower(x, at));
    return Poly<Rational>(std::move(c));
}

}  // namespace detail

// gcd in K[x] for K a rational-function field. A degree-preserving
// specialization of K's generators certifies coprimality (the common case);
// otherwise fall back to a primitive PRS over Z[x, generators].
template <class B>
Poly<RatFunc<B>> nested_gcd(const Poly<RatFunc<B>>& a, const Poly<RatFunc<B>>& b) {
    using K = RatFunc<B>;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly<K>(K(1));
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Rational> pt = detail::probe_point<K>(attempt);
        try {
            Poly<Rational> sa = detail::specialize(a, pt), sb = detail::specialize(b, pt);
            if (sa.degree() != a.degree() || sb.degree() != b.degree()) continue;
            int dg = gcd(sa, sb).degree();
            if (dg == 0) return Poly<K>(K(1));
            // The true gcd has degree <= dg; try the cheap candidates first.
            if (dg == b.degree() && divrem(a, b).second.is_zero()) return b.monic();
            if (dg == a.degree() && divrem(b, a).second.is_zero()) return a.monic();
            break;
        } catch (const EvaluationPole&) {
        }
    }
    MPoly g = gcd(clear_denominators(a).first, clear_denominators(b).first);
    std::vector<K> gens = generators_outer_first<K>();
    gens.insert(gens.begin(), K(1));  // slot of x itself, never used
    std::vector<K> c;
    for (int k = 0; k <= g.degree_in(0); ++k) c.push_back(eval_mpoly<K>(g.coeff_in(0, k), gens));
    return Poly<K>(std::move(c)).monic();
}

}  // namespace ellcmm

#endif  // ELLCMM_FRACTION_HPP
