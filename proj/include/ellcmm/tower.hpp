#ifndef ELLCMM_TOWER_HPP
#define ELLCMM_TOWER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ellcmm/errors.hpp"
#include "ellcmm/poly.hpp"
#include "ellcmm/ratfunc.hpp"
#include "ellcmm/rational.hpp"

namespace ellcmm {

// Scalar towers used throughout. Level generators are listed innermost first.
using F1 = RatFunc<Rational>;  // Q(x)
using F2 = RatFunc<F1>;        // Q(x)(y)
using F3 = RatFunc<F2>;
using F4 = RatFunc<F3>;

// Describes which symbols a tower carries and what they mean.
//   Q  -> q^{1/2}      T  -> t (generic)      Th -> t^{1/2} (bound only)
//   S  -> s^{1/2}      z  -> spectral point   A, B -> q^i, q^j
// `symbols` are the transcendental generators, innermost first; `bound`
// pins symbols to exact rationals (evaluated backend); beta > 0 fixes
// t = q^beta and forbids T.
struct TowerSpec {
    std::vector<std::string> symbols;
    std::map<std::string, Rational> bound;
    int beta = 0;

    bool is_symbol(const std::string& name) const;
    bool is_bound(const std::string& name) const { return bound.count(name) > 0; }
    bool has(const std::string& name) const { return is_symbol(name) || is_bound(name); }
    int level_of(const std::string& name) const;  // -1 if not a symbol
    std::string fingerprint() const;
};

// The symbols of a spec realized as elements of the scalar type K.
template <class K>
struct Tower {
    TowerSpec spec;
    K Q, q, t;
    std::optional<K> t_half, S, s, z;

    int beta() const { return spec.beta; }

    K q_pow(long a) const { return pow_k(Q, 2 * a); }
    K Q_pow(long a) const { return pow_k(Q, a); }
    K t_pow(long b) const {
        if (spec.beta > 0) return pow_k(Q, 2 * spec.beta * b);
        return pow_k(t, b);
    }
    // q^a t^b S^e.
    K monomial(long a, long b, long e) const {
        K out = spec.beta > 0 ? pow_k(Q, 2 * a + 2 * spec.beta * b) : pow_k(Q, 2 * a) * pow_k(t, b);
        if (e != 0) out *= pow_k(need_S(), e);
        return out;
    }
    const K& need_S() const {
        if (!S) throw Error("tower " + spec.fingerprint() + " has no S");
        return *S;
    }
    const K& need_t_half() const {
        if (!t_half) throw Error("tower " + spec.fingerprint() + " has no t^{1/2}");
        return *t_half;
    }
    const K& need_z() const {
        if (!z) throw Error("tower " + spec.fingerprint() + " has no z");
        return *z;
    }

    static K pow_k(const K& b, long e) {
        using ellcmm::pow;
        return pow(b, e);
    }
};

template <class K>
K symbol_value(const TowerSpec& spec, const std::string& name) {
    int level = spec.level_of(name);
    if (level >= 0) return generator<K>(level);
    auto it = spec.bound.find(name);
    if (it == spec.bound.end()) throw Error("tower " + spec.fingerprint() + " lacks symbol " + name);
    return K(it->second);
}

template <class K>
Tower<K> make_tower(const TowerSpec& spec) {
    if (static_cast<int>(spec.symbols.size()) != tower_depth_v<K>)
        throw Error("tower " + spec.fingerprint() + " does not match scalar depth " +
                    std::to_string(tower_depth_v<K>));
    Tower<K> tw;
    tw.spec = spec;
    tw.Q = symbol_value<K>(spec, "Q");
    tw.q = tw.Q * tw.Q;
    if (spec.beta > 0) {
        if (spec.has("T") || spec.has("Th")) throw Error("tower fixes beta and also carries t");
        tw.t_half = Tower<K>::pow_k(tw.Q, spec.beta);
        tw.t = *tw.t_half * *tw.t_half;
    } else if (spec.has("Th")) {
        tw.t_half = symbol_value<K>(spec, "Th");
        tw.t = *tw.t_half * *tw.t_half;
    } else {
        tw.t = symbol_value<K>(spec, "T");
    }
    if (spec.has("S")) {
        tw.S = symbol_value<K>(spec, "S");
        tw.s = *tw.S * *tw.S;
    }
    if (spec.has("z")) tw.z = symbol_value<K>(spec, "z");
    return tw;
}

template <class K>
Rational eval_tower(const K& a, const TowerSpec& spec, const std::map<std::string, Rational>& assignment) {
    std::vector<Rational> values;
    for (const auto& name : spec.symbols) {
        auto it = assignment.find(name);
        if (it == assignment.end()) throw Error("eval_tower: no value for " + name);
        values.push_back(it->second);
    }
    return eval_tower(a, std::span<const Rational>(values));
}

// Replaces the outermost generator by v. Throws EvaluationPole at a pole.
template <class B>
B substitute_outer(const RatFunc<B>& a, const B& v) {
    B d = a.den()(v);
    if (d.is_zero()) throw EvaluationPole("outer substitution hits a pole");
    return a.num()(v) / d;
}

// Applies f to every base coefficient of the outermost level, e.g. to bind an
// inner symbol.
template <class B, class C, class F>
RatFunc<C> map_outer_coeffs(const RatFunc<B>& a, F&& f) {
    auto conv = [&](const Poly<B>& p) {
        std::vector<C> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) out.push_back(f(c));
        return Poly<C>(std::move(out));
    };
    Poly<C> d = conv(a.den());
    if (d.is_zero()) throw EvaluationPole("denominator vanishes under coefficient map");
    return RatFunc<C>(conv(a.num()), d);
}

// Reinterprets an even function of the outer generator X as a function of X^2.
template <class B>
RatFunc<B> even_power_project(const RatFunc<B>& a) {
    bool ok_n = false, ok_d = false;
    Poly<B> n = a.num().collapse_squares(ok_n);
    Poly<B> d = a.den().collapse_squares(ok_d);
    if (!ok_n || !ok_d) throw OddPowerResidue("odd power of the outer generator survives reduction");
    return RatFunc<B>(std::move(n), std::move(d));
}

// Inverse of even_power_project: f(x) -> f(X^2).
template <class B>
RatFunc<B> even_power_lift(const RatFunc<B>& a) {
    return RatFunc<B>(a.num().spread_squares(), a.den().spread_squares());
}

// Small-height random rational: numerator and denominator in [1, 10^4],
// never 0 or +-1 (those collapse q-structure).
Rational random_point(std::mt19937_64& rng);

}  // namespace ellcmm

#endif  // ELLCMM_TOWER_HPP
