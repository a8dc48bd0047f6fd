#ifndef ELLCMM_RATFUNC_HPP
#define ELLCMM_RATFUNC_HPP

#include <concepts>
#include <string>
#include <utility>

#include "ellcmm/errors.hpp"
#include "ellcmm/poly.hpp"
#include "ellcmm/rational.hpp"

namespace ellcmm {

// Element of K(x) in canonical form: gcd(num, den) = 1 and den monic.
// Nesting RatFunc<RatFunc<...>> builds the scalar towers Q(Q)(S), Q(Q)(T)(S), ...
template <class K>
class RatFunc {
public:
    using base_type = K;

    RatFunc() : den_(K(1)) {}
    RatFunc(long v) : num_(K(v)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const K& c) : num_(c), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
    template <class U>
        requires(!std::same_as<U, K> && !std::integral<U> && std::constructible_from<K, const U&>)
    RatFunc(const U& c) : RatFunc(K(c)) {}  // NOLINT(google-explicit-constructor)
    explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(K(1)) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    // The generator x of K(x).
    static RatFunc variable() { return RatFunc(Poly<K>::x()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Independent of the generator of this level.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFunc& operator+=(const RatFunc& o) { return *this = add(*this, o, false); }
    RatFunc& operator-=(const RatFunc& o) { return *this = add(*this, o, true); }
    RatFunc& operator*=(const RatFunc& o) { return *this = mul(*this, o); }
    RatFunc& operator/=(const RatFunc& o) { return *this = mul(*this, o.inverse()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return mul(a, b); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return mul(a, b.inverse()); }
    friend RatFunc operator-(RatFunc a) {
        a.num_ = -a.num_;
        return a;
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        RatFunc r;
        K l = num_.lead();
        r.num_ = den_ * l.inverse();
        r.den_ = num_.monic();
        return r;
    }

    std::string to_string(const std::string& var = "x") const {
        if (den_.is_one()) return num_.to_string(var);
        return "[" + num_.to_string(var) + "]/[" + den_.to_string(var) + "]";
    }

private:
    static RatFunc scaled(const RatFunc& a, const K& c) {
        if (c.is_zero()) return RatFunc();
        RatFunc r = a;
        r.num_ *= c;
        return r;
    }

    static RatFunc add(const RatFunc& a, const RatFunc& b, bool negate_b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return negate_b ? -b : b;
        RatFunc r;
        if (a.den_.degree() == 0 && b.den_.degree() == 0) {
            r.num_ = negate_b ? a.num_ - b.num_ : a.num_ + b.num_;
            return r;
        }
        if (a.den_ == b.den_) {
            return RatFunc(negate_b ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
        }
        if (b.den_.degree() == 0) {
            Poly<K> n = negate_b ? a.num_ - b.num_ * a.den_ : a.num_ + b.num_ * a.den_;
            r.num_ = std::move(n);
            r.den_ = a.den_;
            return r;  // gcd(a.num + b*a.den, a.den) = gcd(a.num, a.den) = 1
        }
        if (a.den_.degree() == 0) {
            Poly<K> n = negate_b ? a.num_ * b.den_ - b.num_ : a.num_ * b.den_ + b.num_;
            r.num_ = std::move(n);
            r.den_ = b.den_;
            return r;
        }
        Poly<K> g = gcd(a.den_, b.den_);
        Poly<K> da = div_exact(a.den_, g), db = div_exact(b.den_, g);
        Poly<K> n = negate_b ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
        if (n.is_zero()) return RatFunc();
        // Only factors of g can cancel against the new numerator.
        Poly<K> h = gcd(n, g);
        if (h.degree() > 0) {
            n = div_exact(n, h);
            g = div_exact(g, h);
        }
        r.num_ = std::move(n);
        r.den_ = da * db * g;
        return r;
    }

    static RatFunc mul(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_constant()) return scaled(b, a.num_.lead());
        if (b.is_constant()) return scaled(a, b.num_.lead());
        RatFunc r;
        if (a.den_.degree() == 0 && b.den_.degree() == 0) {
            r.num_ = a.num_ * b.num_;
            return r;
        }
        Poly<K> n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
        if (d2.degree() > 0 && n1.degree() > 0) {
            Poly<K> g = gcd(n1, d2);
            if (g.degree() > 0) {
                n1 = div_exact(n1, g);
                d2 = div_exact(d2, g);
            }
        }
        if (d1.degree() > 0 && n2.degree() > 0) {
            Poly<K> g = gcd(n2, d1);
            if (g.degree() > 0) {
                n2 = div_exact(n2, g);
                d1 = div_exact(d1, g);
            }
        }
        Poly<K> d = d1 * d2;
        Poly<K> n = n1 * n2;
        if (!d.lead().is_one()) {
            K inv = d.lead().inverse();
            d *= inv;
            n *= inv;
        }
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        if (den_.degree() > 0 && num_.degree() > 0) {
            Poly<K> g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = div_exact(num_, g);
                den_ = div_exact(den_, g);
            }
        }
        if (!den_.lead().is_one()) {
            K inv = den_.lead().inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

// Nesting depth of a scalar type: 0 for Q, 1 for Q(x), ...
template <class K>
struct tower_depth {
    static constexpr int value = 0;
};
template <class K>
struct tower_depth<RatFunc<K>> {
    static constexpr int value = tower_depth<K>::value + 1;
};
template <class K>
inline constexpr int tower_depth_v = tower_depth<K>::value;

template <class K>
K pow(const K& base, long exponent)
    requires(tower_depth_v<K> > 0)
{
    if (exponent < 0) return pow(base.inverse(), -exponent);
    K result(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

}  // namespace ellcmm

#include "ellcmm/fraction.hpp"

#endif  // ELLCMM_RATFUNC_HPP
