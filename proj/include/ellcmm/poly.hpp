#ifndef ELLCMM_POLY_HPP
#define ELLCMM_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ellcmm/errors.hpp"
#include "ellcmm/rational.hpp"

namespace ellcmm {

// Dense univariate polynomial over a field K. coeffs()[i] multiplies x^i and
// the top coefficient is nonzero unless the polynomial is zero.
template <class K>
class Poly {
public:
    using scalar_type = K;

    Poly() = default;
    Poly(const K& constant) {  // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(K(1), 1); }
    static Poly monomial(const K& c, std::size_t degree) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(degree + 1, K());
        p.c_[degree] = c;
        return p;
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    const K& lead() const { return c_.back(); }
    K constant_term() const { return coeff(0); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const K& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        if (s.is_one()) return *this;
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.c_.size() == 1) return b * a.c_[0];
        if (b.c_.size() == 1) return a * b.c_[0];
        std::vector<K> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Multiplies by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<K> out(k, K());
        out.insert(out.end(), c_.begin(), c_.end());
        Poly p;
        p.c_ = std::move(out);
        return p;
    }

    K operator()(const K& at) const {
        K acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    // Horner evaluation into a ring V that can absorb K through `embed`.
    template <class V, class Embed>
    V eval_into(const V& at, Embed&& embed) const {
        V acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + embed(*it);
        return acc;
    }

    Poly monic() const {
        if (is_zero() || lead().is_one()) return *this;
        return *this * lead().inverse();
    }

    // p(x) -> p(x^2).
    Poly spread_squares() const {
        if (c_.size() <= 1) return *this;
        std::vector<K> out(2 * c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) out[2 * i] = c_[i];
        return Poly(std::move(out));
    }

    // p(x^2) -> p(x); nullopt-like failure is signalled by `ok == false`.
    Poly collapse_squares(bool& ok) const {
        ok = true;
        std::vector<K> out((c_.size() + 1) / 2);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i % 2 == 0)
                out[i / 2] = c_[i];
            else if (!c_[i].is_zero())
                ok = false;
        }
        return Poly(std::move(out));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i].to_string() + ")";
            if (i > 0) out += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

// Long division over a field: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    std::vector<K> rem = a.coeffs();
    std::vector<K> quot(rem.size() - b.coeffs().size() + 1);
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const bool monic = b.lead().is_one();
    const K inv_lead = monic ? K(1) : b.lead().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
        K& top = rem[k + db];
        if (top.is_zero()) continue;
        K f = monic ? top : top * inv_lead;
        for (std::size_t i = 0; i < db; ++i)
            if (!bc[i].is_zero()) rem[k + i] -= f * bc[i];
        top = K();
        quot[k] = std::move(f);
    }
    rem.resize(db);
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

// a / b, which must leave no remainder.
template <class K>
Poly<K> div_exact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw NonExactDivision("polynomial remainder is nonzero");
    return q;
}

// Monic gcd over Q, via a primitive remainder sequence over Z.
Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b);

// Monic gcd over a generic field by the Euclidean algorithm; remainders are
// normalized to monic form to keep coefficient sizes in check.
template <class K>
Poly<K> euclid_gcd(Poly<K> a, Poly<K> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        if (b.degree() == 0) return Poly<K>(K(1));
        Poly<K> r = divrem(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

template <class K>
class RatFunc;

template <class K>
struct is_ratfunc : std::false_type {};
template <class K>
struct is_ratfunc<RatFunc<K>> : std::true_type {};

// Defined in fraction.hpp: gcd over a rational-function field.
template <class B>
Poly<RatFunc<B>> nested_gcd(const Poly<RatFunc<B>>& a, const Poly<RatFunc<B>>& b);

template <class K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b) {
    if constexpr (is_ratfunc<K>::value)
        return nested_gcd(a, b);
    else
        return euclid_gcd(a, b);
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    Poly<K> g = gcd(a, b);
    return (div_exact(a, g) * b).monic();
}

}  // namespace ellcmm

#endif  // ELLCMM_POLY_HPP
