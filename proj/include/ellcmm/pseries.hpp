#ifndef ELLCMM_PSERIES_HPP
#define ELLCMM_PSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ellcmm/errors.hpp"
#include "ellcmm/poly.hpp"
#include "ellcmm/ratfunc.hpp"

namespace ellcmm {

// Truncated power series c_0 + c_1 p + ... + c_n p^n, known modulo p^{n+1}.
// Binary operations truncate to the smaller order of the two operands.
template <class C>
class PSeries {
public:
    using coeff_type = C;

    PSeries() : c_(1) {}
    explicit PSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}
    explicit PSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("PSeries needs at least one coefficient");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int d) const { return c_.at(static_cast<std::size_t>(d)); }
    C& operator[](int d) { return c_.at(static_cast<std::size_t>(d)); }
    const std::vector<C>& coeffs() const { return c_; }

    PSeries truncated(int n) const {
        if (n > order()) throw Error("cannot extend a truncated series");
        return PSeries(std::vector<C>(c_.begin(), c_.begin() + n + 1));
    }

    PSeries& operator+=(const PSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    PSeries& operator-=(const PSeries& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
    friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
    friend PSeries operator*(const PSeries& a, const PSeries& b) {
        const int n = std::min(a.order(), b.order());
        PSeries out(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        return out;
    }
    template <class S>
    friend PSeries operator*(PSeries a, const S& s)
        requires requires(C c, S v) { c *= v; }
    {
        for (auto& c : a.c_) c *= s;
        return a;
    }

    friend bool operator==(const PSeries& a, const PSeries& b) { return a.c_ == b.c_; }

    // Coefficient-wise map into another coefficient type.
    template <class F>
    auto map(F&& f) const -> PSeries<std::invoke_result_t<F, const C&>> {
        std::vector<std::invoke_result_t<F, const C&>> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return PSeries<std::invoke_result_t<F, const C&>>(std::move(out));
    }

private:
    std::vector<C> c_;
};

// 1/a for a scalar-coefficient series with invertible constant term.
template <class K>
PSeries<K> inverse(const PSeries<K>& a) {
    if (a[0].is_zero()) throw DivisionByZero("series with zero constant term is not invertible");
    const int n = a.order();
    PSeries<K> out(n);
    const K inv0 = a[0].inverse();
    out[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        K acc;
        for (int i = 1; i <= k; ++i) acc += a[i] * out[k - i];
        out[k] = -(acc * inv0);
    }
    return out;
}

template <class K>
PSeries<K> operator/(const PSeries<K>& a, const PSeries<K>& b) {
    return a * inverse(b);
}

// Coefficients c_0..c_n of num/den modulo p^{n+1}, by exact long division in
// increasing powers of p.
template <class K>
std::vector<K> taylor_expand(const Poly<K>& num, const Poly<K>& den, int n) {
    const K d0 = den.constant_term();
    if (d0.is_zero()) throw PoleAtOrigin("denominator vanishes at p = 0");
    const K inv0 = d0.inverse();
    std::vector<K> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        K acc = num.coeff(static_cast<std::size_t>(k));
        for (int i = 1; i <= k && i <= den.degree(); ++i) acc -= den.coeffs()[i] * out[k - i];
        out[k] = acc * inv0;
    }
    return out;
}

template <class K>
std::vector<K> taylor_expand(const RatFunc<K>& r, int n) {
    return taylor_expand(r.num(), r.den(), n);
}

}  // namespace ellcmm

#endif  // ELLCMM_PSERIES_HPP
