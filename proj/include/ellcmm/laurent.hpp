#ifndef ELLCMM_LAURENT_HPP
#define ELLCMM_LAURENT_HPP

#include <map>
#include <string>
#include <utility>

#include "ellcmm/errors.hpp"
#include "ellcmm/ratfunc.hpp"

namespace ellcmm {

// Laurent polynomial in X1, X2 with coefficients in K; no zero is stored.
template <class K>
class LaurentPoly2 {
public:
    using Exp = std::pair<int, int>;

    LaurentPoly2() = default;
    static LaurentPoly2 monomial(int e1, int e2, const K& c) {
        LaurentPoly2 p;
        p.add(e1, e2, c);
        return p;
    }

    const std::map<Exp, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    K coeff(int e1, int e2) const {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? K(0) : it->second;
    }
    void add(int e1, int e2, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(Exp{e1, e2}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator-(const LaurentPoly2& a) { return a * K(-1); }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return out;
    }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const K& s) {
        LaurentPoly2 out;
        if (s.is_zero()) return out;
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
        return out;
    }
    friend LaurentPoly2 operator*(const K& s, const LaurentPoly2& a) { return a * s; }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

    // Multiplies by X1^d1 X2^d2.
    LaurentPoly2 shifted(int d1, int d2) const {
        LaurentPoly2 out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{e.first + d1, e.second + d2}, c);
        return out;
    }
    // f(a X1, b X2) given the coefficient maps e -> a^e, e -> b^e.
    template <class P1, class P2>
    LaurentPoly2 rescaled(P1&& pow1, P2&& pow2) const {
        LaurentPoly2 out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * pow1(e.first) * pow2(e.second));
        return out;
    }
    LaurentPoly2 swapped() const {
        LaurentPoly2 out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{e.second, e.first}, c);
        return out;
    }
    bool is_symmetric() const { return *this == swapped(); }
    // Total degree if homogeneous; throws otherwise. Zero has degree 0.
    int homogeneous_degree() const {
        if (terms_.empty()) return 0;
        const int d = terms_.begin()->first.first + terms_.begin()->first.second;
        for (const auto& [e, c] : terms_)
            if (e.first + e.second != d) throw Error("Laurent polynomial is not homogeneous");
        return d;
    }
    template <class F>
    auto map_coeffs(F&& f) const -> LaurentPoly2<std::invoke_result_t<F, const K&>> {
        LaurentPoly2<std::invoke_result_t<F, const K&>> out;
        for (const auto& [e, c] : terms_) out.add(e.first, e.second, f(c));
        return out;
    }

private:
    std::map<Exp, K> terms_;
};

// Value at X1 = v1, X2 = v2.
template <class K>
K evaluate(const LaurentPoly2<K>& f, const K& v1, const K& v2) {
    using ellcmm::pow;
    K out(0);
    for (const auto& [e, c] : f.terms()) out += c * pow(v1, e.first) * pow(v2, e.second);
    return out;
}

// Laurent polynomial in a single variable z.
template <class K>
class SymLaurent1 {
public:
    SymLaurent1() = default;
    static SymLaurent1 monomial(int e, const K& c) {
        SymLaurent1 p;
        p.add(e, c);
        return p;
    }

    const std::map<int, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    K coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }
    void add(int e, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    int min_exp() const { return terms_.begin()->first; }
    int max_exp() const { return terms_.rbegin()->first; }

    SymLaurent1& operator+=(const SymLaurent1& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    SymLaurent1& operator-=(const SymLaurent1& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend SymLaurent1 operator+(SymLaurent1 a, const SymLaurent1& b) { return a += b; }
    friend SymLaurent1 operator-(SymLaurent1 a, const SymLaurent1& b) { return a -= b; }
    friend SymLaurent1 operator*(const SymLaurent1& a, const SymLaurent1& b) {
        SymLaurent1 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
        return out;
    }
    friend SymLaurent1 operator*(const SymLaurent1& a, const K& s) {
        SymLaurent1 out;
        if (s.is_zero()) return out;
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
        return out;
    }
    friend SymLaurent1 operator*(const K& s, const SymLaurent1& a) { return a * s; }
    friend bool operator==(const SymLaurent1& a, const SymLaurent1& b) { return a.terms_ == b.terms_; }

    // f(c z) given e -> c^e.
    template <class F>
    SymLaurent1 rescaled(F&& pow_c) const {
        SymLaurent1 out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * pow_c(e));
        return out;
    }
    bool is_symmetric() const {
        for (const auto& [e, c] : terms_)
            if (coeff(-e) != c) return false;
        return true;
    }

private:
    std::map<int, K> terms_;
};

// f(z, 1/z).
template <class K>
SymLaurent1<K> on_circle(const LaurentPoly2<K>& f) {
    SymLaurent1<K> out;
    for (const auto& [e, c] : f.terms()) out.add(e.first - e.second, c);
    return out;
}

}  // namespace ellcmm

#endif  // ELLCMM_LAURENT_HPP
