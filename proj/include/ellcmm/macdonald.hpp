#ifndef ELLCMM_MACDONALD_HPP
#define ELLCMM_MACDONALD_HPP

#include <map>
#include <string>

#include "ellcmm/errors.hpp"
#include "ellcmm/laurent.hpp"
#include "ellcmm/tower.hpp"

namespace ellcmm {

// Coefficient of X1^{j-n} X2^n in P_j.
template <class K>
K macdonald_coefficient(int j, int n, const Tower<K>& tw) {
    if (n < 0 || n > j) return K(0);
    K c(1);
    for (int i = 0; i < n; ++i)
        c *= (K(1) - tw.q_pow(j - i)) * (K(1) - tw.t * tw.q_pow(i)) /
             ((K(1) - tw.t * tw.q_pow(j - i - 1)) * (K(1) - tw.q_pow(i + 1)));
    return c;
}

template <class K>
LaurentPoly2<K> macdonald_A1(int j, const Tower<K>& tw) {
    if (j < 0) throw Error("Macdonald index must be nonnegative");
    LaurentPoly2<K> out;
    // palindromic: only half of the products are needed
    for (int n = 0; n <= j / 2; ++n) {
        K c = macdonald_coefficient(j, n, tw);
        out.add(j - n, n, c);
        if (n != j - n) out.add(n, j - n, c);
    }
    return out;
}

namespace detail {

// g with f = (X2 - X1) g, degree by degree; throws if the quotient is not exact.
template <class K>
LaurentPoly2<K> divide_by_x2_minus_x1(const LaurentPoly2<K>& f) {
    std::map<int, std::map<int, K>> by_degree;  // degree -> (e2 -> coeff)
    for (const auto& [e, c] : f.terms()) by_degree[e.first + e.second][e.second] = c;
    LaurentPoly2<K> out;
    for (const auto& [d, row] : by_degree) {
        // f_d = x1^d sum n_k r^k, r = x2/x1, and (r - 1) sum g_k r^k: n_k = g_{k-1} - g_k
        const int kmin = row.begin()->first, kmax = row.rbegin()->first;
        K g(0);
        for (int k = kmin; k <= kmax; ++k) {
            auto it = row.find(k);
            if (it != row.end()) g -= it->second;
            if (k == kmax) {
                if (!g.is_zero()) throw NonExactDivision("numerator is not divisible by (x2 - x1)");
                break;
            }
            out.add(d - 1 - k, k, g);
        }
    }
    return out;
}

}  // namespace detail

// ((x2 - t x1) f(q x1, x2) - (x1 - t x2) f(x1, q x2)) / (x2 - x1).
template <class K>
LaurentPoly2<K> trig_hamiltonian_apply(const LaurentPoly2<K>& f, const Tower<K>& tw) {
    auto qp = [&](int e) { return tw.q_pow(e); };
    auto one = [](int) { return K(1); };
    LaurentPoly2<K> f1 = f.rescaled(qp, one), f2 = f.rescaled(one, qp);
    LaurentPoly2<K> x1 = LaurentPoly2<K>::monomial(1, 0, K(1)), x2 = LaurentPoly2<K>::monomial(0, 1, K(1));
    LaurentPoly2<K> num = (x2 - x1 * tw.t) * f1 - (x1 - x2 * tw.t) * f2;
    return detail::divide_by_x2_minus_x1(num);
}

// f(q x1, q x2).
template <class K>
LaurentPoly2<K> trig_hamiltonian2_apply(const LaurentPoly2<K>& f, const Tower<K>& tw) {
    auto qp = [&](int e) { return tw.q_pow(e); };
    return f.rescaled(qp, qp);
}

// P_i(t^{1/2}, t^{-1/2}) by the product formula.
template <class K>
K principal_special(int i, const Tower<K>& tw) {
    K out = pow(tw.need_t_half(), -i) * (K(1) - tw.t * tw.q_pow(i)) / (K(1) - tw.t);
    for (int m = 0; m < i; ++m)
        out *= (K(1) - tw.t * tw.t * tw.q_pow(m)) / (K(1) - tw.t * tw.q_pow(m + 1));
    return out;
}

// Coefficients a_j of f = sum_j a_j (X1 X2)^{(D-j)/2} P_j for homogeneous f
// of degree D, by peeling off the term with the highest power of X1.
template <class K>
std::map<int, K> macdonald_expand(const LaurentPoly2<K>& f, int j_min, int j_max, const Tower<K>& tw) {
    std::map<int, K> out;
    LaurentPoly2<K> rest = f;
    int degree = 0;
    try {
        degree = f.homogeneous_degree();
    } catch (const Error&) {
        throw NotInSpan("input is not homogeneous");
    }
    std::map<int, LaurentPoly2<K>> basis;
    while (!rest.is_zero()) {
        // terms are ordered by (e1, e2); the last has the largest X1 power
        const auto [e, c] = *rest.terms().rbegin();
        const int j = 2 * e.first - degree;
        if (j < j_min || j > j_max || j < 0)
            throw NotInSpan("residual has leading X1^" + std::to_string(e.first) + " X2^" +
                            std::to_string(e.second) + ", outside P_" + std::to_string(j_min) + "..P_" +
                            std::to_string(j_max));
        auto it = basis.find(j);
        if (it == basis.end()) it = basis.emplace(j, macdonald_A1(j, tw)).first;
        const int k = (degree - j) / 2;
        rest -= it->second.shifted(k, k) * c;
        out[j] += c;
    }
    return out;
}

template <class K>
SymLaurent1<K> macdonald_on_circle(int j, const Tower<K>& tw) {
    return on_circle(macdonald_A1(j, tw));
}

// ((1 - t z^2) f(q^{1/2} z) - z^2 (1 - t z^{-2}) f(q^{-1/2} z)) / (1 - z^2).
template <class K>
SymLaurent1<K> O_A_apply(const SymLaurent1<K>& f, const Tower<K>& tw) {
    if (f.is_zero()) return f;
    SymLaurent1<K> up = f.rescaled([&](int e) { return tw.Q_pow(e); });
    SymLaurent1<K> down = f.rescaled([&](int e) { return tw.Q_pow(-e); });
    SymLaurent1<K> num = (SymLaurent1<K>::monomial(0, K(1)) - SymLaurent1<K>::monomial(2, tw.t)) * up -
                         (SymLaurent1<K>::monomial(2, K(1)) - SymLaurent1<K>::monomial(0, tw.t)) * down;
    // num = (1 - z^2) g: n_e = g_e - g_{e-2}
    SymLaurent1<K> g;
    if (num.is_zero()) return g;
    const int lo = num.min_exp(), hi = num.max_exp();
    std::map<int, K> gs;
    for (int e = lo; e <= hi; ++e) {
        K v = num.coeff(e);
        if (auto it = gs.find(e - 2); it != gs.end()) v += it->second;
        if (e >= hi - 1) {
            if (!v.is_zero()) throw NonExactDivision("numerator is not divisible by (1 - z^2)");
            continue;
        }
        gs[e] = v;
        g.add(e, v);
    }
    return g;
}

template <class K>
SymLaurent1<K> O_B_apply(const SymLaurent1<K>& f, const Tower<K>&) {
    return (SymLaurent1<K>::monomial(1, K(1)) + SymLaurent1<K>::monomial(-1, K(1))) * f;
}

template <class K>
SymLaurent1<K> O_C_apply(const SymLaurent1<K>& f, const Tower<K>& tw) {
    return O_A_apply(O_B_apply(f, tw), tw) - O_B_apply(O_A_apply(f, tw), tw) * tw.Q.inverse();
}

}  // namespace ellcmm

#endif  // ELLCMM_MACDONALD_HPP
