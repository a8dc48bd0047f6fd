#ifndef ELLCMM_NEKRASOV_HPP
#define ELLCMM_NEKRASOV_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ellcmm/errors.hpp"
#include "ellcmm/tower.hpp"

namespace ellcmm {

// Weakly decreasing positive parts; part(a) is 1-based and 0 past the end.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int part(int a) const { return a >= 1 && a <= length() ? parts_[static_cast<std::size_t>(a - 1)] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    std::string to_string() const;               // "[3,2,2]", "[]"
    static Partition parse(const std::string& text);

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

using PartitionPair = std::pair<Partition, Partition>;

// Sum of lambda_{2i} plus sum of mu_{2i-1}: the power of p a pair carries.
int p_degree(const Partition& lambda, const Partition& mu);

// Every pair with lambda_1 <= mu_1 + j and p-degree <= dmax. Pairs whose
// coefficient vanishes may be included.
std::vector<PartitionPair> enumerate_pairs(int j, int dmax);

// q^a t^b S^e.
struct Monomial {
    long a = 0, b = 0, e = 0;
    friend Monomial operator*(const Monomial& x, const Monomial& y) { return {x.a + y.a, x.b + y.b, x.e + y.e}; }
    friend Monomial inverse(const Monomial& x) { return {-x.a, -x.b, -x.e}; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// The monomials w of the factors (1 - w) making up N^{(k)}_{P,R}(u).
std::vector<Monomial> nekrasov_factor_monomials(const Partition& P, const Partition& R, int k, const Monomial& u);

// Same product for an arbitrary field element u.
template <class K>
K nekrasov_factor(const Partition& P, const Partition& R, int k, const K& u, const Tower<K>& tw) {
    K out(1);
    for (const Monomial& w : nekrasov_factor_monomials(P, R, k, Monomial{}))
        out *= K(1) - u * tw.monomial(w.a, w.b, w.e);
    return out;
}

template <class K>
struct PairContribution {
    Partition lambda, mu;
    int p_degree = 0;
    K coefficient;
    int exponent1 = 0, exponent2 = 0;  // x1^exponent1 x2^exponent2, on top of x1^j
};

// Numerator and denominator factor lists of one summand, with common factors
// cancelled, plus the monomial prefactor (t/q)^{|lambda|+|mu|}.
struct PairFactors {
    std::vector<Monomial> num, den;
    Monomial prefactor;
};
PairFactors pair_factors(const Partition& lambda, const Partition& mu, int j);

namespace detail {

// Evaluates prod(1 - w) over `ws`. With t = q^beta fixed a factor can vanish;
// such zeros are tracked as powers of a regulator eps (t = q^beta (1+eps),
// 1 - (1+eps)^b ~ -b eps), identically zero factors are reported separately.
template <class K>
K factor_product(const std::vector<Monomial>& ws, const Tower<K>& tw, int& eps_order, bool& identically_zero) {
    K out(1);
    for (const Monomial& w : ws) {
        K v = K(1) - tw.monomial(w.a, w.b, w.e);
        if (!v.is_zero()) {
            out *= v;
            continue;
        }
        const bool structural = w.e == 0 && (tw.beta() > 0 ? w.a + tw.beta() * w.b == 0 : w.a == 0 && w.b == 0);
        if (!structural) throw ZeroDenominator("Nekrasov factor vanishes at the evaluation point; resample");
        if (w.b == 0) {
            identically_zero = true;
            continue;
        }
        ++eps_order;
        out *= K(-w.b);
    }
    return out;
}

}  // namespace detail

template <class K>
PairContribution<K> pair_contribution(const Partition& lambda, const Partition& mu, int j, const Tower<K>& tw) {
    PairContribution<K> pc;
    pc.lambda = lambda;
    pc.mu = mu;
    pc.p_degree = p_degree(lambda, mu);
    int e = 0;
    for (int a = 1; a <= lambda.length(); ++a) e += a % 2 ? lambda.part(a) : -lambda.part(a);
    for (int a = 1; a <= mu.length(); ++a) e += a % 2 ? -mu.part(a) : mu.part(a);
    pc.exponent1 = -e;
    pc.exponent2 = e;

    PairFactors f = pair_factors(lambda, mu, j);
    int num_eps = 0, den_eps = 0;
    bool num_zero = false, den_zero = false;
    K num = detail::factor_product(f.num, tw, num_eps, num_zero);
    K den = detail::factor_product(f.den, tw, den_eps, den_zero);
    if (den_zero)
        throw ZeroDenominator("denominator Nekrasov factor vanishes for lambda=" + lambda.to_string() +
                              " mu=" + mu.to_string());
    // an identically vanishing numerator kills the summand for every t
    if (num_zero || num_eps > den_eps) {
        pc.coefficient = K(0);
        return pc;
    }
    if (den_eps > num_eps)
        throw ZeroDenominator("summand has a pole at t = q^" + std::to_string(tw.beta()) + " for lambda=" +
                              lambda.to_string() + " mu=" + mu.to_string());
    pc.coefficient = num / den * tw.monomial(f.prefactor.a, f.prefactor.b, f.prefactor.e);
    return pc;
}

}  // namespace ellcmm

#endif  // ELLCMM_NEKRASOV_HPP
