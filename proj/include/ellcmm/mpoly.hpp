#ifndef ELLCMM_MPOLY_HPP
#define ELLCMM_MPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "ellcmm/errors.hpp"

namespace ellcmm {

// Sparse polynomial over Z. Exponent vectors are indexed by tower level with
// the OUTERMOST level first, so the map order is lex with the outer variable
// most significant.
class MPoly {
public:
    using Exps = std::vector<int>;

    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly constant(int nvars, const mpz_class& c);
    static MPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Exps, mpz_class>& terms() const { return terms_; }
    void add_term(const Exps& e, const mpz_class& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator-(MPoly a);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    int degree_in(int var) const;  // -1 for zero
    // Coefficient of x_var^k as a polynomial in the remaining variables.
    MPoly coeff_in(int var, int k) const;
    MPoly times_power(int var, int k) const;
    // Embeds into one more variable placed in front (new outermost).
    MPoly prepend_var(int exponent) const;

    // Exact quotient; throws NonExactDivision when b does not divide *this.
    MPoly div_exact(const MPoly& b) const;

private:
    int nvars_ = 0;
    std::map<Exps, mpz_class> terms_;
};

// gcd over Z[x...], normalized so its lex-leading coefficient is positive.
MPoly gcd(const MPoly& a, const MPoly& b);

// a/b over Z with gcd(num, den) = 1 and the lex-smallest term of den positive.
struct MFraction {
    MPoly num, den;
};
MFraction reduce_fraction(const MPoly& num, const MPoly& den);

}  // namespace ellcmm

#endif  // ELLCMM_MPOLY_HPP
