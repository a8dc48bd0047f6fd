#include "ellcmm/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace ellcmm {
namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators; the result has the same roots as `p`.
ZPoly to_integer(const Poly<Rational>& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
    return out;
}

void make_primitive(ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b over Z.
ZPoly prem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        mpz_class la = a.back();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
        mpz_class fa = lb / g, fb = la / g;
        for (auto& c : a) c *= fa;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= fb * b[i];
        trim(a);
        make_primitive(a);
    }
    return a;
}

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

// True when the two integer polynomials are certainly coprime over Q: their
// images mod a large prime keep full degree and have a constant gcd.
bool coprime_mod_prime(const ZPoly& a, const ZPoly& b) {
    static const mpz_class prime(std::to_string(kPrime));
    auto image = [&](const ZPoly& p) {
        std::vector<std::uint64_t> out(p.size());
        mpz_class r;
        for (std::size_t i = 0; i < p.size(); ++i) {
            mpz_fdiv_r(r.get_mpz_t(), p[i].get_mpz_t(), prime.get_mpz_t());
            out[i] = mpz_get_ui(r.get_mpz_t());
        }
        return out;
    };
    std::vector<std::uint64_t> x = image(a), y = image(b);
    if (x.back() == 0 || y.back() == 0) return false;
    auto strip = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (!y.empty()) {
        if (y.size() == 1) return true;
        const std::uint64_t inv = powmod(y.back(), kPrime - 2);
        while (x.size() >= y.size()) {
            const std::uint64_t f = mulmod(x.back(), inv);
            const std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) {
                std::uint64_t sub = mulmod(f, y[i]);
                std::uint64_t& c = x[shift + i];
                c = c >= sub ? c - sub : c + kPrime - sub;
            }
            strip(x);
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    return false;
}

}  // namespace

Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly<Rational>(Rational(1));
    ZPoly x = to_integer(a), y = to_integer(b);
    make_primitive(x);
    make_primitive(y);
    if (coprime_mod_prime(x, y)) return Poly<Rational>(Rational(1));
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return Poly<Rational>(Rational(1));
        ZPoly r = prem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(x.size());
    for (const auto& c : x) out.emplace_back(c, x.back());
    return Poly<Rational>(std::move(out));
}

}  // namespace ellcmm
