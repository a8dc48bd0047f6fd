#include "ellcmm/mpoly.hpp"

#include <algorithm>
#include <optional>

#include "ellcmm/poly.hpp"

namespace ellcmm {

MPoly MPoly::constant(int nvars, const mpz_class& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_[Exps(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    MPoly p(nvars);
    Exps e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[e] = 1;
    return p;
}

bool MPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void MPoly::add_term(const Exps& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(a.nvars_);
    MPoly::Exps e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

MPoly operator-(MPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

MPoly MPoly::coeff_in(int var, int k) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(var)] != k) continue;
        Exps f = e;
        f[static_cast<std::size_t>(var)] = 0;
        out.terms_[f] = c;
    }
    return out;
}

MPoly MPoly::times_power(int var, int k) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exps f = e;
        f[static_cast<std::size_t>(var)] += k;
        out.terms_[f] = c;
    }
    return out;
}

MPoly MPoly::prepend_var(int exponent) const {
    MPoly out(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        Exps f;
        f.reserve(e.size() + 1);
        f.push_back(exponent);
        f.insert(f.end(), e.begin(), e.end());
        out.terms_[f] = c;
    }
    return out;
}

MPoly MPoly::div_exact(const MPoly& b) const {
    if (b.is_zero()) throw DivisionByZero("multivariate division by zero");
    MPoly rem = *this, quot(nvars_);
    const auto& [lb_e, lb_c] = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto [lr_e, lr_c] = *rem.terms_.rbegin();
        Exps e(lr_e.size());
        for (std::size_t v = 0; v < e.size(); ++v) {
            e[v] = lr_e[v] - lb_e[v];
            if (e[v] < 0) throw NonExactDivision("multivariate quotient is not a polynomial");
        }
        if (!mpz_divisible_p(lr_c.get_mpz_t(), lb_c.get_mpz_t()))
            throw NonExactDivision("multivariate quotient has non-integral coefficient");
        mpz_class c = lr_c / lb_c;
        MPoly t(nvars_);
        t.terms_[e] = c;
        quot.add_term(e, c);
        rem -= t * b;
    }
    return quot;
}

namespace {

MPoly normalized_sign(MPoly p) {
    if (!p.is_zero() && p.terms().rbegin()->second < 0) return -p;
    return p;
}

mpz_class integer_content(const MPoly& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

MPoly gcd_from(const MPoly& a, const MPoly& b, int var);

// Both arguments involve only x_var: dense integer PRS on the coefficient
// vectors, then restore the integer content.
MPoly univariate_gcd(const MPoly& a, const MPoly& b, int var) {
    auto dense = [&](const MPoly& p) {
        std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(var)) + 1);
        for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = Rational(v);
        return Poly<Rational>(std::move(c));
    };
    Poly<Rational> g = gcd(dense(a), dense(b));
    mpz_class l = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class cont = 0;
    std::vector<mpz_class> iv;
    for (const auto& c : g.coeffs()) {
        iv.push_back(c.numerator() * (l / c.denominator()));
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), iv.back().get_mpz_t());
    }
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
    MPoly out(a.nvars());
    MPoly::Exps e(static_cast<std::size_t>(a.nvars()), 0);
    for (std::size_t k = 0; k < iv.size(); ++k) {
        e[static_cast<std::size_t>(var)] = static_cast<int>(k);
        out.add_term(e, iv[k] / cont * ic);
    }
    return normalized_sign(out);
}

// gcd of the coefficients of p viewed as a polynomial in x_var.
MPoly content_in(const MPoly& p, int var) {
    MPoly g(p.nvars());
    for (int k = p.degree_in(var); k >= 0; --k) {
        MPoly c = p.coeff_in(var, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? normalized_sign(c) : gcd_from(g, c, var + 1);
        if (g.is_one()) break;
    }
    return g;
}

MPoly prem_in(MPoly a, const MPoly& b, int var) {
    const int db = b.degree_in(var);
    const MPoly lb = b.coeff_in(var, db);
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const int da = a.degree_in(var);
        MPoly la = a.coeff_in(var, da);
        a = lb * a - (la * b).times_power(var, da - db);
    }
    return a;
}

MPoly gcd_from(const MPoly& a, const MPoly& b, int var) {
    if (a.is_zero()) return normalized_sign(b);
    if (b.is_zero()) return normalized_sign(a);
    if (var == a.nvars()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
        return MPoly::constant(a.nvars(), g);
    }
    if (var == a.nvars() - 1) return univariate_gcd(a, b, var);
    MPoly ca = content_in(a, var), cb = content_in(b, var);
    MPoly g = gcd_from(ca, cb, var + 1);
    MPoly x = a.div_exact(ca), y = b.div_exact(cb);
    if (x.degree_in(var) < y.degree_in(var)) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree_in(var) == 0) return g;
        MPoly r = prem_in(x, y, var);
        x = std::move(y);
        y = r.is_zero() ? r : r.div_exact(content_in(r, var));
    }
    x = x.div_exact(content_in(x, var));
    return normalized_sign(g * x);
}

mpz_class max_norm(const MPoly& p) {
    mpz_class m = 0;
    for (const auto& [e, c] : p.terms())
        if (abs(c) > m) m = abs(c);
    return m;
}

// p with x_var replaced by the integer xi.
MPoly evaluate_at(const MPoly& p, int var, const mpz_class& xi) {
    const auto v = static_cast<std::size_t>(var);
    std::vector<mpz_class> powers{1};
    for (int k = 1; k <= p.degree_in(var); ++k) powers.push_back(powers.back() * xi);
    MPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        MPoly::Exps f = e;
        f[v] = 0;
        out.add_term(f, c * powers[static_cast<std::size_t>(e[v])]);
    }
    return out;
}

// Inverse of evaluate_at for small coefficients: symmetric base-xi digits of
// every coefficient become the coefficients of powers of x_var.
MPoly xi_adic_lift(const MPoly& gamma, int var, const mpz_class& xi) {
    const auto v = static_cast<std::size_t>(var);
    const mpz_class half = xi / 2;
    MPoly out(gamma.nvars());
    for (const auto& [e, c0] : gamma.terms()) {
        mpz_class c = c0;
        MPoly::Exps f = e;
        for (int k = 0; c != 0; ++k) {
            mpz_class d;
            mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            f[v] = k;
            out.add_term(f, d);
            c = (c - d) / xi;
        }
    }
    return out;
}

bool divides(const MPoly& g, const MPoly& p) {
    try {
        (void)p.div_exact(g);
        return true;
    } catch (const NonExactDivision&) {
        return false;
    }
}

// Heuristic gcd: evaluate x_var at a large integer, recurse, and read the
// gcd back off the base-xi digits; accepted only after trial division.
std::optional<MPoly> heuristic_gcd(const MPoly& a, const MPoly& b, int var) {
    if (a.is_zero()) return normalized_sign(b);
    if (b.is_zero()) return normalized_sign(a);
    const int n = a.nvars();
    if (var == n) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), integer_content(a).get_mpz_t(), integer_content(b).get_mpz_t());
        return MPoly::constant(n, g);
    }
    if (a.degree_in(var) == 0 && b.degree_in(var) == 0) return heuristic_gcd(a, b, var + 1);
    const mpz_class ca = integer_content(a), cb = integer_content(b);
    mpz_class g0;
    mpz_gcd(g0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const MPoly pa = a.div_exact(MPoly::constant(n, ca)), pb = b.div_exact(MPoly::constant(n, cb));
    mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(std::max(pa.degree_in(var), pb.degree_in(var)) + 1) > 200000)
            return std::nullopt;
        std::optional<MPoly> gamma = heuristic_gcd(evaluate_at(pa, var, xi), evaluate_at(pb, var, xi), var + 1);
        if (!gamma) return std::nullopt;
        MPoly g = xi_adic_lift(*gamma, var, xi);
        if (!g.is_zero()) {
            g = normalized_sign(g.div_exact(MPoly::constant(n, integer_content(g))));
            if (divides(g, pa) && divides(g, pb)) return g * MPoly::constant(n, g0);
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (std::optional<MPoly> g = heuristic_gcd(a, b, 0)) return *g;
    return gcd_from(a, b, 0);
}

MFraction reduce_fraction(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw DivisionByZero("fraction with zero denominator");
    if (num.is_zero()) return {MPoly(num.nvars()), MPoly::constant(num.nvars(), 1)};
    MPoly g = gcd(num, den);
    MPoly n = num.div_exact(g), d = den.div_exact(g);
    if (d.terms().begin()->second < 0) {
        n = -n;
        d = -d;
    }
    return {n, d};
}

}  // namespace ellcmm
