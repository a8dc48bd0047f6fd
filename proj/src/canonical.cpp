#include "ellcmm/canonical.hpp"

#include <algorithm>
#include <cctype>

namespace ellcmm {

namespace {

int print_rank(const std::string& name) {
    static const char* order[] = {"Q", "S", "T", "z"};
    for (int i = 0; i < 4; ++i)
        if (name == order[i]) return i;
    return 4;
}

// Level indices (outermost-first positions) in print order.
std::vector<int> print_positions(const std::vector<std::string>& level_names) {
    const int n = static_cast<int>(level_names.size());
    std::vector<int> levels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i;
    std::stable_sort(levels.begin(), levels.end(), [&](int a, int b) {
        int ra = print_rank(level_names[a]), rb = print_rank(level_names[b]);
        return ra != rb ? ra < rb : level_names[a] < level_names[b];
    });
    std::vector<int> pos;
    for (int level : levels) pos.push_back(n - 1 - level);
    return pos;
}

std::string format_poly(const MPoly& p, const std::vector<std::string>& level_names) {
    if (p.is_zero()) return "0";
    const int n = static_cast<int>(level_names.size());
    std::vector<int> pos = print_positions(level_names);
    std::vector<std::pair<std::vector<int>, mpz_class>> terms;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> key;
        for (int v : pos) key.push_back(e[static_cast<std::size_t>(v)]);
        terms.emplace_back(std::move(key), c);
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [key, c] : terms) {
        mpz_class mag = abs(c);
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        std::string mono;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += level_names[static_cast<std::size_t>(n - 1 - pos[i])];
            if (key[i] != 1) mono += "^" + std::to_string(key[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    MFraction fraction() {
        MFraction f;
        const int n = static_cast<int>(names_.size());
        if (peek() == '(') {
            ++i_;
            f.num = poly();
            expect(')');
            if (peek() == '/') {
                ++i_;
                expect('(');
                f.den = poly();
                expect(')');
            } else {
                f.den = MPoly::constant(n, 1);
            }
        } else {
            f.num = poly();
            f.den = MPoly::constant(n, 1);
        }
        if (i_ != s_.size()) fail("trailing characters");
        if (f.den.is_zero()) fail("zero denominator");
        return f;
    }

private:
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
    }

    mpz_class integer() {
        std::size_t start = i_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        if (start == i_) fail("expected integer");
        return mpz_class(s_.substr(start, i_ - start));
    }

    MPoly poly() {
        const int n = static_cast<int>(names_.size());
        MPoly out(n);
        bool first = true;
        for (;;) {
            int sign = 1;
            if (peek() == '-') {
                sign = -1;
                ++i_;
            } else if (peek() == '+' && !first) {
                ++i_;
            } else if (!first) {
                break;
            }
            first = false;
            out += term(sign);
            if (peek() != '+' && peek() != '-') break;
        }
        return out;
    }

    MPoly term(int sign) {
        const int n = static_cast<int>(names_.size());
        mpz_class c = sign;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        MPoly t(n);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c *= integer();
            if (peek() != '*') {
                t.add_term(e, c);
                return t;
            }
            ++i_;
        }
        for (;;) {
            std::size_t start = i_;
            while (std::isalpha(static_cast<unsigned char>(peek()))) ++i_;
            if (start == i_) fail("expected variable");
            std::string name = s_.substr(start, i_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) fail("unknown variable " + name);
            int level = static_cast<int>(it - names_.begin());
            int power = 1;
            if (peek() == '^') {
                ++i_;
                power = static_cast<int>(integer().get_si());
            }
            e[static_cast<std::size_t>(n - 1 - level)] += power;
            if (peek() != '*') break;
            ++i_;
        }
        t.add_term(e, c);
        return t;
    }

    std::string s_;
    const std::vector<std::string>& names_;
    std::size_t i_ = 0;
};

}  // namespace

std::string format_fraction(const MFraction& f, const std::vector<std::string>& level_names) {
    if (f.den.is_one()) return format_poly(f.num, level_names);
    return "(" + format_poly(f.num, level_names) + ")/(" + format_poly(f.den, level_names) + ")";
}

MFraction parse_fraction(const std::string& text, const std::vector<std::string>& level_names) {
    return Parser(text, level_names).fraction();
}

}  // namespace ellcmm
