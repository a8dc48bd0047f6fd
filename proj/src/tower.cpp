#include "ellcmm/tower.hpp"

#include <algorithm>

namespace ellcmm {

bool TowerSpec::is_symbol(const std::string& name) const {
    return std::find(symbols.begin(), symbols.end(), name) != symbols.end();
}

int TowerSpec::level_of(const std::string& name) const {
    auto it = std::find(symbols.begin(), symbols.end(), name);
    return it == symbols.end() ? -1 : static_cast<int>(it - symbols.begin());
}

std::string TowerSpec::fingerprint() const {
    std::string out = "Q";
    for (const auto& s : symbols) out += "(" + s + ")";
    out += beta > 0 ? ";t=q^" + std::to_string(beta) : ";t=generic";
    for (const auto& [name, v] : bound) out += ";" + name + "=" + v.to_string();
    return out;
}

Rational random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 10000);
    for (;;) {
        Rational r(mpz_class(dist(rng)), mpz_class(dist(rng)));
        if (!r.is_one()) return r;
    }
}

}  // namespace ellcmm
