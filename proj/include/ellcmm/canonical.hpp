#ifndef ELLCMM_CANONICAL_HPP
#define ELLCMM_CANONICAL_HPP

#include <string>
#include <vector>

#include "ellcmm/mpoly.hpp"
#include "ellcmm/ratfunc.hpp"
#include "ellcmm/tower.hpp"

namespace ellcmm {

// Canonical text: integer polynomials, variables printed in the order
// Q, S, T, z, then any others; terms by increasing exponent tuple.
std::string format_fraction(const MFraction& f, const std::vector<std::string>& level_names);
MFraction parse_fraction(const std::string& text, const std::vector<std::string>& level_names);

template <class K>
std::string to_canonical(const K& a, const TowerSpec& spec) {
    return format_fraction(to_fraction(a), spec.symbols);
}

template <class K>
K from_canonical(const std::string& text, const TowerSpec& spec) {
    MFraction f = parse_fraction(text, spec.symbols);
    std::vector<K> gens = generators_outer_first<K>();
    K d = eval_mpoly<K>(f.den, gens);
    if (d.is_zero()) throw ParseError("zero denominator in '" + text + "'");
    return eval_mpoly<K>(f.num, gens) / d;
}

}  // namespace ellcmm

#endif  // ELLCMM_CANONICAL_HPP
