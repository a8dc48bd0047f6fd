#ifndef ELLCMM_VERIFY_HPP
#define ELLCMM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ellcmm/report.hpp"

namespace ellcmm {

// Parameters shared by the named verifications. Not every field is read by
// every check.
struct VerifyConfig {
    int i_max = 2;
    int j_max = 2;
    std::vector<int> betas;
    int order = 1;
    std::string backend;  // empty: symbolic for order <= 1, evaluated above
    int points = 3;
    std::uint64_t seed = 1;
    int headroom = 1;
    std::string cache_dir;  // Shiraishi series cache for elliptic-cmm; empty disables
};

std::string effective_backend(const VerifyConfig& cfg);

// Low Macdonald polynomials against their explicit forms (j <= 3) and the
// eigenrelation of the first Hamiltonian for j <= j_max.
VerificationReport verify_macdonald(int j_max);
// Order zero of the Shiraishi series is the Macdonald polynomial.
VerificationReport verify_order_zero(int j_max);
// First order in the Macdonald basis: symbolic for j <= min(j_max, 2),
// on `points` random (q, t) for all j <= j_max; plus the explicit P_0 expansion.
VerificationReport verify_first_order_expansion(const VerifyConfig& cfg);
// Elliptic Vandermonde to first order against its closed-form ratio.
VerificationReport verify_vandermonde_ratio(const std::vector<int>& betas);
// Re-expansion at s = p/s against the u-combination; H = headroom and H + 1 agree.
VerificationReport verify_reexpansion(const VerifyConfig& cfg);
// O_C on P_j against its two-term Pieri rule.
VerificationReport verify_oc_pieri(int j_max);
VerificationReport verify_classical(const VerifyConfig& cfg);
VerificationReport verify_elliptic(const VerifyConfig& cfg);
VerificationReport verify_eigen(const VerifyConfig& cfg);
VerificationReport verify_s_limit();
VerificationReport verify_chain(const VerifyConfig& cfg);

// Dispatch by name: cmm, elliptic-cmm, prop5, lemma7, lemma8, theorem9, eigen,
// s-limit (and macdonald, prop4, oc-pieri). Throws Error on an unknown name.
VerificationReport verify_named(const std::string& identity, const VerifyConfig& cfg);
const std::vector<std::string>& verify_names();

}  // namespace ellcmm

#endif  // ELLCMM_VERIFY_HPP
